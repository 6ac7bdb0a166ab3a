#include "evl/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace evl {

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    num_ = g ? num / g : num;
    den_ = g ? den / g : den;
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    // Decimal expansion terminates iff the reduced denominator is 2^a * 5^b.
    std::int64_t d = den_;
    int twos = 0, fives = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++twos;
    }
    while (d % 5 == 0) {
        d /= 5;
        ++fives;
    }
    if (d != 1) return std::to_string(num_) + "/" + std::to_string(den_);
    const int digits = twos > fives ? twos : fives;
    __int128 scaled = num_;
    for (int i = 0; i < digits; ++i) scaled *= 10;
    scaled /= den_;
    bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    std::string frac;
    for (int i = 0; i < digits; ++i) {
        frac.insert(frac.begin(), static_cast<char>('0' + static_cast<int>(scaled % 10)));
        scaled /= 10;
    }
    std::string whole;
    if (scaled == 0) {
        whole = "0";
    } else {
        while (scaled > 0) {
            whole.insert(whole.begin(), static_cast<char>('0' + static_cast<int>(scaled % 10)));
            scaled /= 10;
        }
    }
    while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
    return (neg ? "-" : "") + whole + "." + frac;
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty number");
    bool neg = false;
    std::size_t pos = 0;
    if (text[0] == '-' || text[0] == '+') {
        neg = text[0] == '-';
        pos = 1;
    }
    std::int64_t whole = 0;
    bool any = false;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        whole = whole * 10 + (text[pos] - '0');
        ++pos;
        any = true;
    }
    std::int64_t num = whole, den = 1;
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            num = num * 10 + (text[pos] - '0');
            den *= 10;
            ++pos;
            any = true;
        }
    }
    if (!any || pos != text.size()) throw std::invalid_argument("bad number: " + std::string(text));
    return Rational(neg ? -num : num, den);
}

}  // namespace evl
