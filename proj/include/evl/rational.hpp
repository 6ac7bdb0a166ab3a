#ifndef EVL_RATIONAL_HPP
#define EVL_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace evl {

// Exact rational number backed by 64-bit integers. Always stored reduced
// with a positive denominator, so equality is plain field equality.
// Endpoint comparisons in this library must be exact; no floating point
// is involved anywhere.
class Rational {
  public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t num, std::int64_t den);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    // "7", "-3", "2.5", "1/3" (fraction only when the decimal would not
    // terminate).
    std::string to_string() const;

    // Accepts an optionally signed integer or decimal literal.
    static Rational parse(std::string_view text);

    friend bool operator==(const Rational& a, const Rational& b) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        auto lhs = static_cast<__int128>(a.num_) * b.den_;
        auto rhs = static_cast<__int128>(b.num_) * a.den_;
        return lhs < rhs ? std::strong_ordering::less
             : lhs > rhs ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
    }

  private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace evl

#endif
