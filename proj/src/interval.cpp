#include "evl/interval.hpp"

#include <cassert>
#include <stdexcept>

namespace evl {

std::string Endpoint::to_string() const {
    if (kind_ < 0) return "-inf";
    if (kind_ > 0) return "inf";
    return value_.to_string();
}

std::optional<Interval> Interval::make(Rational lo, Rational hi, bool lo_closed,
                                       bool hi_closed) {
    if (!leq_flag(lo, hi, lo_closed && hi_closed)) return std::nullopt;
    return Interval(lo, hi, lo_closed, hi_closed);
}

std::string Interval::to_string() const {
    std::string out;
    out += lo_closed_ ? '[' : '(';
    out += lo_.to_string();
    out += ',';
    out += hi_.to_string();
    out += hi_closed_ ? ']' : ')';
    return out;
}

std::strong_ordering operator<=>(const Interval& a, const Interval& b) {
    if (auto c = a.lo_ <=> b.lo_; c != 0) return c;
    // closed sorts before open
    if (a.lo_closed_ != b.lo_closed_) return a.lo_closed_ ? std::strong_ordering::less
                                                          : std::strong_ordering::greater;
    if (auto c = a.hi_ <=> b.hi_; c != 0) return c;
    if (a.hi_closed_ != b.hi_closed_) return a.hi_closed_ ? std::strong_ordering::less
                                                          : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

AllenRelation inverse(AllenRelation r) {
    switch (r) {
        case AllenRelation::Equals: return AllenRelation::Equals;
        case AllenRelation::Before: return AllenRelation::After;
        case AllenRelation::After: return AllenRelation::Before;
        case AllenRelation::Meets: return AllenRelation::MetBy;
        case AllenRelation::MetBy: return AllenRelation::Meets;
        case AllenRelation::Overlaps: return AllenRelation::OverlappedBy;
        case AllenRelation::OverlappedBy: return AllenRelation::Overlaps;
        case AllenRelation::Starts: return AllenRelation::StartedBy;
        case AllenRelation::StartedBy: return AllenRelation::Starts;
        case AllenRelation::Finishes: return AllenRelation::FinishedBy;
        case AllenRelation::FinishedBy: return AllenRelation::Finishes;
        case AllenRelation::During: return AllenRelation::Contains;
        case AllenRelation::Contains: return AllenRelation::During;
    }
    throw std::logic_error("bad relation");
}

std::string_view relation_code(AllenRelation r) {
    switch (r) {
        case AllenRelation::Equals: return "=";
        case AllenRelation::Before: return "<";
        case AllenRelation::After: return ">";
        case AllenRelation::Meets: return "m";
        case AllenRelation::MetBy: return "mi";
        case AllenRelation::Overlaps: return "o";
        case AllenRelation::OverlappedBy: return "oi";
        case AllenRelation::Starts: return "s";
        case AllenRelation::StartedBy: return "si";
        case AllenRelation::Finishes: return "f";
        case AllenRelation::FinishedBy: return "fi";
        case AllenRelation::During: return "d";
        case AllenRelation::Contains: return "di";
    }
    throw std::logic_error("bad relation");
}

std::optional<AllenRelation> relation_from_code(std::string_view code) {
    for (AllenRelation r : kAllRelations)
        if (relation_code(r) == code) return r;
    return std::nullopt;
}

bool holds(const Interval& a, AllenRelation r, const Interval& b) {
    const Rational &q1 = a.lo(), &r1 = a.hi(), &q2 = b.lo(), &r2 = b.hi();
    const bool a1 = a.lo_closed(), b1 = a.hi_closed();
    const bool a2 = b.lo_closed(), b2 = b.hi_closed();
    switch (r) {
        case AllenRelation::Equals:
            return q1 == q2 && a1 == a2 && r1 == r2 && b1 == b2;
        case AllenRelation::Before:
            return leq_flag(r1, q2, !b1 && !a2);
        case AllenRelation::After:
            return geq_flag(q1, r2, !a1 && !b2);
        case AllenRelation::Meets:
            return r1 == q2 && b1 != a2;
        case AllenRelation::MetBy:
            return q1 == r2 && a1 != b2;
        case AllenRelation::Overlaps:
            return leq_flag(q1, q2, a1 && !a2) && leq_flag(q2, r1, b1 && a2) &&
                   leq_flag(r1, r2, !b1 && b2);
        case AllenRelation::OverlappedBy:
            return geq_flag(r1, r2, b1 && !b2) && geq_flag(r2, q1, a1 && b2) &&
                   geq_flag(q1, q2, !a1 && a2);
        case AllenRelation::Starts:
            return q1 == q2 && a1 == a2 && leq_flag(r1, r2, !b1 && b2);
        case AllenRelation::StartedBy:
            return q1 == q2 && a1 == a2 && geq_flag(r1, r2, b1 && !b2);
        case AllenRelation::Finishes:
            return geq_flag(q1, q2, !a1 && a2) && r1 == r2 && b1 == b2;
        case AllenRelation::FinishedBy:
            return leq_flag(q1, q2, a1 && !a2) && r1 == r2 && b1 == b2;
        case AllenRelation::During:
            return geq_flag(q1, q2, !a1 && a2) && leq_flag(r1, r2, !b1 && b2);
        case AllenRelation::Contains:
            return leq_flag(q1, q2, a1 && !a2) && geq_flag(r1, r2, b1 && !b2);
    }
    throw std::logic_error("bad relation");
}

AllenRelation allen_relate(const Interval& a, const Interval& b) {
#ifndef NDEBUG
    int fired = 0;
    for (AllenRelation r : kAllRelations)
        if (holds(a, r, b)) ++fired;
    assert(fired == 1 && "exactly one Allen relation must hold");
#endif
    for (AllenRelation r : kAllRelations)
        if (holds(a, r, b)) return r;
    throw std::logic_error("no Allen relation holds");
}

Interval span_intervals(const Interval& a, const Interval& b) {
    const bool lc = (a.lo_closed() && a.lo() <= b.lo()) || (b.lo_closed() && a.lo() >= b.lo());
    const bool hc = (a.hi_closed() && a.hi() >= b.hi()) || (b.hi_closed() && a.hi() <= b.hi());
    const Rational lo = a.lo() < b.lo() ? a.lo() : b.lo();
    const Rational hi = a.hi() > b.hi() ? a.hi() : b.hi();
    auto out = Interval::make(lo, hi, lc, hc);
    assert(out && "span of nonempty intervals is nonempty");
    return *out;
}

}  // namespace evl
