#ifndef EVL_INTERVAL_HPP
#define EVL_INTERVAL_HPP

#include <array>
#include <compare>
#include <optional>
#include <string>

#include "evl/rational.hpp"

namespace evl {

// A rational value extended with the two symbolic infinities. Concrete
// intervals only ever carry finite endpoints; the infinities appear in
// spanning-interval endpoint ranges.
class Endpoint {
  public:
    constexpr Endpoint() = default;
    Endpoint(Rational v) : kind_(0), value_(v) {}
    Endpoint(std::int64_t v) : kind_(0), value_(v) {}

    static Endpoint neg_inf() {
        Endpoint e;
        e.kind_ = -1;
        return e;
    }
    static Endpoint pos_inf() {
        Endpoint e;
        e.kind_ = 1;
        return e;
    }

    bool is_neg_inf() const { return kind_ < 0; }
    bool is_pos_inf() const { return kind_ > 0; }
    bool is_finite() const { return kind_ == 0; }
    const Rational& value() const { return value_; }

    std::string to_string() const;

    friend bool operator==(const Endpoint& a, const Endpoint& b) {
        return a.kind_ == b.kind_ && (a.kind_ != 0 || a.value_ == b.value_);
    }
    friend std::strong_ordering operator<=>(const Endpoint& a, const Endpoint& b) {
        if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
        if (a.kind_ != 0) return std::strong_ordering::equal;
        return a.value_ <=> b.value_;
    }

  private:
    int kind_ = 0;  // -1: -inf, 0: finite, +1: +inf
    Rational value_;
};

// q <= r when the flag is closed, q < r when open:
// q <=_a r == (q < r) or (a and q == r)
inline bool leq_flag(const Endpoint& q, const Endpoint& r, bool closed) {
    return q < r || (closed && q == r);
}
inline bool geq_flag(const Endpoint& q, const Endpoint& r, bool closed) {
    return q > r || (closed && q == r);
}
inline bool leq_flag(const Rational& q, const Rational& r, bool closed) {
    return q < r || (closed && q == r);
}
inline bool geq_flag(const Rational& q, const Rational& r, bool closed) {
    return q > r || (closed && q == r);
}

// One concrete interval with per-endpoint openness. Instances are
// normalized by construction: finite endpoints and lo <=_(lc and hc) hi,
// so the extension is never empty and representations are unique.
class Interval {
  public:
    // Returns nullopt when the requested interval would denote the empty
    // set ([5,4], (5,5], ...).
    static std::optional<Interval> make(Rational lo, Rational hi, bool lo_closed,
                                        bool hi_closed);

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    bool lo_closed() const { return lo_closed_; }
    bool hi_closed() const { return hi_closed_; }

    bool contains_point(const Rational& p) const {
        return leq_flag(lo_, p, lo_closed_) && leq_flag(p, hi_, hi_closed_);
    }

    std::string to_string() const;  // "[1,3)", "(0.5,2]"

    friend bool operator==(const Interval& a, const Interval& b) = default;
    friend std::strong_ordering operator<=>(const Interval& a, const Interval& b);

  private:
    Interval(Rational lo, Rational hi, bool lc, bool hc)
        : lo_(lo), hi_(hi), lo_closed_(lc), hi_closed_(hc) {}

    Rational lo_;
    Rational hi_;
    bool lo_closed_ = true;
    bool hi_closed_ = true;
};

enum class AllenRelation {
    Equals,        // =
    Before,        // <
    After,         // >
    Meets,         // m
    MetBy,         // mi
    Overlaps,      // o
    OverlappedBy,  // oi
    Starts,        // s
    StartedBy,     // si
    Finishes,      // f
    FinishedBy,    // fi
    During,        // d
    Contains,      // di
};

inline constexpr int kAllenRelationCount = 13;
inline constexpr std::array<AllenRelation, kAllenRelationCount> kAllRelations = {
    AllenRelation::Equals,     AllenRelation::Before,       AllenRelation::After,
    AllenRelation::Meets,      AllenRelation::MetBy,        AllenRelation::Overlaps,
    AllenRelation::OverlappedBy, AllenRelation::Starts,     AllenRelation::StartedBy,
    AllenRelation::Finishes,   AllenRelation::FinishedBy,   AllenRelation::During,
    AllenRelation::Contains,
};

AllenRelation inverse(AllenRelation r);
std::string_view relation_code(AllenRelation r);                 // "=", "m", "oi", ...
std::optional<AllenRelation> relation_from_code(std::string_view code);

// Evaluates the single open/closed-endpoint relation predicate.
bool holds(const Interval& a, AllenRelation r, const Interval& b);

// The unique relation between two intervals. exactly one of the thirteen
// predicates is true for any pair; debug builds assert that.
AllenRelation allen_relate(const Interval& a, const Interval& b);

// Smallest interval containing both extensions. Openness at each end
// follows the interval achieving the min/max, closed winning ties.
Interval span_intervals(const Interval& a, const Interval& b);

}  // namespace evl

#endif
