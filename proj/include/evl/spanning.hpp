#ifndef EVL_SPANNING_HPP
#define EVL_SPANNING_HPP

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "evl/interval.hpp"

namespace evl {

// Field bundle for a spanning interval before normalization. Any endpoint
// or flag combination is representable here, including infinities and
// empty denotations.
struct RawSpanningInterval {
    Endpoint lo_lo;  // i: lower bound on the interval's lower endpoint
    Endpoint lo_hi;  // j: upper bound on the interval's lower endpoint
    Endpoint hi_lo;  // k: lower bound on the interval's upper endpoint
    Endpoint hi_hi;  // l: upper bound on the interval's upper endpoint
    bool iv_lo_closed = true;  // alpha: lower endpoint of member intervals
    bool iv_hi_closed = true;  // beta:  upper endpoint of member intervals
    bool lo_lo_closed = true;  // gamma
    bool lo_hi_closed = true;  // delta
    bool hi_lo_closed = true;  // epsilon
    bool hi_hi_closed = true;  // zeta
};

// A normalized spanning interval: the set of intervals
//   { a[q,r]b | i <=_g q <=_d j  and  k <=_e r <=_z l }.
// Construction goes through normalized(), which implements the
// normalization operator and returns nullopt for empty denotations, so
// every live instance has a nonempty extension and a unique
// representation.
class SpanningInterval {
  public:
    static std::optional<SpanningInterval> normalized(const RawSpanningInterval& raw);

    const Endpoint& lo_lo() const { return f_.lo_lo; }
    const Endpoint& lo_hi() const { return f_.lo_hi; }
    const Endpoint& hi_lo() const { return f_.hi_lo; }
    const Endpoint& hi_hi() const { return f_.hi_hi; }
    bool iv_lo_closed() const { return f_.iv_lo_closed; }
    bool iv_hi_closed() const { return f_.iv_hi_closed; }
    bool lo_lo_closed() const { return f_.lo_lo_closed; }
    bool lo_hi_closed() const { return f_.lo_hi_closed; }
    bool hi_lo_closed() const { return f_.hi_lo_closed; }
    bool hi_hi_closed() const { return f_.hi_hi_closed; }
    const RawSpanningInterval& raw() const { return f_; }

    // Extension membership per the defining set comprehension.
    bool contains(const Interval& v) const;

    std::string to_string() const;  // exact six-bracket form

    friend bool operator==(const SpanningInterval& a, const SpanningInterval& b);
    // Canonical order: (alpha, beta, i, gamma, j, delta, k, epsilon, l,
    // zeta) lexicographically, closed before open.
    friend std::strong_ordering operator<=>(const SpanningInterval& a,
                                            const SpanningInterval& b);

  private:
    explicit SpanningInterval(const RawSpanningInterval& f) : f_(f) {}
    RawSpanningInterval f_;
};

// Checks normalization criteria (1)-(8) field by field. normalized()
// output always satisfies them; tests assert this directly.
bool satisfies_normalization_criteria(const RawSpanningInterval& s);

// Membership per the defining set comprehension, applied to raw fields
// (no normalization assumed).
bool raw_contains(const RawSpanningInterval& f, const Interval& v);

// true iff ext(inner) is a subset of ext(outer), decided component-wise.
bool subsumes(const SpanningInterval& outer, const SpanningInterval& inner);

// Intersection of two normalized spanning intervals; at most one result.
std::optional<SpanningInterval> intersect(const SpanningInterval& a,
                                          const SpanningInterval& b);

// Complement; at most seven results, not canonicalized.
std::vector<SpanningInterval> complement_members(const SpanningInterval& s);

// Span; at most four results, not canonicalized.
std::vector<SpanningInterval> span_members(const SpanningInterval& a,
                                           const SpanningInterval& b);

// A finite set of normalized spanning intervals in canonical order,
// denoting the union of the members' extensions. Members subsumed by
// other members are pruned unless construction asks otherwise.
class SpanningSet {
  public:
    SpanningSet() = default;
    static SpanningSet of(std::vector<SpanningInterval> members, bool prune = true);
    static SpanningSet single(const SpanningInterval& s);

    const std::vector<SpanningInterval>& members() const { return members_; }
    bool empty() const { return members_.empty(); }
    std::size_t size() const { return members_.size(); }

    bool contains(const Interval& v) const;

    friend bool operator==(const SpanningSet& a, const SpanningSet& b) = default;

  private:
    std::vector<SpanningInterval> members_;
};

// Union with duplicates removed, subsumed members pruned and canonical
// order restored.
SpanningSet canonical_union(const std::vector<SpanningSet>& sets, bool prune = true);
SpanningSet set_union(const SpanningSet& a, const SpanningSet& b);
SpanningSet set_intersect(const SpanningSet& a, const SpanningSet& b);
SpanningSet set_complement(const SpanningInterval& s);
SpanningSet set_normalize(const RawSpanningInterval& raw);
SpanningSet set_span(const SpanningInterval& a, const SpanningInterval& b);

}  // namespace evl

#endif
