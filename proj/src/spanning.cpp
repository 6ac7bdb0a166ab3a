#include "evl/spanning.hpp"

#include <algorithm>
#include <cassert>

namespace evl {

namespace {

const Endpoint kNegInf = Endpoint::neg_inf();
const Endpoint kPosInf = Endpoint::pos_inf();

Endpoint min_ep(const Endpoint& a, const Endpoint& b) { return a < b ? a : b; }
Endpoint max_ep(const Endpoint& a, const Endpoint& b) { return a > b ? a : b; }

int flag_rank(bool closed) { return closed ? 0 : 1; }  // closed sorts first

}  // namespace

std::optional<SpanningInterval> SpanningInterval::normalized(
    const RawSpanningInterval& raw) {
    const Endpoint& i = raw.lo_lo;
    const Endpoint& j = raw.lo_hi;
    const Endpoint& k = raw.hi_lo;
    const Endpoint& l = raw.hi_hi;

    RawSpanningInterval out = raw;
    out.lo_hi = min_ep(j, l);
    out.hi_lo = max_ep(k, i);
    out.lo_lo_closed = raw.lo_lo_closed && !i.is_neg_inf();
    out.lo_hi_closed = raw.lo_hi_closed && !out.lo_hi.is_pos_inf() &&
                       (j < l || (raw.hi_hi_closed && raw.iv_lo_closed && raw.iv_hi_closed));
    out.hi_lo_closed = raw.hi_lo_closed && !out.hi_lo.is_neg_inf() &&
                       (k > i || (raw.lo_lo_closed && raw.iv_lo_closed && raw.iv_hi_closed));
    out.hi_hi_closed = raw.hi_hi_closed && !l.is_pos_inf();

    const bool nonempty =
        i <= out.lo_hi && out.hi_lo <= l &&
        (i != out.lo_hi || (out.lo_lo_closed && out.lo_hi_closed)) &&
        (out.hi_lo != l || (out.hi_lo_closed && out.hi_hi_closed)) &&
        (i != l || (raw.iv_lo_closed && raw.iv_hi_closed)) &&
        !i.is_pos_inf() && !out.lo_hi.is_neg_inf() && !out.hi_lo.is_pos_inf() &&
        !l.is_neg_inf();
    if (!nonempty) return std::nullopt;
    assert(satisfies_normalization_criteria(out));
    return SpanningInterval(out);
}

bool satisfies_normalization_criteria(const RawSpanningInterval& s) {
    const Endpoint &i = s.lo_lo, &j = s.lo_hi, &k = s.hi_lo, &l = s.hi_hi;
    const bool a = s.iv_lo_closed, b = s.iv_hi_closed;
    const bool g = s.lo_lo_closed, d = s.lo_hi_closed, e = s.hi_lo_closed,
               z = s.hi_hi_closed;
    // (1)
    if (i.is_pos_inf() || j.is_neg_inf() || k.is_pos_inf() || l.is_neg_inf()) return false;
    // (2)
    if (i.is_neg_inf() && g) return false;
    if (j.is_pos_inf() && d) return false;
    if (k.is_neg_inf() && e) return false;
    if (l.is_pos_inf() && z) return false;
    // (3)
    if (!(j <= l && k >= i)) return false;
    // (4)
    if (!(i <= j && k <= l)) return false;
    // (5)
    if (i == j && !(g && d)) return false;
    if (k == l && !(e && z)) return false;
    // (6)
    if (i == l && !(a && b)) return false;
    // (7)
    if (j == l && !z && d) return false;
    if (k == i && !g && e) return false;
    // (8)
    if (j == l && !(a && b) && d) return false;
    if (k == i && !(a && b) && e) return false;
    return true;
}

bool raw_contains(const RawSpanningInterval& f, const Interval& v) {
    if (v.lo_closed() != f.iv_lo_closed || v.hi_closed() != f.iv_hi_closed) return false;
    const Endpoint q(v.lo()), r(v.hi());
    return leq_flag(f.lo_lo, q, f.lo_lo_closed) && leq_flag(q, f.lo_hi, f.lo_hi_closed) &&
           leq_flag(f.hi_lo, r, f.hi_lo_closed) && leq_flag(r, f.hi_hi, f.hi_hi_closed);
}

bool SpanningInterval::contains(const Interval& v) const { return raw_contains(f_, v); }

std::string SpanningInterval::to_string() const {
    std::string out;
    out += f_.iv_lo_closed ? '[' : '(';
    out += f_.lo_lo_closed ? '[' : '(';
    out += f_.lo_lo.to_string();
    out += ',';
    out += f_.lo_hi.to_string();
    out += f_.lo_hi_closed ? ']' : ')';
    out += ',';
    out += f_.hi_lo_closed ? '[' : '(';
    out += f_.hi_lo.to_string();
    out += ',';
    out += f_.hi_hi.to_string();
    out += f_.hi_hi_closed ? ']' : ')';
    out += f_.iv_hi_closed ? ']' : ')';
    return out;
}

bool operator==(const SpanningInterval& a, const SpanningInterval& b) {
    const auto& x = a.f_;
    const auto& y = b.f_;
    return x.iv_lo_closed == y.iv_lo_closed && x.iv_hi_closed == y.iv_hi_closed &&
           x.lo_lo == y.lo_lo && x.lo_lo_closed == y.lo_lo_closed && x.lo_hi == y.lo_hi &&
           x.lo_hi_closed == y.lo_hi_closed && x.hi_lo == y.hi_lo &&
           x.hi_lo_closed == y.hi_lo_closed && x.hi_hi == y.hi_hi &&
           x.hi_hi_closed == y.hi_hi_closed;
}

std::strong_ordering operator<=>(const SpanningInterval& a, const SpanningInterval& b) {
    const auto& x = a.f_;
    const auto& y = b.f_;
    if (auto c = flag_rank(x.iv_lo_closed) <=> flag_rank(y.iv_lo_closed); c != 0) return c;
    if (auto c = flag_rank(x.iv_hi_closed) <=> flag_rank(y.iv_hi_closed); c != 0) return c;
    if (auto c = x.lo_lo <=> y.lo_lo; c != 0) return c;
    if (auto c = flag_rank(x.lo_lo_closed) <=> flag_rank(y.lo_lo_closed); c != 0) return c;
    if (auto c = x.lo_hi <=> y.lo_hi; c != 0) return c;
    if (auto c = flag_rank(x.lo_hi_closed) <=> flag_rank(y.lo_hi_closed); c != 0) return c;
    if (auto c = x.hi_lo <=> y.hi_lo; c != 0) return c;
    if (auto c = flag_rank(x.hi_lo_closed) <=> flag_rank(y.hi_lo_closed); c != 0) return c;
    if (auto c = x.hi_hi <=> y.hi_hi; c != 0) return c;
    return flag_rank(x.hi_hi_closed) <=> flag_rank(y.hi_hi_closed);
}

// Range containment under the <=_flag order: every point admitted by
// (lo_b,g_b,hi_b,d_b) is admitted by (lo_a,g_a,hi_a,d_a).
static bool range_contains(const Endpoint& lo_a, bool g_a, const Endpoint& hi_a, bool d_a,
                           const Endpoint& lo_b, bool g_b, const Endpoint& hi_b, bool d_b) {
    return leq_flag(lo_a, lo_b, g_a || !g_b) && geq_flag(hi_a, hi_b, d_a || !d_b);
}

bool subsumes(const SpanningInterval& outer, const SpanningInterval& inner) {
    const auto& a = outer.raw();
    const auto& b = inner.raw();
    if (a.iv_lo_closed != b.iv_lo_closed || a.iv_hi_closed != b.iv_hi_closed) return false;
    return range_contains(a.lo_lo, a.lo_lo_closed, a.lo_hi, a.lo_hi_closed, b.lo_lo,
                          b.lo_lo_closed, b.lo_hi, b.lo_hi_closed) &&
           range_contains(a.hi_lo, a.hi_lo_closed, a.hi_hi, a.hi_hi_closed, b.hi_lo,
                          b.hi_lo_closed, b.hi_hi, b.hi_hi_closed);
}

std::optional<SpanningInterval> intersect(const SpanningInterval& a,
                                          const SpanningInterval& b) {
    const auto& x = a.raw();
    const auto& y = b.raw();
    if (x.iv_lo_closed != y.iv_lo_closed || x.iv_hi_closed != y.iv_hi_closed)
        return std::nullopt;
    RawSpanningInterval r;
    r.iv_lo_closed = x.iv_lo_closed;
    r.iv_hi_closed = x.iv_hi_closed;
    r.lo_lo = max_ep(x.lo_lo, y.lo_lo);
    r.lo_lo_closed = x.lo_lo > y.lo_lo   ? x.lo_lo_closed
                     : x.lo_lo < y.lo_lo ? y.lo_lo_closed
                                         : x.lo_lo_closed && y.lo_lo_closed;
    r.lo_hi = min_ep(x.lo_hi, y.lo_hi);
    r.lo_hi_closed = x.lo_hi < y.lo_hi   ? x.lo_hi_closed
                     : x.lo_hi > y.lo_hi ? y.lo_hi_closed
                                         : x.lo_hi_closed && y.lo_hi_closed;
    r.hi_lo = max_ep(x.hi_lo, y.hi_lo);
    r.hi_lo_closed = x.hi_lo > y.hi_lo   ? x.hi_lo_closed
                     : x.hi_lo < y.hi_lo ? y.hi_lo_closed
                                         : x.hi_lo_closed && y.hi_lo_closed;
    r.hi_hi = min_ep(x.hi_hi, y.hi_hi);
    r.hi_hi_closed = x.hi_hi < y.hi_hi   ? x.hi_hi_closed
                     : x.hi_hi > y.hi_hi ? y.hi_hi_closed
                                         : x.hi_hi_closed && y.hi_hi_closed;
    return SpanningInterval::normalized(r);
}

std::vector<SpanningInterval> complement_members(const SpanningInterval& s) {
    const auto& f = s.raw();
    std::vector<SpanningInterval> out;
    out.reserve(7);
    auto push = [&out](const RawSpanningInterval& raw) {
        if (auto n = SpanningInterval::normalized(raw)) out.push_back(*n);
    };
    auto universal_ranges = [](bool a, bool b) {
        RawSpanningInterval r;
        r.lo_lo = kNegInf;
        r.lo_hi = kPosInf;
        r.hi_lo = kNegInf;
        r.hi_hi = kPosInf;
        r.lo_lo_closed = r.lo_hi_closed = r.hi_lo_closed = r.hi_hi_closed = true;
        r.iv_lo_closed = a;
        r.iv_hi_closed = b;
        return r;
    };
    // Upper endpoint below the hi range: r <=_{!eps} k.
    {
        RawSpanningInterval r = universal_ranges(f.iv_lo_closed, f.iv_hi_closed);
        r.hi_hi = f.hi_lo;
        r.hi_hi_closed = !f.hi_lo_closed;
        push(r);
    }
    // Upper endpoint above the hi range: r >=_{!zeta} l.
    {
        RawSpanningInterval r = universal_ranges(f.iv_lo_closed, f.iv_hi_closed);
        r.hi_lo = f.hi_hi;
        r.hi_lo_closed = !f.hi_hi_closed;
        push(r);
    }
    // Lower endpoint below the lo range: q <=_{!gamma} i.
    {
        RawSpanningInterval r = universal_ranges(f.iv_lo_closed, f.iv_hi_closed);
        r.lo_hi = f.lo_lo;
        r.lo_hi_closed = !f.lo_lo_closed;
        push(r);
    }
    // Lower endpoint above the lo range: q >=_{!delta} j.
    {
        RawSpanningInterval r = universal_ranges(f.iv_lo_closed, f.iv_hi_closed);
        r.lo_lo = f.lo_hi;
        r.lo_lo_closed = !f.lo_hi_closed;
        push(r);
    }
    // The three other interval-openness kinds, unconstrained.
    push(universal_ranges(!f.iv_lo_closed, f.iv_hi_closed));
    push(universal_ranges(f.iv_lo_closed, !f.iv_hi_closed));
    push(universal_ranges(!f.iv_lo_closed, !f.iv_hi_closed));
    return out;
}

std::vector<SpanningInterval> span_members(const SpanningInterval& a,
                                           const SpanningInterval& b) {
    const auto& x = a.raw();
    const auto& y = b.raw();
    // Upper bound on the span's lower endpoint and lower bound on its
    // upper endpoint. At ties the flag is the conjunction: a lower
    // endpoint q_t is usable only if the other operand can place its own
    // lower endpoint at or above q_t, and symmetrically for upper
    // endpoints. (The printed tie-break is a disjunction, which admits
    // boundary points with no witness pair.)
    const Endpoint j = min_ep(x.lo_hi, y.lo_hi);
    const bool dj = x.lo_hi < y.lo_hi   ? x.lo_hi_closed
                    : x.lo_hi > y.lo_hi ? y.lo_hi_closed
                                        : x.lo_hi_closed && y.lo_hi_closed;
    const Endpoint k = max_ep(x.hi_lo, y.hi_lo);
    const bool ek = x.hi_lo > y.hi_lo   ? x.hi_lo_closed
                    : x.hi_lo < y.hi_lo ? y.hi_lo_closed
                                        : x.hi_lo_closed && y.hi_lo_closed;

    std::vector<SpanningInterval> out;
    out.reserve(4);
    for (int lower = 0; lower < 2; ++lower) {
        for (int upper = 0; upper < 2; ++upper) {
            const auto& lo_src = lower == 0 ? x : y;
            const auto& hi_src = upper == 0 ? x : y;
            RawSpanningInterval r;
            r.iv_lo_closed = lo_src.iv_lo_closed;
            r.iv_hi_closed = hi_src.iv_hi_closed;
            r.lo_lo = lo_src.lo_lo;
            r.lo_lo_closed = lo_src.lo_lo_closed;
            r.lo_hi = j;
            r.lo_hi_closed = dj;
            r.hi_lo = k;
            r.hi_lo_closed = ek;
            r.hi_hi = hi_src.hi_hi;
            r.hi_hi_closed = hi_src.hi_hi_closed;
            if (auto n = SpanningInterval::normalized(r)) out.push_back(*n);
        }
    }
    return out;
}

SpanningSet SpanningSet::of(std::vector<SpanningInterval> members, bool prune) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (prune && members.size() > 1) {
        std::vector<SpanningInterval> kept;
        kept.reserve(members.size());
        for (std::size_t i = 0; i < members.size(); ++i) {
            bool drop = false;
            for (std::size_t j = 0; j < members.size() && !drop; ++j) {
                if (i == j) continue;
                if (!subsumes(members[j], members[i])) continue;
                // Mutually subsuming members are equal, which unique()
                // already removed; a strict subsumer wins, and the
                // canonical order breaks no ties here.
                drop = true;
            }
            if (!drop) kept.push_back(members[i]);
        }
        members = std::move(kept);
    }
    SpanningSet s;
    s.members_ = std::move(members);
    return s;
}

SpanningSet SpanningSet::single(const SpanningInterval& s) {
    SpanningSet out;
    out.members_.push_back(s);
    return out;
}

bool SpanningSet::contains(const Interval& v) const {
    for (const auto& m : members_)
        if (m.contains(v)) return true;
    return false;
}

SpanningSet canonical_union(const std::vector<SpanningSet>& sets, bool prune) {
    std::vector<SpanningInterval> all;
    for (const auto& s : sets) all.insert(all.end(), s.members().begin(), s.members().end());
    return SpanningSet::of(std::move(all), prune);
}

SpanningSet set_union(const SpanningSet& a, const SpanningSet& b) {
    return canonical_union({a, b});
}

SpanningSet set_intersect(const SpanningSet& a, const SpanningSet& b) {
    std::vector<SpanningInterval> out;
    for (const auto& x : a.members())
        for (const auto& y : b.members())
            if (auto r = intersect(x, y)) out.push_back(*r);
    return SpanningSet::of(std::move(out));
}

SpanningSet set_complement(const SpanningInterval& s) {
    return SpanningSet::of(complement_members(s));
}

SpanningSet set_normalize(const RawSpanningInterval& raw) {
    auto n = SpanningInterval::normalized(raw);
    return n ? SpanningSet::single(*n) : SpanningSet();
}

SpanningSet set_span(const SpanningInterval& a, const SpanningInterval& b) {
    return SpanningSet::of(span_members(a, b));
}

}  // namespace evl
