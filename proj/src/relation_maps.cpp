#include "evl/relation_maps.hpp"

#include <stdexcept>

namespace evl {

namespace {

const Endpoint kNegInf = Endpoint::neg_inf();
const Endpoint kPosInf = Endpoint::pos_inf();

struct Range {
    Endpoint lo;
    bool lo_closed;
    Endpoint hi;
    bool hi_closed;
};

Range unconstrained() { return {kNegInf, true, kPosInf, true}; }

RawSpanningInterval assemble(bool iv_lo, const Range& lo, const Range& hi, bool iv_hi) {
    RawSpanningInterval r;
    r.iv_lo_closed = iv_lo;
    r.iv_hi_closed = iv_hi;
    r.lo_lo = lo.lo;
    r.lo_lo_closed = lo.lo_closed;
    r.lo_hi = lo.hi;
    r.lo_hi_closed = lo.hi_closed;
    r.hi_lo = hi.lo;
    r.hi_lo_closed = hi.lo_closed;
    r.hi_hi = hi.hi;
    r.hi_hi_closed = hi.hi_closed;
    return r;
}

const bool kFlagOrder[2] = {true, false};  // closed enumerated before open

}  // namespace

// Each case instantiates the corresponding display: the free openness
// flags of the result interval range over closed then open, and every
// term goes through normalization before the union.
SpanningSet d_map(AllenRelation r, const SpanningInterval& s) {
    const auto& f = s.raw();
    const bool a1 = f.iv_lo_closed, b1 = f.iv_hi_closed;
    const bool g1 = f.lo_lo_closed, d1 = f.lo_hi_closed, e1 = f.hi_lo_closed,
               z1 = f.hi_hi_closed;
    const Endpoint &i1 = f.lo_lo, &j1 = f.lo_hi, &k1 = f.hi_lo, &l1 = f.hi_hi;

    std::vector<SpanningInterval> out;
    auto push = [&out](const RawSpanningInterval& raw) {
        if (auto n = SpanningInterval::normalized(raw)) out.push_back(*n);
    };

    switch (r) {
        case AllenRelation::Equals:
            return SpanningSet::single(s);
        case AllenRelation::Before:
            for (bool a2 : kFlagOrder)
                for (bool b2 : kFlagOrder)
                    push(assemble(a2, {k1, !b1 && !a2 && e1, kPosInf, true}, unconstrained(),
                                  b2));
            break;
        case AllenRelation::After:
            for (bool a2 : kFlagOrder)
                for (bool b2 : kFlagOrder)
                    push(assemble(a2, unconstrained(), {kNegInf, true, j1, !a1 && !b2 && d1},
                                  b2));
            break;
        case AllenRelation::Meets:
            for (bool b2 : kFlagOrder)
                push(assemble(!b1, {k1, e1, l1, z1}, unconstrained(), b2));
            break;
        case AllenRelation::MetBy:
            for (bool a2 : kFlagOrder)
                push(assemble(a2, unconstrained(), {i1, g1, j1, d1}, !a1));
            break;
        case AllenRelation::Overlaps:
            for (bool a2 : kFlagOrder)
                for (bool b2 : kFlagOrder)
                    push(assemble(a2, {i1, a1 && !a2 && g1, l1, b1 && a2 && z1},
                                  {k1, !b1 && b2 && e1, kPosInf, true}, b2));
            break;
        case AllenRelation::OverlappedBy:
            for (bool a2 : kFlagOrder)
                for (bool b2 : kFlagOrder)
                    push(assemble(a2, {kNegInf, true, j1, !a1 && a2 && d1},
                                  {i1, a1 && b2 && g1, l1, b1 && !b2 && z1}, b2));
            break;
        case AllenRelation::Starts:
            for (bool b2 : kFlagOrder)
                push(assemble(a1, {i1, g1, j1, d1}, {k1, !b1 && b2 && e1, kPosInf, true}, b2));
            break;
        case AllenRelation::StartedBy:
            for (bool b2 : kFlagOrder)
                push(assemble(a1, {i1, g1, j1, d1}, {kNegInf, true, l1, b1 && !b2 && z1}, b2));
            break;
        case AllenRelation::Finishes:
            for (bool a2 : kFlagOrder)
                push(assemble(a2, {kNegInf, true, j1, !a1 && a2 && d1}, {k1, e1, l1, z1}, b1));
            break;
        case AllenRelation::FinishedBy:
            for (bool a2 : kFlagOrder)
                push(assemble(a2, {i1, a1 && !a2 && g1, kPosInf, true}, {k1, e1, l1, z1}, b1));
            break;
        case AllenRelation::During:
            for (bool a2 : kFlagOrder)
                for (bool b2 : kFlagOrder)
                    push(assemble(a2, {kNegInf, true, j1, !a1 && a2 && d1},
                                  {k1, !b1 && b2 && e1, kPosInf, true}, b2));
            break;
        case AllenRelation::Contains:
            for (bool a2 : kFlagOrder)
                for (bool b2 : kFlagOrder)
                    push(assemble(a2, {i1, a1 && !a2 && g1, kPosInf, true},
                                  {kNegInf, true, l1, b1 && !b2 && z1}, b2));
            break;
    }
    return SpanningSet::of(std::move(out));
}

std::size_t d_map_bound(AllenRelation r) {
    switch (r) {
        case AllenRelation::Equals: return 1;
        case AllenRelation::Before: return 4;
        case AllenRelation::After: return 4;
        case AllenRelation::Meets: return 2;
        case AllenRelation::MetBy: return 2;
        case AllenRelation::Overlaps: return 4;
        case AllenRelation::OverlappedBy: return 4;
        case AllenRelation::Starts: return 2;
        case AllenRelation::StartedBy: return 2;
        case AllenRelation::Finishes: return 2;
        case AllenRelation::FinishedBy: return 2;
        case AllenRelation::During: return 4;
        case AllenRelation::Contains: return 4;
    }
    throw std::logic_error("bad relation");
}

SpanningSet i_map(const SpanningInterval& a, AllenRelation r, const SpanningInterval& b) {
    const SpanningSet a_candidates = d_map(inverse(r), b);
    if (a_candidates.empty()) return {};
    const SpanningSet b_candidates = d_map(r, a);
    if (b_candidates.empty()) return {};

    std::vector<SpanningInterval> out;
    for (const auto& ac : a_candidates.members()) {
        const auto aa = intersect(ac, a);
        if (!aa) continue;
        for (const auto& bc : b_candidates.members()) {
            const auto bb = intersect(bc, b);
            if (!bb) continue;
            for (const auto& sp : span_members(*aa, *bb)) out.push_back(sp);
        }
    }
    return SpanningSet::of(std::move(out));
}

}  // namespace evl
