#ifndef EVL_RELATION_MAPS_HPP
#define EVL_RELATION_MAPS_HPP

#include "evl/spanning.hpp"

namespace evl {

// All intervals related by r to some interval in ext(s):
//   ext(d_map(r, s)) = { w | exists v in ext(s) with holds(v, r, w) }.
SpanningSet d_map(AllenRelation r, const SpanningInterval& s);

// Worst-case member count of d_map by relation.
std::size_t d_map_bound(AllenRelation r);

// Spans of r-related pairs drawn from the two extensions:
//   ext(i_map(a, r, b)) =
//     { span_intervals(v, w) | v in ext(a), w in ext(b), holds(v, r, w) }.
SpanningSet i_map(const SpanningInterval& a, AllenRelation r, const SpanningInterval& b);

}  // namespace evl

#endif
