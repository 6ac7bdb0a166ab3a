#ifndef EVL_ORACLE_CHECKS_HPP
#define EVL_ORACLE_CHECKS_HPP

#include <string>
#include <vector>

#include "evl/oracle.hpp"

namespace evl {

// Extension-equivalence checks of every spanning-interval operation
// against brute-force set semantics, plus the evaluator comparison.
//
// The comparisons probe intervals with endpoints on the integer grid
// while quantifying existential witnesses over a quarter-step refinement
// padded one unit beyond the window: any satisfiable endpoint arrangement
// relative to integer constants then has an in-universe witness.
//
// Mismatching probes are counted in two buckets. Probes of positive
// length ("fat") witness a genuine transcription or implementation error
// and must never occur. Degenerate point-interval probes can mismatch:
// the product-of-ranges representation cannot exclude the diagonal from a
// closed-interval box, so operators whose witnesses must fit strictly
// inside the probe (o, oi, s, f, d, and spans at coupled corners)
// over-approximate by point intervals. See the project notes.
struct MismatchStats {
    long checked = 0;
    long mismatched = 0;
    long fat_probes = 0;
    long degenerate_probes = 0;
    long bound_violations = 0;
    std::string first_fat;

    bool clean() const { return mismatched == 0 && bound_violations == 0; }
    bool fat_clean() const { return fat_probes == 0 && bound_violations == 0; }
    void absorb(const MismatchStats& o);
};

// All normalized spanning intervals over the given endpoint values and
// every flag combination.
std::vector<SpanningInterval> spanning_pool(const std::vector<Endpoint>& values);

// [lo, hi] in steps of 1/denominator.
GridUniverse refined_universe(std::int64_t lo, std::int64_t hi, int denominator);

// Individual operation checks; `n` bounds the integer probe window [0,n].
MismatchStats check_normalize(int n);
MismatchStats check_intersect(int n);
MismatchStats check_complement(int n);
MismatchStats check_span(int n);
MismatchStats check_d_maps(int n);
MismatchStats check_i_maps(int n);

// Allen trichotomy and inverse coherence over endpoints {0..n}.
MismatchStats check_trichotomy(int n);

// Seeded random evaluator-vs-oracle comparison on integer probes in
// [0, n]. A disagreement at the cheap witness density re-verifies at
// doubled densities before it counts.
MismatchStats check_evaluator(int n, int cases, std::uint64_t seed);

}  // namespace evl

#endif
