#ifndef EVL_ORACLE_HPP
#define EVL_ORACLE_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "evl/event_logic.hpp"

namespace evl {

// Fixed-width bit set sized to a universe; value-semantic.
class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(std::size_t bits) : size_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }

    BitVec& operator|=(const BitVec& o);
    BitVec& operator&=(const BitVec& o);
    BitVec complement() const;  // relative to the universe size
    std::size_t count() const;

    friend bool operator==(const BitVec& a, const BitVec& b) = default;

  private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

// All normalized intervals whose endpoints are drawn from a finite
// ascending value list, with every openness combination; the probe
// universe for extension checks. Spans of members are members, so the
// direct event-logic semantics can be evaluated inside it.
class GridUniverse {
  public:
    static GridUniverse over(std::vector<Rational> values);
    static GridUniverse integers(std::int64_t lo, std::int64_t hi);

    const std::vector<Interval>& intervals() const { return intervals_; }
    std::size_t size() const { return intervals_.size(); }
    int index_of(const Interval& v) const;  // -1 when absent

    // Precomputed unique Allen relation per ordered pair.
    AllenRelation relation(std::size_t i, std::size_t j) const {
        return relation_[i * intervals_.size() + j];
    }
    std::size_t span_index(std::size_t i, std::size_t j) const {
        return span_[i * intervals_.size() + j];
    }

  private:
    std::vector<Interval> intervals_;
    std::vector<AllenRelation> relation_;
    std::vector<std::size_t> span_;
};

BitVec grid_extension(const SpanningInterval& s, const GridUniverse& u);
BitVec grid_extension(const SpanningSet& s, const GridUniverse& u);

// Direct recursive implementation of the entailment semantics over the
// grid: negation is complement relative to the universe, conjunction
// quantifies over related pairs and takes their spans, diamond quantifies
// over related witnesses. Independent of the spanning-interval inference
// path.
BitVec oracle_eval(const Model& m, const EventExpr& expr, const GridUniverse& u);

// Deterministic generators for the equivalence suites.
struct OracleRng {
    explicit OracleRng(std::uint64_t seed) : engine(seed) {}
    std::mt19937_64 engine;

    std::int64_t pick(std::int64_t lo, std::int64_t hi);  // inclusive
    bool coin();
};

// A normalized spanning interval with finite endpoints drawn from
// [lo, hi]; retries until nonempty.
SpanningInterval random_spanning(OracleRng& rng, std::int64_t lo, std::int64_t hi);

// Model over at most `atom_count` ground atoms, each holding over one or
// two random spanning intervals.
Model random_model(OracleRng& rng, int atom_count, std::int64_t lo, std::int64_t hi);

// Random expression over the model's atoms, depth-bounded, relation sets
// uniform over nonempty subsets.
ExprPtr random_expr(OracleRng& rng, const std::vector<GroundAtom>& atoms, int max_depth);

}  // namespace evl

#endif
