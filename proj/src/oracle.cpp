#include "evl/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <map>
#include <stdexcept>

namespace evl {

BitVec& BitVec::operator|=(const BitVec& o) {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

BitVec& BitVec::operator&=(const BitVec& o) {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

BitVec BitVec::complement() const {
    BitVec out(size_);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
    const std::size_t tail = size_ & 63;
    if (tail && !out.words_.empty())
        out.words_.back() &= (std::uint64_t(1) << tail) - 1;
    return out;
}

std::size_t BitVec::count() const {
    std::size_t n = 0;
    for (std::uint64_t w : words_) n += std::popcount(w);
    return n;
}

GridUniverse GridUniverse::over(std::vector<Rational> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    GridUniverse u;
    for (std::size_t a = 0; a < values.size(); ++a) {
        for (std::size_t b = a; b < values.size(); ++b) {
            for (bool lc : {true, false}) {
                for (bool hc : {true, false}) {
                    if (auto v = Interval::make(values[a], values[b], lc, hc))
                        u.intervals_.push_back(*v);
                }
            }
        }
    }
    std::sort(u.intervals_.begin(), u.intervals_.end());
    const std::size_t n = u.intervals_.size();
    u.relation_.resize(n * n);
    u.span_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            u.relation_[i * n + j] = allen_relate(u.intervals_[i], u.intervals_[j]);
            const Interval sp = span_intervals(u.intervals_[i], u.intervals_[j]);
            const int k = u.index_of(sp);
            if (k < 0) throw std::logic_error("universe not span-closed");
            u.span_[i * n + j] = static_cast<std::size_t>(k);
        }
    }
    return u;
}

GridUniverse GridUniverse::integers(std::int64_t lo, std::int64_t hi) {
    std::vector<Rational> values;
    for (std::int64_t v = lo; v <= hi; ++v) values.emplace_back(v);
    return over(std::move(values));
}

int GridUniverse::index_of(const Interval& v) const {
    auto it = std::lower_bound(intervals_.begin(), intervals_.end(), v);
    if (it == intervals_.end() || !(*it == v)) return -1;
    return static_cast<int>(it - intervals_.begin());
}

BitVec grid_extension(const SpanningInterval& s, const GridUniverse& u) {
    BitVec out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        if (s.contains(u.intervals()[i])) out.set(i);
    return out;
}

BitVec grid_extension(const SpanningSet& s, const GridUniverse& u) {
    BitVec out(u.size());
    for (const auto& m : s.members()) out |= grid_extension(m, u);
    return out;
}

BitVec oracle_eval(const Model& m, const EventExpr& expr, const GridUniverse& u) {
    const std::size_t n = u.size();
    switch (expr.kind) {
        case EventExpr::Kind::Prim: {
            if (expr.name == "=") {
                for (std::size_t i = 1; i < expr.args.size(); ++i)
                    if (expr.args[i] != expr.args[0]) return BitVec(n);
                return BitVec(n).complement();
            }
            return grid_extension(m.lookup(GroundAtom{expr.name, expr.args}), u);
        }
        case EventExpr::Kind::Not:
            return oracle_eval(m, *expr.lhs, u).complement();
        case EventExpr::Kind::Or: {
            BitVec out = oracle_eval(m, *expr.lhs, u);
            out |= oracle_eval(m, *expr.rhs, u);
            return out;
        }
        case EventExpr::Kind::And: {
            const BitVec lhs = oracle_eval(m, *expr.lhs, u);
            const BitVec rhs = oracle_eval(m, *expr.rhs, u);
            BitVec out(n);
            for (std::size_t i = 0; i < n; ++i) {
                if (!lhs.get(i)) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    if (!rhs.get(j)) continue;
                    if (expr.rels.contains(u.relation(i, j))) out.set(u.span_index(i, j));
                }
            }
            return out;
        }
        case EventExpr::Kind::Diamond: {
            const BitVec sub = oracle_eval(m, *expr.lhs, u);
            BitVec out(n);
            for (std::size_t i = 0; i < n; ++i) {
                if (!sub.get(i)) continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (expr.rels.contains(u.relation(i, j))) out.set(j);
            }
            return out;
        }
    }
    throw std::logic_error("bad expr kind");
}

std::int64_t OracleRng::pick(std::int64_t lo, std::int64_t hi) {
    std::uniform_int_distribution<std::int64_t> d(lo, hi);
    return d(engine);
}

bool OracleRng::coin() { return pick(0, 1) == 1; }

SpanningInterval random_spanning(OracleRng& rng, std::int64_t lo, std::int64_t hi) {
    while (true) {
        RawSpanningInterval raw;
        raw.lo_lo = Endpoint(Rational(rng.pick(lo, hi)));
        raw.lo_hi = Endpoint(Rational(rng.pick(lo, hi)));
        raw.hi_lo = Endpoint(Rational(rng.pick(lo, hi)));
        raw.hi_hi = Endpoint(Rational(rng.pick(lo, hi)));
        raw.iv_lo_closed = rng.coin();
        raw.iv_hi_closed = rng.coin();
        raw.lo_lo_closed = rng.coin();
        raw.lo_hi_closed = rng.coin();
        raw.hi_lo_closed = rng.coin();
        raw.hi_hi_closed = rng.coin();
        if (auto s = SpanningInterval::normalized(raw)) return *s;
    }
}

Model random_model(OracleRng& rng, int atom_count, std::int64_t lo, std::int64_t hi) {
    static const char* kNames[] = {"P", "Q", "S"};
    static const char* kArgs[] = {"A", "B"};
    Model m;
    for (int i = 0; i < atom_count; ++i) {
        GroundAtom atom{kNames[i % 3], {kArgs[i % 2]}};
        std::vector<SpanningInterval> members;
        const int count = static_cast<int>(rng.pick(1, 2));
        for (int k = 0; k < count; ++k) members.push_back(random_spanning(rng, lo, hi));
        m.add(atom, SpanningSet::of(std::move(members)));
    }
    return m;
}

static RelationSet random_relset(OracleRng& rng) {
    RelationSet rels;
    while (rels.empty()) {
        std::uint16_t bits = static_cast<std::uint16_t>(rng.pick(1, (1 << 13) - 1));
        for (int i = 0; i < kAllenRelationCount; ++i)
            if (bits & (1 << i)) rels.add(kAllRelations[i]);
    }
    return rels;
}

ExprPtr random_expr(OracleRng& rng, const std::vector<GroundAtom>& atoms, int max_depth) {
    if (max_depth <= 0 || rng.pick(0, 4) == 0) {
        const auto& a = atoms[static_cast<std::size_t>(rng.pick(0, atoms.size() - 1))];
        return make_prim(a.name, a.args);
    }
    switch (rng.pick(0, 3)) {
        case 0:
            return make_not(random_expr(rng, atoms, max_depth - 1));
        case 1:
            return make_or(random_expr(rng, atoms, max_depth - 1),
                           random_expr(rng, atoms, max_depth - 1));
        case 2:
            return make_and(random_expr(rng, atoms, max_depth - 1),
                            random_expr(rng, atoms, max_depth - 1), random_relset(rng));
        default:
            return make_diamond(random_expr(rng, atoms, max_depth - 1), random_relset(rng));
    }
}

}  // namespace evl
