#include "evl/oracle_checks.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <thread>

#include "evl/relation_maps.hpp"
#include "evl/text.hpp"

namespace evl {

namespace {

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
    unsigned workers = std::min(8u, std::thread::hardware_concurrency());
    if (workers <= 1 || count < 64) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) break;
                body(i);
            }
        });
    }
    for (auto& th : pool) th.join();
}

bool degenerate(const Interval& v) { return v.lo() == v.hi(); }

// Relation rows over a universe: row(r, v) = mask of w with v r w.
struct RelationRows {
    explicit RelationRows(const GridUniverse& u) {
        const std::size_t n = u.size();
        for (auto& rel : rows) rel.assign(n, BitVec(n));
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t w = 0; w < n; ++w)
                rows[static_cast<int>(u.relation(v, w))][v].set(w);
    }
    std::array<std::vector<BitVec>, 13> rows;
};

struct Workspace {
    GridUniverse witness;            // quarter-step, padded one unit
    std::vector<std::size_t> probes; // integer-endpoint intervals in [0, n]
    std::vector<SpanningInterval> pool;
    std::vector<BitVec> ext;         // extension of pool members over witness

    Workspace(int n, std::vector<Endpoint> pool_values) {
        witness = refined_universe(-1, n + 1, 4);
        for (std::size_t p = 0; p < witness.size(); ++p) {
            const Interval& v = witness.intervals()[p];
            if (v.lo().is_integer() && v.hi().is_integer() && v.lo() >= Rational(0) &&
                v.hi() <= Rational(n))
                probes.push_back(p);
        }
        pool = spanning_pool(pool_values);
        ext.reserve(pool.size());
        for (const auto& s : pool) ext.push_back(grid_extension(s, witness));
    }
};

std::vector<Endpoint> int_endpoints(int lo, int hi, bool with_inf) {
    std::vector<Endpoint> out;
    if (with_inf) out.push_back(Endpoint::neg_inf());
    for (int v = lo; v <= hi; ++v) out.push_back(Endpoint(Rational(v)));
    if (with_inf) out.push_back(Endpoint::pos_inf());
    return out;
}

void classify_mismatch(MismatchStats& stats, const GridUniverse& u,
                       const std::vector<std::size_t>& probes, const BitVec& claim,
                       const BitVec& truth, const std::string& context) {
    bool any = false;
    for (std::size_t p : probes) {
        if (claim.get(p) == truth.get(p)) continue;
        any = true;
        if (degenerate(u.intervals()[p])) {
            ++stats.degenerate_probes;
        } else {
            ++stats.fat_probes;
            if (stats.first_fat.empty())
                stats.first_fat = context + " probe " + u.intervals()[p].to_string() +
                                  (claim.get(p) ? " claimed but absent" : " missing");
        }
    }
    if (any) ++stats.mismatched;
}

}  // namespace

void MismatchStats::absorb(const MismatchStats& o) {
    checked += o.checked;
    mismatched += o.mismatched;
    fat_probes += o.fat_probes;
    degenerate_probes += o.degenerate_probes;
    bound_violations += o.bound_violations;
    if (first_fat.empty()) first_fat = o.first_fat;
}

std::vector<SpanningInterval> spanning_pool(const std::vector<Endpoint>& values) {
    std::vector<SpanningInterval> out;
    for (const auto& i : values)
        for (const auto& j : values)
            for (const auto& k : values)
                for (const auto& l : values)
                    for (int flags = 0; flags < 64; ++flags) {
                        RawSpanningInterval raw;
                        raw.lo_lo = i;
                        raw.lo_hi = j;
                        raw.hi_lo = k;
                        raw.hi_hi = l;
                        raw.iv_lo_closed = flags & 1;
                        raw.iv_hi_closed = flags & 2;
                        raw.lo_lo_closed = flags & 4;
                        raw.lo_hi_closed = flags & 8;
                        raw.hi_lo_closed = flags & 16;
                        raw.hi_hi_closed = flags & 32;
                        if (!satisfies_normalization_criteria(raw)) continue;
                        if (auto s = SpanningInterval::normalized(raw)) out.push_back(*s);
                    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

GridUniverse refined_universe(std::int64_t lo, std::int64_t hi, int denominator) {
    std::vector<Rational> values;
    for (std::int64_t q = lo * denominator; q <= hi * denominator; ++q)
        values.push_back(Rational(q, denominator));
    return GridUniverse::over(std::move(values));
}

MismatchStats check_trichotomy(int n) {
    MismatchStats stats;
    GridUniverse u = GridUniverse::integers(0, n);
    for (const auto& a : u.intervals()) {
        for (const auto& b : u.intervals()) {
            ++stats.checked;
            int fired = 0;
            AllenRelation found = AllenRelation::Equals;
            for (AllenRelation r : kAllRelations) {
                if (holds(a, r, b)) {
                    ++fired;
                    found = r;
                }
            }
            if (fired != 1) {
                ++stats.mismatched;
                if (stats.first_fat.empty())
                    stats.first_fat = a.to_string() + " vs " + b.to_string() + " fired " +
                                      std::to_string(fired);
                continue;
            }
            if (!holds(b, inverse(found), a)) {
                ++stats.mismatched;
                if (stats.first_fat.empty())
                    stats.first_fat = "inverse incoherent for " + a.to_string() + " " +
                                      std::string(relation_code(found)) + " " + b.to_string();
            }
        }
    }
    return stats;
}

MismatchStats check_normalize(int n) {
    Workspace ws(n, int_endpoints(0, n - 1, true));
    const auto values = int_endpoints(0, n - 1, true);
    MismatchStats stats;
    std::mutex mu;
    const std::size_t vn = values.size();
    parallel_for(vn * vn * vn * vn, [&](std::size_t idx) {
        MismatchStats local;
        RawSpanningInterval raw;
        raw.lo_lo = values[idx % vn];
        raw.lo_hi = values[(idx / vn) % vn];
        raw.hi_lo = values[(idx / vn / vn) % vn];
        raw.hi_hi = values[(idx / vn / vn / vn) % vn];
        for (int flags = 0; flags < 64; ++flags) {
            raw.iv_lo_closed = flags & 1;
            raw.iv_hi_closed = flags & 2;
            raw.lo_lo_closed = flags & 4;
            raw.lo_hi_closed = flags & 8;
            raw.hi_lo_closed = flags & 16;
            raw.hi_hi_closed = flags & 32;
            ++local.checked;
            auto norm = SpanningInterval::normalized(raw);
            // Extension preservation, pointwise over the whole refined
            // universe (no witnesses involved).
            bool any = false;
            for (std::size_t p = 0; p < ws.witness.size(); ++p) {
                const Interval& v = ws.witness.intervals()[p];
                const bool before = raw_contains(raw, v);
                const bool after = norm && norm->contains(v);
                if (before == after) continue;
                any = true;
                if (degenerate(v))
                    ++local.degenerate_probes;
                else {
                    ++local.fat_probes;
                    if (local.first_fat.empty())
                        local.first_fat = "normalize probe " + v.to_string();
                }
            }
            if (any) ++local.mismatched;
            // Idempotence and criteria on the result.
            if (norm) {
                if (!satisfies_normalization_criteria(norm->raw())) ++local.bound_violations;
                auto again = SpanningInterval::normalized(norm->raw());
                if (!again || !(*again == *norm)) ++local.bound_violations;
            }
        }
        std::lock_guard<std::mutex> lock(mu);
        stats.absorb(local);
    });
    return stats;
}

MismatchStats check_intersect(int n) {
    Workspace ws(n, int_endpoints(0, n - 1, true));
    MismatchStats stats;
    std::mutex mu;
    std::map<SpanningInterval, BitVec> result_ext;
    std::mutex cache_mu;
    parallel_for(ws.pool.size(), [&](std::size_t ia) {
        MismatchStats local;
        const auto& a = ws.pool[ia];
        for (std::size_t ib = 0; ib < ws.pool.size(); ++ib) {
            const auto& b = ws.pool[ib];
            ++local.checked;
            auto r = intersect(a, b);
            BitVec expected = ws.ext[ia];
            expected &= ws.ext[ib];
            BitVec actual(ws.witness.size());
            if (r) {
                std::lock_guard<std::mutex> lock(cache_mu);
                auto it = result_ext.find(*r);
                if (it == result_ext.end())
                    it = result_ext.emplace(*r, grid_extension(*r, ws.witness)).first;
                actual = it->second;
            }
            if (!(actual == expected)) {
                // Pointwise operation: every probe is meaningful.
                for (std::size_t p = 0; p < ws.witness.size(); ++p) {
                    if (actual.get(p) == expected.get(p)) continue;
                    if (degenerate(ws.witness.intervals()[p]))
                        ++local.degenerate_probes;
                    else {
                        ++local.fat_probes;
                        if (local.first_fat.empty())
                            local.first_fat = "intersect " + a.to_string() + " " +
                                              b.to_string() + " probe " +
                                              ws.witness.intervals()[p].to_string();
                    }
                }
                ++local.mismatched;
            }
        }
        std::lock_guard<std::mutex> lock(mu);
        stats.absorb(local);
    });
    return stats;
}

MismatchStats check_complement(int n) {
    Workspace ws(n, int_endpoints(0, n - 1, true));
    MismatchStats stats;
    std::mutex mu;
    parallel_for(ws.pool.size(), [&](std::size_t ia) {
        MismatchStats local;
        const auto& s = ws.pool[ia];
        ++local.checked;
        auto comp = complement_members(s);
        if (comp.size() > 7) ++local.bound_violations;
        SpanningSet cs = SpanningSet::of(comp);
        bool any = false;
        for (std::size_t p = 0; p < ws.witness.size(); ++p) {
            const Interval& v = ws.witness.intervals()[p];
            if (cs.contains(v) != !s.contains(v)) {
                any = true;
                if (degenerate(v))
                    ++local.degenerate_probes;
                else {
                    ++local.fat_probes;
                    if (local.first_fat.empty())
                        local.first_fat =
                            "complement " + s.to_string() + " probe " + v.to_string();
                }
            }
        }
        if (any) ++local.mismatched;
        std::lock_guard<std::mutex> lock(mu);
        stats.absorb(local);
    });
    return stats;
}

namespace {

// Pair set for the binary witnessed checks: exhaustive over the
// finite-endpoint pool, strided over pairs with infinite bounds (their
// extensions are large and the truth fold is quadratic).
struct PairPlan {
    Workspace ws;
    std::vector<std::size_t> finite;
    std::vector<std::size_t> infinite;

    explicit PairPlan(int n) : ws(n, int_endpoints(0, n - 1, true)) {
        for (std::size_t i = 0; i < ws.pool.size(); ++i) {
            const auto& f = ws.pool[i].raw();
            const bool has_inf = !f.lo_lo.is_finite() || !f.lo_hi.is_finite() ||
                                 !f.hi_lo.is_finite() || !f.hi_hi.is_finite();
            (has_inf ? infinite : finite).push_back(i);
        }
    }
};

}  // namespace

MismatchStats check_span(int n) {
    PairPlan plan(n);
    const auto& ws = plan.ws;
    RelationRows rows(ws.witness);  // not needed for span truth, kept for symmetry
    (void)rows;

    auto truth_mask = [&](std::size_t ia, std::size_t ib) {
        BitVec truth(ws.witness.size());
        for (std::size_t v = 0; v < ws.witness.size(); ++v) {
            if (!ws.ext[ia].get(v)) continue;
            for (std::size_t w = 0; w < ws.witness.size(); ++w) {
                if (!ws.ext[ib].get(w)) continue;
                truth.set(ws.witness.span_index(v, w));
            }
        }
        return truth;
    };

    MismatchStats stats;
    std::mutex mu;
    auto run_pairs = [&](const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
        parallel_for(pairs.size(), [&](std::size_t idx) {
            MismatchStats local;
            auto [ia, ib] = pairs[idx];
            ++local.checked;
            auto members = span_members(ws.pool[ia], ws.pool[ib]);
            if (members.size() > 4) ++local.bound_violations;
            BitVec claim = grid_extension(SpanningSet::of(members), ws.witness);
            BitVec truth = truth_mask(ia, ib);
            classify_mismatch(local, ws.witness, ws.probes, claim, truth,
                              "span " + ws.pool[ia].to_string() + " " +
                                  ws.pool[ib].to_string());
            std::lock_guard<std::mutex> lock(mu);
            stats.absorb(local);
        });
    };

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a : plan.finite)
        for (std::size_t b : plan.finite) pairs.emplace_back(a, b);
    run_pairs(pairs);

    pairs.clear();
    for (std::size_t i = 0; i < plan.infinite.size(); i += 3)
        for (std::size_t j = 0; j < plan.ws.pool.size(); j += 5)
            pairs.emplace_back(plan.infinite[i], j);
    run_pairs(pairs);
    return stats;
}

MismatchStats check_d_maps(int n) {
    Workspace ws(n, int_endpoints(0, n - 1, true));
    RelationRows rows(ws.witness);
    MismatchStats stats;
    std::mutex mu;
    parallel_for(ws.pool.size(), [&](std::size_t ia) {
        MismatchStats local;
        const auto& s = ws.pool[ia];
        for (AllenRelation r : kAllRelations) {
            ++local.checked;
            SpanningSet claim_set = d_map(r, s);
            if (claim_set.size() > d_map_bound(r)) ++local.bound_violations;
            BitVec claim = grid_extension(claim_set, ws.witness);
            BitVec truth(ws.witness.size());
            for (std::size_t v = 0; v < ws.witness.size(); ++v)
                if (ws.ext[ia].get(v)) truth |= rows.rows[static_cast<int>(r)][v];
            classify_mismatch(local, ws.witness, ws.probes, claim, truth,
                              "d_map " + std::string(relation_code(r)) + " " + s.to_string());
        }
        std::lock_guard<std::mutex> lock(mu);
        stats.absorb(local);
    });
    return stats;
}

MismatchStats check_i_maps(int n) {
    PairPlan plan(n);
    const auto& ws = plan.ws;
    RelationRows rows(ws.witness);

    MismatchStats stats;
    std::mutex mu;
    auto run_pairs = [&](const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
        parallel_for(pairs.size(), [&](std::size_t idx) {
            MismatchStats local;
            auto [ia, ib] = pairs[idx];
            for (AllenRelation r : kAllRelations) {
                ++local.checked;
                SpanningSet claim_set = i_map(ws.pool[ia], r, ws.pool[ib]);
                if (claim_set.size() > 4 * d_map_bound(r) * d_map_bound(r))
                    ++local.bound_violations;
                BitVec claim = grid_extension(claim_set, ws.witness);
                BitVec truth(ws.witness.size());
                for (std::size_t v = 0; v < ws.witness.size(); ++v) {
                    if (!ws.ext[ia].get(v)) continue;
                    BitVec wset = ws.ext[ib];
                    wset &= rows.rows[static_cast<int>(r)][v];
                    for (std::size_t w = 0; w < ws.witness.size(); ++w)
                        if (wset.get(w)) truth.set(ws.witness.span_index(v, w));
                }
                classify_mismatch(local, ws.witness, ws.probes, claim, truth,
                                  "i_map " + ws.pool[ia].to_string() + " " +
                                      std::string(relation_code(r)) + " " +
                                      ws.pool[ib].to_string());
            }
            std::lock_guard<std::mutex> lock(mu);
            stats.absorb(local);
        });
    };

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a : plan.finite)
        for (std::size_t b : plan.finite) pairs.emplace_back(a, b);
    run_pairs(pairs);

    pairs.clear();
    for (std::size_t i = 0; i < plan.infinite.size(); i += 5)
        for (std::size_t j = 0; j < plan.ws.pool.size(); j += 17)
            pairs.emplace_back(plan.infinite[i], j);
    run_pairs(pairs);
    return stats;
}

MismatchStats check_evaluator(int n, int cases, std::uint64_t seed) {
    // Engine extensions are compared to the direct semantics on integer
    // probes; the oracle quantifies witnesses over step-1/2 intervals and
    // any disagreement is re-verified at density 1/4 before it counts
    // (denser witnesses only add oracle occurrences).
    GridUniverse coarse = refined_universe(-1, n + 1, 2);
    GridUniverse fine;
    bool fine_built = false;

    std::vector<std::size_t> coarse_probes;
    for (std::size_t p = 0; p < coarse.size(); ++p) {
        const Interval& v = coarse.intervals()[p];
        if (v.lo().is_integer() && v.hi().is_integer() && v.lo() >= Rational(0) &&
            v.hi() <= Rational(n))
            coarse_probes.push_back(p);
    }

    OracleRng rng(seed);
    MismatchStats stats;
    for (int c = 0; c < cases; ++c) {
        ++stats.checked;
        Model m = random_model(rng, static_cast<int>(rng.pick(1, 3)), 0, n);
        std::vector<GroundAtom> atoms;
        for (const auto& [atom, set] : m.entries()) atoms.push_back(atom);
        ExprPtr expr = random_expr(rng, atoms, 4);

        SpanningSet engine = eval(m, *expr);
        BitVec oracle = oracle_eval(m, *expr, coarse);
        bool mismatch = false;
        for (std::size_t p : coarse_probes) {
            if (engine.contains(coarse.intervals()[p]) != oracle.get(p)) {
                mismatch = true;
                break;
            }
        }
        if (!mismatch) continue;

        if (!fine_built) {
            fine = refined_universe(-1, n + 1, 4);
            fine_built = true;
        }
        BitVec fine_oracle = oracle_eval(m, *expr, fine);
        bool any = false;
        for (std::size_t p = 0; p < fine.size(); ++p) {
            const Interval& v = fine.intervals()[p];
            if (!(v.lo().is_integer() && v.hi().is_integer() && v.lo() >= Rational(0) &&
                  v.hi() <= Rational(n)))
                continue;
            if (engine.contains(v) == fine_oracle.get(p)) continue;
            any = true;
            if (degenerate(v))
                ++stats.degenerate_probes;
            else {
                ++stats.fat_probes;
                if (stats.first_fat.empty())
                    stats.first_fat = "evaluator case " + std::to_string(c) + " expr " +
                                      render_expr(*expr) + " probe " + v.to_string();
            }
        }
        if (any) ++stats.mismatched;
    }
    return stats;
}

}  // namespace evl
