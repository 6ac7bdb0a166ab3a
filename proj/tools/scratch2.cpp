// Throwaway probe: print first d_map mismatch for a relation.
#include <cstdio>
#include <vector>

#include "evl/oracle.hpp"
#include "evl/relation_maps.hpp"

using namespace evl;

int main() {
    GridUniverse u = GridUniverse::integers(0, 2);

    std::vector<Endpoint> eps = {Endpoint(Rational(0)), Endpoint(Rational(1)),
                                 Endpoint(Rational(2))};
    std::vector<SpanningInterval> sis;
    for (const auto& i : eps)
        for (const auto& j : eps)
            for (const auto& k : eps)
                for (const auto& l : eps)
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
                        if (auto s = SpanningInterval::normalized(raw)) sis.push_back(*s);
                    }
    std::sort(sis.begin(), sis.end());
    sis.erase(std::unique(sis.begin(), sis.end()), sis.end());
    std::printf("pool %zu\n", sis.size());

    for (AllenRelation r : {AllenRelation::Before, AllenRelation::Meets,
                            AllenRelation::Overlaps}) {
        int shown = 0;
        for (const auto& s : sis) {
            BitVec claim = grid_extension(d_map(r, s), u);
            BitVec truth(u.size());
            BitVec sext = grid_extension(s, u);
            for (std::size_t v = 0; v < u.size(); ++v) {
                if (!sext.get(v)) continue;
                for (std::size_t w = 0; w < u.size(); ++w)
                    if (u.relation(v, w) == r) truth.set(w);
            }
            if (claim == truth) continue;
            std::printf("relation %s input %s\n", std::string(relation_code(r)).c_str(),
                        s.to_string().c_str());
            for (std::size_t w = 0; w < u.size(); ++w) {
                if (claim.get(w) == truth.get(w)) continue;
                std::printf("  probe %s claim=%d truth=%d\n",
                            u.intervals()[w].to_string().c_str(), (int)claim.get(w),
                            (int)truth.get(w));
            }
            std::printf("  d_map members:\n");
            for (const auto& m : d_map(r, s).members())
                std::printf("    %s\n", m.to_string().c_str());
            if (++shown >= 2) break;
        }
    }
    return 0;
}
