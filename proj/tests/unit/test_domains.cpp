#include <random>

#include "doctest.h"
#include "hfk/domains.hpp"
#include "support.hpp"

using namespace hfk;
using namespace testkit;

namespace {

const GridDiagram unknot2 = make_grid({1, 0}, {0, 1});

std::map<std::pair<int, int>, std::int64_t> keyed(const SparseComplex& c, const OvalConfig& s, const GeneratorTable& t) {
    std::map<std::pair<int, int>, std::int64_t> out;
    for (int i = 0; i < c.size(); ++i)
        for (auto& e : c.d[i]) out[{t.find(s, c.label[i]), t.find(s, c.label[e.to])}] = e.c;
    return out;
}

}  // namespace

TEST_CASE("domains on the n=2 configurations") {
    OvalConfig s = build_short_config(unknot2, 0, 0, 1, 1);
    auto arr = build_arrangement(s);
    DomainSolver ds(s, arr);
    CHECK(ds.unique());
    auto t = enumerate_generators(s);
    REQUIRE(t.gens.size() == 2);
    CHECK_FALSE(ds.find_domain(t.gens[0], t.gens[0]));
    CHECK_FALSE(ds.find_domain(t.gens[0], t.gens[1]));
    CHECK_FALSE(ds.find_domain(t.gens[1], t.gens[0]));

    LongConfig L = build_long_for(s);
    auto la = build_arrangement(L.config);
    DomainSolver ld(L.config, la);
    CHECK(ld.unique());
    int bigons = 0;
    for (auto& g : enumerate_generators(L.config).gens)
        for (auto& e : long_edges(L.config, g)) {
            if (!e.bigon) continue;
            auto d = ld.find_domain(g, e.target);
            REQUIRE(d);
            int pieces = 0;
            for (int p = 0; p < la.piece_count; ++p)
                if ((*d)[p]) {
                    ++pieces;
                    CHECK((*d)[p] == 1);
                    CHECK(la.corner_count[p] == 2);
                    CHECK(la.piece_punctures[p].empty());
                }
            CHECK(pieces == 1);
            ++bigons;
        }
    CHECK(bigons > 0);
}

TEST_CASE("every long boundary edge has a domain") {
    std::mt19937 rng(20);
    for (int i = 0; i < 8; ++i) {
        GridDiagram g = random_grid(rng, 2 + i % 3);
        LongConfig L = build_long_for(select_best_config(g));
        auto arr = build_arrangement(L.config);
        DomainSolver ds(L.config, arr);
        CHECK(ds.unique());
        for (auto& x : enumerate_generators(L.config).gens) {
            CHECK_FALSE(ds.find_domain(x, x));
            for (auto& e : long_edges(L.config, x)) {
                auto d = ds.find_domain(x, e.target);
                REQUIRE(d);
                for (int p = 0; p < arr.piece_count; ++p) {
                    CHECK((*d)[p] >= 0);
                    if (!arr.piece_punctures[p].empty()) CHECK((*d)[p] == 0);
                }
                // corner indices reproduce the difference of the generators
                for (size_t p = 0; p < L.config.points.size(); ++p) {
                    int want = (std::count(x.begin(), x.end(), p) ? 1 : 0) -
                               (std::count(e.target.begin(), e.target.end(), p) ? 1 : 0);
                    CHECK(corner_index(arr, *d, static_cast<int>(p)) == want);
                }
            }
        }
    }
}

TEST_CASE("path rows") {
    OvalConfig s = build_short_config(unknot2, 0, 0, 1, 1);
    LongConfig L = build_long_for(s);
    PathEngine eng(L, Ring::Z);
    for (auto& g : enumerate_generators(s).gens) CHECK(eng.short_row(g).empty());

    std::mt19937 rng(22);
    for (int i = 0; i < 12; ++i) {
        GridDiagram g = random_grid(rng, 3 + i % 3);
        OvalConfig sc = select_best_config(g);
        LongConfig lc = build_long_for(sc);
        auto st = enumerate_generators(sc);
        DomainSolver ds(sc, build_arrangement(sc));
        for (Ring ring : {Ring::Z, Ring::Z2}) {
            auto faithful = faithful_reduce(long_complex(lc.config, ring, enumerate_generators(lc.config)), lc, sc);
            PathStats stats;
            auto paths = short_complex_via_paths(lc, sc, ring, st, &ds, &stats);
            CHECK(stats.prefilter_dropped == 0);
            CHECK(keyed(faithful, sc, st) == keyed(paths, sc, st));
            CHECK(d_squared_zero(paths));
            CHECK(homology(paths).groups == dense_homology(faithful));
            // no domain, no entry
            auto fk = keyed(faithful, sc, st);
            for (size_t x = 0; x < st.gens.size(); ++x)
                for (size_t y = 0; y < st.gens.size(); ++y)
                    if (!ds.find_domain(st.gens[x], st.gens[y]))
                        CHECK(fk.count({static_cast<int>(x), static_cast<int>(y)}) == 0);
        }
    }
}
