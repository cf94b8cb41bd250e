#include <climits>
#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace hfk;
using namespace testkit;

namespace {

const GridDiagram unknot2 = make_grid({1, 0}, {0, 1});

// Unsigned count of empty torus rectangles from x to y, mod 2.
std::map<std::pair<std::vector<int>, std::vector<int>>, int> rect_parity(const GridDiagram& g) {
    const int n = g.n;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::map<std::pair<std::vector<int>, std::vector<int>>, int> out;
    do {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                int w = (j - i + n) % n, h = (perm[j] - perm[i] + n) % n;
                if (h == 0) continue;
                bool empty = true;
                for (int s = 1; s < w && empty; ++s) {
                    int c = (i + s) % n, off = (perm[c] - perm[i] + n) % n;
                    if (off > 0 && off < h) empty = false;
                }
                for (int s = 0; s < w && empty; ++s) {
                    int c = (i + s) % n;
                    for (int r : {g.xs[c], g.os[c]}) {
                        int off = (r - perm[i] + n) % n;
                        if (off < h) empty = false;
                    }
                }
                if (!empty) continue;
                std::vector<int> y = perm;
                std::swap(y[i], y[j]);
                out[{perm, y}] ^= 1;
            }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t> entries(const SparseComplex& c) {
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t> out;
    for (int i = 0; i < c.size(); ++i)
        for (auto& e : c.d[i]) out[{c.label[i], c.label[e.to]}] += e.c;
    return out;
}

}  // namespace

TEST_CASE("dominance counts") {
    CHECK(I({{0, 0}}, {{1, 1}}) == 1);
    CHECK(I({}, {{1, 1}}) == 0);
    std::vector<FinePoint> S{{0, 0}, {1, 1}, {2, 0}};
    CHECK(I(S, S) == 1);
    CHECK(J2(S, S) == 2);
}

TEST_CASE("n=2 gradings by hand") {
    auto O = o_points(unknot2);
    CHECK(maslov_of(mos_points({0, 1}), unknot2, true) == -1);
    CHECK(maslov_of(mos_points({1, 0}), unknot2, true) == 0);
    CHECK(alexander2_of(mos_points({0, 1}), unknot2) == -2);
    CHECK(alexander2_of(mos_points({1, 0}), unknot2) == 0);
    auto mos = mos_complex(unknot2, Ring::Z);
    CHECK(mos.size() == 2);
    for (auto& row : mos.d) CHECK(row.empty());
    OvalConfig s = build_short_config(unknot2, 0, 0, 1, 1);
    auto t = enumerate_generators(s);
    REQUIRE(t.gens.size() == 2);
    // upper tip point: (-1, -1); lower tip point: (0, 0)
    for (size_t i = 0; i < t.gens.size(); ++i) {
        bool upper = s.points[t.gens[i][0]].pos.y > s.points[t.gens[1 - i][0]].pos.y;
        CHECK(t.grading[i] == (upper ? Grading{-2, -1} : Grading{0, 0}));
    }
}

TEST_CASE("two Alexander forms and direct Maslov agree") {
    std::mt19937 rng(13);
    std::vector<GridDiagram> grids{parse_braid({1, 1, 1})};
    for (int i = 0; i < 12; ++i) grids.push_back(random_grid(rng, 2 + i % 5));
    for (auto& g : grids) {
        auto mos = mos_complex(g, Ring::Z, {}, false);
        for (int i = 0; i < mos.size(); ++i) {
            auto pts = mos_points(mos.label[i]);
            CHECK(alexander2_of(pts, g) == alexander2_winding(pts, g));
            CHECK(alexander2_of(pts, g) == mos.grading[i].a2);
            CHECK(maslov_of(pts, g, true) == mos.grading[i].m);
        }
        OvalConfig s = select_best_config(g);
        for (const OvalConfig& cfg : {s, build_long_for(s).config}) {
            auto t = enumerate_generators(cfg);
            for (size_t i = 0; i < t.gens.size(); ++i) {
                auto pts = gen_points(cfg, t.gens[i]);
                CHECK(alexander2_of(pts, cfg.g) == alexander2_winding(pts, cfg.g));
                CHECK(t.grading[i].a2 == alexander2_of(pts, cfg.g));
                CHECK(t.grading[i].m == oval_maslov_direct(cfg, t.gens[i]));
            }
        }
    }
}

TEST_CASE("generator counts follow the product rule") {
    std::mt19937 rng(14);
    for (int i = 0; i < 10; ++i) {
        GridDiagram g = random_grid(rng, 2 + i % 4);
        OvalConfig s = select_best_config(g);
        const int k = s.k();
        std::vector<int> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        std::int64_t want = 0;
        do {
            std::int64_t prod = 1;
            for (int v = 0; v < k; ++v) prod *= s.pair_multiplicity(v, perm[v]);
            want += prod;
        } while (std::next_permutation(perm.begin(), perm.end()));
        auto t = enumerate_generators(s);
        CHECK(static_cast<std::int64_t>(t.gens.size()) == want);
        std::int64_t census = 0;
        for (auto& [a, n] : alexander_census(s)) census += n;
        CHECK(census == want);
        std::set<int> all;
        for (auto& gr : t.grading) all.insert(gr.a2);
        CHECK(enumerate_generators(s, all).gens.empty());
        std::map<Grading, std::int64_t> graded;
        for (auto& gr : t.grading) ++graded[gr];
        CHECK(graded == graded_census(s));
    }
}

TEST_CASE("high Alexander enumeration equals filtering") {
    std::mt19937 rng(15);
    std::vector<OvalConfig> cfgs{select_best_config(parse_braid({1, 1, 1}))};
    for (int i = 0; i < 8; ++i) cfgs.push_back(select_best_config(random_grid(rng, 3 + i % 4)));
    for (auto& cfg : cfgs) {
        auto all = enumerate_generators(cfg);
        int lo = INT_MAX, hi = INT_MIN;
        for (auto& gr : all.grading) {
            lo = std::min(lo, gr.a2);
            hi = std::max(hi, gr.a2);
        }
        for (int th : {hi, hi - 2, (lo + hi) / 2, lo - 2}) {
            std::multiset<std::vector<int>> want, got;
            for (size_t i = 0; i < all.gens.size(); ++i)
                if (all.grading[i].a2 > th) want.insert(all.gens[i]);
            for (auto& gvec : enumerate_high_alexander(cfg, th).gens) got.insert(gvec);
            CHECK(want == got);
        }
    }
}

TEST_CASE("MOS boundary") {
    std::mt19937 rng(16);
    std::vector<GridDiagram> grids{parse_braid({1, 1, 1})};
    for (int i = 0; i < 6; ++i) grids.push_back(random_grid(rng, 3 + i % 3));
    for (auto& g : grids) {
        auto z = mos_complex(g, Ring::Z), z2 = mos_complex(g, Ring::Z2);
        CHECK(d_squared_zero(z));
        CHECK(d_squared_zero(z2));
        auto ez = entries(z), ez2 = entries(z2);
        auto oracle = rect_parity(g);
        std::map<std::pair<std::vector<int>, std::vector<int>>, int> odd, odd2, want;
        for (auto& [k, v] : ez)
            if (v % 2) odd[k] = 1;
        for (auto& [k, v] : ez2)
            if (v % 2) odd2[k] = 1;
        for (auto& [k, v] : oracle)
            if (v) want[k] = 1;
        CHECK(odd == want);
        CHECK(odd2 == want);
        for (int i = 0; i < z.size(); ++i)
            for (auto& e : z.d[i]) {
                CHECK(z.grading[e.to].a2 == z.grading[i].a2);
                CHECK(z.grading[e.to].m == z.grading[i].m - 1);
            }
    }
}

TEST_CASE("long complex") {
    OvalConfig s = build_short_config(unknot2, 0, 0, 1, 1);
    LongConfig L = build_long_for(s);
    auto t = enumerate_generators(L.config);
    CHECK(t.gens.size() == 4);
    auto c = long_complex(L.config, Ring::Z, t);
    CHECK(d_squared_zero(c));
    int nonzero = 0;
    for (auto& row : c.d)
        for (auto& e : row) {
            CHECK((e.c == 1 || e.c == -1));
            ++nonzero;
        }
    CHECK(nonzero > 0);

    std::mt19937 rng(17);
    for (int i = 0; i < 10; ++i) {
        GridDiagram g = random_grid(rng, 2 + i % 4);
        LongConfig l = build_long_for(select_best_config(g));
        auto tab = enumerate_generators(l.config);
        auto z = long_complex(l.config, Ring::Z, tab), z2 = long_complex(l.config, Ring::Z2, tab);
        CHECK(d_squared_zero(z));
        CHECK(d_squared_zero(z2));
        auto ez = entries(z), ez2 = entries(z2);
        std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t> red, red2;
        for (auto& [k, v] : ez)
            if (v % 2) red[k] = 1;
        for (auto& [k, v] : ez2)
            if (v % 2) red2[k] = 1;
        CHECK(red == red2);
        // every entry from the edge list, unsigned, also matches parity
        std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t> edges;
        for (auto& gvec : tab.gens)
            for (auto& e : long_edges(l.config, gvec)) edges[{gvec, e.target}] ^= 1;
        std::erase_if(edges, [](auto& kv) { return kv.second == 0; });
        CHECK(edges == red);
    }
}
