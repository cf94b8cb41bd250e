#include <numeric>
#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace hfk;
using namespace testkit;

namespace {

struct Rect {
    int x0, x1, y0, y1;
};

Rect rect_of(const Oval& o) {
    return o.vertical ? Rect{o.side_lo, o.side_hi, o.lo, o.hi} : Rect{o.lo, o.hi, o.side_lo, o.side_hi};
}

// Boundary crossings of two axis-parallel rectangles in general position.
int crossings(const Rect& a, const Rect& b) {
    int k = 0;
    for (int x : {a.x0, a.x1})
        for (int y : {b.y0, b.y1}) k += b.x0 < x && x < b.x1 && a.y0 < y && y < a.y1;
    for (int y : {a.y0, a.y1})
        for (int x : {b.x0, b.x1}) k += a.x0 < x && x < a.x1 && b.y0 < y && y < b.y1;
    return k;
}

// 4 if the two grid segments cross, 2 if they share a decoration, else 0.
int segment_rule(const GridDiagram& g, int col, int row) {
    int rx = -1, ro = -1;
    for (int c = 0; c < g.n; ++c) {
        if (g.xs[c] == row) rx = c;
        if (g.os[c] == row) ro = c;
    }
    if (g.xs[col] == row || g.os[col] == row) return 2;
    int c0 = std::min(rx, ro), c1 = std::max(rx, ro);
    int r0 = std::min(g.xs[col], g.os[col]), r1 = std::max(g.xs[col], g.os[col]);
    return c0 < col && col < c1 && r0 < row && row < r1 ? 4 : 0;
}

template <class F>
void for_each_config(const GridDiagram& g, F f) {
    for (int dc = 0; dc < g.n; ++dc)
        for (int dr = 0; dr < g.n; ++dr) {
            GridDiagram cut = cyclic_move(cyclic_move(g, Axis::Cols, dc), Axis::Rows, dr);
            for (int c = 0; c < g.n; ++c)
                for (int r : {cut.xs[c], cut.os[c]})
                    if (omission_valid(cut, c, r)) f(dc, dr, c, r);
        }
}

int components(const OvalConfig& cfg) {
    const int k = cfg.k();
    std::vector<int> parent(2 * k);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); };
    for (auto& p : cfg.points) parent[find(p.v)] = find(k + p.h);
    int c = 0;
    for (int i = 0; i < 2 * k; ++i) c += find(i) == i;
    return c;
}

const GridDiagram unknot2 = make_grid({1, 0}, {0, 1});

}  // namespace

TEST_CASE("n=2 short configuration") {
    OvalConfig s = build_short_config(unknot2, 0, 0, 1, 1);
    CHECK(s.vovals.size() == 1);
    CHECK(s.hovals.size() == 1);
    REQUIRE(s.points.size() == 2);
    CHECK(s.points[0].pos.x == s.points[1].pos.x);
    CHECK(select_best_config(unknot2).points.size() == 2);
    auto arr = build_arrangement(s);
    // the tip piece around the shared decoration is a bounded bigon
    int holding = 0;
    for (int p = 0; p < arr.piece_count; ++p)
        for (auto q : arr.piece_punctures[p])
            if (q == FinePoint{5, 5}) {
                ++holding;
                CHECK(p != arr.unbounded);
                CHECK(arr.corner_count[p] == 2);
            }
    CHECK(holding == 1);
    auto per = periodic_domains(s, arr);
    CHECK(per.size() == 2);
}

TEST_CASE("invalid omission") {
    GridDiagram t = parse_braid({1, 1, 1});
    int bad = -1;
    for (int r = 0; r < t.n; ++r)
        if (t.xs[0] != r && t.os[0] != r) bad = r;
    CHECK_THROWS_AS(build_short_config(t, 0, 0, 0, bad), Error);
    CHECK_THROWS_AS(build_long_config(t, 0, 0, 0, bad), Error);
}

TEST_CASE("intersection rule and geometry on every configuration") {
    std::mt19937 rng(5);
    std::vector<GridDiagram> grids{parse_braid({1, 1, 1})};
    for (int i = 0; i < 6; ++i) grids.push_back(random_grid(rng, 3 + i % 3));
    for (auto& g : grids)
        for_each_config(g, [&](int dc, int dr, int c, int r) {
            OvalConfig s = build_short_config(g, dc, dr, c, r);
            const int k = s.k();
            std::vector<int> count(k * k, 0);
            for (auto& p : s.points) ++count[p.v * k + p.h];
            for (int v = 0; v < k; ++v)
                for (int h = 0; h < k; ++h) {
                    int want = segment_rule(s.g, s.vovals[v].line, s.hovals[h].line);
                    CHECK(count[v * k + h] == want);
                    CHECK(crossings(rect_of(s.vovals[v]), rect_of(s.hovals[h])) == want);
                    CHECK(s.pair_multiplicity(v, h) == want);
                }
            // each oval holds the two decorations of its line and nothing else
            for (auto& o : s.vovals) {
                Rect b = rect_of(o);
                int inside = 0;
                for (auto* set : {&s.xpunct, &s.opunct})
                    for (auto p : *set) inside += b.x0 < p.x && p.x < b.x1 && b.y0 < p.y && p.y < b.y1;
                CHECK(inside == 2);
            }
            LongConfig L = build_long_config(g, dc, dr, c, r);
            CHECK(L.config.points.size() == static_cast<size_t>(4 * k * k));
            for (int v = 0; v < k; ++v)
                for (int h = 0; h < k; ++h)
                    CHECK(crossings(rect_of(L.config.vovals[v]), rect_of(L.config.hovals[h])) == 4);
            // every long point is an event member or a survivor, exactly once
            std::vector<int> seen(L.config.points.size(), 0);
            for (auto& e : L.schedule.events) {
                ++seen[e.p1];
                ++seen[e.p2];
                CHECK(singleton_maslov(L.config, e.p1) == singleton_maslov(L.config, e.p2) + 1);
                CHECK(L.config.points[e.p1].v == L.config.points[e.p2].v);
                CHECK(L.config.points[e.p1].h == L.config.points[e.p2].h);
            }
            for (int p : L.schedule.survivor_map) ++seen[p];
            CHECK(std::all_of(seen.begin(), seen.end(), [](int x) { return x == 1; }));
            REQUIRE(L.schedule.survivor_map.size() == s.points.size());
            // survivors sit on the same oval pairs as the short points
            for (size_t i = 0; i < s.points.size(); ++i) {
                auto& lp = L.config.points[L.schedule.survivor_map[i]];
                CHECK(lp.v == s.points[i].v);
                CHECK(lp.h == s.points[i].h);
            }
        });
}

TEST_CASE("best configuration minimizes the point count") {
    GridDiagram t = parse_braid({1, 1, 1});
    size_t best = select_best_config(t).points.size(), worst = 0;
    std::int64_t best_gens = 0, worst_gens = 0;
    for (auto& [a, n] : alexander_census(select_best_config(t))) best_gens += n;
    for_each_config(t, [&](int dc, int dr, int c, int r) {
        OvalConfig s = build_short_config(t, dc, dr, c, r);
        CHECK(best <= s.points.size());
        worst = std::max(worst, s.points.size());
        std::int64_t gens = 0;
        for (auto& [a, n] : alexander_census(s)) gens += n;
        worst_gens = std::max(worst_gens, gens);
    });
    CHECK(best_gens <= worst_gens);
    CHECK(best <= worst);
}

TEST_CASE("arrangement pieces, Euler count and periodic domains") {
    std::mt19937 rng(6);
    std::vector<OvalConfig> cfgs;
    for (int i = 0; i < 8; ++i) {
        GridDiagram g = random_grid(rng, 2 + i % 4);
        OvalConfig s = select_best_config(g);
        cfgs.push_back(s);
        cfgs.push_back(build_long_for(s).config);
    }
    for (auto& cfg : cfgs) {
        auto arr = build_arrangement(cfg);
        // faces = crossings + connected components + 1
        CHECK(arr.piece_count == static_cast<int>(cfg.points.size()) + components(cfg) + 1);
        int punctures = 0;
        for (int p = 0; p < arr.piece_count; ++p) {
            punctures += static_cast<int>(arr.piece_punctures[p].size());
            if (p != arr.unbounded) {
                CHECK(arr.corner_count[p] >= 2);
                CHECK(arr.corner_count[p] <= 4);
            }
        }
        CHECK(punctures == 2 * cfg.g.n);
        for (size_t i = 0; i < cfg.points.size(); ++i) {
            std::set<int> distinct(arr.corners[i].begin(), arr.corners[i].end());
            CHECK(distinct.size() >= 2);
        }
        auto per = periodic_domains(cfg, arr);
        CHECK(per.size() == static_cast<size_t>(2 * cfg.k()));
        for (auto& d : per) {
            for (size_t p = 0; p < cfg.points.size(); ++p) CHECK(corner_index(arr, d, static_cast<int>(p)) == 0);
            long long inside = 0;
            for (int p = 0; p < arr.piece_count; ++p) inside += d[p] * static_cast<long long>(arr.piece_punctures[p].size());
            CHECK(inside == 2);
        }
    }
}

TEST_CASE("arrangement is resolution independent") {
    std::mt19937 rng(7);
    for (int i = 0; i < 6; ++i) {
        GridDiagram g = random_grid(rng, 3 + i % 3);
        OvalConfig s = select_best_config(g);
        for (const OvalConfig& cfg : {s, build_long_for(s).config}) {
            auto a = build_arrangement(cfg, 1), b = build_arrangement(cfg, 2);
            REQUIRE(a.piece_count == b.piece_count);
            std::vector<int> map(a.piece_count, -1);
            bool ok = true;
            auto bind = [&](int x, int y) {
                if (map[x] < 0) map[x] = y;
                ok = ok && map[x] == y;
            };
            bind(a.unbounded, b.unbounded);
            for (size_t p = 0; p < cfg.points.size(); ++p)
                for (int q = 0; q < 4; ++q) bind(a.corners[p][q], b.corners[p][q]);
            for (size_t p = 0; p < a.puncture_piece.size(); ++p) bind(a.puncture_piece[p], b.puncture_piece[p]);
            CHECK(ok);
            std::set<int> image(map.begin(), map.end());
            CHECK(image.count(-1) == 0);
            CHECK(image.size() == static_cast<size_t>(a.piece_count));
            for (int p = 0; p < a.piece_count; ++p)
                if (map[p] >= 0) CHECK(a.corner_count[p] == b.corner_count[map[p]]);
        }
    }
}
