#include <random>
#include <set>

#include "doctest.h"
#include "hfk/simplify.hpp"
#include "support.hpp"

using namespace hfk;
using namespace testkit;

TEST_CASE("minimize keeps small grids") {
    GridDiagram u = make_grid({1, 0}, {0, 1});
    CHECK(minimize(u, {100000}).n == 2);
    CHECK(generalized_destabilize(u).empty());
}

TEST_CASE("minimize preserves the determinant and is monotone in the budget") {
    std::mt19937 rng(21);
    for (auto& [name, w] : knot_fixtures()) {
        GridDiagram g = parse_braid(w);
        for (int i = 0; i < 2; ++i) g = scramble(random_stabilization(g, rng), rng, 10);
        LaurentPoly d = alexander_oracle(g);
        int prev = g.n;
        for (std::int64_t b : {1, 10, 100, 1000}) {
            GridDiagram m = minimize(g, {b});
            CHECK_MESSAGE(alexander_oracle(m) == d, name);
            CHECK(m.n <= prev);
            prev = m.n;
        }
    }
}

TEST_CASE("generalized destabilization") {
    GridDiagram t = parse_braid({1, 1, 1});
    std::mt19937 rng(8);
    int hidden = 0;
    for (int i = 0; i < 40; ++i) {
        GridDiagram s = scramble(random_stabilization(t, rng), rng, 20);
        auto plain = destabilize(s);
        auto gen = generalized_destabilize(s);
        std::set<GridKey> gk;
        for (auto& d : gen) {
            gk.insert(canonical_key(d));
            CHECK(d.n == s.n - 1);
            CHECK(alexander_oracle(d) == alexander_oracle(t));
        }
        for (auto& d : plain) CHECK(gk.count(canonical_key(d)) == 1);
        if (plain.empty() && !gen.empty()) ++hidden;
    }
    MESSAGE("sites reached only through castlings: " << hidden);
}

TEST_CASE("generalized destabilization after castlings") {
    // stabilize, then apply two castlings that move the site apart
    GridDiagram t = parse_braid({1, 1, 1});
    std::mt19937 rng(30);
    int found = 0;
    for (int i = 0; i < 200 && found < 3; ++i) {
        GridDiagram s = random_stabilization(t, rng);
        GridDiagram c = s;
        int done = 0;
        for (int k = 0; k < 20 && done < 2; ++k) {
            Axis a = random_axis(rng);
            int idx = static_cast<int>(rng() % (c.n - 1));
            if (castling_legal(c, a, idx)) {
                c = castling_move(c, a, idx);
                ++done;
            }
        }
        if (done < 2 || !destabilize(c).empty()) continue;
        ++found;
        auto gen = generalized_destabilize(c);
        REQUIRE_FALSE(gen.empty());
        CHECK(gen[0].n == t.n);
    }
    CHECK(found > 0);
}

TEST_CASE("recorded trefoil stabilization") {
    std::ifstream in(fixture_path("trefoil_stabilized.txt"));
    std::string line, last;
    while (std::getline(in, line))
        if (line.rfind("final", 0) == 0) last = line;
    GridDiagram g = grid_from_line(last);
    REQUIRE(g.n == 10);
    SearchStats st;
    GridDiagram m = minimize(g, {100000}, &st);
    CHECK(m.n == 5);
    CHECK(st.expansions <= 100000);
    CHECK(alexander_oracle(m) == alexander_oracle(g));
    CHECK(reduce_to(g, 5).n == 5);
}
