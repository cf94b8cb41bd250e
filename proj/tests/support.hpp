#pragma once

// Shared fixtures and independent oracles for the test binaries.

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hfk/chains.hpp"
#include "hfk/grid.hpp"
#include "hfk/ovals.hpp"
#include "hfk/reducer.hpp"

namespace testkit {

using namespace hfk;

inline std::string fixture_path(const std::string& name) { return std::string(HFK_FIXTURE_DIR) + "/" + name; }

inline std::map<std::string, std::vector<int>> knot_fixtures() {
    std::ifstream in(fixture_path("knots.txt"));
    std::map<std::string, std::vector<int>> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string name;
        ls >> name;
        std::vector<int> w;
        int x;
        while (ls >> x) w.push_back(x);
        out[name] = w;
    }
    return out;
}

inline GridDiagram grid_from_line(const std::string& s) {
    // "X: ... O: ..."
    auto xo = s.find("X:"), oo = s.find("O:");
    std::istringstream xs(s.substr(xo + 2, oo - xo - 2)), os(s.substr(oo + 2));
    std::vector<int> x, o;
    int v;
    while (xs >> v) x.push_back(v);
    while (os >> v) o.push_back(v);
    return make_grid(x, o);
}

inline GridDiagram random_grid(std::mt19937& rng, int n) {
    for (;;) {
        std::vector<int> xs(n), os(n);
        std::iota(xs.begin(), xs.end(), 0);
        std::iota(os.begin(), os.end(), 0);
        std::shuffle(xs.begin(), xs.end(), rng);
        std::shuffle(os.begin(), os.end(), rng);
        GridDiagram g{n, xs, os};
        if (is_valid(g)) return g;
    }
}

inline Axis random_axis(std::mt19937& rng) { return rng() % 2 ? Axis::Cols : Axis::Rows; }

// Random cyclic moves and legal castlings; the knot type is unchanged.
inline GridDiagram scramble(GridDiagram g, std::mt19937& rng, int moves) {
    for (int i = 0; i < moves; ++i) {
        Axis a = random_axis(rng);
        if (rng() % 3 == 0) {
            g = cyclic_move(g, a, static_cast<int>(rng() % g.n));
        } else {
            int idx = static_cast<int>(rng() % (g.n - 1));
            if (castling_legal(g, a, idx)) g = castling_move(g, a, idx);
        }
    }
    return g;
}

inline GridDiagram random_stabilization(GridDiagram g, std::mt19937& rng) {
    Axis a = random_axis(rng);
    int line = static_cast<int>(rng() % g.n), at = static_cast<int>(rng() % (g.n + 1)),
        variant = static_cast<int>(rng() % 2);
    return stabilize(g, a, line, at, variant);
}

// Determinant by cofactor expansion over Laurent polynomials.
inline LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (auto [e1, c1] : a.coefficients)
        for (auto [e2, c2] : b.coefficients) r.add(e1 + e2, c1 * c2);
    return r;
}

inline LaurentPoly cofactor_det(const std::vector<std::vector<LaurentPoly>>& m) {
    const size_t n = m.size();
    if (n == 1) return m[0][0];
    LaurentPoly r;
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].coefficients.empty()) continue;
        std::vector<std::vector<LaurentPoly>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<LaurentPoly> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(row);
        }
        LaurentPoly t = poly_mul(m[0][j], cofactor_det(minor));
        for (auto [e, c] : t.coefficients) r.add(e, j % 2 ? -c : c);
    }
    return r;
}

// Winding number by summing signed angle crossings of a horizontal ray,
// traced along the knot segment by segment.
inline int ray_winding(const GridDiagram& g, double px, double py) {
    int w = 0;
    for (int c = 0; c < g.n; ++c) {
        // vertical segment in column c runs from the X to the O
        double x = c + 0.5, y0 = g.xs[c] + 0.5, y1 = g.os[c] + 0.5;
        if (x <= px) continue;
        if (std::min(y0, y1) < py && py < std::max(y0, y1)) w += y1 > y0 ? 1 : -1;
    }
    return w;
}

// Alexander polynomial normalized to be symmetric with value 1 at t = 1,
// from det[t^w] / (1 - t)^(n-1) using the independent pieces above.
inline LaurentPoly oracle_alexander(const GridDiagram& g) {
    const int n = g.n;
    std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j].add(-ray_winding(g, i, j), 1);
    LaurentPoly d = cofactor_det(m);
    // divide by (1 - t) repeatedly; an inexact division returns zero
    for (int k = 0; k < n - 1; ++k) {
        LaurentPoly q, rem = d;
        int steps = rem.coefficients.empty() ? 0 : rem.coefficients.rbegin()->first - rem.coefficients.begin()->first;
        for (int s = 0; s < steps && !rem.coefficients.empty(); ++s) {
            auto [e, c] = *rem.coefficients.begin();
            q.add(e, c);
            rem.add(e, -c);
            rem.add(e + 1, c);
        }
        if (!rem.coefficients.empty()) return {};
        d = q;
    }
    // center and fix the sign
    int lo = d.coefficients.begin()->first, hi = d.coefficients.rbegin()->first;
    LaurentPoly r;
    long long at1 = 0;
    for (auto [e, c] : d.coefficients) at1 += c;
    for (auto [e, c] : d.coefficients) r.add(e - (lo + hi) / 2, at1 < 0 ? -c : c);
    return r;
}

// Homology by Smith form on the full dense blocks, no cancellation.
inline GradedGroups dense_homology(const SparseComplex& c) {
    std::map<Grading, std::vector<int>> by;
    for (int i = 0; i < c.size(); ++i) by[c.grading[i]].push_back(i);
    std::vector<int> pos(c.size());
    for (auto& [g, v] : by)
        for (size_t k = 0; k < v.size(); ++k) pos[v[k]] = static_cast<int>(k);
    std::map<Grading, std::vector<std::int64_t>> fac;
    for (auto& [g, src] : by) {
        auto it = by.find({g.a2, g.m - 1});
        if (it == by.end()) continue;
        std::vector<std::vector<std::int64_t>> m(it->second.size(), std::vector<std::int64_t>(src.size(), 0));
        for (size_t j = 0; j < src.size(); ++j)
            for (auto& e : c.d[src[j]]) m[pos[e.to]][j] = c.ring == Ring::Z2 ? (e.c & 1) : e.c;
        auto f = smith_invariants(m);
        if (c.ring == Ring::Z2) {
            // rank over the field: drop factors divisible by 2
            std::vector<std::int64_t> odd;
            for (auto x : f)
                if (x % 2) odd.push_back(1);
            f = odd;
        }
        fac[g] = f;
    }
    GradedGroups out;
    for (auto& [g, v] : by) {
        GroupEntry e;
        std::int64_t rin = 0, rout = 0;
        if (auto it = fac.find(g); it != fac.end()) rout = static_cast<std::int64_t>(it->second.size());
        if (auto it = fac.find({g.a2, g.m + 1}); it != fac.end()) {
            rin = static_cast<std::int64_t>(it->second.size());
            for (auto x : it->second)
                if (x > 1) e.torsion.push_back(x);
        }
        e.rank = static_cast<std::int64_t>(v.size()) - rin - rout;
        if (e.rank || !e.torsion.empty()) out[g] = e;
    }
    return out;
}

inline std::int64_t total_rank(const HFKTable& t) {
    std::int64_t r = 0;
    for (auto& [g, e] : t.groups) r += e.rank;
    return r;
}

}  // namespace testkit
