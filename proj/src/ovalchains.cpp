#include <algorithm>
#include <limits>
#include <map>

#include "hfk/chains.hpp"

namespace hfk {

namespace {

std::uint64_t rank_of(const std::vector<int>& p) {
    const int n = static_cast<int>(p.size());
    std::uint64_t r = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (p[j] < p[i]) ++smaller;
        r = r * (n - i) + smaller;
    }
    return r;
}

// Maximum-weight perfect matching on a square matrix; forbidden = INT_MIN.
// Returns INT_MIN when no perfect matching exists.  O(k^3) Hungarian method.
long long max_assignment(const std::vector<std::vector<int>>& w) {
    const int k = static_cast<int>(w.size());
    if (k == 0) return 0;
    const long long INF = std::numeric_limits<long long>::max() / 4;
    const long long BIG = 1LL << 40;
    std::vector<long long> u(k + 1), v(k + 1), minv(k + 1);
    std::vector<int> p(k + 1), way(k + 1);
    auto cost = [&](int i, int j) -> long long {
        int x = w[i - 1][j - 1];
        return x == std::numeric_limits<int>::min() ? BIG : -static_cast<long long>(x);
    };
    for (int i = 1; i <= k; ++i) {
        p[0] = i;
        int j0 = 0;
        std::fill(minv.begin(), minv.end(), INF);
        std::vector<char> used(k + 1, 0);
        do {
            used[j0] = 1;
            int i0 = p[j0], j1 = 0;
            long long delta = INF;
            for (int j = 1; j <= k; ++j) {
                if (used[j]) continue;
                long long cur = cost(i0, j) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= k; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }
    long long total = 0;
    for (int j = 1; j <= k; ++j) {
        long long c = cost(p[j], j);
        if (c >= BIG) return std::numeric_limits<int>::min();
        total -= c;
    }
    return total;
}

struct Enumerator {
    const OvalConfig& cfg;
    PointWeights pw;
    int k;
    std::vector<int> hof;     // H index chosen for each V
    std::vector<char> used;
    std::vector<int> pts;
    std::function<bool(int)> keep;
    std::function<void(const std::vector<int>&, Grading)> emit;
    // optional pruning on the doubled Alexander grading: only A2 > threshold
    bool bound = false;
    int threshold = 0;
    std::vector<std::vector<int>> best;  // best a2 contribution per (v, h)

    explicit Enumerator(const OvalConfig& c) : cfg(c), pw(point_weights(c)), k(c.k()) {
        hof.assign(k, -1);
        used.assign(k, 0);
        pts.assign(k, -1);
        best.assign(k, std::vector<int>(k, std::numeric_limits<int>::min()));
        for (auto& p : cfg.points) {
            int id = cfg.find_point(p.v, p.h, p.tag);
            best[p.v][p.h] = std::max(best[p.v][p.h], pw.a2[id]);
        }
    }

    void matchings(int v, int inv, int abest) {
        if (bound) {
            std::vector<std::vector<int>> rest;
            for (int vv = v; vv < k; ++vv) {
                std::vector<int> row;
                for (int h = 0; h < k; ++h)
                    if (!used[h]) row.push_back(best[vv][h]);
                rest.push_back(row);
            }
            long long ub = max_assignment(rest);
            if (ub == std::numeric_limits<int>::min()) return;
            if (abest + ub + pw.a2_const <= threshold) return;
        }
        if (v == k) {
            tags(0, inv + pw.m_const, pw.a2_const);
            return;
        }
        for (int h = 0; h < k; ++h) {
            if (used[h] || cfg.pair_multiplicity(v, h) == 0) continue;
            int add = 0;
            for (int v2 = 0; v2 < v; ++v2)
                if (hof[v2] < h) ++add;
            used[h] = 1;
            hof[v] = h;
            matchings(v + 1, inv + add, abest + best[v][h]);
            used[h] = 0;
            hof[v] = -1;
        }
    }

    void tags(int v, int m, int a2) {
        if (v == k) {
            if (bound && a2 <= threshold) return;
            if (keep && !keep(a2)) return;
            emit(pts, {a2, m});
            return;
        }
        if (bound) {
            int ub = a2;
            for (int vv = v; vv < k; ++vv) ub += best[vv][hof[vv]];
            if (ub <= threshold) return;
        }
        for (int t = 0; t < 4; ++t) {
            int id = cfg.find_point(v, hof[v], t);
            if (id < 0) continue;
            pts[v] = id;
            tags(v + 1, m + pw.m[id], a2 + pw.a2[id]);
        }
        pts[v] = -1;
    }
};

GeneratorTable collect(Enumerator& e) {
    GeneratorTable t;
    e.emit = [&](const std::vector<int>& pts, Grading g) {
        t.index[oval_key(e.cfg, pts)] = static_cast<int>(t.gens.size());
        t.gens.push_back(pts);
        t.grading.push_back(g);
    };
    e.matchings(0, 0, 0);
    return t;
}

}  // namespace

std::vector<FinePoint> gen_points(const OvalConfig& cfg, const std::vector<int>& pts) {
    std::vector<FinePoint> v;
    for (int id : pts) v.push_back(cfg.points[id].pos);
    return v;
}

std::uint64_t oval_key(const OvalConfig& cfg, const std::vector<int>& pts) {
    std::vector<int> h;
    std::uint64_t tags = 0;
    for (size_t v = 0; v < pts.size(); ++v) {
        h.push_back(cfg.points[pts[v]].h);
        tags |= static_cast<std::uint64_t>(cfg.points[pts[v]].tag) << (2 * v);
    }
    return (rank_of(h) << (2 * pts.size())) | tags;
}

int GeneratorTable::find(const OvalConfig& cfg, const std::vector<int>& pts) const {
    auto it = index.find(oval_key(cfg, pts));
    return it == index.end() ? -1 : it->second;
}

PointWeights point_weights(const OvalConfig& cfg) {
    PointWeights w;
    const auto& O = cfg.opunct;
    const auto& X = cfg.xpunct;
    for (auto& p : cfg.points) {
        std::vector<FinePoint> s{p.pos};
        w.m.push_back(-I(s, O) - I(O, s));
        w.a2.push_back(J2(s, X) - J2(s, O));
    }
    w.m_const = I(O, O);
    w.a2_const = -I(X, X) + I(O, O) - (cfg.g.n - 1);
    return w;
}

int oval_maslov_direct(const OvalConfig& cfg, const std::vector<int>& pts) {
    return maslov_of(gen_points(cfg, pts), cfg.g, false);
}

GeneratorTable enumerate_generators_if(const OvalConfig& cfg, const std::function<bool(int)>& keep) {
    Enumerator e(cfg);
    e.keep = keep;
    return collect(e);
}

GeneratorTable enumerate_generators(const OvalConfig& cfg, const std::set<int>& skip_a2) {
    if (skip_a2.empty()) return enumerate_generators_if(cfg, nullptr);
    return enumerate_generators_if(cfg, [&](int a2) { return skip_a2.count(a2) == 0; });
}

GeneratorTable enumerate_high_alexander(const OvalConfig& cfg, int threshold_a2) {
    Enumerator e(cfg);
    e.bound = true;
    e.threshold = threshold_a2;
    return collect(e);
}

std::vector<std::pair<int, std::int64_t>> alexander_census(const OvalConfig& cfg) {
    Enumerator e(cfg);
    std::map<int, std::int64_t> count;
    e.emit = [&](const std::vector<int>&, Grading g) { count[g.a2]++; };
    e.matchings(0, 0, 0);
    return {count.begin(), count.end()};
}

std::map<Grading, std::int64_t> graded_census(const OvalConfig& cfg) {
    Enumerator e(cfg);
    std::map<Grading, std::int64_t> count;
    e.emit = [&](const std::vector<int>&, Grading g) { count[g]++; };
    e.matchings(0, 0, 0);
    return count;
}

// ---- long configuration boundary ----

// Exponent I(x,{p2<b}) + D*(I(x,{b<=p2<d})+1), D = #{p : a<=p1<=c, p2<=b}.
int rectangle_sign(const std::vector<FinePoint>& x, FinePoint ll, FinePoint ur) {
    std::vector<FinePoint> below, band;
    int D = 0;
    for (auto& p : x) {
        if (p.y < ll.y) below.push_back(p);
        if (p.y >= ll.y && p.y < ur.y) band.push_back(p);
        if (p.x >= ll.x && p.x <= ur.x && p.y <= ll.y) ++D;
    }
    int e = I(x, below) + D * (I(x, band) + 1);
    return (e % 2) ? -1 : 1;
}

std::vector<LongEdge> long_edges(const OvalConfig& cfg, const std::vector<int>& pts) {
    const int k = cfg.k();
    std::vector<LongEdge> out;
    auto xp = gen_points(cfg, pts);
    auto puncture_inside = [&](int x0, int x1, int y0, int y1) {
        for (auto* set : {&cfg.xpunct, &cfg.opunct})
            for (auto& q : *set)
                if (q.x > x0 && q.x < x1 && q.y > y0 && q.y < y1) return true;
        return false;
    };
    auto point_inside = [&](int x0, int x1, int y0, int y1) {
        for (auto& q : xp)
            if (q.x > x0 && q.x < x1 && q.y > y0 && q.y < y1) return true;
        return false;
    };
    // rectangles: x holds the lower-left and upper-right corners
    for (int v1 = 0; v1 < k; ++v1) {
        for (int v2 = v1 + 1; v2 < k; ++v2) {
            const auto& P = cfg.points[pts[v1]];
            const auto& Q = cfg.points[pts[v2]];
            if (!(P.pos.y < Q.pos.y)) continue;
            int a = cfg.find_point(v1, Q.h, (P.tag & 2) | (Q.tag & 1));
            int b = cfg.find_point(v2, P.h, (Q.tag & 2) | (P.tag & 1));
            if (a < 0 || b < 0) continue;
            if (point_inside(P.pos.x, Q.pos.x, P.pos.y, Q.pos.y)) continue;
            if (puncture_inside(P.pos.x, Q.pos.x, P.pos.y, Q.pos.y)) continue;
            LongEdge e;
            e.target = pts;
            e.target[v1] = a;
            e.target[v2] = b;
            e.sign = rectangle_sign(xp, P.pos, Q.pos);
            out.push_back(std::move(e));
        }
    }
    // bigons
    int ixx = I(xp, xp);
    auto pre = [&](int order_e) {
        int c = 0;
        for (int v = 0; v < k; ++v) {
            const auto& P = cfg.points[pts[v]];
            if (cfg.order_of_v(v) < order_e && (P.tag & 2)) ++c;
            if (cfg.order_of_h(P.h) < order_e && (P.tag & 1)) ++c;
        }
        return c;
    };
    for (int v = 0; v < k; ++v) {
        const auto& P = cfg.points[pts[v]];
        const Oval& H = cfg.hovals[P.h];
        const Oval& V = cfg.vovals[v];
        // along the V side, across the H band
        int q = cfg.find_point(v, P.h, P.tag ^ 1);
        if (q >= 0) {
            bool upper = P.tag & 1;
            int x0 = upper ? H.lo : P.pos.x, x1 = upper ? P.pos.x : H.hi;
            if (!puncture_inside(x0, x1, H.side_lo, H.side_hi) && !point_inside(x0, x1, H.side_lo, H.side_hi)) {
                LongEdge e;
                e.bigon = true;
                e.target = pts;
                e.target[v] = q;
                e.sign = ((ixx + pre(cfg.order_of_h(P.h))) % 2) ? -1 : 1;
                out.push_back(std::move(e));
            }
        }
        // along the H edge, across the V band
        q = cfg.find_point(v, P.h, P.tag ^ 2);
        if (q >= 0) {
            bool right = P.tag & 2;
            int y0 = right ? V.lo : P.pos.y, y1 = right ? P.pos.y : V.hi;
            if (!puncture_inside(V.side_lo, V.side_hi, y0, y1) && !point_inside(V.side_lo, V.side_hi, y0, y1)) {
                LongEdge e;
                e.bigon = true;
                e.target = pts;
                e.target[v] = q;
                e.sign = ((ixx + pre(cfg.order_of_v(v))) % 2) ? -1 : 1;
                out.push_back(std::move(e));
            }
        }
    }
    return out;
}

SparseComplex long_complex(const OvalConfig& cfg, Ring ring, const GeneratorTable& table) {
    SparseComplex C;
    C.ring = ring;
    C.grading = table.grading;
    C.label = table.gens;
    C.d.resize(table.gens.size());
    for (size_t gi = 0; gi < table.gens.size(); ++gi) {
        auto& row = C.d[gi];
        for (auto& e : long_edges(cfg, table.gens[gi])) {
            int t = table.find(cfg, e.target);
            if (t < 0) throw std::logic_error("long boundary leaves the generator table");
            bool merged = false;
            for (auto& r : row)
                if (r.to == t) {
                    r.c += e.sign;
                    merged = true;
                }
            if (!merged) row.push_back({t, e.sign});
        }
        std::vector<Entry> clean;
        for (auto& r : row) {
            if (ring == Ring::Z2) r.c = ((r.c % 2) + 2) % 2;
            if (r.c != 0) clean.push_back(r);
        }
        row.swap(clean);
    }
    return C;
}

bool d_squared_zero(const SparseComplex& c) {
    std::vector<std::int64_t> acc(c.size(), 0);
    std::vector<int> touched;
    for (int x = 0; x < c.size(); ++x) {
        touched.clear();
        for (auto& e1 : c.d[x])
            for (auto& e2 : c.d[e1.to]) {
                if (acc[e2.to] == 0) touched.push_back(e2.to);
                acc[e2.to] += e1.c * e2.c;
            }
        bool bad = false;
        for (int t : touched) {
            std::int64_t v = acc[t];
            if (c.ring == Ring::Z2) v %= 2;
            if (v != 0) bad = true;
            acc[t] = 0;
        }
        if (bad) return false;
    }
    return true;
}

void check_d_squared(const SparseComplex& c) {
    if (!d_squared_zero(c)) throw Error(ErrorKind::BoundarySquareNonzero, "boundary does not square to zero");
}

}  // namespace hfk
