#include "hfk/simplify.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hfk {

GridDiagram canonical_form(const GridDiagram& g) {
    GridKey k = canonical_key(g);
    int n = k[0];
    GridDiagram r;
    r.n = n;
    r.xs.assign(k.begin() + 1, k.begin() + 1 + n);
    r.os.assign(k.begin() + 1 + n, k.end());
    return r;
}

namespace {

// Castlings of every adjacent pair, the wrapping pair included.
std::vector<GridDiagram> castlings(const GridDiagram& g) {
    std::vector<GridDiagram> out;
    for (Axis ax : {Axis::Cols, Axis::Rows}) {
        for (int i = 0; i + 1 < g.n; ++i)
            if (castling_legal(g, ax, i)) out.push_back(castling_move(g, ax, i));
        GridDiagram s = cyclic_move(g, ax, 1);
        if (castling_legal(s, ax, 0)) out.push_back(castling_move(s, ax, 0));
    }
    return out;
}

}  // namespace

GridDiagram minimize(const GridDiagram& g, SearchBudget budget, SearchStats* stats) {
    validate(g);
    SearchStats local;
    SearchStats& st = stats ? *stats : local;
    GridKey start = canonical_key(g);
    GridDiagram best = canonical_form(g);
    std::set<GridKey> visited{start};
    std::vector<GridKey> layer{start};
    std::vector<GridKey> next;
    while (st.expansions < budget.max_expansions) {
        if (layer.empty()) {
            if (next.empty()) break;
            std::sort(next.begin(), next.end());
            layer.swap(next);
            next.clear();
            std::reverse(layer.begin(), layer.end());  // pop_back yields smallest key first
        }
        GridKey key = layer.back();
        layer.pop_back();
        ++st.expansions;
        GridDiagram cur;
        cur.n = key[0];
        cur.xs.assign(key.begin() + 1, key.begin() + 1 + cur.n);
        cur.os.assign(key.begin() + 1 + cur.n, key.end());

        auto smaller = destabilize(cur);
        if (!smaller.empty()) {
            GridKey bestk;
            for (auto& d : smaller) {
                GridKey k = canonical_key(d);
                if (bestk.empty() || k < bestk) bestk = k;
            }
            best.n = bestk[0];
            best.xs.assign(bestk.begin() + 1, bestk.begin() + 1 + best.n);
            best.os.assign(bestk.begin() + 1 + best.n, bestk.end());
            ++st.restarts;
            visited.clear();
            visited.insert(bestk);
            layer.assign(1, bestk);
            next.clear();
            continue;
        }
        for (auto& c : castlings(cur)) {
            GridKey k = canonical_key(c);
            if (visited.insert(k).second) next.push_back(std::move(k));
        }
    }
    return best;
}

std::vector<GridDiagram> generalized_destabilize(const GridDiagram& g) {
    std::map<GridKey, GridDiagram> found;
    auto collect = [&](const GridDiagram& h) {
        for (auto& d : destabilize(h)) found.emplace(canonical_key(d), d);
    };
    collect(g);
    for (Axis ax : {Axis::Cols, Axis::Rows}) {
        for (int line = 0; line < g.n; ++line) {
            for (int dir : {-1, 1}) {
                GridDiagram cur = g;
                int i = line;
                while (true) {
                    int idx = dir > 0 ? i : i - 1;
                    if (!castling_legal(cur, ax, idx)) break;
                    cur = castling_move(cur, ax, idx);
                    i += dir;
                    collect(cur);
                }
            }
        }
    }
    std::vector<GridDiagram> out;
    for (auto& [k, d] : found) out.push_back(d);
    return out;
}

GridDiagram reduce_to(const GridDiagram& g, int target) {
    GridDiagram cur = g;
    while (cur.n > target) {
        auto c = generalized_destabilize(cur);
        if (!c.empty()) {
            cur = c.front();
            continue;
        }
        GridDiagram m = minimize(cur, {2000});
        if (m.n >= cur.n) break;
        cur = m;
    }
    return cur;
}

}  // namespace hfk
