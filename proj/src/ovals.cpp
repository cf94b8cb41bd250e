#include "hfk/ovals.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <tuple>

namespace hfk {

namespace {

std::vector<int> inverse(const std::vector<int>& p) {
    std::vector<int> inv(p.size());
    for (size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
    return inv;
}

// I(S, T) restricted to single points against a set.
int dominated_by(FinePoint p, const std::vector<FinePoint>& t) {
    int c = 0;
    for (auto& q : t)
        if (p.x < q.x && p.y < q.y) ++c;
    return c;
}
int dominating(const std::vector<FinePoint>& t, FinePoint p) {
    int c = 0;
    for (auto& q : t)
        if (q.x < p.x && q.y < p.y) ++c;
    return c;
}

GridDiagram apply_cut(const GridDiagram& g, int col_shift, int row_shift) {
    return cyclic_move(cyclic_move(g, Axis::Cols, col_shift), Axis::Rows, row_shift);
}

OvalConfig build_config(const GridDiagram& g0, int col_shift, int row_shift, int oc, int orow,
                        bool is_long) {
    validate(g0);
    OvalConfig cfg;
    cfg.g = apply_cut(g0, col_shift, row_shift);
    cfg.col_shift = col_shift;
    cfg.row_shift = row_shift;
    cfg.omitted_col = oc;
    cfg.omitted_row = orow;
    cfg.is_long = is_long;
    const GridDiagram& g = cfg.g;
    const int n = g.n;
    if (oc < 0 || oc >= n || orow < 0 || orow >= n || (g.xs[oc] != orow && g.os[oc] != orow))
        throw Error(ErrorKind::InvalidOmission, "omitted column and row share no puncture");
    if (!omission_valid(g, oc, orow))
        throw Error(ErrorKind::InvalidOmission, "omitted puncture is not in the unbounded region");
    auto xinv = inverse(g.xs), oinv = inverse(g.os);
    for (int c = 0; c < n; ++c) {
        if (c == oc) continue;
        Oval o;
        o.vertical = true;
        o.line = c;
        o.side_lo = 10 * c + 3;
        o.side_hi = 10 * c + 7;
        int y1 = std::min(g.xs[c], g.os[c]), y2 = std::max(g.xs[c], g.os[c]);
        o.lo = is_long ? 0 : 10 * y1 + 3;
        o.hi = is_long ? 10 * n : 10 * y2 + 7;
        cfg.vovals.push_back(o);
    }
    for (int r = 0; r < n; ++r) {
        if (r == orow) continue;
        Oval o;
        o.vertical = false;
        o.line = r;
        o.side_lo = 10 * r + 4;
        o.side_hi = 10 * r + 6;
        int x1 = std::min(xinv[r], oinv[r]), x2 = std::max(xinv[r], oinv[r]);
        o.lo = is_long ? 0 : 10 * x1 + 4;
        o.hi = is_long ? 10 * n : 10 * x2 + 6;
        cfg.hovals.push_back(o);
    }
    const int k = n - 1;
    cfg.point_at.assign(k * k * 4, -1);
    for (int v = 0; v < k; ++v) {
        const Oval& V = cfg.vovals[v];
        for (int h = 0; h < k; ++h) {
            const Oval& H = cfg.hovals[h];
            for (int tag = 0; tag < 4; ++tag) {
                int x = (tag & 2) ? V.side_hi : V.side_lo;
                int y = (tag & 1) ? H.side_hi : H.side_lo;
                if (H.lo < x && x < H.hi && V.lo < y && y < V.hi) {
                    cfg.point_at[(v * k + h) * 4 + tag] = static_cast<int>(cfg.points.size());
                    cfg.points.push_back({v, h, tag, {x, y}});
                }
            }
        }
    }
    for (int c = 0; c < n; ++c) {
        cfg.xpunct.push_back({10 * c + 5, 10 * g.xs[c] + 5});
        cfg.opunct.push_back({10 * c + 5, 10 * g.os[c] + 5});
    }
    return cfg;
}

}  // namespace

int OvalConfig::pair_multiplicity(int v, int h) const {
    int m = 0;
    for (int t = 0; t < 4; ++t)
        if (find_point(v, h, t) >= 0) ++m;
    return m;
}

bool omission_valid(const GridDiagram& cut, int col, int row) {
    int n = cut.n;
    if (col < 0 || col >= n || row < 0 || row >= n) return false;
    if (cut.xs[col] != row && cut.os[col] != row) return false;
    return col == 0 || col == n - 1 || row == 0 || row == n - 1;
}

OvalConfig build_short_config(const GridDiagram& g, int col_shift, int row_shift, int omitted_col,
                              int omitted_row) {
    return build_config(g, col_shift, row_shift, omitted_col, omitted_row, false);
}

int singleton_maslov(const OvalConfig& cfg, int point) {
    FinePoint p = cfg.points[point].pos;
    int ioo = 0;
    for (auto& a : cfg.opunct) ioo += dominated_by(a, cfg.opunct);
    return -dominated_by(p, cfg.opunct) - dominating(cfg.opunct, p) + ioo;
}

LongConfig build_long_config(const GridDiagram& g, int col_shift, int row_shift, int omitted_col,
                             int omitted_row) {
    LongConfig out;
    out.config = build_config(g, col_shift, row_shift, omitted_col, omitted_row, true);
    OvalConfig shrt = build_config(g, col_shift, row_shift, omitted_col, omitted_row, false);
    const OvalConfig& L = out.config;
    const int k = L.k();
    const int top = 10 * L.g.n;
    std::vector<char> dead(L.points.size(), 0);
    int time = 0;
    auto kill = [&](int a, int b) {
        if (a < 0 || b < 0 || dead[a] || dead[b])
            throw Error(ErrorKind::ScheduleAssertionFailed, "tip crossing hits a missing point");
        int ma = singleton_maslov(L, a), mb = singleton_maslov(L, b);
        if (std::abs(ma - mb) != 1)
            throw Error(ErrorKind::ScheduleAssertionFailed, "killed pair Maslov gap is not 1");
        dead[a] = dead[b] = 1;
        ScheduleEvent e;
        e.time = ++time;
        e.p1 = ma > mb ? a : b;
        e.p2 = ma > mb ? b : a;
        out.schedule.events.push_back(e);
    };
    // Vertical ovals shrink while every horizontal oval is still long.
    for (int v = 0; v < k; ++v) {
        const Oval& S = shrt.vovals[v];
        std::vector<std::pair<int, int>> below, above;  // (y, h*2+edge)
        for (int h = 0; h < k; ++h) {
            const Oval& H = L.hovals[h];
            for (int e = 0; e < 2; ++e) {
                int y = e ? H.side_hi : H.side_lo;
                if (y < S.lo) below.push_back({y, h * 2 + e});
                if (y > S.hi) above.push_back({y, h * 2 + e});
            }
        }
        std::sort(below.begin(), below.end());
        std::sort(above.rbegin(), above.rend());
        auto sweep = [&](const std::vector<std::pair<int, int>>& edges) {
            for (auto [y, he] : edges) {
                int h = he / 2, e = he % 2;
                kill(L.find_point(v, h, e), L.find_point(v, h, 2 | e));
            }
        };
        bool top_first = (top - S.hi) > S.lo;
        if (top_first) {
            sweep(above);
            sweep(below);
        } else {
            sweep(below);
            sweep(above);
        }
    }
    // Horizontal ovals shrink across the (now short) vertical ovals.
    for (int h = 0; h < k; ++h) {
        const Oval& S = shrt.hovals[h];
        const Oval& H = L.hovals[h];
        std::vector<std::pair<int, int>> left, right;  // (x, v*2+side)
        for (int v = 0; v < k; ++v) {
            const Oval& V = shrt.vovals[v];
            if (!(V.lo < H.side_lo && H.side_hi < V.hi)) continue;
            for (int s = 0; s < 2; ++s) {
                int x = s ? V.side_hi : V.side_lo;
                if (x < S.lo) left.push_back({x, v * 2 + s});
                if (x > S.hi) right.push_back({x, v * 2 + s});
            }
        }
        std::sort(left.begin(), left.end());
        std::sort(right.rbegin(), right.rend());
        auto sweep = [&](const std::vector<std::pair<int, int>>& sides) {
            for (auto [x, vs] : sides) {
                int v = vs / 2, s = vs % 2;
                kill(L.find_point(v, h, s << 1), L.find_point(v, h, (s << 1) | 1));
            }
        };
        bool right_first = (top - S.hi) > S.lo;
        if (right_first) {
            sweep(right);
            sweep(left);
        } else {
            sweep(left);
            sweep(right);
        }
    }
    // Survivors must be exactly the short configuration's points.
    out.schedule.survivor_map.assign(shrt.points.size(), -1);
    size_t alive = 0;
    for (size_t i = 0; i < L.points.size(); ++i) alive += dead[i] ? 0 : 1;
    if (alive != shrt.points.size())
        throw Error(ErrorKind::ScheduleAssertionFailed, "survivors differ from the short configuration");
    for (size_t i = 0; i < shrt.points.size(); ++i) {
        auto& p = shrt.points[i];
        int id = L.find_point(p.v, p.h, p.tag);
        if (id < 0 || dead[id])
            throw Error(ErrorKind::ScheduleAssertionFailed, "short point killed by the schedule");
        out.schedule.survivor_map[i] = id;
    }
    return out;
}

LongConfig build_long_for(const OvalConfig& s) {
    // s.g already has the cut applied; rebuild from it with zero shift.
    LongConfig lc = build_long_config(s.g, 0, 0, s.omitted_col, s.omitted_row);
    lc.config.col_shift = s.col_shift;
    lc.config.row_shift = s.row_shift;
    return lc;
}

OvalConfig select_best_config(const GridDiagram& g) {
    validate(g);
    const int n = g.n;
    bool have = false;
    std::tuple<size_t, int, int, int, int> best{};
    OvalConfig best_cfg;
    for (int dc = 0; dc < n; ++dc) {
        for (int dr = 0; dr < n; ++dr) {
            GridDiagram cut = apply_cut(g, dc, dr);
            for (int c = 0; c < n; ++c) {
                int rows[2] = {std::min(cut.xs[c], cut.os[c]), std::max(cut.xs[c], cut.os[c])};
                for (int r : rows) {
                    if (!omission_valid(cut, c, r)) continue;
                    OvalConfig cfg = build_short_config(g, dc, dr, c, r);
                    auto key = std::make_tuple(cfg.points.size(), dc, dr, c, r);
                    if (!have || key < best) {
                        have = true;
                        best = key;
                        best_cfg = std::move(cfg);
                    }
                }
            }
        }
    }
    return best_cfg;
}

// ---- arrangement ----

Arrangement build_arrangement(const OvalConfig& cfg, int refine) {
    const int n = cfg.g.n;
    Arrangement arr;
    std::vector<int> base;
    for (int k = -1; k <= n + 1; ++k)
        for (int d : {0, 3, 4, 5, 6, 7}) base.push_back(10 * k + d);
    std::sort(base.begin(), base.end());
    std::vector<int>& lines = arr.lines;
    for (size_t i = 0; i + 1 < base.size(); ++i)
        for (int t = 0; t < refine; ++t) lines.push_back(base[i] * refine + t * (base[i + 1] - base[i]));
    lines.push_back(base.back() * refine);
    const int N = static_cast<int>(lines.size());
    const int C = N - 1;  // cells per axis
    auto idx = [&](int coord) {
        auto it = std::lower_bound(lines.begin(), lines.end(), coord * refine);
        return static_cast<int>(it - lines.begin());
    };
    // vwall[i*C + j]: wall on x = lines[i] between cells (i-1, j) and (i, j)
    std::vector<char> vwall(N * C, 0), hwall(N * C, 0);
    auto rect = [&](int x0, int x1, int y0, int y1) {
        int ix0 = idx(x0), ix1 = idx(x1), iy0 = idx(y0), iy1 = idx(y1);
        for (int j = iy0; j < iy1; ++j) vwall[ix0 * C + j] = vwall[ix1 * C + j] = 1;
        for (int i = ix0; i < ix1; ++i) hwall[iy0 * C + i] = hwall[iy1 * C + i] = 1;
    };
    std::vector<std::array<int, 4>> boxes;  // per oval in oval order: x0 x1 y0 y1
    for (auto& o : cfg.vovals) boxes.push_back({o.side_lo, o.side_hi, o.lo, o.hi});
    for (auto& o : cfg.hovals) boxes.push_back({o.lo, o.hi, o.side_lo, o.side_hi});
    for (auto& b : boxes) rect(b[0], b[1], b[2], b[3]);

    arr.cell_piece.assign(C * C, -1);
    auto cell = [&](int i, int j) -> int& { return arr.cell_piece[j * C + i]; };
    int pieces = 0;
    std::vector<std::pair<int, int>> rep;
    for (int j0 = 0; j0 < C; ++j0) {
        for (int i0 = 0; i0 < C; ++i0) {
            if (cell(i0, j0) >= 0) continue;
            int id = pieces++;
            rep.push_back({i0, j0});
            std::deque<std::pair<int, int>> q{{i0, j0}};
            cell(i0, j0) = id;
            while (!q.empty()) {
                auto [i, j] = q.front();
                q.pop_front();
                auto visit = [&](int a, int b) {
                    if (cell(a, b) < 0) {
                        cell(a, b) = id;
                        q.push_back({a, b});
                    }
                };
                if (i > 0 && !vwall[i * C + j]) visit(i - 1, j);
                if (i + 1 < C && !vwall[(i + 1) * C + j]) visit(i + 1, j);
                if (j > 0 && !hwall[j * C + i]) visit(i, j - 1);
                if (j + 1 < C && !hwall[(j + 1) * C + i]) visit(i, j + 1);
            }
        }
    }
    arr.piece_count = pieces;
    arr.unbounded = cell(0, 0);
    arr.piece_punctures.assign(pieces, {});
    arr.corner_count.assign(pieces, 0);
    for (auto* set : {&cfg.xpunct, &cfg.opunct}) {
        for (auto p : *set) {
            int pc = cell(idx(p.x), idx(p.y));
            arr.puncture_piece.push_back(pc);
            arr.piece_punctures[pc].push_back(p);
        }
    }
    for (auto& pt : cfg.points) {
        int ix = idx(pt.pos.x), iy = idx(pt.pos.y);
        std::array<int, 4> a{cell(ix, iy), cell(ix - 1, iy), cell(ix - 1, iy - 1), cell(ix, iy - 1)};
        arr.corners.push_back(a);
        for (int q : a) arr.corner_count[q]++;
    }
    for (auto& b : boxes) {
        std::vector<int> inside;
        for (int pc = 0; pc < pieces; ++pc) {
            auto [i, j] = rep[pc];
            if (lines[i] >= b[0] * refine && lines[i + 1] <= b[1] * refine && lines[j] >= b[2] * refine &&
                lines[j + 1] <= b[3] * refine)
                inside.push_back(pc);
        }
        arr.oval_pieces.push_back(inside);
    }
    return arr;
}

std::vector<Domain> periodic_domains(const OvalConfig& cfg, const Arrangement& arr) {
    (void)cfg;
    std::vector<Domain> out;
    for (auto& ps : arr.oval_pieces) {
        Domain d(arr.piece_count, 0);
        for (int p : ps) d[p] = 1;
        out.push_back(d);
    }
    return out;
}

int corner_index(const Arrangement& arr, const Domain& d, int point) {
    auto& a = arr.corners[point];
    return static_cast<int>(d[a[0]] + d[a[2]] - d[a[1]] - d[a[3]]);
}

std::string dump_arrangement(const OvalConfig& cfg, const Arrangement& arr) {
    const int C = static_cast<int>(arr.lines.size()) - 1;
    static const char* sym = "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
    std::ostringstream os;
    os << "pieces " << arr.piece_count << ", unbounded " << arr.unbounded << ", points "
       << cfg.points.size() << "\n";
    for (int j = C - 1; j >= 0; --j) {
        for (int i = 0; i < C; ++i) {
            int p = arr.cell_piece[j * C + i];
            os << (p == arr.unbounded ? '.' : sym[p % 62]);
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace hfk
