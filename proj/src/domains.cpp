#include "hfk/domains.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <deque>

namespace hfk {

using boost::multiprecision::cpp_rational;

// ---- domains ----

struct DomainSolver::Impl {
    int pieces = 0, points = 0, cols = 0, rank = 0;
    std::vector<int> col_of;    // piece -> unknown index or -1
    std::vector<int> piece_of;  // unknown index -> piece
    std::vector<int> pivcol;    // per reduced row
    std::vector<std::vector<cpp_rational>> T;  // row transform, points x points
};

DomainSolver::DomainSolver(const OvalConfig& cfg, const Arrangement& arr) : impl_(std::make_unique<Impl>()) {
    Impl& s = *impl_;
    s.pieces = arr.piece_count;
    s.points = static_cast<int>(cfg.points.size());
    s.col_of.assign(s.pieces, -1);
    for (int p = 0; p < s.pieces; ++p) {
        if (!arr.piece_punctures[p].empty() || p == arr.unbounded) continue;
        s.col_of[p] = s.cols++;
        s.piece_of.push_back(p);
    }
    // corner index c(p) = a1 + a3 - a2 - a4 as a row over the unknown pieces
    std::vector<std::vector<cpp_rational>> A(s.points, std::vector<cpp_rational>(s.cols));
    for (int p = 0; p < s.points; ++p) {
        const auto& a = arr.corners[p];
        const int sign[4] = {1, -1, 1, -1};
        for (int q = 0; q < 4; ++q)
            if (s.col_of[a[q]] >= 0) A[p][s.col_of[a[q]]] += sign[q];
    }
    s.T.assign(s.points, std::vector<cpp_rational>(s.points));
    for (int p = 0; p < s.points; ++p) s.T[p][p] = 1;
    int r = 0;
    for (int c = 0; c < s.cols && r < s.points; ++c) {
        int piv = -1;
        for (int i = r; i < s.points; ++i)
            if (A[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(A[r], A[piv]);
        std::swap(s.T[r], s.T[piv]);
        cpp_rational d = A[r][c];
        for (auto& x : A[r]) x /= d;
        for (auto& x : s.T[r]) x /= d;
        for (int i = 0; i < s.points; ++i) {
            if (i == r || A[i][c] == 0) continue;
            cpp_rational f = A[i][c];
            for (int j = c; j < s.cols; ++j) A[i][j] -= f * A[r][j];
            for (int j = 0; j < s.points; ++j) s.T[i][j] -= f * s.T[r][j];
        }
        s.pivcol.push_back(c);
        ++r;
    }
    s.rank = r;
}

DomainSolver::~DomainSolver() = default;
DomainSolver::DomainSolver(DomainSolver&&) noexcept = default;

bool DomainSolver::unique() const { return impl_->rank == impl_->cols; }
int DomainSolver::unknowns() const { return impl_->cols; }

std::optional<Domain> DomainSolver::find_domain(const std::vector<int>& x, const std::vector<int>& y) const {
    const Impl& s = *impl_;
    std::vector<std::pair<int, int>> b;  // sparse right-hand side
    for (int p : x)
        if (std::find(y.begin(), y.end(), p) == y.end()) b.push_back({p, 1});
    for (int p : y)
        if (std::find(x.begin(), x.end(), p) == x.end()) b.push_back({p, -1});
    if (b.empty()) return std::nullopt;
    std::vector<cpp_rational> c(s.points);
    for (int i = 0; i < s.points; ++i)
        for (auto [p, v] : b)
            if (s.T[i][p] != 0) c[i] += v * s.T[i][p];
    for (int i = s.rank; i < s.points; ++i)
        if (c[i] != 0) return std::nullopt;
    Domain d(s.pieces, 0);
    bool nonzero = false;
    for (int i = 0; i < s.rank; ++i) {
        const cpp_rational& v = c[i];
        if (v == 0) continue;
        if (v < 0 || denominator(v) != 1) return std::nullopt;
        d[s.piece_of[s.pivcol[i]]] = static_cast<long long>(numerator(v));
        nonzero = true;
    }
    if (!nonzero) return std::nullopt;
    return d;
}

std::optional<Domain> find_domain(const OvalConfig& cfg, const Arrangement& arr, const std::vector<int>& x,
                                  const std::vector<int>& y) {
    return DomainSolver(cfg, arr).find_domain(x, y);
}

// ---- path expansion ----

namespace {

using Row = std::vector<std::pair<std::uint64_t, std::int64_t>>;
using RowPtr = std::shared_ptr<const Row>;

}  // namespace

struct PathEngine::Impl {
    OvalConfig L;
    std::vector<ScheduleEvent> events;
    std::vector<int> survivor_map;
    Ring ring;
    int k;
    std::vector<std::unordered_map<std::uint64_t, RowPtr>> memo;  // per level
    PathStats stats;

    // 6 bits per vertical oval: horizontal index * 4 + corner tag
    std::uint64_t encode(const std::vector<int>& pts) const {
        std::uint64_t key = 0;
        for (int v = 0; v < k; ++v) {
            const auto& p = L.points[pts[v]];
            key |= static_cast<std::uint64_t>(p.h * 4 + p.tag) << (6 * v);
        }
        return key;
    }
    int point_at(std::uint64_t key, int v) const {
        int f = static_cast<int>((key >> (6 * v)) & 63);
        return L.find_point(v, f / 4, f % 4);
    }
    std::vector<int> decode(std::uint64_t key) const {
        std::vector<int> pts(k);
        for (int v = 0; v < k; ++v) pts[v] = point_at(key, v);
        return pts;
    }
    std::int64_t norm(std::int64_t c) const { return ring == Ring::Z2 ? (c & 1) : c; }

    RowPtr level0(std::uint64_t key) {
        std::unordered_map<std::uint64_t, std::int64_t> acc;
        for (auto& e : long_edges(L, decode(key))) acc[encode(e.target)] += e.sign;
        auto row = std::make_shared<Row>();
        for (auto [t, c] : acc)
            if (norm(c) != 0) row->push_back({t, norm(c)});
        std::sort(row->begin(), row->end());
        return row;
    }

    RowPtr row_at(std::uint64_t key, int level) {
        auto& m = memo[level];
        if (auto it = m.find(key); it != m.end()) return it->second;
        RowPtr out;
        if (level == 0) {
            out = level0(key);
        } else {
            RowPtr base = row_at(key, level - 1);
            const auto& ev = events[level - 1];
            const int v = L.points[ev.p2].v;
            bool touched = false;
            for (auto& [t, c] : *base) {
                int p = point_at(t, v);
                if (p == ev.p1 || p == ev.p2) {
                    touched = true;
                    break;
                }
            }
            if (!touched) {
                out = base;
            } else {
                std::unordered_map<std::uint64_t, std::int64_t> acc(base->begin(), base->end());
                std::deque<std::uint64_t> work;
                for (auto& [t, c] : *base)
                    if (point_at(t, v) == ev.p2) work.push_back(t);
                const std::uint64_t shift = 6 * static_cast<std::uint64_t>(v);
                const std::uint64_t tag1 = static_cast<std::uint64_t>(L.points[ev.p1].tag);
                std::int64_t guard = 0;
                while (!work.empty()) {
                    std::uint64_t b = work.front();
                    work.pop_front();
                    auto it = acc.find(b);
                    if (it == acc.end() || norm(it->second) == 0) continue;
                    if (++guard > 50000000)
                        throw Error(ErrorKind::ScheduleAssertionFailed, "zigzag expansion does not terminate");
                    std::int64_t c = it->second;
                    std::uint64_t a = (b & ~(std::uint64_t{3} << shift)) | (tag1 << shift);
                    RowPtr ra = row_at(a, level - 1);
                    std::int64_t u = 0;
                    for (auto& [t, cc] : *ra)
                        if (t == b) u = cc;
                    bool unit = ring == Ring::Z2 ? (u & 1) : (u == 1 || u == -1);
                    if (!unit)
                        throw Error(ErrorKind::ScheduleAssertionFailed,
                                    "matched entry " + std::to_string(u) + " at event " + std::to_string(ev.time));
                    std::int64_t f = -c * u;
                    ++stats.expansions;
                    for (auto& [t, cc] : *ra) {
                        std::int64_t& slot = acc[t];
                        slot = norm(slot + f * cc);
                        if (slot != 0 && t != b && point_at(t, v) == ev.p2) work.push_back(t);
                    }
                }
                auto row = std::make_shared<Row>();
                for (auto [t, c] : acc) {
                    if (norm(c) == 0) continue;
                    int p = point_at(t, v);
                    if (p == ev.p1 || p == ev.p2) continue;
                    row->push_back({t, norm(c)});
                }
                std::sort(row->begin(), row->end());
                out = row;
            }
        }
        ++stats.memo_rows;
        m.emplace(key, out);
        return out;
    }
};

PathEngine::PathEngine(const LongConfig& lc, Ring ring) : impl_(std::make_unique<Impl>()) {
    Impl& s = *impl_;
    s.L = lc.config;
    s.events = lc.schedule.events;
    s.survivor_map = lc.schedule.survivor_map;
    s.ring = ring;
    s.k = s.L.k();
    if (s.k > 10) throw Error(ErrorKind::ScheduleAssertionFailed, "path strategy supports at most 10 ovals per direction");
    s.memo.resize(s.events.size() + 1);
}

PathEngine::~PathEngine() = default;

std::vector<std::pair<std::vector<int>, std::int64_t>> PathEngine::short_row(const std::vector<int>& short_pts) {
    Impl& s = *impl_;
    std::vector<int> lift;
    for (int p : short_pts) lift.push_back(s.survivor_map[p]);
    RowPtr r = s.row_at(s.encode(lift), static_cast<int>(s.events.size()));
    std::vector<int> to_short(s.L.points.size(), -1);
    for (size_t i = 0; i < s.survivor_map.size(); ++i) to_short[s.survivor_map[i]] = static_cast<int>(i);
    std::vector<std::pair<std::vector<int>, std::int64_t>> out;
    for (auto& [t, c] : *r) {
        auto pts = s.decode(t);
        for (int& p : pts) {
            p = to_short[p];
            if (p < 0) throw Error(ErrorKind::ScheduleAssertionFailed, "path row reaches a killed point");
        }
        out.push_back({pts, c});
    }
    return out;
}

const PathStats& PathEngine::stats() const { return impl_->stats; }

void PathEngine::clear_memo() {
    for (auto& m : impl_->memo) m.clear();
}

SparseComplex short_complex_via_paths(const LongConfig& lc, const OvalConfig& short_cfg, Ring ring,
                                      const GeneratorTable& table, const DomainSolver* prefilter, PathStats* stats) {
    PathEngine eng(lc, ring);
    SparseComplex C;
    C.ring = ring;
    C.grading = table.grading;
    C.label = table.gens;
    C.d.resize(table.gens.size());
    std::int64_t dropped = 0;
    for (size_t i = 0; i < table.gens.size(); ++i) {
        for (auto& [pts, c] : eng.short_row(table.gens[i])) {
            int t = table.find(short_cfg, pts);
            if (t < 0) {
                if (ring == Ring::Z2 ? (c & 1) : c) throw std::logic_error("short row leaves the generator table");
                continue;
            }
            if (prefilter && !prefilter->find_domain(table.gens[i], pts)) {
                ++dropped;
                continue;
            }
            C.d[i].push_back({t, c});
        }
    }
    if (stats) {
        *stats = eng.stats();
        stats->prefilter_dropped = dropped;
    }
    return C;
}

}  // namespace hfk
