#include "hfk/reducer.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <thread>
#include <unordered_map>

namespace hfk {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::CoefficientOverflow, "boundary coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::CoefficientOverflow, "boundary coefficient overflow");
    return r;
}

bool is_unit(Ring ring, std::int64_t c) { return ring == Ring::Z2 ? (c % 2 != 0) : (c == 1 || c == -1); }

int worker_count(int requested, size_t jobs) {
    int t = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    if (t < 1) t = 1;
    return static_cast<int>(std::min<size_t>(t, std::max<size_t>(jobs, 1)));
}

template <class F>
void parallel_for(size_t jobs, int threads, F&& f) {
    int t = worker_count(threads, jobs);
    if (t == 1) {
        for (size_t i = 0; i < jobs; ++i) f(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr err;
    std::mutex m;
    std::vector<std::thread> pool;
    for (int w = 0; w < t; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                size_t i = next++;
                if (i >= jobs) return;
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(m);
                    if (!err) err = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace

// ---- work complex ----

WorkComplex::WorkComplex(const SparseComplex& c)
    : ring_(c.ring), grading_(c.grading), label_(c.label), out_(c.d), in_(c.size()), alive_(c.size(), 1) {
    for (int i = 0; i < c.size(); ++i)
        for (auto& e : out_[i]) in_[e.to].push_back(i);
}

std::int64_t WorkComplex::coef(int from, int to) const {
    for (auto& e : out_[from])
        if (e.to == to) return e.c;
    return 0;
}

void WorkComplex::drop_entry(int from, int to) {
    auto& r = out_[from];
    for (size_t i = 0; i < r.size(); ++i)
        if (r[i].to == to) {
            r[i] = r.back();
            r.pop_back();
            break;
        }
    auto& s = in_[to];
    for (size_t i = 0; i < s.size(); ++i)
        if (s[i] == from) {
            s[i] = s.back();
            s.pop_back();
            break;
        }
}

void WorkComplex::add_entry(int from, int to, std::int64_t c) {
    if (ring_ == Ring::Z2) c &= 1;
    if (c == 0) return;
    for (auto& e : out_[from]) {
        if (e.to != to) continue;
        e.c = ring_ == Ring::Z2 ? (e.c ^ c) : checked_add(e.c, c);
        if (e.c == 0) drop_entry(from, to);
        return;
    }
    out_[from].push_back({to, c});
    in_[to].push_back(from);
}

void WorkComplex::cancel(int a, int b) {
    if (!alive_[a] || !alive_[b]) throw Error(ErrorKind::NonUnitPivot, "cancelling a removed generator");
    std::int64_t u = coef(a, b);
    if (!is_unit(ring_, u)) throw Error(ErrorKind::NonUnitPivot, "pivot entry " + std::to_string(u) + " is not a unit");
    std::vector<std::pair<int, std::int64_t>> xs;
    for (int x : in_[b])
        if (x != a) xs.push_back({x, coef(x, b)});
    std::vector<Entry> ys;
    for (auto& e : out_[a])
        if (e.to != b) ys.push_back(e);
    for (auto [x, cxb] : xs) {
        std::int64_t f = -checked_mul(cxb, u);  // u is its own inverse
        for (auto& y : ys) add_entry(x, y.to, checked_mul(f, y.c));
    }
    for (int g : {a, b}) {
        for (int x : std::vector<int>(in_[g])) drop_entry(x, g);
        for (auto& e : std::vector<Entry>(out_[g])) drop_entry(g, e.to);
        alive_[g] = 0;
    }
}

int WorkComplex::fast_reduce() {
    int count = 0;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int a = 0; a < size(); ++a) {
            if (!alive_[a]) continue;
            int best = -1;
            size_t cost = 0;
            for (auto& e : out_[a]) {
                if (!is_unit(ring_, e.c)) continue;
                size_t c = in_[e.to].size();
                if (best < 0 || c < cost) {
                    best = e.to;
                    cost = c;
                }
            }
            if (best < 0) continue;
            cancel(a, best);
            ++count;
            progress = true;
        }
    }
    return count;
}

SparseComplex WorkComplex::extract(std::vector<int>* old_index) const {
    SparseComplex c;
    c.ring = ring_;
    std::vector<int> remap(size(), -1);
    for (int i = 0; i < size(); ++i) {
        if (!alive_[i]) continue;
        remap[i] = c.add(grading_[i], label_[i]);
        if (old_index) old_index->push_back(i);
    }
    for (int i = 0; i < size(); ++i) {
        if (!alive_[i]) continue;
        auto& row = c.d[remap[i]];
        for (auto& e : out_[i]) row.push_back({remap[e.to], e.c});
        std::sort(row.begin(), row.end(), [](const Entry& x, const Entry& y) { return x.to < y.to; });
    }
    return c;
}

SparseComplex cancel_pair(const SparseComplex& c, int a, int b) {
    WorkComplex w(c);
    w.cancel(a, b);
    return w.extract();
}

std::vector<SparseComplex> split_by_alexander(const SparseComplex& c) {
    std::map<int, int> slot;
    for (auto& g : c.grading) slot.emplace(g.a2, 0);
    int k = 0;
    for (auto& [a, s] : slot) s = k++;
    std::vector<SparseComplex> parts(slot.size());
    std::vector<int> local(c.size());
    for (auto& p : parts) p.ring = c.ring;
    for (int i = 0; i < c.size(); ++i) local[i] = parts[slot[c.grading[i].a2]].add(c.grading[i], c.label[i]);
    for (int i = 0; i < c.size(); ++i) {
        auto& p = parts[slot[c.grading[i].a2]];
        for (auto& e : c.d[i]) {
            if (c.grading[e.to].a2 != c.grading[i].a2)
                throw std::logic_error("boundary entry changes the Alexander grading");
            p.d[local[i]].push_back({local[e.to], e.c});
        }
    }
    return parts;
}

SparseComplex merge_complexes(const std::vector<SparseComplex>& parts) {
    SparseComplex c;
    if (!parts.empty()) c.ring = parts[0].ring;
    for (auto& p : parts) {
        int base = c.size();
        for (int i = 0; i < p.size(); ++i) {
            c.add(p.grading[i], p.label[i]);
            for (auto& e : p.d[i]) c.d.back().push_back({e.to + base, e.c});
        }
    }
    return c;
}

SparseComplex fast_reduce(const SparseComplex& c, int threads) {
    auto parts = split_by_alexander(c);
    parallel_for(parts.size(), threads, [&](size_t i) {
        WorkComplex w(parts[i]);
        w.fast_reduce();
        parts[i] = w.extract();
    });
    return merge_complexes(parts);
}

SparseComplex faithful_reduce(const SparseComplex& long_c, const LongConfig& lc, const OvalConfig& short_cfg) {
    const OvalConfig& L = lc.config;
    WorkComplex w(long_c);
    std::unordered_map<std::uint64_t, int> index;
    std::vector<std::vector<int>> holders(L.points.size());
    for (int i = 0; i < long_c.size(); ++i) {
        index[oval_key(L, long_c.label[i])] = i;
        for (int p : long_c.label[i]) holders[p].push_back(i);
    }
    for (auto& ev : lc.schedule.events) {
        const int v = L.points[ev.p2].v;
        for (int b : holders[ev.p2]) {
            if (!w.alive(b)) continue;
            auto lab = long_c.label[b];
            lab[v] = ev.p1;
            auto it = index.find(oval_key(L, lab));
            if (it == index.end() || !w.alive(it->second))
                throw Error(ErrorKind::ScheduleAssertionFailed, "partner generator missing at event " + std::to_string(ev.time));
            int a = it->second;
            std::int64_t u = w.coef(a, b);
            if (!is_unit(long_c.ring, u))
                throw Error(ErrorKind::ScheduleAssertionFailed,
                            "matched entry " + std::to_string(u) + " at event " + std::to_string(ev.time));
            w.cancel(a, b);
        }
    }
    std::vector<int> to_short(L.points.size(), -1);
    for (size_t s = 0; s < lc.schedule.survivor_map.size(); ++s) to_short[lc.schedule.survivor_map[s]] = static_cast<int>(s);
    SparseComplex out = w.extract();
    for (auto& lab : out.label) {
        for (int& p : lab) {
            p = to_short[p];
            if (p < 0) throw Error(ErrorKind::ScheduleAssertionFailed, "a killed point survives the reduction");
        }
    }
    (void)short_cfg;
    return out;
}

// ---- Smith normal form ----

std::vector<std::int64_t> smith_invariants(const std::vector<std::vector<std::int64_t>>& m0) {
    const int R = static_cast<int>(m0.size());
    const int C = R ? static_cast<int>(m0[0].size()) : 0;
    std::vector<std::vector<cpp_int>> m(R, std::vector<cpp_int>(C));
    for (int i = 0; i < R; ++i)
        for (int j = 0; j < C; ++j) m[i][j] = m0[i][j];
    std::vector<cpp_int> diag;
    for (int t = 0; t < std::min(R, C); ++t) {
        // smallest nonzero entry in the trailing block
        for (;;) {
            int pi = -1, pj = -1;
            for (int i = t; i < R; ++i)
                for (int j = t; j < C; ++j)
                    if (m[i][j] != 0 && (pi < 0 || abs(m[i][j]) < abs(m[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi < 0) goto done;
            std::swap(m[t], m[pi]);
            for (int i = 0; i < R; ++i) std::swap(m[i][t], m[i][pj]);
            bool clean = true;
            for (int i = t + 1; i < R; ++i) {
                if (m[i][t] == 0) continue;
                cpp_int q = m[i][t] / m[t][t];
                for (int j = t; j < C; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) clean = false;
            }
            for (int j = t + 1; j < C; ++j) {
                if (m[t][j] == 0) continue;
                cpp_int q = m[t][j] / m[t][t];
                for (int i = t; i < R; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            // the pivot must divide the rest of the block
            int bad = -1;
            for (int i = t + 1; i < R && bad < 0; ++i)
                for (int j = t + 1; j < C; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            for (int j = t; j < C; ++j) m[t][j] += m[bad][j];
        }
        diag.push_back(abs(m[t][t]));
    }
done:
    std::vector<std::int64_t> out;
    for (auto& d : diag) {
        if (d > cpp_int(std::numeric_limits<std::int64_t>::max()))
            throw Error(ErrorKind::CoefficientOverflow, "invariant factor exceeds 64 bits");
        out.push_back(static_cast<std::int64_t>(d));
    }
    return out;
}

HomologyResult homology(const SparseComplex& c0) {
    HomologyResult h;
    h.ring = c0.ring;
    SparseComplex c = fast_reduce(c0);
    std::map<Grading, std::vector<int>> by;
    for (int i = 0; i < c.size(); ++i) by[c.grading[i]].push_back(i);
    std::vector<int> pos(c.size());
    for (auto& [g, v] : by)
        for (size_t k = 0; k < v.size(); ++k) pos[v[k]] = static_cast<int>(k);
    // rank and invariant factors of the block leaving each grading
    std::map<Grading, std::vector<std::int64_t>> out_factors;
    for (auto& [g, src] : by) {
        Grading tg{g.a2, g.m - 1};
        auto it = by.find(tg);
        if (it == by.end()) continue;
        std::vector<std::vector<std::int64_t>> m(it->second.size(), std::vector<std::int64_t>(src.size(), 0));
        bool any = false;
        for (size_t j = 0; j < src.size(); ++j)
            for (auto& e : c.d[src[j]]) {
                m[pos[e.to]][j] = c.ring == Ring::Z2 ? (e.c & 1) : e.c;
                any = any || e.c != 0;
            }
        if (!any) continue;
        if (c.ring == Ring::Z2) {
            // reduce mod 2: rank over the field, no torsion
            int rank = 0, rows = static_cast<int>(m.size()), cols = static_cast<int>(src.size());
            for (int col = 0; col < cols && rank < rows; ++col) {
                int p = -1;
                for (int r = rank; r < rows; ++r)
                    if (m[r][col] & 1) {
                        p = r;
                        break;
                    }
                if (p < 0) continue;
                std::swap(m[rank], m[p]);
                for (int r = 0; r < rows; ++r)
                    if (r != rank && (m[r][col] & 1))
                        for (int k = 0; k < cols; ++k) m[r][k] ^= m[rank][k] & 1;
                ++rank;
            }
            out_factors[g] = std::vector<std::int64_t>(rank, 1);
        } else {
            out_factors[g] = smith_invariants(m);
        }
    }
    for (auto& [g, v] : by) {
        GroupEntry e;
        std::int64_t rank_out = 0, rank_in = 0;
        if (auto it = out_factors.find(g); it != out_factors.end()) rank_out = static_cast<std::int64_t>(it->second.size());
        if (auto it = out_factors.find({g.a2, g.m + 1}); it != out_factors.end()) {
            rank_in = static_cast<std::int64_t>(it->second.size());
            for (auto f : it->second)
                if (f > 1) e.torsion.push_back(f);
        }
        e.rank = static_cast<std::int64_t>(v.size()) - rank_out - rank_in;
        if (e.rank != 0 || !e.torsion.empty()) h.groups[g] = e;
    }
    return h;
}

// ---- V deconvolution ----

namespace {

// Counts by kind: 0 = free rank, otherwise a prime power order of a cyclic summand.
using Counts = std::map<std::int64_t, std::int64_t>;

Counts to_counts(const GroupEntry& e) {
    Counts c;
    if (e.rank) c[0] = e.rank;
    for (auto f : e.torsion) {
        std::int64_t x = f;
        for (std::int64_t p = 2; p * p <= x; ++p) {
            if (x % p) continue;
            std::int64_t q = 1;
            while (x % p == 0) {
                x /= p;
                q *= p;
            }
            c[q]++;
        }
        if (x > 1) c[x]++;
    }
    return c;
}

std::int64_t smallest_prime(std::int64_t q) {
    for (std::int64_t p = 2; p * p <= q; ++p)
        if (q % p == 0) return p;
    return q;
}

GroupEntry from_counts(const Counts& c) {
    GroupEntry e;
    std::map<std::int64_t, std::vector<std::int64_t>> by_prime;  // prime -> powers, descending
    for (auto [k, v] : c) {
        if (v < 0) throw Error(ErrorKind::InconsistentTensor, "negative multiplicity");
        if (k == 0) {
            e.rank = v;
            continue;
        }
        for (std::int64_t i = 0; i < v; ++i) by_prime[smallest_prime(k)].push_back(k);
    }
    size_t len = 0;
    for (auto& [p, v] : by_prime) {
        std::sort(v.rbegin(), v.rend());
        len = std::max(len, v.size());
    }
    std::vector<std::int64_t> inv(len, 1);  // inv[0] is the largest factor
    for (auto& [p, v] : by_prime)
        for (size_t i = 0; i < v.size(); ++i) inv[i] *= v[i];
    std::reverse(inv.begin(), inv.end());
    e.torsion = inv;
    return e;
}

std::int64_t binom(int n, int k) {
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

bool empty_counts(const Counts& c) {
    for (auto [k, v] : c)
        if (v) return false;
    return true;
}

}  // namespace

void fill_invariants(HFKTable& t) {
    auto inv = invariants(t);
    t.genus = inv.genus;
    t.fibered = inv.fibered;
    t.torsion_free = inv.torsion_free;
}

namespace {

std::map<Grading, Counts> solve_top_down(const std::map<Grading, Counts>& H, int n, int lowest_a2) {
    std::map<Grading, Counts> R;
    std::vector<Grading> order;
    for (auto& [g, e] : H)
        if (g.a2 >= lowest_a2) order.push_back(g);
    // descending Alexander, so every higher contribution is already known
    std::sort(order.begin(), order.end(), [](const Grading& x, const Grading& y) {
        return x.a2 != y.a2 ? x.a2 > y.a2 : x.m > y.m;
    });
    for (auto& g : order) {
        Counts c = H.at(g);
        for (int k = 1; k <= n - 1; ++k) {
            auto it = R.find({g.a2 + 2 * k, g.m + k});
            if (it == R.end()) continue;
            for (auto [kind, v] : it->second) c[kind] -= binom(n - 1, k) * v;
        }
        for (auto [kind, v] : c)
            if (v < 0) throw Error(ErrorKind::InconsistentTensor, "negative multiplicity in deconvolution");
        if (!empty_counts(c)) R[g] = c;
    }
    // a higher class needs its lower copies inside the solved range
    for (auto& [g, c] : R)
        for (int k = 1; k <= n - 1 && g.a2 - 2 * k >= lowest_a2; ++k)
            if (!H.count({g.a2 - 2 * k, g.m - k}))
                throw Error(ErrorKind::InconsistentTensor, "homology is not a V tensor");
    return R;
}

}  // namespace

HFKTable deconvolve_V(const HomologyResult& h, int n) {
    HFKTable t;
    t.ring = h.ring;
    std::map<Grading, Counts> H;
    for (auto& [g, e] : h.groups) H[g] = to_counts(e);
    auto R = solve_top_down(H, n, std::numeric_limits<int>::min());
    // every contribution must be accounted for
    std::map<Grading, Counts> check;
    for (auto& [g, c] : R)
        for (int k = 0; k <= n - 1; ++k)
            for (auto [kind, v] : c) check[{g.a2 - 2 * k, g.m - k}][kind] += binom(n - 1, k) * v;
    for (auto& [g, c] : H)
        for (auto [kind, v] : c)
            if (check[g][kind] != v) throw Error(ErrorKind::InconsistentTensor, "homology is not a V tensor");
    for (auto& [g, c] : check)
        for (auto [kind, v] : c)
            if (v && (!H.count(g) || H[g][kind] != v)) throw Error(ErrorKind::InconsistentTensor, "homology is not a V tensor");
    for (auto& [g, c] : R) t.groups[g] = from_counts(c);
    fill_invariants(t);
    return t;
}

HFKTable deconvolve_top(const HomologyResult& h, int n, int lowest_a2) {
    HFKTable t;
    t.ring = h.ring;
    std::map<Grading, Counts> H;
    for (auto& [g, e] : h.groups)
        if (g.a2 >= lowest_a2) H[g] = to_counts(e);
    for (auto& [g, c] : solve_top_down(H, n, lowest_a2)) t.groups[g] = from_counts(c);
    fill_invariants(t);
    return t;
}

HFKTable reconstruct_skipped(const HomologyResult& known, const std::set<int>& skipped,
                             const std::vector<int>& support, int n) {
    if (skipped.empty()) return deconvolve_V(known, n);
    if (static_cast<int>(skipped.size()) > n - 1)
        throw Error(ErrorKind::UnderdeterminedSkip, "more than n-1 skipped gradings");
    if (support.empty()) throw Error(ErrorKind::UnderdeterminedSkip, "empty support");
    const int amin = *std::min_element(support.begin(), support.end());
    const int amax = *std::max_element(support.begin(), support.end());
    // unknown HFK gradings: amin + 2(n-1) .. amax
    std::vector<int> unk, eqs;
    for (int a = amin + 2 * (n - 1); a <= amax; a += 2) unk.push_back(a);
    for (int a = amin; a <= amax; a += 2)
        if (!skipped.count(a)) eqs.push_back(a);
    std::map<std::pair<int, std::int64_t>, std::map<int, std::int64_t>> rhs;  // (diagonal m - a, kind) -> a2 -> count
    for (auto& [g, e] : known.groups) {
        if (skipped.count(g.a2)) throw Error(ErrorKind::UnderdeterminedSkip, "known data in a skipped grading");
        if (g.a2 % 2) throw Error(ErrorKind::UnderdeterminedSkip, "half-integral Alexander grading");
        for (auto [kind, v] : to_counts(e)) rhs[{g.m - g.a2 / 2, kind}][g.a2] = v;
    }
    const int U = static_cast<int>(unk.size()), E = static_cast<int>(eqs.size());
    if (E < U) throw Error(ErrorKind::UnderdeterminedSkip, "fewer equations than unknowns");
    std::map<Grading, Counts> R;
    for (auto& [key, vals] : rhs) {
        auto [diag, kind] = key;
        std::vector<std::vector<cpp_rational>> m(E, std::vector<cpp_rational>(U + 1));
        for (int i = 0; i < E; ++i) {
            for (int j = 0; j < U; ++j) {
                int k = (unk[j] - eqs[i]) / 2;
                if (k >= 0 && k <= n - 1) m[i][j] = binom(n - 1, k);
            }
            auto it = vals.find(eqs[i]);
            m[i][U] = it == vals.end() ? 0 : it->second;
        }
        int r = 0;
        std::vector<int> pivcol;
        for (int col = 0; col < U && r < E; ++col) {
            int p = -1;
            for (int i = r; i < E; ++i)
                if (m[i][col] != 0) {
                    p = i;
                    break;
                }
            if (p < 0) continue;
            std::swap(m[r], m[p]);
            cpp_rational piv = m[r][col];
            for (auto& x : m[r]) x /= piv;
            for (int i = 0; i < E; ++i)
                if (i != r && m[i][col] != 0) {
                    cpp_rational f = m[i][col];
                    for (int j = col; j <= U; ++j) m[i][j] -= f * m[r][j];
                }
            pivcol.push_back(col);
            ++r;
        }
        if (r < U) throw Error(ErrorKind::UnderdeterminedSkip, "singular reconstruction system");
        for (int i = r; i < E; ++i)
            if (m[i][U] != 0) throw Error(ErrorKind::InconsistentTensor, "inconsistent reconstruction system");
        for (int i = 0; i < r; ++i) {
            cpp_rational v = m[i][U];
            if (v < 0 || denominator(v) != 1) throw Error(ErrorKind::InconsistentTensor, "non-integral reconstruction");
            if (v == 0) continue;
            int a2 = unk[pivcol[i]];
            R[{a2, diag + a2 / 2}][kind] = static_cast<std::int64_t>(numerator(v));
        }
    }
    HFKTable t;
    t.ring = known.ring;
    for (auto& [g, c] : R) t.groups[g] = from_counts(c);
    fill_invariants(t);
    return t;
}

Invariants invariants(const HFKTable& t) {
    Invariants inv;
    bool any = false;
    int top = 0;
    for (auto& [g, e] : t.groups) {
        if (!e.torsion.empty()) inv.torsion_free = false;
        if (e.rank == 0 && e.torsion.empty()) continue;
        if (!any || g.a2 > top) top = g.a2;
        any = true;
    }
    inv.genus = top / 2;
    std::int64_t rank = 0;
    bool tors = false;
    for (auto& [g, e] : t.groups)
        if (g.a2 == top) {
            rank += e.rank;
            tors = tors || !e.torsion.empty();
        }
    inv.fibered = any && rank == 1 && !tors;
    return inv;
}

GradedGroups mod2_from_integral(const GradedGroups& z) {
    GradedGroups out;
    auto even = [](const GroupEntry& e) {
        std::int64_t c = 0;
        for (auto f : e.torsion)
            if (f % 2 == 0) ++c;
        return c;
    };
    for (auto& [g, e] : z) {
        out[g].rank += e.rank + even(e);
        out[{g.a2, g.m + 1}].rank += even(e);
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.rank == 0 ? out.erase(it) : std::next(it);
    return out;
}

LaurentPoly euler_characteristic(const SparseComplex& c) {
    LaurentPoly p;
    for (auto& g : c.grading) {
        if (g.a2 % 2) throw std::logic_error("half-integral Alexander grading");
        p.add(g.a2 / 2, (g.m % 2 == 0) ? 1 : -1);
    }
    return p;
}

std::set<int> auto_skip(const std::vector<std::pair<int, std::int64_t>>& census, int n) {
    auto v = census;
    std::stable_sort(v.begin(), v.end(), [](auto& x, auto& y) { return x.second > y.second; });
    std::set<int> s;
    for (int i = 0; i < n - 1 && i < static_cast<int>(v.size()); ++i) s.insert(v[i].first);
    return s;
}

}  // namespace hfk
