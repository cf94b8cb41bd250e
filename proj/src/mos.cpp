#include <algorithm>
#include <deque>
#include <memory>
#include <numeric>

#include "hfk/chains.hpp"

namespace hfk {

namespace {

std::int64_t factorial(int n) {
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

std::int64_t perm_rank(const std::vector<int>& p) {
    const int n = static_cast<int>(p.size());
    std::int64_t r = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (p[j] < p[i]) ++smaller;
        r = r * (n - i) + smaller;
    }
    return r;
}

int inversions(const std::vector<int>& p) {
    int c = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++c;
    return c;
}

}  // namespace

// Clifford generators e_k = i*gamma_k with Jordan-Wigner gammas; e_k^2 = -1.
// Permutations are lifted along a BFS tree, each step multiplying on the left
// by (e_a - e_b) for the swapped row values a < b.
MosSigns::MosSigns(int n) : n_(n) {
    int m = (n + 1) / 2;
    dim_ = 1 << m;
    std::int64_t total = factorial(n);
    lift_.assign(static_cast<size_t>(total) * dim_ * 2, 0);
    std::vector<char> seen(total, 0);
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    std::int64_t r0 = perm_rank(id);
    lift_[static_cast<size_t>(r0) * dim_ * 2] = 1;
    seen[r0] = 1;
    std::deque<std::vector<int>> q{id};
    while (!q.empty()) {
        auto s = q.front();
        q.pop_front();
        std::int64_t rs = perm_rank(s);
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                auto t = s;
                for (int& v : t) v = (v == a) ? b : (v == b ? a : v);
                std::int64_t rt = perm_rank(t);
                if (seen[rt]) continue;
                seen[rt] = 1;
                auto w = apply_tau(&lift_[static_cast<size_t>(rs) * dim_ * 2], a, b);
                std::copy(w.begin(), w.end(), lift_.begin() + static_cast<size_t>(rt) * dim_ * 2);
                q.push_back(std::move(t));
            }
        }
    }
}

std::vector<std::int32_t> MosSigns::apply_tau(const std::int32_t* w, int a, int b) const {
    const int m = (n_ + 1) / 2;
    std::vector<std::int32_t> out(dim_ * 2, 0);
    auto add_gamma = [&](int k, int sgn) {
        int q = k / 2;
        int bitpos = m - 1 - q;
        for (int t = 0; t < dim_; ++t) {
            std::int32_t re = w[2 * t], im = w[2 * t + 1];
            if (re == 0 && im == 0) continue;
            int parity = 0;
            for (int qq = 0; qq < q; ++qq) parity ^= (t >> (m - 1 - qq)) & 1;
            int bit = (t >> bitpos) & 1;
            // phase of gamma_k on |t>: X gives 1, Y gives i*(-1)^bit; then e_k = i*gamma_k
            int zr = parity ? -1 : 1;
            std::int32_t pr, pi;  // phase as Gaussian integer
            if (k % 2 == 0) {
                pr = 0;
                pi = zr;  // i * 1
            } else {
                pr = -zr * (bit ? -1 : 1);  // i * i * (-1)^bit
                pi = 0;
            }
            int u = t ^ (1 << bitpos);
            std::int32_t nr = pr * re - pi * im, ni = pr * im + pi * re;
            out[2 * u] += sgn * nr;
            out[2 * u + 1] += sgn * ni;
        }
    };
    add_gamma(a, 1);
    add_gamma(b, -1);
    return out;
}

int MosSigns::sign(const std::vector<int>& x, int i, int j) const {
    int lo = std::min(x[i], x[j]), hi = std::max(x[i], x[j]);
    auto y = x;
    std::swap(y[i], y[j]);
    auto v = apply_tau(&lift_[static_cast<size_t>(perm_rank(x)) * dim_ * 2], lo, hi);
    const std::int32_t* ly = &lift_[static_cast<size_t>(perm_rank(y)) * dim_ * 2];
    std::int64_t dot = 0;
    for (int t = 0; t < dim_; ++t)
        dot += static_cast<std::int64_t>(v[2 * t]) * ly[2 * t] + static_cast<std::int64_t>(v[2 * t + 1]) * ly[2 * t + 1];
    if (dot == 0) throw std::logic_error("spin lifts are not parallel");
    int s = dot > 0 ? 1 : -1;
    int e = (j < i ? 1 : 0) + inversions(x) + (x[std::min(i, j)] > x[std::max(i, j)] ? 1 : 0);
    return (e % 2) ? -s : s;
}

SparseComplex mos_complex(const GridDiagram& g, Ring ring, const std::set<int>& skip_a2,
                          bool with_boundary) {
    validate(g);
    const int n = g.n;
    SparseComplex C;
    C.ring = ring;
    // additive per-point weights on the lattice point (c, r)
    auto O = o_points(g), X = x_points(g);
    std::vector<int> wm(n * n), wa(n * n);
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r) {
            std::vector<FinePoint> p{{10 * c, 10 * r}};
            wm[c * n + r] = -I(p, O) - I(O, p);
            wa[c * n + r] = J2(p, X) - J2(p, O);
        }
    const int mconst = I(O, O) + 1;
    const int aconst = -I(X, X) + I(O, O) - (n - 1);
    std::int64_t total = factorial(n);
    std::vector<int> index(total, -1);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int a2 = aconst, m = mconst;
        for (int c = 0; c < n; ++c) {
            a2 += wa[c * n + perm[c]];
            m += wm[c * n + perm[c]];
            for (int c2 = c + 1; c2 < n; ++c2)
                if (perm[c] < perm[c2]) ++m;
        }
        if (skip_a2.count(a2)) continue;
        index[perm_rank(perm)] = C.add({a2, m}, perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!with_boundary) return C;

    std::unique_ptr<MosSigns> signs;
    if (ring == Ring::Z) signs = std::make_unique<MosSigns>(n);
    std::vector<char> punct(n * n, 0);  // cell (c, r) carries a decoration
    for (int c = 0; c < n; ++c) punct[c * n + g.xs[c]] = punct[c * n + g.os[c]] = 1;
    for (int gi = 0; gi < C.size(); ++gi) {
        const auto& x = C.label[gi];
        std::vector<Entry> row;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                int w = ((j - i) % n + n) % n, h = ((x[j] - x[i]) % n + n) % n;
                bool empty = true;
                for (int k = 0; k < n && empty; ++k) {
                    if (k == i || k == j) continue;
                    int dc = ((k - i) % n + n) % n, dr = ((x[k] - x[i]) % n + n) % n;
                    if (dc > 0 && dc < w && dr > 0 && dr < h) empty = false;
                }
                for (int dc = 0; dc < w && empty; ++dc) {
                    int c = (i + dc) % n;
                    for (int dr = 0; dr < h; ++dr)
                        if (punct[c * n + (x[i] + dr) % n]) {
                            empty = false;
                            break;
                        }
                }
                if (!empty) continue;
                auto y = x;
                std::swap(y[i], y[j]);
                int t = index[perm_rank(y)];
                if (t < 0) throw std::logic_error("rectangle leaves the Alexander slice");
                int s = signs ? signs->sign(x, i, j) : 1;
                bool merged = false;
                for (auto& e : row)
                    if (e.to == t) {
                        e.c += s;
                        merged = true;
                    }
                if (!merged) row.push_back({t, s});
            }
        }
        for (auto& e : row) {
            if (ring == Ring::Z2) e.c = ((e.c % 2) + 2) % 2;
            if (e.c != 0) C.d[gi].push_back(e);
        }
    }
    return C;
}

}  // namespace hfk
