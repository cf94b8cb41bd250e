#include "hfk/chains.hpp"

namespace hfk {

int I(const std::vector<FinePoint>& S, const std::vector<FinePoint>& T) {
    int c = 0;
    for (auto& p : S)
        for (auto& q : T)
            if (p.x < q.x && p.y < q.y) ++c;
    return c;
}

int J2(const std::vector<FinePoint>& S, const std::vector<FinePoint>& T) { return I(S, T) + I(T, S); }

std::vector<FinePoint> o_points(const GridDiagram& g) {
    std::vector<FinePoint> v;
    for (int c = 0; c < g.n; ++c) v.push_back({10 * c + 5, 10 * g.os[c] + 5});
    return v;
}

std::vector<FinePoint> x_points(const GridDiagram& g) {
    std::vector<FinePoint> v;
    for (int c = 0; c < g.n; ++c) v.push_back({10 * c + 5, 10 * g.xs[c] + 5});
    return v;
}

int maslov_of(const std::vector<FinePoint>& x, const GridDiagram& g, bool mos) {
    auto O = o_points(g);
    return I(x, x) - I(x, O) - I(O, x) + I(O, O) + (mos ? 1 : 0);
}

// 2A = 2J(x - (O+X)/2, X - O) - (n-1), expanded so that everything stays integral.
int alexander2_of(const std::vector<FinePoint>& x, const GridDiagram& g) {
    auto O = o_points(g), X = x_points(g);
    return J2(x, X) - J2(x, O) - I(X, X) + I(O, O) - (g.n - 1);
}

int alexander2_winding(const std::vector<FinePoint>& x, const GridDiagram& g) {
    int s = 0;
    for (auto& p : x) s += winding_number(g, p);
    int q = 0;
    for (auto& p : x_points(g)) q += winding_quadrant_sum(g, p);
    for (auto& p : o_points(g)) q += winding_quadrant_sum(g, p);
    if (q % 4 != 0) throw std::logic_error("puncture winding sum not divisible by 4");
    return -2 * s + q / 4 - (g.n - 1);
}

std::vector<FinePoint> mos_points(const std::vector<int>& perm) {
    std::vector<FinePoint> v;
    for (size_t c = 0; c < perm.size(); ++c) v.push_back({10 * static_cast<int>(c), 10 * perm[c]});
    return v;
}

int SparseComplex::add(Grading g, std::vector<int> lab) {
    grading.push_back(g);
    label.push_back(std::move(lab));
    d.emplace_back();
    return size() - 1;
}

}  // namespace hfk
