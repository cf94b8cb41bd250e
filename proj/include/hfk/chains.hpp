#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>
#include <vector>

#include "hfk/grid.hpp"
#include "hfk/ovals.hpp"

namespace hfk {

enum class Ring { Z, Z2 };

struct Grading {
    int a2 = 0;  // twice the Alexander grading
    int m = 0;
    bool operator==(const Grading&) const = default;
    auto operator<=>(const Grading&) const = default;
};

struct Entry {
    int to = 0;
    std::int64_t c = 0;
};

struct SparseComplex {
    Ring ring = Ring::Z;
    std::vector<Grading> grading;
    std::vector<std::vector<int>> label;  // generator description (points or permutation)
    std::vector<std::vector<Entry>> d;    // boundary row of each generator

    int size() const { return static_cast<int>(grading.size()); }
    int add(Grading g, std::vector<int> lab);
};

// Dominance count: pairs (p in S, q in T) with p.x < q.x and p.y < q.y.
int I(const std::vector<FinePoint>& S, const std::vector<FinePoint>& T);
// 2J(S,T) = I(S,T) + I(T,S)
int J2(const std::vector<FinePoint>& S, const std::vector<FinePoint>& T);

// Gradings of a point set against the punctures of a planar grid.
int maslov_of(const std::vector<FinePoint>& x, const GridDiagram& g, bool mos);
int alexander2_of(const std::vector<FinePoint>& x, const GridDiagram& g);  // J form
int alexander2_winding(const std::vector<FinePoint>& x, const GridDiagram& g);

std::vector<FinePoint> o_points(const GridDiagram& g);
std::vector<FinePoint> x_points(const GridDiagram& g);

// ---- MOS ----
std::vector<FinePoint> mos_points(const std::vector<int>& perm);
SparseComplex mos_complex(const GridDiagram& g, Ring ring, const std::set<int>& skip_a2 = {},
                          bool with_boundary = true);
// Sign of the torus rectangle with lower-left corner in column i and upper-right in column j.
class MosSigns {
public:
    explicit MosSigns(int n);
    int sign(const std::vector<int>& perm, int i, int j) const;

private:
    int n_, dim_;
    std::vector<std::int32_t> lift_;  // per permutation rank: dim_ complex entries (re, im)
    std::vector<std::int32_t> apply_tau(const std::int32_t* w, int a, int b) const;
};

// ---- oval complexes ----
struct OvalGenerator {
    std::vector<int> pts;  // point id per vertical oval
};

std::uint64_t oval_key(const OvalConfig& cfg, const std::vector<int>& pts);

struct GeneratorTable {
    std::vector<std::vector<int>> gens;  // point ids per vertical oval
    std::vector<Grading> grading;
    std::unordered_map<std::uint64_t, int> index;
    int find(const OvalConfig& cfg, const std::vector<int>& pts) const;
};

// Per-point additive grading contributions.
struct PointWeights {
    std::vector<int> m;   // Maslov contribution
    std::vector<int> a2;  // doubled Alexander contribution
    int m_const = 0, a2_const = 0;
};
PointWeights point_weights(const OvalConfig& cfg);

// Backtracking over proto-generators (V-H matchings), then corner tags.
// `keep` filters by doubled Alexander grading; null keeps everything.
GeneratorTable enumerate_generators(const OvalConfig& cfg, const std::set<int>& skip_a2 = {});
GeneratorTable enumerate_generators_if(const OvalConfig& cfg, const std::function<bool(int)>& keep);
// Generators with A > threshold (threshold given doubled), by branch and bound.
GeneratorTable enumerate_high_alexander(const OvalConfig& cfg, int threshold_a2);
// Generator count per doubled Alexander grading without storing generators.
std::vector<std::pair<int, std::int64_t>> alexander_census(const OvalConfig& cfg);
std::map<Grading, std::int64_t> graded_census(const OvalConfig& cfg);

int oval_maslov_direct(const OvalConfig& cfg, const std::vector<int>& pts);
std::vector<FinePoint> gen_points(const OvalConfig& cfg, const std::vector<int>& pts);

// Boundary row of one long-configuration generator: (target points, sign) pairs.
struct LongEdge {
    std::vector<int> target;
    int sign = 1;
    bool bigon = false;
};
std::vector<LongEdge> long_edges(const OvalConfig& cfg, const std::vector<int>& pts);
int rectangle_sign(const std::vector<FinePoint>& x, FinePoint ll, FinePoint ur);

SparseComplex long_complex(const OvalConfig& cfg, Ring ring, const GeneratorTable& table);

// Throws BoundarySquareNonzero on failure.
void check_d_squared(const SparseComplex& c);
bool d_squared_zero(const SparseComplex& c);

}  // namespace hfk
