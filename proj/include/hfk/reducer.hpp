#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hfk/chains.hpp"
#include "hfk/ovals.hpp"

namespace hfk {

// Mutable complex with incoming and outgoing adjacency, for pair cancellation.
class WorkComplex {
public:
    explicit WorkComplex(const SparseComplex& c);

    int size() const { return static_cast<int>(out_.size()); }
    bool alive(int i) const { return alive_[i]; }
    std::int64_t coef(int from, int to) const;
    const std::vector<Entry>& row(int i) const { return out_[i]; }
    const std::vector<int>& sources(int i) const { return in_[i]; }
    // Removes a and b, rerouting x->b->a->y zigzags. Throws NonUnitPivot.
    void cancel(int a, int b);
    // Greedy cancellation of unit entries until none is left; returns the count.
    int fast_reduce();
    // Survivors only, in index order; labels and gradings carried over.
    SparseComplex extract(std::vector<int>* old_index = nullptr) const;

private:
    Ring ring_;
    std::vector<Grading> grading_;
    std::vector<std::vector<int>> label_;
    std::vector<std::vector<Entry>> out_;
    std::vector<std::vector<int>> in_;
    std::vector<char> alive_;
    void add_entry(int from, int to, std::int64_t c);
    void drop_entry(int from, int to);
};

SparseComplex cancel_pair(const SparseComplex& c, int a, int b);
// Splits by Alexander grading and reduces the slices in parallel.
SparseComplex fast_reduce(const SparseComplex& c, int threads = 0);
// Cancels the schedule's events in order on the long complex.  The result is
// labelled by short-configuration point ids.  Throws ScheduleAssertionFailed.
SparseComplex faithful_reduce(const SparseComplex& long_c, const LongConfig& lc, const OvalConfig& short_cfg);

std::vector<SparseComplex> split_by_alexander(const SparseComplex& c);
SparseComplex merge_complexes(const std::vector<SparseComplex>& parts);

struct GroupEntry {
    std::int64_t rank = 0;
    std::vector<std::int64_t> torsion;  // invariant factors > 1, each dividing the next
    bool operator==(const GroupEntry&) const = default;
};
using GradedGroups = std::map<Grading, GroupEntry>;  // keyed by (doubled Alexander, Maslov)

struct HomologyResult {
    Ring ring = Ring::Z;
    GradedGroups groups;
};

struct HFKTable {
    Ring ring = Ring::Z;
    GradedGroups groups;
    int genus = 0;
    bool fibered = false;
    bool torsion_free = true;
    bool operator==(const HFKTable&) const = default;
};

// Invariant factors (nonzero diagonal of the Smith form) of a dense integer matrix.
std::vector<std::int64_t> smith_invariants(const std::vector<std::vector<std::int64_t>>& m);

HomologyResult homology(const SparseComplex& c);

HFKTable deconvolve_V(const HomologyResult& h, int n);
// Top-down solve for the gradings >= lowest_a2 only; `h` must be complete there.
HFKTable deconvolve_top(const HomologyResult& h, int n, int lowest_a2);
// `known` covers every generator-carrying Alexander grading except `skipped`;
// `support` is the full list of doubled Alexander gradings carrying generators.
HFKTable reconstruct_skipped(const HomologyResult& known, const std::set<int>& skipped,
                             const std::vector<int>& support, int n);

struct Invariants {
    int genus = 0;
    bool fibered = false;
    bool torsion_free = true;
};
Invariants invariants(const HFKTable& t);
void fill_invariants(HFKTable& t);

// Z/2 ranks predicted from integral homology by universal coefficients.
GradedGroups mod2_from_integral(const GradedGroups& z);

// Graded Euler characteristic sum (-1)^m t^A over generators.
LaurentPoly euler_characteristic(const SparseComplex& c);

// n-1 most populated gradings of a census (ties: smaller grading first).
std::set<int> auto_skip(const std::vector<std::pair<int, std::int64_t>>& census, int n);

}  // namespace hfk
