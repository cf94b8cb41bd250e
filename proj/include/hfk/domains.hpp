#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hfk/chains.hpp"
#include "hfk/ovals.hpp"

namespace hfk {

// Exact solver for the corner-index system of one arrangement.  The
// elimination is done once; each query only applies the stored transform.
class DomainSolver {
public:
    DomainSolver(const OvalConfig& cfg, const Arrangement& arr);
    ~DomainSolver();
    DomainSolver(DomainSolver&&) noexcept;

    // Corner index +1 on x minus y, -1 on y minus x, 0 elsewhere, zero on
    // pieces with punctures.  None unless the solution is nonnegative and integral.
    std::optional<Domain> find_domain(const std::vector<int>& x, const std::vector<int>& y) const;
    bool unique() const;  // the system has full column rank
    int unknowns() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

std::optional<Domain> find_domain(const OvalConfig& cfg, const Arrangement& arr, const std::vector<int>& x,
                                  const std::vector<int>& y);

struct PathStats {
    std::int64_t memo_rows = 0;
    std::int64_t expansions = 0;
    std::int64_t prefilter_dropped = 0;  // nonzero entries without a domain
};

// Rows of the short differential by lazy expansion of the event-by-event
// cancellation on the long configuration.  The long complex is never built.
class PathEngine {
public:
    PathEngine(const LongConfig& lc, Ring ring);
    ~PathEngine();

    // Short generator (short point ids) -> row as (short point ids, coefficient).
    std::vector<std::pair<std::vector<int>, std::int64_t>> short_row(const std::vector<int>& short_pts);
    const PathStats& stats() const;
    void clear_memo();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Short complex on `table` (short generators) with rows from the path engine.
// With a solver, entries whose target has no domain are dropped and counted.
SparseComplex short_complex_via_paths(const LongConfig& lc, const OvalConfig& short_cfg, Ring ring,
                                      const GeneratorTable& table, const DomainSolver* prefilter = nullptr,
                                      PathStats* stats = nullptr);

}  // namespace hfk
