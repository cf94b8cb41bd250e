#pragma once

#include <cstdint>
#include <vector>

#include "hfk/grid.hpp"

namespace hfk {

struct SearchBudget {
    std::int64_t max_expansions = 100000;
};

struct SearchStats {
    std::int64_t expansions = 0;
    int restarts = 0;
};

// Representative of g's cyclic orbit whose serialization is the key.
GridDiagram canonical_form(const GridDiagram& g);

GridDiagram minimize(const GridDiagram& g, SearchBudget budget, SearchStats* stats = nullptr);

std::vector<GridDiagram> generalized_destabilize(const GridDiagram& g);

// Greedy generalized destabilization until the size reaches `target` or no
// move applies; falls back to a short minimize() search when stuck.
GridDiagram reduce_to(const GridDiagram& g, int target);

}  // namespace hfk
