#pragma once

#include <array>
#include <string>
#include <vector>

#include "hfk/grid.hpp"

namespace hfk {

// Thin axis-aligned ovals, all coordinates in tenths of a grid unit.
// V_c occupies x in [10c+3, 10c+7]; H_r occupies y in [10r+4, 10r+6].
struct Oval {
    bool vertical = true;
    int line = 0;        // column (V) or row (H) of the grid
    int side_lo = 0;     // left side (V) or lower edge (H)
    int side_hi = 0;     // right side (V) or upper edge (H)
    int lo = 0, hi = 0;  // extent along the long axis
};

// Tag bit 0: upper H edge; bit 1: right V side.
struct OvalPoint {
    int v = 0, h = 0;  // indices into OvalConfig::vovals / hovals
    int tag = 0;
    FinePoint pos;
};

struct OvalConfig {
    GridDiagram g;  // the planar representative (cut applied)
    int col_shift = 0, row_shift = 0;
    int omitted_col = 0, omitted_row = 0;
    bool is_long = false;
    std::vector<Oval> vovals, hovals;  // ascending column / row
    std::vector<OvalPoint> points;
    std::vector<int> point_at;  // (v*(n-1)+h)*4+tag -> point id or -1
    std::vector<FinePoint> xpunct, opunct;

    int k() const { return g.n - 1; }  // ovals per direction
    int find_point(int v, int h, int tag) const { return point_at[(v * k() + h) * 4 + tag]; }
    int pair_multiplicity(int v, int h) const;
    // oval_order index: V ovals first, then H ovals
    int order_of_v(int v) const { return v; }
    int order_of_h(int h) const { return k() + h; }
};

struct ScheduleEvent {
    int time = 0;
    int p1 = 0, p2 = 0;  // long-configuration point ids; {p1} has the higher Maslov grading
};

struct Schedule {
    std::vector<ScheduleEvent> events;
    std::vector<int> survivor_map;  // short point id -> long point id
};

// True iff (c, r) carries a decoration of the cut grid and lies on its boundary,
// so that the shared puncture ends up in the unbounded region.
bool omission_valid(const GridDiagram& cut, int col, int row);

OvalConfig build_short_config(const GridDiagram& g, int col_shift, int row_shift, int omitted_col,
                              int omitted_row);

struct LongConfig {
    OvalConfig config;
    Schedule schedule;
};
LongConfig build_long_config(const GridDiagram& g, int col_shift, int row_shift, int omitted_col,
                             int omitted_row);
LongConfig build_long_for(const OvalConfig& short_config);

OvalConfig select_best_config(const GridDiagram& g);

int singleton_maslov(const OvalConfig& cfg, int point);

struct Arrangement {
    int piece_count = 0;
    int unbounded = 0;
    std::vector<std::vector<FinePoint>> piece_punctures;
    std::vector<int> corner_count;       // per piece, number of corner incidences
    std::vector<std::array<int, 4>> corners;  // per point: a1..a4 (NE, NW, SW, SE)
    std::vector<std::vector<int>> oval_pieces;  // per oval in oval order
    std::vector<int> puncture_piece;     // per puncture (X's then O's)
    // raster data for dumps and resolution checks
    std::vector<int> lines;              // refined coordinates
    std::vector<int> cell_piece;         // row-major, (lines.size()-1)^2
};

Arrangement build_arrangement(const OvalConfig& cfg, int refine = 1);

using Domain = std::vector<long long>;  // multiplicity per piece

std::vector<Domain> periodic_domains(const OvalConfig& cfg, const Arrangement& arr);
int corner_index(const Arrangement& arr, const Domain& d, int point);

std::string dump_arrangement(const OvalConfig& cfg, const Arrangement& arr);

}  // namespace hfk
