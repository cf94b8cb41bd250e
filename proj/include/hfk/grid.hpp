#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hfk {

enum class ErrorKind {
    EmptyWord,
    MultiComponentClosure,
    NotPermutation,
    CoincidentDecorations,
    MultiComponent,
    TooSmall,
    IllegalCastling,
    DegenerateDeterminant,
    PointOnDiagram,
    InvalidOmission,
    BoundarySquareNonzero,
    NonUnitPivot,
    ScheduleAssertionFailed,
    InconsistentTensor,
    UnderdeterminedSkip,
    ParseError,
    CrosscheckFailed,
    CoefficientOverflow,
};

const char* error_name(ErrorKind k);

struct Error : std::runtime_error {
    ErrorKind kind;
    Error(ErrorKind k, const std::string& what);
};

struct GridDiagram {
    int n = 0;
    std::vector<int> xs;  // xs[c] = row of the X in column c
    std::vector<int> os;  // os[c] = row of the O in column c

    bool operator==(const GridDiagram&) const = default;
};

enum class Axis { Rows, Cols };

// Points in tenths of a grid unit. Punctures sit at (10c+5, 10r+5).
struct FinePoint {
    int x = 0, y = 0;
    bool operator==(const FinePoint&) const = default;
    auto operator<=>(const FinePoint&) const = default;
};

struct LaurentPoly {
    std::map<int, long long> coefficients;  // exponent -> coefficient, no zeros

    bool operator==(const LaurentPoly&) const = default;
    long long at(int e) const;
    void add(int e, long long c);
    std::string str() const;
};

void validate(const GridDiagram& g);
bool is_valid(const GridDiagram& g);
GridDiagram make_grid(std::vector<int> xs, std::vector<int> os);

GridDiagram parse_braid(const std::vector<int>& word);

GridDiagram cyclic_move(const GridDiagram& g, Axis axis, int amount);
bool castling_legal(const GridDiagram& g, Axis axis, int index);
GridDiagram castling_move(const GridDiagram& g, Axis axis, int index);
std::vector<GridDiagram> destabilize(const GridDiagram& g);

// Split the line `line` (along `axis`) in two and insert a new transverse
// line at position `at` (0..n). `variant` picks which half keeps the O.
GridDiagram stabilize(const GridDiagram& g, Axis axis, int line, int at, int variant);

GridDiagram transpose(const GridDiagram& g);

using GridKey = std::vector<int>;
GridKey canonical_key(const GridDiagram& g);

LaurentPoly alexander_oracle(const GridDiagram& g);

// Counterclockwise winding number of the oriented projection around p.
int winding_number(const GridDiagram& g, FinePoint p);
// Sum of the winding numbers of the four quadrants around p (4 x average).
int winding_quadrant_sum(const GridDiagram& g, FinePoint p);

GridDiagram read_grid_file(const std::string& path);
GridDiagram parse_grid_text(const std::string& text);
std::string format_grid_text(const GridDiagram& g);
std::vector<int> read_braid_file(const std::string& path);
std::vector<int> parse_braid_text(const std::string& text);

std::string grid_str(const GridDiagram& g);

}  // namespace hfk
