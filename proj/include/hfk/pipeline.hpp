#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hfk/grid.hpp"
#include "hfk/reducer.hpp"

namespace hfk {

enum class Strategy { Faithful, Fast, Paths };
enum class Mode { Hfk, Genus, Fibered, Torsion };
enum class Format { Text, Machine };
enum class Pipeline { Oval, Mos };

const char* strategy_name(Strategy s);
const char* mode_name(Mode m);
const char* pipeline_name(Pipeline p);
const char* ring_name(Ring r);

struct ComputeOptions {
    Ring ring = Ring::Z;
    Strategy strategy = Strategy::Faithful;
    bool auto_skip = true;
    std::optional<std::set<int>> skip;  // explicit doubled Alexander gradings
    bool top_only = false;              // only the gradings A >= 0
    int threads = 0;
};

struct ComputeResult {
    HFKTable table;
    std::set<int> skipped;
    std::vector<int> support;       // doubled Alexander gradings carrying generators
    std::int64_t generators = 0;    // generators actually built
    std::vector<std::string> warnings;
};

ComputeResult compute_oval(const GridDiagram& g, const ComputeOptions& opt);
ComputeResult compute_mos(const GridDiagram& g, const ComputeOptions& opt);

// Graded Euler characteristic of the unreduced complexes against the
// determinant oracle: chi = Delta(t) (1 - t^-1)^(n-1) up to +-t^s.
LaurentPoly expected_euler(const LaurentPoly& delta, int n);
bool equal_up_to_unit(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mos_euler(const GridDiagram& g);
LaurentPoly oval_euler(const OvalConfig& cfg);

struct RunConfig {
    std::optional<std::vector<int>> braid;
    std::optional<std::string> grid_path;
    std::optional<GridDiagram> grid;
    Ring ring = Ring::Z;
    Mode mode = Mode::Hfk;
    Strategy strategy = Strategy::Faithful;
    Pipeline pipeline = Pipeline::Oval;
    int simplify_budget = 100000;
    bool auto_skip = true;
    std::optional<bool> crosscheck;  // default: on for n <= 7
    bool euler_check = true;
    Format format = Format::Text;
    bool dump_arrangement = false;
    int threads = 0;
};

struct RunReport {
    std::string input;
    int n_input = 0, n = 0;
    Pipeline pipeline = Pipeline::Oval;
    Strategy strategy = Strategy::Faithful;
    Mode mode = Mode::Hfk;
    HFKTable table;
    bool partial = false;  // only A >= 0 computed
    std::set<int> skipped;
    std::int64_t generators = 0;
    bool crosschecked = false;
    std::optional<bool> euler_ok;
    std::vector<std::string> warnings;
    std::string arrangement_dump;
    double seconds = 0;
};

RunReport run(const RunConfig& cfg);

std::string emit_report(const RunReport& r, Format f);
std::string format_group(const GroupEntry& e, Ring ring);

struct ParsedReport {
    std::map<std::string, std::string> header;
    HFKTable table;
};
ParsedReport parse_machine_report(const std::string& text);

}  // namespace hfk
