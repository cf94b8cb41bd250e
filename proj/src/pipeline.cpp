#include "hfk/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "hfk/domains.hpp"
#include "hfk/simplify.hpp"

namespace hfk {

const char* strategy_name(Strategy s) {
    switch (s) {
        case Strategy::Faithful: return "faithful";
        case Strategy::Fast: return "fast";
        case Strategy::Paths: return "paths";
    }
    return "?";
}

const char* mode_name(Mode m) {
    switch (m) {
        case Mode::Hfk: return "hfk";
        case Mode::Genus: return "genus";
        case Mode::Fibered: return "fibered";
        case Mode::Torsion: return "torsion";
    }
    return "?";
}

const char* pipeline_name(Pipeline p) { return p == Pipeline::Oval ? "oval" : "mos"; }
const char* ring_name(Ring r) { return r == Ring::Z ? "z" : "z2"; }

namespace {

void add_groups(HomologyResult& into, const HomologyResult& part) {
    for (auto& [g, e] : part.groups) into.groups[g] = e;
}

std::vector<int> support_of(const std::vector<std::pair<int, std::int64_t>>& census) {
    std::vector<int> s;
    for (auto& [a, c] : census)
        if (c > 0) s.push_back(a);
    return s;
}

std::set<int> choose_skip(const ComputeOptions& opt, const std::vector<std::pair<int, std::int64_t>>& census, int n) {
    if (opt.skip) return *opt.skip;
    if (opt.auto_skip && !opt.top_only) return auto_skip(census, n);
    return {};
}

HFKTable finish(const HomologyResult& h, const ComputeOptions& opt, const std::set<int>& skipped,
                const std::vector<int>& support, int n) {
    if (opt.top_only) return deconvolve_top(h, n, 0);
    return reconstruct_skipped(h, skipped, support, n);
}

}  // namespace

ComputeResult compute_mos(const GridDiagram& g, const ComputeOptions& opt) {
    ComputeResult r;
    SparseComplex bare = mos_complex(g, opt.ring, {}, false);
    std::map<int, std::int64_t> cnt;
    for (auto& gr : bare.grading) cnt[gr.a2]++;
    std::vector<std::pair<int, std::int64_t>> census(cnt.begin(), cnt.end());
    r.support = support_of(census);
    r.skipped = choose_skip(opt, census, g.n);
    std::set<int> drop = r.skipped;
    if (opt.top_only)
        for (int a : r.support)
            if (a < 0) drop.insert(a);
    SparseComplex c = mos_complex(g, opt.ring, drop);
    check_d_squared(c);
    r.generators = c.size();
    r.table = finish(homology(c), opt, r.skipped, r.support, g.n);
    return r;
}

ComputeResult compute_oval(const GridDiagram& g, const ComputeOptions& opt) {
    ComputeResult r;
    const int n = g.n;
    OvalConfig s = select_best_config(g);
    LongConfig lc = build_long_for(s);
    HomologyResult h;
    h.ring = opt.ring;
    if (opt.strategy == Strategy::Paths) {
        auto census = alexander_census(s);
        r.support = support_of(census);
        r.skipped = choose_skip(opt, census, n);
        GeneratorTable t = opt.top_only ? enumerate_high_alexander(s, -1) : enumerate_generators(s, r.skipped);
        SparseComplex c = short_complex_via_paths(lc, s, opt.ring, t);
        check_d_squared(c);
        r.generators = c.size();
        h = homology(c);
    } else {
        auto census = alexander_census(lc.config);
        r.support = support_of(census);
        r.skipped = choose_skip(opt, census, n);
        // one Alexander slice at a time keeps the long complex small
        std::vector<int> slices;
        for (int a : r.support)
            if (!r.skipped.count(a) && (!opt.top_only || a >= 0)) slices.push_back(a);
        bool faithful_ok = true;
        for (int a : slices) {
            GeneratorTable t = enumerate_generators_if(lc.config, [a](int x) { return x == a; });
            SparseComplex c = long_complex(lc.config, opt.ring, t);
            t = GeneratorTable{};
            check_d_squared(c);
            r.generators += c.size();
            if (opt.strategy == Strategy::Faithful && faithful_ok) {
                try {
                    c = faithful_reduce(c, lc, s);
                    check_d_squared(c);
                } catch (const Error& e) {
                    if (e.kind != ErrorKind::ScheduleAssertionFailed) throw;
                    faithful_ok = false;
                    r.warnings.push_back(std::string(e.what()) + "; continuing with fast reduction");
                }
            }
            add_groups(h, homology(c));
        }
    }
    r.table = finish(h, opt, r.skipped, r.support, n);
    return r;
}

// ---- Euler characteristic ----

LaurentPoly expected_euler(const LaurentPoly& delta, int n) {
    LaurentPoly p = delta;
    for (int i = 0; i < n - 1; ++i) {
        LaurentPoly q;
        for (auto [e, c] : p.coefficients) {
            q.add(e, c);
            q.add(e - 1, -c);
        }
        p = q;
    }
    return p;
}

bool equal_up_to_unit(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.coefficients.empty() || b.coefficients.empty()) return a.coefficients.empty() && b.coefficients.empty();
    if (a.coefficients.size() != b.coefficients.size()) return false;
    int shift = a.coefficients.begin()->first - b.coefficients.begin()->first;
    long long sign = a.coefficients.begin()->second == b.coefficients.begin()->second ? 1 : -1;
    for (auto [e, c] : b.coefficients)
        if (a.at(e + shift) != sign * c) return false;
    return true;
}

LaurentPoly mos_euler(const GridDiagram& g) {
    return euler_characteristic(mos_complex(g, Ring::Z2, {}, false));
}

LaurentPoly oval_euler(const OvalConfig& cfg) {
    LaurentPoly p;
    for (auto& [g, c] : graded_census(cfg)) {
        if (g.a2 % 2) throw std::logic_error("half-integral Alexander grading");
        p.add(g.a2 / 2, (g.m % 2 == 0) ? c : -c);
    }
    return p;
}

// ---- run ----

RunReport run(const RunConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    RunReport rep;
    rep.pipeline = cfg.pipeline;
    rep.strategy = cfg.strategy;
    rep.mode = cfg.mode;
    GridDiagram g;
    if (cfg.braid) {
        std::ostringstream os;
        os << "braid";
        for (int l : *cfg.braid) os << ' ' << l;
        rep.input = os.str();
        g = parse_braid(*cfg.braid);
    } else if (cfg.grid) {
        rep.input = "grid " + grid_str(*cfg.grid);
        g = *cfg.grid;
    } else if (cfg.grid_path) {
        rep.input = "grid file " + *cfg.grid_path;
        g = read_grid_file(*cfg.grid_path);
    } else {
        throw Error(ErrorKind::ParseError, "no input given");
    }
    validate(g);
    rep.n_input = g.n;
    if (cfg.simplify_budget > 0) g = minimize(g, {cfg.simplify_budget});
    rep.n = g.n;
    if (cfg.mode == Mode::Torsion && cfg.ring != Ring::Z)
        throw Error(ErrorKind::ParseError, "torsion mode needs integer coefficients");

    ComputeOptions opt;
    opt.ring = cfg.ring;
    opt.strategy = cfg.strategy;
    opt.auto_skip = cfg.auto_skip;
    opt.top_only = cfg.mode == Mode::Genus || cfg.mode == Mode::Fibered;
    opt.threads = cfg.threads;
    rep.partial = opt.top_only;

    ComputeResult res = cfg.pipeline == Pipeline::Oval ? compute_oval(g, opt) : compute_mos(g, opt);
    rep.table = res.table;
    rep.skipped = res.skipped;
    rep.generators = res.generators;
    rep.warnings = res.warnings;

    bool cross = cfg.crosscheck.value_or(g.n <= 7);
    if (cross) {
        ComputeOptions o2 = opt;
        o2.skip.reset();
        ComputeResult other = cfg.pipeline == Pipeline::Oval ? compute_mos(g, o2) : compute_oval(g, o2);
        if (!(other.table == res.table))
            throw Error(ErrorKind::CrosscheckFailed, "MOS and oval pipelines disagree");
        rep.crosschecked = true;
    }
    if (cfg.euler_check && g.n <= 8) {
        LaurentPoly want = expected_euler(alexander_oracle(g), g.n);
        LaurentPoly got = cfg.pipeline == Pipeline::Mos ? mos_euler(g) : oval_euler(build_long_for(select_best_config(g)).config);
        rep.euler_ok = equal_up_to_unit(got, want);
        if (!*rep.euler_ok) throw Error(ErrorKind::CrosscheckFailed, "Euler characteristic differs from the determinant");
    }
    if (cfg.dump_arrangement) {
        OvalConfig s = select_best_config(g);
        rep.arrangement_dump = dump_arrangement(s, build_arrangement(s));
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

// ---- reports ----

std::string format_group(const GroupEntry& e, Ring ring) {
    std::ostringstream os;
    const char* base = ring == Ring::Z ? "Z" : "F2";
    bool first = true;
    if (e.rank > 0) {
        os << base;
        if (e.rank > 1) os << '^' << e.rank;
        first = false;
    }
    for (auto f : e.torsion) {
        if (!first) os << " + ";
        os << "Z/" << f;
        first = false;
    }
    if (first) os << '0';
    return os.str();
}

std::string emit_report(const RunReport& r, Format f) {
    std::ostringstream os;
    const HFKTable& t = r.table;
    std::vector<std::pair<Grading, GroupEntry>> rows(t.groups.begin(), t.groups.end());
    std::sort(rows.begin(), rows.end(), [](auto& x, auto& y) {
        return x.first.a2 != y.first.a2 ? x.first.a2 > y.first.a2 : x.first.m > y.first.m;
    });
    if (f == Format::Machine) {
        os << "input: " << r.input << '\n';
        os << "n: " << r.n << '\n';
        os << "pipeline: " << pipeline_name(r.pipeline) << '\n';
        os << "ring: " << ring_name(t.ring) << '\n';
        os << "strategy: " << strategy_name(r.strategy) << '\n';
        os << "mode: " << mode_name(r.mode) << '\n';
        os << "partial: " << (r.partial ? "true" : "false") << '\n';
        for (auto& [g, e] : rows) {
            os << g.a2 / 2 << ' ' << g.m << ' ' << e.rank;
            for (auto x : e.torsion) os << ' ' << x;
            os << '\n';
        }
        os << "genus: " << t.genus << '\n';
        os << "fibered: " << (t.fibered ? "true" : "false") << '\n';
        os << "torsion_free: " << (t.torsion_free ? "true" : "false") << '\n';
        return os.str();
    }
    os << "knot: " << r.input << '\n';
    os << "grid: n=" << r.n;
    if (r.n != r.n_input) os << " (simplified from " << r.n_input << ")";
    os << ", pipeline " << pipeline_name(r.pipeline);
    if (r.pipeline == Pipeline::Oval) os << " (" << strategy_name(r.strategy) << ")";
    os << ", coefficients " << (t.ring == Ring::Z ? "Z" : "Z/2") << '\n';
    if (r.partial) os << "gradings A >= 0 only\n";
    std::vector<std::string> keys;
    size_t width = 0;
    for (auto& [g, e] : rows) {
        keys.push_back("(" + std::to_string(g.a2 / 2) + ", " + std::to_string(g.m) + "):");
        width = std::max(width, keys.back().size());
    }
    for (size_t i = 0; i < rows.size(); ++i)
        os << "  " << keys[i] << std::string(width - keys[i].size() + 1, ' ') << format_group(rows[i].second, t.ring) << '\n';
    os << "genus " << t.genus << ", fibered " << (t.fibered ? "yes" : "no");
    if (t.ring == Ring::Z && !r.partial) os << ", torsion free " << (t.torsion_free ? "yes" : "no");
    os << '\n';
    if (r.crosschecked) os << "crosscheck: MOS and oval pipelines agree\n";
    if (r.euler_ok) os << "euler characteristic: matches the determinant\n";
    for (auto& w : r.warnings) os << "warning: " << w << '\n';
    if (!r.arrangement_dump.empty()) os << r.arrangement_dump;
    return os.str();
}

ParsedReport parse_machine_report(const std::string& text) {
    ParsedReport p;
    std::istringstream in(text);
    std::string line;
    bool ring_seen = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon != std::string::npos) {
            std::string key = line.substr(0, colon), val = line.substr(colon + 1);
            if (!val.empty() && val[0] == ' ') val.erase(0, 1);
            p.header[key] = val;
            if (key == "ring") {
                if (val != "z" && val != "z2") throw Error(ErrorKind::ParseError, "bad ring: " + val);
                p.table.ring = val == "z" ? Ring::Z : Ring::Z2;
                ring_seen = true;
            }
            continue;
        }
        std::istringstream ls(line);
        long long a, m, rank;
        if (!(ls >> a >> m >> rank)) throw Error(ErrorKind::ParseError, "bad record: " + line);
        GroupEntry e;
        e.rank = rank;
        long long f;
        while (ls >> f) e.torsion.push_back(f);
        if (!ls.eof()) throw Error(ErrorKind::ParseError, "bad record: " + line);
        p.table.groups[{static_cast<int>(2 * a), static_cast<int>(m)}] = e;
    }
    if (!ring_seen) throw Error(ErrorKind::ParseError, "missing ring");
    auto flag = [&](const char* k) {
        auto it = p.header.find(k);
        if (it == p.header.end()) throw Error(ErrorKind::ParseError, std::string("missing ") + k);
        return it->second == "true";
    };
    auto it = p.header.find("genus");
    if (it == p.header.end()) throw Error(ErrorKind::ParseError, "missing genus");
    p.table.genus = std::stoi(it->second);
    p.table.fibered = flag("fibered");
    p.table.torsion_free = flag("torsion_free");
    return p;
}

}  // namespace hfk
