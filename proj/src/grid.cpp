#include "hfk/grid.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "hfk/simplify.hpp"

namespace hfk {

using boost::multiprecision::cpp_int;

const char* error_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::EmptyWord: return "EmptyWord";
        case ErrorKind::MultiComponentClosure: return "MultiComponentClosure";
        case ErrorKind::NotPermutation: return "NotPermutation";
        case ErrorKind::CoincidentDecorations: return "CoincidentDecorations";
        case ErrorKind::MultiComponent: return "MultiComponent";
        case ErrorKind::TooSmall: return "TooSmall";
        case ErrorKind::IllegalCastling: return "IllegalCastling";
        case ErrorKind::DegenerateDeterminant: return "DegenerateDeterminant";
        case ErrorKind::PointOnDiagram: return "PointOnDiagram";
        case ErrorKind::InvalidOmission: return "InvalidOmission";
        case ErrorKind::BoundarySquareNonzero: return "BoundarySquareNonzero";
        case ErrorKind::NonUnitPivot: return "NonUnitPivot";
        case ErrorKind::ScheduleAssertionFailed: return "ScheduleAssertionFailed";
        case ErrorKind::InconsistentTensor: return "InconsistentTensor";
        case ErrorKind::UnderdeterminedSkip: return "UnderdeterminedSkip";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::CrosscheckFailed: return "CrosscheckFailed";
        case ErrorKind::CoefficientOverflow: return "CoefficientOverflow";
    }
    return "Unknown";
}

Error::Error(ErrorKind k, const std::string& what)
    : std::runtime_error(std::string(error_name(k)) + ": " + what), kind(k) {}

long long LaurentPoly::at(int e) const {
    auto it = coefficients.find(e);
    return it == coefficients.end() ? 0 : it->second;
}

void LaurentPoly::add(int e, long long c) {
    long long v = at(e) + c;
    if (v == 0)
        coefficients.erase(e);
    else
        coefficients[e] = v;
}

std::string LaurentPoly::str() const {
    if (coefficients.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
        long long c = it->second;
        int e = it->first;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        long long a = c < 0 ? -c : c;
        if (a != 1 || e == 0) os << a;
        if (e != 0) {
            os << "t";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

namespace {

std::vector<int> inverse(const std::vector<int>& p) {
    std::vector<int> inv(p.size());
    for (size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
    return inv;
}

bool is_perm(const std::vector<int>& p, int n) {
    if (static_cast<int>(p.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int v : p) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

int mod(int a, int n) { return ((a % n) + n) % n; }

int component_count(const GridDiagram& g) {
    auto xinv = inverse(g.xs);
    std::vector<char> seen(g.n, 0);
    int comps = 0;
    for (int s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        ++comps;
        int c = s;
        while (!seen[c]) {
            seen[c] = 1;
            c = xinv[g.os[c]];  // leave column c at its O, travel the row to the X
        }
    }
    return comps;
}

}  // namespace

void validate(const GridDiagram& g) {
    if (g.n < 2) throw Error(ErrorKind::TooSmall, "grid size below 2");
    if (!is_perm(g.xs, g.n) || !is_perm(g.os, g.n))
        throw Error(ErrorKind::NotPermutation, "X or O rows do not form a permutation");
    for (int c = 0; c < g.n; ++c)
        if (g.xs[c] == g.os[c])
            throw Error(ErrorKind::CoincidentDecorations, "column " + std::to_string(c));
    if (component_count(g) != 1) throw Error(ErrorKind::MultiComponent, "diagram is a link");
}

bool is_valid(const GridDiagram& g) {
    try {
        validate(g);
        return true;
    } catch (const Error&) {
        return false;
    }
}

GridDiagram make_grid(std::vector<int> xs, std::vector<int> os) {
    GridDiagram g;
    g.n = static_cast<int>(xs.size());
    g.xs = std::move(xs);
    g.os = std::move(os);
    return g;
}

std::string grid_str(const GridDiagram& g) {
    std::ostringstream os;
    os << "n=" << g.n << " X:";
    for (int v : g.xs) os << ' ' << v;
    os << " O:";
    for (int v : g.os) os << ' ' << v;
    return os.str();
}

// Braid closure as a rectilinear diagram: strands run upward as vertical
// pieces, each crossing is a horizontal jog of the under-strand, and each
// closing strand loops around the right side.  Size 2s+L, then destabilized.
GridDiagram parse_braid(const std::vector<int>& word) {
    if (word.empty()) throw Error(ErrorKind::EmptyWord, "empty braid word");
    int s = 0;
    for (int l : word) {
        if (l == 0) throw Error(ErrorKind::ParseError, "zero letter in braid word");
        s = std::max(s, std::abs(l) + 1);
    }
    const int L = static_cast<int>(word.size());
    struct Piece {
        int start = -1, end = -1;
    };
    std::vector<Piece> pieces;
    std::vector<int> order;  // left-to-right column order of piece ids
    std::vector<int> pos(s);
    for (int p = 0; p < s; ++p) {
        pieces.push_back({p, -1});
        order.push_back(p);
        pos[p] = p;
    }
    auto insert_after = [&](int after, int id) {
        auto it = std::find(order.begin(), order.end(), after);
        order.insert(it + 1, id);
    };
    auto insert_before = [&](int before, int id) {
        auto it = std::find(order.begin(), order.end(), before);
        order.insert(it, id);
    };
    for (int k = 0; k < L; ++k) {
        int i = std::abs(word[k]);
        int row = s + k;
        int left = pos[i - 1], right = pos[i];
        int id = static_cast<int>(pieces.size());
        pieces.push_back({row, -1});
        // positive letters give positive crossings (vertical strands pass over)
        if (word[k] < 0) {
            pieces[left].end = row;
            insert_after(right, id);
            pos[i - 1] = right;
            pos[i] = id;
        } else {
            pieces[right].end = row;
            insert_before(left, id);
            pos[i - 1] = id;
            pos[i] = left;
        }
    }
    const int top = 2 * s + L - 1;
    for (int p = s - 1; p >= 0; --p) {
        int yrow = top - p;
        pieces[pos[p]].end = yrow;
        int id = static_cast<int>(pieces.size());
        pieces.push_back({yrow, p});  // closing column runs down to the bottom row of p
        order.push_back(id);
    }
    std::vector<int> xs, os;
    for (int id : order) {
        xs.push_back(pieces[id].start);
        os.push_back(pieces[id].end);
    }
    GridDiagram g = make_grid(xs, os);
    if (component_count(g) != 1)
        throw Error(ErrorKind::MultiComponentClosure, "braid closure has several components");
    validate(g);
    return reduce_to(g, s + L);
}

GridDiagram cyclic_move(const GridDiagram& g, Axis axis, int amount) {
    GridDiagram r = g;
    int n = g.n;
    if (axis == Axis::Rows) {
        for (int c = 0; c < n; ++c) {
            r.xs[c] = mod(g.xs[c] + amount, n);
            r.os[c] = mod(g.os[c] + amount, n);
        }
    } else {
        for (int c = 0; c < n; ++c) {
            int d = mod(c + amount, n);
            r.xs[d] = g.xs[c];
            r.os[d] = g.os[c];
        }
    }
    return r;
}

GridDiagram transpose(const GridDiagram& g) {
    GridDiagram t = g;
    for (int c = 0; c < g.n; ++c) {
        t.xs[g.xs[c]] = c;
        t.os[g.os[c]] = c;
    }
    return t;
}

bool castling_legal(const GridDiagram& g, Axis axis, int index) {
    if (index < 0 || index + 1 >= g.n) return false;
    if (axis == Axis::Rows) return castling_legal(transpose(g), Axis::Cols, index);
    int a1 = std::min(g.xs[index], g.os[index]), a2 = std::max(g.xs[index], g.os[index]);
    int b1 = std::min(g.xs[index + 1], g.os[index + 1]), b2 = std::max(g.xs[index + 1], g.os[index + 1]);
    if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) return false;
    bool disjoint = a2 < b1 || b2 < a1;
    bool nested = (a1 < b1 && b2 < a2) || (b1 < a1 && a2 < b2);
    return disjoint || nested;
}

GridDiagram castling_move(const GridDiagram& g, Axis axis, int index) {
    if (!castling_legal(g, axis, index))
        throw Error(ErrorKind::IllegalCastling, "lines " + std::to_string(index) + "," +
                                                    std::to_string(index + 1));
    GridDiagram r = g;
    if (axis == Axis::Cols) {
        std::swap(r.xs[index], r.xs[index + 1]);
        std::swap(r.os[index], r.os[index + 1]);
    } else {
        for (int c = 0; c < g.n; ++c) {
            for (int* v : {&r.xs[c], &r.os[c]}) {
                if (*v == index) *v = index + 1;
                else if (*v == index + 1) *v = index;
            }
        }
    }
    return r;
}

namespace {

// Delete column c whose decorations sit in rows lo and lo+1; merge those rows.
GridDiagram merge_rows_at(const GridDiagram& g, int c) {
    int lo = std::min(g.xs[c], g.os[c]);
    GridDiagram r;
    r.n = g.n - 1;
    for (int k = 0; k < g.n; ++k) {
        if (k == c) continue;
        r.xs.push_back(g.xs[k] > lo ? g.xs[k] - 1 : g.xs[k]);
        r.os.push_back(g.os[k] > lo ? g.os[k] - 1 : g.os[k]);
    }
    return r;
}

std::vector<GridDiagram> destabilize_cols(const GridDiagram& g) {
    std::vector<GridDiagram> out;
    if (g.n < 3) return out;
    for (int c = 0; c < g.n; ++c) {
        int d = std::abs(g.xs[c] - g.os[c]);
        GridDiagram r;
        if (d == 1)
            r = merge_rows_at(g, c);
        else if (d == g.n - 1)
            r = merge_rows_at(cyclic_move(g, Axis::Rows, 1), c);
        else
            continue;
        if (is_valid(r)) out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

std::vector<GridDiagram> destabilize(const GridDiagram& g) {
    auto out = destabilize_cols(g);
    for (auto& t : destabilize_cols(transpose(g))) out.push_back(transpose(t));
    return out;
}

GridDiagram stabilize(const GridDiagram& g, Axis axis, int line, int at, int variant) {
    if (axis == Axis::Cols) return transpose(stabilize(transpose(g), Axis::Rows, line, at, variant));
    auto xinv = inverse(g.xs);
    auto oinv = inverse(g.os);
    int a = oinv[line], b = xinv[line];
    GridDiagram r;
    r.n = g.n + 1;
    auto shift_row = [&](int v) { return v > line ? v + 1 : v; };
    for (int k = 0; k <= g.n; ++k) {
        if (k == at) {
            r.xs.push_back(variant == 0 ? line : line + 1);
            r.os.push_back(variant == 0 ? line + 1 : line);
        }
        if (k == g.n) break;
        int x = shift_row(g.xs[k]), o = shift_row(g.os[k]);
        if (variant == 0 && k == b) x = line + 1;
        if (variant == 1 && k == a) o = line + 1;
        r.xs.push_back(x);
        r.os.push_back(o);
    }
    return r;
}

GridKey canonical_key(const GridDiagram& g) {
    const int n = g.n;
    GridKey best;
    GridKey cur(2 * n + 1);
    cur[0] = n;
    for (int dc = 0; dc < n; ++dc) {
        for (int dr = 0; dr < n; ++dr) {
            for (int c = 0; c < n; ++c) {
                int d = (c + dc) % n;
                cur[1 + d] = (g.xs[c] + dr) % n;
                cur[1 + n + d] = (g.os[c] + dr) % n;
            }
            if (best.empty() || cur < best) best = cur;
        }
    }
    return best;
}

// ---- winding numbers ----

namespace {

int fmod10(int v) { return ((v % 10) + 10) % 10; }

bool on_knot(const GridDiagram& g, FinePoint p) {
    auto xinv = inverse(g.xs);
    auto oinv = inverse(g.os);
    if (fmod10(p.x) == 5) {
        int c = (p.x - 5) / 10;
        if (p.x >= 5 && c < g.n) {
            int lo = 10 * std::min(g.xs[c], g.os[c]) + 5, hi = 10 * std::max(g.xs[c], g.os[c]) + 5;
            if (p.y >= lo && p.y <= hi) return true;
        }
    }
    if (fmod10(p.y) == 5) {
        int r = (p.y - 5) / 10;
        if (p.y >= 5 && r < g.n) {
            int lo = 10 * std::min(xinv[r], oinv[r]) + 5, hi = 10 * std::max(xinv[r], oinv[r]) + 5;
            if (p.x >= lo && p.x <= hi) return true;
        }
    }
    return false;
}

// Assumes p lies on no grid line of the knot (coordinates not 5 mod 10).
int raw_winding(const GridDiagram& g, int px, int py) {
    int w = 0;
    for (int c = 0; c < g.n; ++c) {
        int x = 10 * c + 5;
        if (x <= px) continue;
        int y0 = 10 * g.xs[c] + 5, y1 = 10 * g.os[c] + 5;
        if (py > std::min(y0, y1) && py < std::max(y0, y1)) w += (y1 > y0) ? 1 : -1;
    }
    return w;
}

}  // namespace

int winding_number(const GridDiagram& g, FinePoint p) {
    if (on_knot(g, p)) throw Error(ErrorKind::PointOnDiagram, "point lies on the projection");
    int px = p.x, py = p.y;
    if (fmod10(px) == 5) ++px;
    if (fmod10(py) == 5) ++py;
    return raw_winding(g, px, py);
}

int winding_quadrant_sum(const GridDiagram& g, FinePoint p) {
    int s = 0;
    for (int dx : {-1, 1})
        for (int dy : {-1, 1}) s += winding_number(g, {p.x + dx, p.y + dy});
    return s;
}

// ---- determinant oracle ----

namespace {

using Poly = std::vector<cpp_int>;  // index = exponent

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

// Exact division; throws if the remainder is nonzero.
Poly divexact(Poly a, const Poly& b) {
    trim(a);
    if (a.empty()) return {};
    if (b.empty()) throw std::logic_error("division by zero polynomial");
    if (a.size() < b.size()) throw std::logic_error("inexact polynomial division");
    Poly q(a.size() - b.size() + 1);
    for (size_t k = q.size(); k-- > 0;) {
        cpp_int lead = a[k + b.size() - 1];
        if (lead % b.back() != 0) throw std::logic_error("inexact polynomial division");
        cpp_int f = lead / b.back();
        q[k] = f;
        for (size_t j = 0; j < b.size(); ++j) a[k + j] -= f * b[j];
    }
    trim(a);
    if (!a.empty()) throw std::logic_error("inexact polynomial division");
    trim(q);
    return q;
}

Poly bareiss_det(std::vector<std::vector<Poly>> m) {
    const size_t n = m.size();
    Poly prev{1};
    int sign = 1;
    for (size_t k = 0; k < n; ++k) {
        if (m[k][k].empty()) {
            size_t s = k + 1;
            while (s < n && m[s][k].empty()) ++s;
            if (s == n) return {};
            std::swap(m[k], m[s]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = divexact(sub(mul(m[i][j], m[k][k]), mul(m[i][k], m[k][j])), prev);
            m[i][k].clear();
        }
        prev = m[k][k];
    }
    Poly d = m[n - 1][n - 1];
    if (sign < 0)
        for (auto& c : d) c = -c;
    return d;
}

}  // namespace

LaurentPoly alexander_oracle(const GridDiagram& g) {
    validate(g);
    const int n = g.n;
    std::vector<std::vector<int>> w(n, std::vector<int>(n));
    int wmin = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            w[i][j] = winding_number(g, {10 * i, 10 * j});
            wmin = std::min(wmin, w[i][j]);
        }
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Poly p(w[i][j] - wmin + 1);
            p.back() = 1;
            m[i][j] = p;
        }
    Poly d = bareiss_det(m);
    if (d.empty()) throw Error(ErrorKind::DegenerateDeterminant, "determinant vanishes");
    Poly one_minus_t{1, -1};
    for (int k = 0; k < n - 1; ++k) {
        try {
            d = divexact(d, one_minus_t);
        } catch (const std::logic_error&) {
            throw Error(ErrorKind::DegenerateDeterminant, "determinant not divisible by (1-t)^(n-1)");
        }
    }
    int lo = 0;
    while (lo < static_cast<int>(d.size()) && d[lo] == 0) ++lo;
    int hi = static_cast<int>(d.size()) - 1;
    if ((lo + hi) % 2 != 0) throw Error(ErrorKind::DegenerateDeterminant, "asymmetric polynomial");
    int centre = (lo + hi) / 2;
    cpp_int at1 = 0;
    for (auto& c : d) at1 += c;
    if (at1 != 1 && at1 != -1) throw Error(ErrorKind::DegenerateDeterminant, "P(1) is not a unit");
    LaurentPoly out;
    for (int e = lo; e <= hi; ++e) {
        if (d[e] == 0) continue;
        cpp_int c = at1 < 0 ? cpp_int(-d[e]) : d[e];
        out.add(e - centre, c.convert_to<long long>());
    }
    for (auto& [e, c] : out.coefficients)
        if (out.at(-e) != c) throw Error(ErrorKind::DegenerateDeterminant, "asymmetric polynomial");
    return out;
}

// ---- text formats ----

GridDiagram parse_grid_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    std::vector<int> xs, os;
    auto read_list = [](const std::string& rest) {
        std::istringstream ls(rest);
        std::vector<int> v;
        int a;
        while (ls >> a) v.push_back(a);
        if (!ls.eof()) throw Error(ErrorKind::ParseError, "bad row list: " + rest);
        return v;
    };
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        line = line.substr(first);
        if (n < 0) {
            try {
                n = std::stoi(line);
            } catch (const std::exception&) {
                throw Error(ErrorKind::ParseError, "expected grid size, got: " + line);
            }
        } else if (line.rfind("X:", 0) == 0) {
            xs = read_list(line.substr(2));
        } else if (line.rfind("O:", 0) == 0) {
            os = read_list(line.substr(2));
        } else {
            throw Error(ErrorKind::ParseError, "unexpected line: " + line);
        }
    }
    if (n < 0 || static_cast<int>(xs.size()) != n || static_cast<int>(os.size()) != n)
        throw Error(ErrorKind::ParseError, "grid file needs n, X: and O: lines of length n");
    GridDiagram g = make_grid(xs, os);
    validate(g);
    return g;
}

std::string format_grid_text(const GridDiagram& g) {
    std::ostringstream os;
    os << g.n << "\nX:";
    for (int v : g.xs) os << ' ' << v;
    os << "\nO:";
    for (int v : g.os) os << ' ' << v;
    os << '\n';
    return os.str();
}

static std::string slurp(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error(ErrorKind::ParseError, "cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

GridDiagram read_grid_file(const std::string& path) { return parse_grid_text(slurp(path)); }

std::vector<int> parse_braid_text(const std::string& text) {
    std::string t = text;
    for (char& ch : t)
        if (ch == ',' || ch == '[' || ch == ']') ch = ' ';
    std::istringstream in(t);
    std::vector<int> w;
    std::string tok;
    while (in >> tok) {
        try {
            size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            w.push_back(v);
        } catch (const std::exception&) {
            throw Error(ErrorKind::ParseError, "bad braid letter: " + tok);
        }
    }
    return w;
}

std::vector<int> read_braid_file(const std::string& path) { return parse_braid_text(slurp(path)); }

}  // namespace hfk
