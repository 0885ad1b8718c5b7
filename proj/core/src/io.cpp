#include "halg/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "halg/error.hpp"

namespace halg {

namespace {

// ---------------------------------------------------------------------------
// Small string utilities
// ---------------------------------------------------------------------------

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

long long parse_ll(const std::string& s) {
    if (s.empty()) fail(Err::Parse, "empty integer literal");
    size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        fail(Err::Parse, "unreadable integer '" + s + "'");
    }
    if (pos != s.size()) fail(Err::Parse, "trailing characters in integer '" + s + "'");
    return v;
}

int parse_index(const std::string& s) {
    long long v = parse_ll(s);
    if (v < 0 || v > 1000000) fail(Err::Parse, "index '" + s + "' out of sane range");
    return static_cast<int>(v);
}

// Split on `delim` at parenthesis depth zero.
std::vector<std::string> split_top(const std::string& s, char delim) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : s) {
        if (ch == '(') ++depth;
        if (ch == ')') {
            --depth;
            if (depth < 0) fail(Err::Parse, "unbalanced ')' in '" + s + "'");
        }
        if (ch == delim && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (depth != 0) fail(Err::Parse, "unbalanced '(' in '" + s + "'");
    out.push_back(cur);
    return out;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

bool starts_with(const std::string& s, const std::string& p) {
    return s.size() >= p.size() && s.compare(0, p.size(), p) == 0;
}

// "name(inner)" -> inner, for a known prefix.
std::string call_body(const std::string& s, const std::string& name) {
    if (!starts_with(s, name + "(") || s.back() != ')')
        fail(Err::Parse, "malformed ring expression '" + s + "'");
    return s.substr(name.size() + 1, s.size() - name.size() - 2);
}

// ---------------------------------------------------------------------------
// Polynomial (series / extension) literals
// ---------------------------------------------------------------------------

bool is_power_of(const std::string& t, const std::string& var, int* deg) {
    if (t == var) {
        *deg = 1;
        return true;
    }
    if (starts_with(t, var + "^")) {
        std::string rest = t.substr(var.size() + 1);
        if (rest.empty()) return false;
        for (char ch : rest)
            if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
        *deg = parse_index(rest);
        return true;
    }
    return false;
}

RingElement parse_poly(const std::string& s, const RingPtr& R) {
    const int n = R->window;  // series window, or extension degree
    std::vector<RingElement> parts(static_cast<size_t>(n), RingElement::zero(R->base));
    if (s == "0") return RingElement::composite(R, parts);

    std::set<int> seen;
    for (const std::string& raw : split_top(s, '+')) {
        std::string term = trim(raw);
        if (term.empty()) fail(Err::Parse, "empty term in polynomial '" + s + "'");

        auto pieces = split_top(term, '*');
        std::string coeff_text, power_text;
        if (pieces.size() == 2) {
            coeff_text = trim(pieces[0]);
            power_text = trim(pieces[1]);
        } else if (pieces.size() == 1) {
            int d = 0;
            if (is_power_of(pieces[0], R->var, &d))
                power_text = pieces[0];
            else
                coeff_text = pieces[0];
        } else {
            fail(Err::Parse, "too many '*' in term '" + term + "'");
        }

        int deg = 0;
        if (!power_text.empty() && !is_power_of(power_text, R->var, &deg))
            fail(Err::Parse, "expected a power of '" + R->var + "' in term '" + term + "'");
        if (deg < 0 || deg >= n)
            fail(Err::Parse, "exponent " + std::to_string(deg) + " out of range in '" + term +
                                 "' (ring has " + std::to_string(n) + " coefficients)");
        if (!seen.insert(deg).second)
            fail(Err::Parse, "duplicate exponent " + std::to_string(deg) + " in '" + s + "'");

        RingElement c;
        if (coeff_text.empty()) {
            c = RingElement::one(R->base);
        } else {
            std::string inner = coeff_text;
            bool grouped = (R->base->kind == RingKind::Series || R->base->kind == RingKind::Extension);
            if (grouped) {
                if (inner.size() < 2 || inner.front() != '(' || inner.back() != ')')
                    fail(Err::Parse, "nested polynomial coefficient must be parenthesized in '" + term + "'");
                inner = inner.substr(1, inner.size() - 2);
            }
            c = parse_element(inner, R->base);
        }
        parts[static_cast<size_t>(deg)] = c;
    }
    return RingElement::composite(R, parts);
}

}  // namespace

// ---------------------------------------------------------------------------
// Ring expressions and coefficient literals
// ---------------------------------------------------------------------------

RingPtr parse_ring_expr(const std::string& text) {
    std::string s = trim(text);
    if (s.empty()) fail(Err::Parse, "empty ring expression");
    if (s == "Z") return ring_Z();
    if (s == "Q") return ring_Q();
    if (starts_with(s, "Z/")) {
        long long m = parse_ll(s.substr(2));
        if (m < 2) fail(Err::Parse, "modulus must be >= 2 in '" + s + "'");
        return ring_mod(m);
    }
    if (starts_with(s, "Zp(")) {
        auto args = split_top(call_body(s, "Zp"), ',');
        if (args.size() != 2) fail(Err::Parse, "Zp takes (prime, exponent): '" + s + "'");
        return ring_padic(parse_ll(trim(args[0])), static_cast<int>(parse_ll(trim(args[1]))));
    }
    if (starts_with(s, "series(")) {
        auto args = split_top(call_body(s, "series"), ';');
        if (args.size() != 3) fail(Err::Parse, "series takes (var; window; base): '" + s + "'");
        return ring_series(parse_ring_expr(args[2]), trim(args[0]),
                           static_cast<int>(parse_ll(trim(args[1]))));
    }
    if (starts_with(s, "prod(")) {
        auto args = split_top(call_body(s, "prod"), ';');
        std::vector<RingPtr> factors;
        factors.reserve(args.size());
        for (const auto& a : args) factors.push_back(parse_ring_expr(a));
        return ring_product(std::move(factors));
    }
    if (starts_with(s, "ext(")) {
        auto args = split_top(call_body(s, "ext"), ';');
        if (args.size() != 3) fail(Err::Parse, "ext takes (var; base; c0,c1,...): '" + s + "'");
        RingPtr base = parse_ring_expr(args[1]);
        std::vector<RingElement> mod;
        for (const auto& c : split_top(args[2], ',')) mod.push_back(parse_element(trim(c), base));
        return ring_ext(base, trim(args[0]), std::move(mod));
    }
    fail(Err::Parse, "unrecognized ring expression '" + s + "'");
}

RingElement parse_element(const std::string& text, const RingPtr& R) {
    std::string s = trim(text);
    if (s.empty()) fail(Err::Parse, "empty coefficient literal");
    switch (R->kind) {
        case RingKind::Integers:
        case RingKind::Modular:
        case RingKind::PAdic: return RingElement::from_int(R, parse_ll(s));
        case RingKind::Rationals: {
            auto parts = split_top(s, '/');
            if (parts.size() == 1) return RingElement::rational(R, parse_ll(parts[0]), 1);
            if (parts.size() == 2)
                return RingElement::rational(R, parse_ll(parts[0]), parse_ll(parts[1]));
            fail(Err::Parse, "too many '/' in rational literal '" + s + "'");
        }
        case RingKind::Product: {
            if (s.size() < 2 || s.front() != '(' || s.back() != ')')
                fail(Err::Parse, "product literal must be a tuple: '" + s + "'");
            auto parts = split_top(s.substr(1, s.size() - 2), ',');
            if (parts.size() != R->factors.size())
                fail(Err::Parse, "tuple arity " + std::to_string(parts.size()) + " != " +
                                     std::to_string(R->factors.size()) + " in '" + s + "'");
            std::vector<RingElement> es;
            es.reserve(parts.size());
            for (size_t i = 0; i < parts.size(); ++i)
                es.push_back(parse_element(parts[i], R->factors[i]));
            return RingElement::composite(R, std::move(es));
        }
        case RingKind::Series:
        case RingKind::Extension: return parse_poly(s, R);
    }
    fail(Err::Parse, "unhandled ring kind for literal '" + s + "'");
}

// ---------------------------------------------------------------------------
// File-level parsing
// ---------------------------------------------------------------------------

namespace {

[[noreturn]] void fail_at(Err kind, int line, const std::string& msg) {
    fail(kind, "line " + std::to_string(line) + ": " + msg);
}

template <typename F>
auto at_line(int line, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error& e) {
        fail(e.kind(), "line " + std::to_string(line) + ": " + e.what());
    }
}

void check_window(int line, int idx, int window, const char* what) {
    if (idx < 0 || idx >= window)
        fail_at(Err::WindowExceeded, line,
                std::string(what) + " index " + std::to_string(idx) + " out of window " +
                    std::to_string(window));
}

struct SrcLine {
    int no = 0;
    std::string text;
};

struct Section {
    int line = 0;
    std::vector<SrcLine> body;
};

// key = value; returns false when the line is not of that shape.
bool split_kv(const std::string& s, std::string* key, std::string* val) {
    if (s.find("->") != std::string::npos) return false;
    size_t eq = s.find('=');
    if (eq == std::string::npos) return false;
    *key = trim(s.substr(0, eq));
    *val = trim(s.substr(eq + 1));
    return true;
}

// "lhs -> rhs" split.
void split_arrow(int line, const std::string& s, std::string* lhs, std::string* rhs) {
    size_t pos = s.find("->");
    if (pos == std::string::npos) fail_at(Err::Parse, line, "expected '->' in entry '" + s + "'");
    *lhs = trim(s.substr(0, pos));
    *rhs = trim(s.substr(pos + 2));
}

Vec parse_vec(int line, const std::string& text, const RingPtr& base, int window) {
    Vec v(base);
    auto toks = split_ws(text);
    if (toks.empty()) fail_at(Err::Parse, line, "missing vector entries");
    if (toks.size() == 1 && toks[0] == "0") return v;
    for (const auto& tok : toks) {
        size_t c = tok.find(':');
        if (c == std::string::npos)
            fail_at(Err::Parse, line, "expected idx:coeff, got '" + tok + "'");
        int idx = at_line(line, [&] { return parse_index(tok.substr(0, c)); });
        check_window(line, idx, window, "basis");
        RingElement coeff = at_line(line, [&] { return parse_element(tok.substr(c + 1), base); });
        if (!v.coeff(idx).is_zero()) fail_at(Err::Parse, line, "duplicate index in vector");
        v.add(idx, coeff);
    }
    return v;
}

TensorVec parse_tensor(int line, const std::string& text, const RingPtr& base, int window) {
    TensorVec t(base);
    auto toks = split_ws(text);
    if (toks.empty()) fail_at(Err::Parse, line, "missing tensor entries");
    if (toks.size() == 1 && toks[0] == "0") return t;
    for (const auto& tok : toks) {
        if (tok.empty() || tok.front() != '(')
            fail_at(Err::Parse, line, "expected (left,right):coeff, got '" + tok + "'");
        size_t close = tok.find(')');
        if (close == std::string::npos || close + 1 >= tok.size() || tok[close + 1] != ':')
            fail_at(Err::Parse, line, "expected (left,right):coeff, got '" + tok + "'");
        auto pair = split_top(tok.substr(1, close - 1), ',');
        if (pair.size() != 2)
            fail_at(Err::Parse, line, "tensor index must be a pair in '" + tok + "'");
        int a = at_line(line, [&] { return parse_index(trim(pair[0])); });
        int b = at_line(line, [&] { return parse_index(trim(pair[1])); });
        check_window(line, a, window, "left tensor");
        check_window(line, b, window, "right tensor");
        RingElement coeff =
            at_line(line, [&] { return parse_element(tok.substr(close + 2), base); });
        Vec left(base);
        left.add(a, coeff);
        t += [&] {
            TensorVec one_term(base);
            one_term.add(left, b);
            return one_term;
        }();
    }
    return t;
}

const std::set<std::string> kSectionNames = {"ring", "basis", "unit",    "mult",    "etaR",
                                             "delta", "epsilon", "conj", "comodule"};

}  // namespace

DescriptionFile parse_description(std::istream& in) {
    std::map<std::string, Section> secs;
    std::string current;
    bool format_seen = false;
    std::string raw;
    int no = 0;

    while (std::getline(in, raw)) {
        ++no;
        size_t hash = raw.find('#');
        std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;

        if (!format_seen) {
            std::string key, val;
            if (!split_kv(line, &key, &val) || key != "format")
                fail_at(Err::Parse, no, "expected 'format = 1' as the first entry");
            if (val != "1") fail_at(Err::Parse, no, "unsupported format version '" + val + "'");
            format_seen = true;
            continue;
        }
        if (line.front() == '[') {
            if (line.back() != ']') fail_at(Err::Parse, no, "unterminated section header");
            std::string name = trim(line.substr(1, line.size() - 2));
            if (!kSectionNames.count(name))
                fail_at(Err::Parse, no, "unknown section [" + name + "]");
            if (secs.count(name)) fail_at(Err::Parse, no, "duplicate section [" + name + "]");
            secs[name].line = no;
            current = name;
            continue;
        }
        if (current.empty()) fail_at(Err::Parse, no, "entry before any section header");
        secs[current].body.push_back({no, line});
    }
    if (!format_seen) fail(Err::Parse, "empty description file");

    for (const char* required : {"ring", "basis", "unit", "mult", "delta", "epsilon"})
        if (!secs.count(required))
            fail(Err::Parse, std::string("missing required section [") + required + "]");

    // [ring]
    RingPtr base;
    {
        const Section& s = secs.at("ring");
        if (s.body.size() != 1) fail_at(Err::Parse, s.line, "[ring] needs exactly one entry");
        std::string key, val;
        if (!split_kv(s.body[0].text, &key, &val) || key != "ring")
            fail_at(Err::Parse, s.body[0].no, "expected 'ring = <expression>'");
        base = at_line(s.body[0].no, [&] { return parse_ring_expr(val); });
    }

    // [basis]
    int window = 0;
    std::vector<int> levels;
    bool selfdual = false;
    {
        const Section& s = secs.at("basis");
        for (const auto& ln : s.body) {
            std::string key, val;
            if (!split_kv(ln.text, &key, &val))
                fail_at(Err::Parse, ln.no, "expected 'key = value' in [basis]");
            if (key == "window") {
                window = at_line(ln.no, [&] { return parse_index(val); });
                if (window <= 0) fail_at(Err::Parse, ln.no, "window must be positive");
            } else if (key == "levels") {
                for (const auto& tok : split_ws(val))
                    levels.push_back(at_line(ln.no, [&] { return parse_index(tok); }));
            } else if (key == "selfdual") {
                if (val != "true" && val != "false")
                    fail_at(Err::Parse, ln.no, "selfdual must be true or false");
                selfdual = (val == "true");
            } else {
                fail_at(Err::Parse, ln.no, "unknown [basis] key '" + key + "'");
            }
        }
        if (window == 0) fail_at(Err::Parse, s.line, "[basis] must declare a window");
        if (levels.empty())
            for (int i = 0; i < window; ++i) levels.push_back(i);
        if (static_cast<int>(levels.size()) != window)
            fail_at(Err::Parse, s.line, "levels list must have one entry per basis index");
    }

    auto P = std::make_shared<Presentation>();
    P->base = base;
    P->window = window;
    P->levels = levels;
    P->etaR_is_etaL = selfdual;

    // [unit]
    {
        const Section& s = secs.at("unit");
        if (s.body.size() != 1) fail_at(Err::Parse, s.line, "[unit] needs exactly one entry");
        P->unit = parse_vec(s.body[0].no, s.body[0].text, base, window);
    }

    // [mult]
    for (const auto& ln : secs.at("mult").body) {
        std::string lhs, rhs;
        split_arrow(ln.no, ln.text, &lhs, &rhs);
        auto idx = split_ws(lhs);
        if (idx.size() != 2) fail_at(Err::Parse, ln.no, "expected 'i j -> ...' in [mult]");
        int i = at_line(ln.no, [&] { return parse_index(idx[0]); });
        int j = at_line(ln.no, [&] { return parse_index(idx[1]); });
        check_window(ln.no, i, window, "mult");
        check_window(ln.no, j, window, "mult");
        if (i > j) fail_at(Err::Parse, ln.no, "[mult] entries are stored with i <= j");
        if (P->mult.count({i, j})) fail_at(Err::Parse, ln.no, "duplicate [mult] entry");
        P->mult[{i, j}] = parse_vec(ln.no, rhs, base, window);
    }

    // [etaR]
    const int gens = canonical_generator_count(base);
    if (secs.count("etaR")) {
        if (selfdual)
            fail_at(Err::Parse, secs.at("etaR").line, "[etaR] is redundant with selfdual=true");
        P->etaR_gens.assign(static_cast<size_t>(gens), Vec(base));
        std::set<int> seen;
        for (const auto& ln : secs.at("etaR").body) {
            std::string lhs, rhs;
            split_arrow(ln.no, ln.text, &lhs, &rhs);
            int g = at_line(ln.no, [&] { return parse_index(trim(lhs)); });
            if (g >= gens)
                fail_at(Err::Parse, ln.no, "base ring has " + std::to_string(gens) +
                                               " canonical generators, got index " + lhs);
            if (!seen.insert(g).second) fail_at(Err::Parse, ln.no, "duplicate [etaR] entry");
            P->etaR_gens[static_cast<size_t>(g)] = parse_vec(ln.no, rhs, base, window);
        }
        if (static_cast<int>(seen.size()) != gens)
            fail_at(Err::Parse, secs.at("etaR").line, "[etaR] must cover every generator");
    } else if (!selfdual && gens > 0) {
        fail(Err::Parse, "missing [etaR] section (required unless selfdual=true)");
    }

    // Per-index sections: delta, epsilon, conj.
    auto gather = [&](const char* name, auto parse_rhs, auto* out) {
        std::set<int> seen;
        for (const auto& ln : secs.at(name).body) {
            std::string lhs, rhs;
            split_arrow(ln.no, ln.text, &lhs, &rhs);
            int i = at_line(ln.no, [&] { return parse_index(trim(lhs)); });
            check_window(ln.no, i, window, name);
            if (!seen.insert(i).second)
                fail_at(Err::Parse, ln.no, std::string("duplicate [") + name + "] entry");
            (*out)[static_cast<size_t>(i)] = parse_rhs(ln.no, rhs);
        }
        if (static_cast<int>(seen.size()) != window)
            fail_at(Err::Parse, secs.at(name).line,
                    std::string("[") + name + "] must cover every basis index");
    };

    P->delta.assign(static_cast<size_t>(window), TensorVec(base));
    gather("delta", [&](int no, const std::string& rhs) { return parse_tensor(no, rhs, base, window); },
           &P->delta);

    P->epsilon.assign(static_cast<size_t>(window), RingElement::zero(base));
    gather("epsilon",
           [&](int no, const std::string& rhs) {
               return at_line(no, [&] { return parse_element(rhs, base); });
           },
           &P->epsilon);

    if (secs.count("conj")) {
        P->conj.assign(static_cast<size_t>(window), Vec(base));
        gather("conj", [&](int no, const std::string& rhs) { return parse_vec(no, rhs, base, window); },
               &P->conj);
    } else if (selfdual) {
        P->conj = derive_conj(*P);
    } else {
        fail(Err::Parse, "missing [conj] section (required unless selfdual=true)");
    }

    P->validate_shape();
    DescriptionFile out;
    out.pres = P;

    // [comodule]
    if (secs.count("comodule")) {
        const Section& s = secs.at("comodule");
        Comodule M;
        M.pres = P;
        for (const auto& ln : s.body) {
            std::string key, val;
            if (split_kv(ln.text, &key, &val)) {
                if (key != "rank") fail_at(Err::Parse, ln.no, "unknown [comodule] key '" + key + "'");
                M.rank = at_line(ln.no, [&] { return parse_index(val); });
                if (M.rank <= 0) fail_at(Err::Parse, ln.no, "rank must be positive");
                M.psi.assign(static_cast<size_t>(M.rank), {});
                continue;
            }
            if (M.rank == 0) fail_at(Err::Parse, ln.no, "[comodule] rows before 'rank ='");
            std::string lhs, rhs;
            split_arrow(ln.no, ln.text, &lhs, &rhs);
            auto idx = split_ws(lhs);
            if (idx.size() != 2) fail_at(Err::Parse, ln.no, "expected 's t -> ...' in [comodule]");
            int ss = at_line(ln.no, [&] { return parse_index(idx[0]); });
            int tt = at_line(ln.no, [&] { return parse_index(idx[1]); });
            if (ss >= M.rank || tt >= M.rank)
                fail_at(Err::Parse, ln.no, "module index out of rank " + std::to_string(M.rank));
            if (M.psi[static_cast<size_t>(ss)].count(tt))
                fail_at(Err::Parse, ln.no, "duplicate [comodule] row");
            Vec g = parse_vec(ln.no, rhs, base, window);
            if (!g.is_zero()) M.psi[static_cast<size_t>(ss)][tt] = g;
        }
        if (M.rank == 0) fail_at(Err::Parse, s.line, "[comodule] must declare a rank");
        out.comodule = std::move(M);
    }
    return out;
}

DescriptionFile parse_description_text(const std::string& text) {
    std::istringstream is(text);
    return parse_description(is);
}

DescriptionFile load_description(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Err::Parse, "cannot open description file '" + path + "'");
    return parse_description(in);
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

namespace {

std::string vec_str(const Vec& v) {
    if (v.is_zero()) return "0";
    std::string out;
    for (const auto& [i, c] : v.entries()) {
        if (!out.empty()) out += " ";
        out += std::to_string(i) + ":" + c.str();
    }
    return out;
}

std::string tensor_str(const TensorVec& t) {
    if (t.is_zero()) return "0";
    std::string out;
    for (const auto& [j, left] : t.parts())
        for (const auto& [a, c] : left.entries()) {
            if (!out.empty()) out += " ";
            out += "(" + std::to_string(a) + "," + std::to_string(j) + "):" + c.str();
        }
    return out;
}

}  // namespace

std::string serialize_description(const DescriptionFile& f) {
    const Presentation& P = *f.pres;
    std::ostringstream o;
    o << "format = 1\n\n[ring]\nring = " << ring_str(P.base) << "\n\n[basis]\nwindow = "
      << P.window << "\nlevels =";
    for (int l : P.levels) o << " " << l;
    o << "\n";
    if (P.etaR_is_etaL) o << "selfdual = true\n";
    o << "\n[unit]\n" << vec_str(P.unit) << "\n\n[mult]\n";
    for (const auto& [ij, v] : P.mult)
        o << ij.first << " " << ij.second << " -> " << vec_str(v) << "\n";
    if (!P.etaR_is_etaL && !P.etaR_gens.empty()) {
        o << "\n[etaR]\n";
        for (size_t g = 0; g < P.etaR_gens.size(); ++g)
            o << g << " -> " << vec_str(P.etaR_gens[g]) << "\n";
    }
    o << "\n[delta]\n";
    for (int i = 0; i < P.window; ++i)
        o << i << " -> " << tensor_str(P.delta[static_cast<size_t>(i)]) << "\n";
    o << "\n[epsilon]\n";
    for (int i = 0; i < P.window; ++i)
        o << i << " -> " << P.epsilon[static_cast<size_t>(i)].str() << "\n";
    o << "\n[conj]\n";
    for (int i = 0; i < P.window; ++i)
        o << i << " -> " << vec_str(P.conj[static_cast<size_t>(i)]) << "\n";
    if (f.comodule) {
        const Comodule& M = *f.comodule;
        o << "\n[comodule]\nrank = " << M.rank << "\n";
        for (int s = 0; s < M.rank; ++s)
            for (const auto& [t, g] : M.psi[static_cast<size_t>(s)])
                if (!g.is_zero()) o << s << " " << t << " -> " << vec_str(g) << "\n";
    }
    return o.str();
}

std::string serialize_presentation(const PresPtr& P) {
    DescriptionFile f;
    f.pres = P;
    return serialize_description(f);
}

// ---------------------------------------------------------------------------
// Structural equality
// ---------------------------------------------------------------------------

bool presentation_equal(const Presentation& a, const Presentation& b) {
    if (ring_str(a.base) != ring_str(b.base)) return false;
    if (a.window != b.window || a.levels != b.levels) return false;
    if (a.unit != b.unit) return false;
    if (a.mult.size() != b.mult.size()) return false;
    for (const auto& [ij, v] : a.mult) {
        auto it = b.mult.find(ij);
        if (it == b.mult.end() || it->second != v) return false;
    }
    if (a.etaR_is_etaL != b.etaR_is_etaL) return false;
    if (!a.etaR_is_etaL && a.etaR_gens != b.etaR_gens) return false;
    if (a.delta != b.delta || a.epsilon != b.epsilon || a.conj != b.conj) return false;
    return true;
}

bool description_equal(const DescriptionFile& a, const DescriptionFile& b) {
    if (!presentation_equal(*a.pres, *b.pres)) return false;
    if (a.comodule.has_value() != b.comodule.has_value()) return false;
    if (!a.comodule) return true;
    const Comodule& M = *a.comodule;
    const Comodule& N = *b.comodule;
    if (M.rank != N.rank) return false;
    for (int s = 0; s < M.rank; ++s) {
        const auto& ma = M.psi[static_cast<size_t>(s)];
        const auto& mb = N.psi[static_cast<size_t>(s)];
        if (ma.size() != mb.size()) return false;
        for (const auto& [t, g] : ma) {
            auto it = mb.find(t);
            if (it == mb.end() || it->second != g) return false;
        }
    }
    return true;
}

}  // namespace halg
