#pragma once

#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "derived.hpp"

namespace yw {

/// Malformed input, with the source name and 1-based line.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& source, std::size_t line, const std::string& msg)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " + msg), line_(line)
    {
    }
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

inline constexpr int kFormatVersion = 1;

/// Whitespace-separated tokens per line; blank lines and '#' comments skipped.
class LineReader {
public:
    LineReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

    bool next(std::vector<std::string>& tokens)
    {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_;
            if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
            std::istringstream ss(line);
            tokens.clear();
            for (std::string t; ss >> t;) tokens.push_back(t);
            if (!tokens.empty()) return true;
        }
        return false;
    }
    std::vector<std::string> expect(const std::string& what)
    {
        std::vector<std::string> t;
        if (!next(t)) fail("unexpected end of input, expected " + what);
        return t;
    }
    std::vector<std::string> expect_keyword(const std::string& kw, std::size_t nargs)
    {
        auto t = expect("'" + kw + "'");
        if (t[0] != kw) fail("expected '" + kw + "', found '" + t[0] + "'");
        if (t.size() != nargs + 1) fail("'" + kw + "' takes " + std::to_string(nargs) + " arguments");
        return t;
    }
    void header()
    {
        auto t = expect_keyword("format", 1);
        if (number(t[1]) != kFormatVersion) fail("unsupported format version " + t[1]);
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(source_, line_, msg); }

    std::uint64_t number(const std::string& s) const
    {
        std::size_t pos = 0;
        std::uint64_t v = 0;
        try {
            if (!s.empty() && s[0] == '-') throw std::invalid_argument(s);
            v = std::stoull(s, &pos);
        } catch (const std::exception&) {
            fail("expected a nonnegative integer, found '" + s + "'");
        }
        if (pos != s.size()) fail("expected a nonnegative integer, found '" + s + "'");
        return v;
    }
    long integer(const std::string& s) const
    {
        std::size_t pos = 0;
        long v = 0;
        try {
            v = std::stol(s, &pos);
        } catch (const std::exception&) {
            fail("expected an integer, found '" + s + "'");
        }
        if (pos != s.size()) fail("expected an integer, found '" + s + "'");
        return v;
    }
    [[nodiscard]] const std::string& source() const { return source_; }
    [[nodiscard]] std::size_t line() const { return line_; }

private:
    std::istream& in_;
    std::string source_;
    std::size_t line_ = 0;
};

// ---- matrices

[[nodiscard]] inline Matrix read_matrix(LineReader& in, std::optional<Residue> p = std::nullopt)
{
    auto h = in.expect("matrix header 'p rows cols'");
    if (h.size() != 3) in.fail("matrix header needs 'p rows cols'");
    const auto mp = in.number(h[0]);
    if (p && mp != *p) in.fail("matrix modulus " + h[0] + " differs from " + std::to_string(*p));
    Field f = [&] {
        try {
            return Field(mp);
        } catch (const std::invalid_argument& e) {
            in.fail(e.what());
        }
    }();
    Matrix m(f, in.number(h[1]), in.number(h[2]));
    // rows of a matrix without columns are blank lines
    for (std::size_t i = 0; i < m.rows() && m.cols(); ++i) {
        auto r = in.expect("matrix row");
        if (r.size() != m.cols()) in.fail("matrix row has " + std::to_string(r.size()) + " entries, expected " +
                                          std::to_string(m.cols()));
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const auto v = in.number(r[j]);
            if (v >= mp) in.fail("entry " + r[j] + " is not a residue mod " + h[0]);
            m(i, j) = static_cast<Residue>(v);
        }
    }
    return m;
}

[[nodiscard]] inline Matrix matrix_from_string(const std::string& s, const std::string& source = "matrix",
                                               std::optional<Residue> p = std::nullopt)
{
    std::istringstream is(s);
    LineReader in(is, source);
    Matrix m = read_matrix(in, p);
    std::vector<std::string> extra;
    if (in.next(extra)) in.fail("trailing data after matrix");
    return m;
}

// ---- groups

inline void write_group(std::ostream& os, const PermGroup& g)
{
    os << "format " << kFormatVersion << '\n' << "degree " << g.degree() << '\n';
    for (auto& s : g.generators()) {
        os << "gen";
        for (auto x : s) os << ' ' << x + 1;
        os << '\n';
    }
}

[[nodiscard]] inline PermGroup read_group(std::istream& is, const std::string& source = "group")
{
    LineReader in(is, source);
    in.header();
    const std::size_t n = in.number(in.expect_keyword("degree", 1)[1]);
    std::vector<Perm> gens;
    std::vector<std::string> t;
    while (in.next(t)) {
        if (t[0] != "gen") in.fail("expected 'gen', found '" + t[0] + "'");
        if (t.size() != n + 1) in.fail("generator needs " + std::to_string(n) + " images");
        Perm s;
        for (std::size_t i = 1; i <= n; ++i) {
            const auto v = in.number(t[i]);
            if (v < 1 || v > n) in.fail("image " + t[i] + " out of range 1.." + std::to_string(n));
            s.push_back(static_cast<std::size_t>(v - 1));
        }
        if (!is_permutation(s)) in.fail("generator is not a permutation");
        gens.push_back(std::move(s));
    }
    try {
        return close_group(n, gens);
    } catch (const GroupTooLarge& e) {
        in.fail(e.what());
    }
}

// ---- algebras

inline void write_algebra(std::ostream& os, const Algebra& a)
{
    os << "format " << kFormatVersion << '\n' << a.p() << ' ' << a.dim() << '\n';
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            for (std::size_t k = 0; k < a.dim(); ++k)
                if (auto v = a.left(i)(k, j)) os << i << ' ' << j << ' ' << k << ' ' << v << '\n';
    auto vec = [&](const char* kw, const Vec& v) {
        os << kw;
        for (auto x : v) os << ' ' << x;
        os << '\n';
    };
    vec("unit", a.unit());
    if (a.symform()) vec("symform", *a.symform());
    os << "gens";
    for (auto g : a.generators()) os << ' ' << g;
    os << '\n';
}

[[nodiscard]] inline Algebra read_algebra(std::istream& is, const std::string& source = "algebra")
{
    LineReader in(is, source);
    in.header();
    auto h = in.expect("header 'p dim'");
    if (h.size() != 2) in.fail("algebra header needs 'p dim'");
    const auto p = in.number(h[0]);
    const std::size_t d = in.number(h[1]);
    Field f = [&] {
        try {
            return Field(p);
        } catch (const std::invalid_argument& e) {
            in.fail(e.what());
        }
    }();
    std::vector<Matrix> left(d, Matrix(f, d, d));
    std::optional<Vec> unit, sym;
    std::vector<std::size_t> gens;
    auto read_vec = [&](const std::vector<std::string>& t) {
        if (t.size() != d + 1) in.fail("'" + t[0] + "' needs " + std::to_string(d) + " entries");
        Vec v;
        for (std::size_t i = 1; i <= d; ++i) {
            const auto x = in.number(t[i]);
            if (x >= p) in.fail("entry " + t[i] + " is not a residue");
            v.push_back(static_cast<Residue>(x));
        }
        return v;
    };
    std::vector<std::string> t;
    while (in.next(t)) {
        if (t[0] == "unit") {
            unit = read_vec(t);
        } else if (t[0] == "symform") {
            sym = read_vec(t);
        } else if (t[0] == "gens") {
            for (std::size_t i = 1; i < t.size(); ++i) {
                const std::size_t g = in.number(t[i]);
                if (g >= d) in.fail("generator index " + t[i] + " out of range");
                gens.push_back(g);
            }
        } else {
            if (unit) in.fail("structure line after 'unit'");
            if (t.size() != 4) in.fail("structure line needs 'i j k val'");
            const std::size_t i = in.number(t[0]), j = in.number(t[1]), k = in.number(t[2]);
            const auto v = in.number(t[3]);
            if (i >= d || j >= d || k >= d) in.fail("structure index out of range");
            if (v >= p) in.fail("coefficient " + t[3] + " is not a residue");
            left[i](k, j) = static_cast<Residue>(v);
        }
    }
    if (!unit) in.fail("missing 'unit' line");
    try {
        return Algebra(f, std::move(left), std::move(*unit), std::move(sym), true, std::move(gens));
    } catch (const std::invalid_argument& e) {
        in.fail(e.what());
    }
}

[[nodiscard]] inline std::string algebra_to_string(const Algebra& a)
{
    std::ostringstream os;
    write_algebra(os, a);
    return os.str();
}

[[nodiscard]] inline Algebra algebra_from_string(const std::string& s, const std::string& source = "algebra")
{
    std::istringstream is(s);
    return read_algebra(is, source);
}

// ---- files

namespace detail {

inline std::ifstream open_in(const std::filesystem::path& p)
{
    std::ifstream f(p);
    if (!f) throw ParseError(p.string(), 0, "cannot open file");
    return f;
}

inline std::ofstream open_out(const std::filesystem::path& p)
{
    std::ofstream f(p);
    if (!f) throw std::runtime_error(p.string() + ": cannot write file");
    return f;
}

inline std::filesystem::path beside(const std::filesystem::path& file, const std::string& ref)
{
    std::filesystem::path r(ref);
    return r.is_absolute() ? r : file.parent_path() / r;
}

}  // namespace detail

[[nodiscard]] inline PermGroup load_group(const std::filesystem::path& p)
{
    auto f = detail::open_in(p);
    return read_group(f, p.string());
}
[[nodiscard]] inline Algebra load_algebra(const std::filesystem::path& p)
{
    auto f = detail::open_in(p);
    return read_algebra(f, p.string());
}
inline void save_algebra(const std::filesystem::path& p, const Algebra& a)
{
    auto f = detail::open_out(p);
    write_algebra(f, a);
}
inline void save_group(const std::filesystem::path& p, const PermGroup& g)
{
    auto f = detail::open_out(p);
    write_group(f, g);
}

// ---- modules

/// Module file body; `algebra_ref` is a path relative to the module file.
inline void write_module(std::ostream& os, const Module& m, const std::string& algebra_ref)
{
    os << "format " << kFormatVersion << '\n' << "algebra " << algebra_ref << " dim " << m.dim() << '\n';
    for (auto& a : m.acts()) write_matrix(os, a);
}

[[nodiscard]] inline Module read_module(std::istream& is, const Algebra& a, const std::string& source = "module",
                                        std::string* algebra_ref = nullptr)
{
    LineReader in(is, source);
    in.header();
    auto t = in.expect("'algebra <file> dim d'");
    if (t.size() != 4 || t[0] != "algebra" || t[2] != "dim") in.fail("expected 'algebra <file> dim d'");
    if (algebra_ref) *algebra_ref = t[1];
    const std::size_t d = in.number(t[3]);
    std::vector<Matrix> act;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Matrix m = read_matrix(in, a.p());
        if (m.rows() != d || m.cols() != d) in.fail("action matrix must be " + std::to_string(d) + "x" + std::to_string(d));
        act.push_back(std::move(m));
    }
    std::vector<std::string> extra;
    if (in.next(extra)) in.fail("more action matrices than algebra basis elements");
    try {
        return Module(a, d, std::move(act), true);
    } catch (const std::invalid_argument& e) {
        in.fail(e.what());
    }
}

/// Reads a module file together with the algebra it references.
[[nodiscard]] inline Module load_module(const std::filesystem::path& p)
{
    std::string ref;
    {
        auto f = detail::open_in(p);
        LineReader in(f, p.string());
        in.header();
        auto t = in.expect("'algebra <file> dim d'");
        if (t.size() != 4 || t[0] != "algebra") in.fail("expected 'algebra <file> dim d'");
        ref = t[1];
    }
    Algebra a = load_algebra(detail::beside(p, ref));
    auto f = detail::open_in(p);
    return read_module(f, a, p.string());
}

[[nodiscard]] inline Module load_module(const std::filesystem::path& p, const Algebra& a)
{
    auto f = detail::open_in(p);
    return read_module(f, a, p.string());
}

inline void save_module(const std::filesystem::path& p, const Module& m, const std::string& algebra_ref)
{
    auto f = detail::open_out(p);
    write_module(f, m, algebra_ref);
}

// ---- complexes of left modules

/// Complex file: "lo hi", then per degree "module <file>" and, above lo, "d n" with its matrix.
inline void save_complex(const std::filesystem::path& p, const Complex& c, const std::string& algebra_ref)
{
    auto f = detail::open_out(p);
    f << "format " << kFormatVersion << '\n' << "lo " << c.lo() << " hi " << c.hi() << '\n';
    const std::string stem = p.stem().string();
    for (int n = c.lo(); n <= c.hi(); ++n) {
        const std::string mod = stem + "_" + std::to_string(n) + ".mod";
        save_module(p.parent_path() / mod, c.at(n).left(), algebra_ref);
        f << "module " << mod << '\n';
        if (n > c.lo()) {
            f << "d " << n << '\n';
            write_matrix(f, c.d(n));
        }
    }
}

[[nodiscard]] inline Complex load_complex(const std::filesystem::path& p, const Algebra& a)
{
    auto f = detail::open_in(p);
    LineReader in(f, p.string());
    in.header();
    auto t = in.expect("'lo <n> hi <n>'");
    if (t.size() != 4 || t[0] != "lo" || t[2] != "hi") in.fail("expected 'lo <n> hi <n>'");
    const int lo = static_cast<int>(in.integer(t[1])), hi = static_cast<int>(in.integer(t[3]));
    if (hi < lo - 1) in.fail("hi below lo");
    std::vector<Bimodule> comps;
    std::vector<Matrix> diffs;
    for (int n = lo; n <= hi; ++n) {
        auto m = in.expect_keyword("module", 1);
        comps.push_back(Bimodule::from_left(load_module(detail::beside(p, m[1]), a)));
        if (n > lo) {
            auto dl = in.expect_keyword("d", 1);
            if (in.integer(dl[1]) != n) in.fail("expected differential of degree " + std::to_string(n));
            diffs.push_back(read_matrix(in, a.p()));
        }
    }
    try {
        return Complex(a, ground_algebra(a.field()), lo, std::move(comps), std::move(diffs));
    } catch (const std::invalid_argument& e) {
        in.fail(e.what());
    }
}

// ---- side files: the summands of X over A

inline void save_side(const std::filesystem::path& p, const std::vector<Module>& summands, const std::string& algebra_ref)
{
    auto f = detail::open_out(p);
    f << "format " << kFormatVersion << '\n' << "algebra " << algebra_ref << '\n';
    const std::string stem = p.stem().string();
    for (std::size_t i = 0; i < summands.size(); ++i) {
        const std::string mod = stem + "_x" + std::to_string(i) + ".mod";
        save_module(p.parent_path() / mod, summands[i], algebra_ref);
        f << "summand " << mod << '\n';
    }
}

struct SideFile {
    Algebra base;
    std::vector<Module> summands;
};

[[nodiscard]] inline SideFile load_side(const std::filesystem::path& p)
{
    auto f = detail::open_in(p);
    LineReader in(f, p.string());
    in.header();
    SideFile s;
    s.base = load_algebra(detail::beside(p, in.expect_keyword("algebra", 1)[1]));
    std::vector<std::string> t;
    while (in.next(t)) {
        if (t[0] != "summand" || t.size() != 2) in.fail("expected 'summand <file>'");
        s.summands.push_back(load_module(detail::beside(p, t[1]), s.base));
    }
    if (s.summands.empty()) in.fail("no summands");
    return s;
}

// ---- JSON certificates

using Json = nlohmann::ordered_json;

namespace detail {

struct JsonReader {
    std::string source;

    [[noreturn]] void fail(const std::string& where, const std::string& msg) const
    {
        throw ParseError(source, 0, where + ": " + msg);
    }
    const Json& at(const Json& j, const char* key, const std::string& where) const
    {
        if (!j.is_object() || !j.contains(key)) fail(where, std::string("missing key '") + key + "'");
        return j.at(key);
    }
    Matrix matrix(const Json& j, const std::string& where, Residue p) const
    {
        if (!j.is_string()) fail(where, "expected a matrix string");
        try {
            return matrix_from_string(j.get<std::string>(), source + " " + where, p);
        } catch (const ParseError& e) {
            fail(where, e.what());
        }
    }
    std::vector<Matrix> matrices(const Json& j, const std::string& where, Residue p) const
    {
        if (!j.is_array()) fail(where, "expected an array");
        std::vector<Matrix> out;
        for (std::size_t i = 0; i < j.size(); ++i) out.push_back(matrix(j[i], where + "[" + std::to_string(i) + "]", p));
        return out;
    }
    int integer(const Json& j, const std::string& where) const
    {
        if (!j.is_number_integer()) fail(where, "expected an integer");
        return j.get<int>();
    }
};

inline Json matrices_json(const std::vector<Matrix>& ms)
{
    Json a = Json::array();
    for (auto& m : ms) a.push_back(to_text(m));
    return a;
}

inline Json bimodule_json(const Bimodule& b)
{
    return Json{{"dim", b.dim()}, {"left", matrices_json(b.lacts())}, {"right", matrices_json(b.racts())}};
}

inline Bimodule bimodule_from(const JsonReader& r, const Json& j, const std::string& where, const Algebra& l,
                              const Algebra& rt)
{
    const int d = r.integer(r.at(j, "dim", where), where + ".dim");
    auto la = r.matrices(r.at(j, "left", where), where + ".left", l.p());
    auto ra = r.matrices(r.at(j, "right", where), where + ".right", l.p());
    try {
        return Bimodule(l, rt, static_cast<std::size_t>(d), std::move(la), std::move(ra));
    } catch (const std::invalid_argument& e) {
        r.fail(where, e.what());
    }
}

inline Json complex_json(const Complex& c)
{
    Json comps = Json::array();
    for (auto& b : c.components()) comps.push_back(bimodule_json(b));
    return Json{{"lo", c.lo()}, {"components", comps}, {"differentials", matrices_json(c.differentials())}};
}

inline Complex complex_from(const JsonReader& r, const Json& j, const std::string& where, const Algebra& l,
                            const Algebra& rt)
{
    const int lo = r.integer(r.at(j, "lo", where), where + ".lo");
    const Json& cj = r.at(j, "components", where);
    if (!cj.is_array()) r.fail(where + ".components", "expected an array");
    std::vector<Bimodule> comps;
    for (std::size_t i = 0; i < cj.size(); ++i)
        comps.push_back(bimodule_from(r, cj[i], where + ".components[" + std::to_string(i) + "]", l, rt));
    auto diffs = r.matrices(r.at(j, "differentials", where), where + ".differentials", l.p());
    try {
        return Complex(l, rt, lo, std::move(comps), std::move(diffs));
    } catch (const std::invalid_argument& e) {
        r.fail(where, e.what());
    }
}

inline Json maps_json(int lo, const std::vector<Matrix>& ms) { return Json{{"lo", lo}, {"maps", matrices_json(ms)}}; }

inline ChainMap chain_map_from(const JsonReader& r, const Json& j, const std::string& where, const Complex& src,
                               const Complex& dst)
{
    ChainMap m{src, dst, r.integer(r.at(j, "lo", where), where + ".lo"),
               r.matrices(r.at(j, "maps", where), where + ".maps", src.field().p())};
    for (std::size_t i = 0; i < m.f.size(); ++i) {
        const int n = m.lo + static_cast<int>(i);
        if (m.f[i].rows() != dst.dim(n) || m.f[i].cols() != src.dim(n))
            r.fail(where, "map in degree " + std::to_string(n) + " has wrong shape");
    }
    return m;
}

inline Homotopy homotopy_from(const JsonReader& r, const Json& j, const std::string& where, const Complex& src,
                              const Complex& dst)
{
    Homotopy h{r.integer(r.at(j, "lo", where), where + ".lo"),
               r.matrices(r.at(j, "maps", where), where + ".maps", src.field().p())};
    for (std::size_t i = 0; i < h.h.size(); ++i) {
        const int n = h.lo + static_cast<int>(i);
        if (h.h[i].rows() != dst.dim(n + 1) || h.h[i].cols() != src.dim(n))
            r.fail(where, "homotopy in degree " + std::to_string(n) + " has wrong shape");
    }
    return h;
}

inline Json equivalence_json(const HomotopyEquivalence& w)
{
    return Json{{"f", maps_json(w.f.lo, w.f.f)},
                {"g", maps_json(w.g.lo, w.g.f)},
                {"hs", maps_json(w.hs.lo, w.hs.h)},
                {"ht", maps_json(w.ht.lo, w.ht.h)}};
}

inline HomotopyEquivalence equivalence_from(const JsonReader& r, const Json& j, const std::string& where,
                                            const Complex& c, const Complex& d)
{
    HomotopyEquivalence w;
    w.f = chain_map_from(r, r.at(j, "f", where), where + ".f", c, d);
    w.g = chain_map_from(r, r.at(j, "g", where), where + ".g", d, c);
    w.hs = homotopy_from(r, r.at(j, "hs", where), where + ".hs", c, c);
    w.ht = homotopy_from(r, r.at(j, "ht", where), where + ".ht", d, d);
    return w;
}

inline Json header_json(const char* kind, const Algebra& e, const Algebra& f)
{
    return Json{{"format", kFormatVersion}, {"kind", kind}, {"E", algebra_to_string(e)}, {"F", algebra_to_string(f)}};
}

inline Json parse_json(const std::string& text, const std::string& source)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        std::size_t line = 1;
        for (std::size_t i = 0; i < e.byte && i < text.size(); ++i) line += text[i] == '\n';
        throw ParseError(source, line, e.what());
    }
}

inline Algebra algebra_from(const JsonReader& r, const Json& j, const char* key)
{
    const Json& a = r.at(j, key, "certificate");
    if (!a.is_string()) r.fail(key, "expected algebra text");
    return algebra_from_string(a.get<std::string>(), r.source + " " + key);
}

inline void check_header(const JsonReader& r, const Json& j, const std::string& kind)
{
    if (r.integer(r.at(j, "format", "certificate"), "format") != kFormatVersion) r.fail("format", "unsupported version");
    const Json& k = r.at(j, "kind", "certificate");
    if (!k.is_string() || k.get<std::string>() != kind) r.fail("kind", "expected '" + kind + "'");
}

}  // namespace detail

[[nodiscard]] inline std::string certificate_kind(const std::string& text, const std::string& source = "certificate")
{
    Json j = detail::parse_json(text, source);
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) throw ParseError(source, 0, "missing 'kind'");
    return j["kind"].get<std::string>();
}

[[nodiscard]] inline Json verdict_json(const Verdict& v)
{
    return Json{{"ok", v.ok}, {"failures", v.failures}};
}

[[nodiscard]] inline Json to_json(const MoritaCertificate& c)
{
    Json j = detail::header_json("morita", c.E, c.F);
    j["M"] = detail::bimodule_json(c.M);
    j["N"] = detail::bimodule_json(c.N);
    j["witness_EM"] = to_text(c.witness_EM);
    j["witness_FN"] = to_text(c.witness_FN);
    return j;
}

[[nodiscard]] inline MoritaCertificate morita_from_json(const std::string& text, const std::string& source = "certificate")
{
    detail::JsonReader r{source};
    Json j = detail::parse_json(text, source);
    detail::check_header(r, j, "morita");
    MoritaCertificate c;
    c.E = detail::algebra_from(r, j, "E");
    c.F = detail::algebra_from(r, j, "F");
    c.M = detail::bimodule_from(r, r.at(j, "M", "certificate"), "M", c.E, c.F);
    c.N = detail::bimodule_from(r, r.at(j, "N", "certificate"), "N", c.F, c.E);
    c.witness_EM = r.matrix(r.at(j, "witness_EM", "certificate"), "witness_EM", c.E.p());
    c.witness_FN = r.matrix(r.at(j, "witness_FN", "certificate"), "witness_FN", c.E.p());
    return c;
}

[[nodiscard]] inline Json to_json(const RickardCertificate& c)
{
    Json j = detail::header_json("rickard", c.E, c.F);
    j["M"] = detail::complex_json(c.M);
    j["N"] = detail::complex_json(c.N);
    j["htpy_E"] = detail::equivalence_json(c.htpy_E);
    j["htpy_F"] = detail::equivalence_json(c.htpy_F);
    return j;
}

[[nodiscard]] inline RickardCertificate rickard_from_json(const std::string& text, const std::string& source = "certificate")
{
    detail::JsonReader r{source};
    Json j = detail::parse_json(text, source);
    detail::check_header(r, j, "rickard");
    RickardCertificate c;
    c.E = detail::algebra_from(r, j, "E");
    c.F = detail::algebra_from(r, j, "F");
    c.M = detail::complex_from(r, r.at(j, "M", "certificate"), "M", c.E, c.F);
    c.N = detail::complex_from(r, r.at(j, "N", "certificate"), "N", c.F, c.E);
    c.htpy_E = detail::equivalence_from(r, r.at(j, "htpy_E", "certificate"), "htpy_E",
                                        tensor_complexes(c.M, c.N).total, concentrated(regular_bimodule(c.E)));
    c.htpy_F = detail::equivalence_from(r, r.at(j, "htpy_F", "certificate"), "htpy_F",
                                        tensor_complexes(c.N, c.M).total, concentrated(regular_bimodule(c.F)));
    return c;
}

namespace detail {

inline Json qis_json(const QisWitness& q)
{
    return Json{{"map", maps_json(q.map.lo, q.map.f)}, {"left", equivalence_json(q.left)}, {"right", equivalence_json(q.right)}};
}

inline QisWitness qis_from(const JsonReader& r, const Json& j, const std::string& where, const Complex& total,
                           const Algebra& a)
{
    const Complex unit = concentrated(regular_bimodule(a));
    QisWitness q;
    q.map = chain_map_from(r, r.at(j, "map", where), where + ".map", total, unit);
    q.left = equivalence_from(r, r.at(j, "left", where), where + ".left", restrict_side(total, Side::Left),
                              restrict_side(unit, Side::Left));
    q.right = equivalence_from(r, r.at(j, "right", where), where + ".right", restrict_side(total, Side::Right),
                               restrict_side(unit, Side::Right));
    return q;
}

inline Json invariants_json(const DerivedInvariants& d)
{
    return Json{{"simples", d.simples}, {"center_dim", d.center_dim}, {"cartan_det", d.cartan_det}};
}

inline DerivedInvariants invariants_from(const JsonReader& r, const Json& j, const std::string& where)
{
    DerivedInvariants d;
    d.simples = static_cast<std::size_t>(r.integer(r.at(j, "simples", where), where + ".simples"));
    d.center_dim = static_cast<std::size_t>(r.integer(r.at(j, "center_dim", where), where + ".center_dim"));
    d.cartan_det = r.integer(r.at(j, "cartan_det", where), where + ".cartan_det");
    return d;
}

}  // namespace detail

[[nodiscard]] inline Json to_json(const DerivedCertificate& c)
{
    Json j = detail::header_json("derived", c.E, c.F);
    j["M"] = detail::complex_json(c.M);
    j["N"] = detail::complex_json(c.N);
    j["qis_E"] = detail::qis_json(c.qis_E);
    j["qis_F"] = detail::qis_json(c.qis_F);
    j["invariants"] = Json{{"E", detail::invariants_json(c.inv_E)}, {"F", detail::invariants_json(c.inv_F)}};
    return j;
}

[[nodiscard]] inline DerivedCertificate derived_from_json(const std::string& text, const std::string& source = "certificate")
{
    detail::JsonReader r{source};
    Json j = detail::parse_json(text, source);
    detail::check_header(r, j, "derived");
    DerivedCertificate c;
    c.E = detail::algebra_from(r, j, "E");
    c.F = detail::algebra_from(r, j, "F");
    c.M = detail::complex_from(r, r.at(j, "M", "certificate"), "M", c.E, c.F);
    c.N = detail::complex_from(r, r.at(j, "N", "certificate"), "N", c.F, c.E);
    c.qis_E = detail::qis_from(r, r.at(j, "qis_E", "certificate"), "qis_E", tensor_complexes(c.M, c.N).total, c.E);
    c.qis_F = detail::qis_from(r, r.at(j, "qis_F", "certificate"), "qis_F", tensor_complexes(c.N, c.M).total, c.F);
    const Json& inv = r.at(j, "invariants", "certificate");
    c.inv_E = detail::invariants_from(r, r.at(inv, "E", "invariants"), "invariants.E");
    c.inv_F = detail::invariants_from(r, r.at(inv, "F", "invariants"), "invariants.F");
    return c;
}

[[nodiscard]] inline std::string read_text(const std::filesystem::path& p)
{
    auto f = detail::open_in(p);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

inline void write_text(const std::filesystem::path& p, const std::string& s)
{
    auto f = detail::open_out(p);
    f << s;
}

}  // namespace yw
