#include <CLI11.hpp>
#include <openssl/evp.h>

#include <cstdio>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <yw/yw.hpp>

namespace fs = std::filesystem;
using yw::Json;

namespace {

constexpr int kExitPass = 0, kExitFail = 1, kExitInput = 2;

struct RunConfig {
    std::string command;
    std::vector<std::string> inputs;
    std::uint64_t p = 0;
    std::uint64_t seed = 1;
    std::string out;
    std::string format = "text";
};

std::string sha256_hex(const std::string& bytes)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int n = 0;
    if (!EVP_Digest(bytes.data(), bytes.size(), md, &n, EVP_sha256(), nullptr)) throw std::runtime_error("sha256 failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < n; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return os.str();
}

class Report {
public:
    explicit Report(const RunConfig& cfg)
    {
        body_["tool"] = "yw";
        body_["version"] = YW_VERSION;
        body_["command"] = cfg.command;
        Json inputs = Json::array();
        for (auto& p : cfg.inputs) inputs.push_back(Json{{"path", p}, {"sha256", sha256_hex(yw::read_text(p))}});
        body_["inputs"] = std::move(inputs);
        if (cfg.p) body_["p"] = cfg.p;
        body_["seed"] = cfg.seed;
    }

    Json& operator[](const char* key) { return body_[key]; }

    void verdict(const std::string& name, const yw::Verdict& v)
    {
        Json j{{"name", name}};
        j.update(yw::verdict_json(v));
        verdicts_.push_back(std::move(j));
        ok_ = ok_ && v.ok;
    }
    void verdict(const std::string& name, bool ok, const std::string& why)
    {
        yw::Verdict v;
        v.require(ok, why);
        verdict(name, v);
    }

    [[nodiscard]] bool ok() const { return ok_; }

    void print(std::ostream& os, const std::string& format) const
    {
        Json all = body_;
        all["verdicts"] = verdicts_;
        all["verdict"] = ok_ ? "pass" : "fail";
        if (format == "json")
            os << all.dump(2) << '\n';
        else
            text(os, all, "");
    }

private:
    static std::string scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

    static void text(std::ostream& os, const Json& j, const std::string& prefix)
    {
        for (auto it = j.begin(); it != j.end(); ++it) {
            const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
            const Json& v = it.value();
            if (v.is_object()) {
                text(os, v, key);
            } else if (v.is_array()) {
                bool flat = std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_primitive(); });
                if (flat) {
                    os << key << ':';
                    for (auto& x : v) os << ' ' << scalar(x);
                    os << '\n';
                } else {
                    for (std::size_t i = 0; i < v.size(); ++i) text(os, v[i], key + "[" + std::to_string(i) + "]");
                }
            } else {
                os << key << ": " << scalar(v) << '\n';
            }
        }
    }

    Json body_;
    Json verdicts_ = Json::array();
    bool ok_ = true;
};

int finish(const Report& r, const RunConfig& cfg)
{
    r.print(std::cout, cfg.format);
    return r.ok() ? kExitPass : kExitFail;
}

Json class_table(const yw::YoshidaData& y)
{
    Json t = Json::array();
    for (auto& c : y.classes)
        t.push_back(Json{{"part", c.part},
                         {"dim", c.dim},
                         {"multiplicity", c.multiplicity},
                         {"projective", c.projective},
                         {"injective_left", c.injective_left},
                         {"injective_right", c.injective_right}});
    return t;
}

Json invariants(const yw::DerivedInvariants& d)
{
    return Json{{"simples", d.simples}, {"center_dim", d.center_dim}, {"cartan_det", d.cartan_det}};
}

Json complex_dims(const yw::Complex& c)
{
    Json j = Json::object();
    for (int n = c.lo(); n <= c.hi(); ++n) j[std::to_string(n)] = c.dim(n);
    return j;
}

yw::Vec non_projective_idempotent(const yw::EndoSide& s, std::uint64_t seed)
{
    for (auto r : s.parts.class_reps())
        if (!yw::is_projective(yw::compress(s.endo.total, s.parts.proj[r], s.parts.incl[r]), seed))
            return yw::part_idempotent(s.endo, s.parts, r);
    throw yw::PreconditionError("every summand of X is projective, nothing to pad with");
}

yw::EndoSide load_endo_side(const std::string& path, std::uint64_t seed)
{
    auto s = yw::load_side(path);
    return yw::make_side(s.base, s.summands, seed);
}

// The certificate with the verdicts of the run that produced it.
void write_certificate(const std::string& path, Json j, const Report& r)
{
    if (path.empty()) return;
    j["verdict"] = r.ok() ? "pass" : "fail";
    yw::write_text(path, j.dump(1) + "\n");
}

// ---- commands

int cmd_yoshida(RunConfig& cfg, std::optional<std::size_t> block)
{
    Report r(cfg);
    auto g = yw::load_group(cfg.inputs[0]);
    r["group_order"] = g.order();
    yw::YoshidaData y;
    try {
        y = yw::yoshida_algebra(g, cfg.p, block, cfg.seed);
    } catch (const yw::InvariantViolation& e) {
        r.verdict("summand conditions agree", false, e.what());
        return finish(r, cfg);
    }
    r["block_index"] = y.block_index;
    r["dim_A"] = y.A().dim();
    r["dim_E"] = y.E().dim();
    r["dim_X"] = y.X().dim();
    Json sums = Json::array();
    for (std::size_t k = 0; k < y.used_reps.size(); ++k)
        sums.push_back(Json{{"subgroup_order", y.class_list.reps[y.used_reps[k]].size()},
                            {"dim", y.endo.summands[k].dim()}});
    r["permutation_summands"] = std::move(sums);
    r["class_count"] = y.classes.size();
    r["projective_classes"] = yw::projective_class_count(y);
    r["classes"] = class_table(y);
    r.verdict("summand conditions agree", true, "");

    auto ctx = yw::proj_inj_corner(y);
    r["dim_corner"] = ctx.corner.alg.dim();
    auto iso = yw::verify_corner_is_Aop(ctx, y.endo, cfg.seed);
    r.verdict("corner is A^op", iso.ok, iso.diagnostic);
    r.verdict("corner is selfinjective", yw::verify_selfinjective_corner(ctx, cfg.seed), "corner not selfinjective");

    const auto& pims = yw::pim_data(y.A(), cfg.seed).pims;
    Json pd = Json::array();
    for (auto& m : pims) pd.push_back(m.dim());
    r["pim_dims"] = std::move(pd);

    if (!cfg.out.empty()) {
        fs::path dir(cfg.out);
        fs::create_directories(dir);
        yw::save_algebra(dir / "A.alg", y.A());
        yw::save_algebra(dir / "E.alg", y.E());
        yw::save_side(dir / "X.side", y.endo.summands, "A.alg");
        for (std::size_t i = 0; i < pims.size(); ++i) yw::save_module(dir / ("P" + std::to_string(i) + ".mod"), pims[i], "A.alg");
        Json files = {"A.alg", "E.alg", "X.side"};
        for (std::size_t i = 0; i < pims.size(); ++i) files.push_back("P" + std::to_string(i) + ".mod");
        r["files"] = std::move(files);
    }
    return finish(r, cfg);
}

int cmd_certify(RunConfig& cfg, const std::string& kind_flag)
{
    Report r(cfg);
    const std::string& path = cfg.inputs[0];
    const std::string text = yw::read_text(path);
    const std::string kind = yw::certificate_kind(text, path);
    if (!kind_flag.empty() && kind_flag != kind)
        throw yw::ParseError(path, 0, "certificate kind is '" + kind + "', expected '" + kind_flag + "'");
    r["kind"] = kind;
    if (kind == "morita") {
        auto c = yw::morita_from_json(text, path);
        r["dim_E"] = c.E.dim();
        r["dim_F"] = c.F.dim();
        r.verdict("morita", yw::verify_morita(c, cfg.seed));
    } else if (kind == "rickard") {
        auto c = yw::rickard_from_json(text, path);
        r["dim_E"] = c.E.dim();
        r["dim_F"] = c.F.dim();
        r["M"] = complex_dims(c.M);
        r["N"] = complex_dims(c.N);
        r.verdict("rickard", yw::verify_rickard(c, cfg.seed));
    } else if (kind == "derived") {
        auto c = yw::derived_from_json(text, path);
        r["dim_E"] = c.E.dim();
        r["dim_F"] = c.F.dim();
        r.verdict("derived", yw::verify_derived(c, cfg.seed));
    } else {
        throw yw::ParseError(path, 0, "unknown certificate kind '" + kind + "'");
    }
    return finish(r, cfg);
}

int cmd_transport(RunConfig& cfg, const std::string& kind_flag)
{
    Report r(cfg);
    const std::string& path = cfg.inputs[0];
    const std::string text = yw::read_text(path);
    const std::string kind = yw::certificate_kind(text, path);
    if (!kind_flag.empty() && kind_flag != kind)
        throw yw::ParseError(path, 0, "certificate kind is '" + kind + "', expected '" + kind_flag + "'");
    auto x = load_endo_side(cfg.inputs[1], cfg.seed);
    auto y = load_endo_side(cfg.inputs[2], cfg.seed);
    auto check_sides = [&](const yw::Algebra& e, const yw::Algebra& f) {
        if (!e.same_as(x.endo.E)) throw yw::PreconditionError("certificate E is not End(X) of " + cfg.inputs[1]);
        if (!f.same_as(y.endo.E)) throw yw::PreconditionError("certificate F is not End(Y) of " + cfg.inputs[2]);
    };
    r["kind"] = kind;
    if (kind == "morita") {
        auto c = yw::morita_from_json(text, path);
        check_sides(c.E, c.F);
        r.verdict("input", yw::verify_morita(c, cfg.seed));
        auto t = yw::transport_morita(c, x.corner_idem, y.corner_idem, cfg.seed);
        r["dim_eEe"] = t.ce.alg.dim();
        r["dim_fFf"] = t.cf.alg.dim();
        r["dim_eMf"] = t.output.M.dim();
        r["dim_fNe"] = t.output.N.dim();
        r.verdict("transported morita", t.verdict);
        r.verdict("add correspondence", yw::check_add_correspondence(t, x, y, cfg.seed));
        Json m = Json::array();
        for (auto [a, b] : t.add_match) m.push_back(Json{{"x_class", a}, {"y_class", b}});
        r["add_match"] = std::move(m);
        auto [ie, iff] = yw::morita_invariants(t.output.E, t.output.F, cfg.seed);
        r["invariants_eEe"] = invariants(ie);
        r["invariants_fFf"] = invariants(iff);
        write_certificate(cfg.out, yw::to_json(t.output), r);
    } else if (kind == "rickard") {
        auto c = yw::rickard_from_json(text, path);
        check_sides(c.E, c.F);
        auto t = yw::transport_derived(c, x.corner_idem, y.corner_idem, cfg.seed);
        r["dim_eEe"] = t.ce.alg.dim();
        r["dim_fFf"] = t.cf.alg.dim();
        r["eMf"] = complex_dims(t.output.M);
        r["fNe"] = complex_dims(t.output.N);
        r["split_n0"] = complex_dims(t.split.n0());
        r["split_n1"] = complex_dims(t.split.n1());
        r.verdict("corner split", t.split.verdict);
        r.verdict("transported derived", t.verdict);
        r["invariants_eEe"] = invariants(t.output.inv_E);
        r["invariants_fFf"] = invariants(t.output.inv_F);
        write_certificate(cfg.out, yw::to_json(t.output), r);
    } else {
        throw yw::ParseError(path, 0, "cannot transport a '" + kind + "' certificate");
    }
    return finish(r, cfg);
}

int cmd_nilprobe(RunConfig& cfg)
{
    Report r(cfg);
    auto g = yw::load_group(cfg.inputs[0]);
    auto n = yw::nilpotent_probe(g, cfg.p, cfg.seed);
    r["group_order"] = g.order();
    r["sylow_order"] = n.sylow_order;
    r["basic_dim"] = n.basic_dim;
    r["local"] = n.local;
    r["commutative"] = n.commutative;
    r["radical_series"] = n.radical_series;
    r["sylow_radical_series"] = n.sylow_radical_series;
    r["block_yoshida_dim"] = n.block_yoshida_dim;
    r["sylow_yoshida_dim"] = n.sylow_yoshida_dim;
    r["block_invariants"] = invariants(n.block_inv);
    r["sylow_invariants"] = invariants(n.sylow_inv);
    r["consistent"] = n.consistent;
    yw::Verdict v;
    for (auto& d : n.diagnostics) v.fail(d);
    if (!n.consistent && v.ok) v.fail("inconsistent");
    r.verdict("nilpotent signatures", v);
    return finish(r, cfg);
}

int cmd_certgen(RunConfig& cfg, const std::string& which, const std::vector<std::string>& add, const std::string& y_out,
                int shift, std::optional<int> pad)
{
    if (cfg.out.empty()) throw yw::PreconditionError("certgen needs --out");
    Report r(cfg);
    r["which"] = which;
    auto sx = yw::load_side(cfg.inputs[0]);
    Json cert;
    if (which == "identity") {
        auto x = yw::endo_algebra(sx.base, sx.summands);
        auto c = yw::identity_certificate(x.E);
        r.verdict("morita", yw::verify_morita(c, cfg.seed));
        cert = yw::to_json(c);
    } else if (which == "genvar") {
        if (add.empty() || y_out.empty()) throw yw::PreconditionError("genvar needs --add and --y-out");
        std::vector<yw::Module> ys = sx.summands;
        for (auto& p : add) ys.push_back(yw::load_module(p, sx.base));
        fs::path yp(y_out);
        const std::string alg = yp.stem().string() + "_A.alg";
        yw::save_algebra(yp.parent_path() / alg, sx.base);
        yw::save_side(yp, ys, alg);
        auto x = yw::endo_algebra(sx.base, sx.summands), y = yw::endo_algebra(sx.base, ys);
        auto c = yw::generator_variation_certificate(x, y, cfg.seed);
        r["dim_E"] = c.E.dim();
        r["dim_F"] = c.F.dim();
        r.verdict("morita", yw::verify_morita(c, cfg.seed));
        cert = yw::to_json(c);
    } else {
        auto x = yw::make_side(sx.base, sx.summands, cfg.seed);
        auto c = yw::morita_to_rickard(yw::identity_certificate(x.endo.E));
        if (pad) {
            yw::Vec eps = non_projective_idempotent(x, cfg.seed);
            auto w = yw::corner_padding(x.endo.E, eps, x.endo.E, eps);
            c = yw::pad_certificate(c, w, w, *pad);
        }
        c = yw::shift_certificate(c, shift);
        r["M"] = complex_dims(c.M);
        r.verdict("rickard", yw::verify_rickard(c, cfg.seed));
        cert = yw::to_json(c);
    }
    write_certificate(cfg.out, cert, r);
    return finish(r, cfg);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Yoshida algebras, corner condensation and certificate transport over GF(p)"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("yw ") + YW_VERSION);
    RunConfig cfg;

    auto common = [&](CLI::App* sub, bool prime) {
        sub->add_option("--seed", cfg.seed, "seed for randomized routines")->capture_default_str();
        sub->add_option("--format", cfg.format, "report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
        if (prime) sub->add_option("--p", cfg.p, "characteristic")->required();
    };

    std::string group;
    std::optional<std::size_t> block;
    auto* yo = app.add_subcommand("yoshida", "build the Yoshida algebra of a block");
    yo->add_option("group", group, "group file")->required();
    yo->add_option("--block", block, "block index (default: principal)");
    yo->add_option("--out", cfg.out, "directory for algebra and module files");
    common(yo, true);

    std::string cert, kind;
    auto* ce = app.add_subcommand("certify", "verify a certificate");
    ce->add_option("certificate", cert, "certificate file")->required();
    ce->add_option("--kind", kind, "expected kind")->check(CLI::IsMember({"morita", "rickard", "derived"}));
    common(ce, false);

    std::string xs, ys;
    auto* tr = app.add_subcommand("transport", "transport a certificate to the projective-injective corners");
    tr->add_option("certificate", cert, "certificate file")->required();
    tr->add_option("--x", xs, "side file for E = End(X)")->required();
    tr->add_option("--y", ys, "side file for F = End(Y)")->required();
    tr->add_option("--kind", kind, "expected kind")->check(CLI::IsMember({"morita", "rickard"}));
    tr->add_option("--out", cfg.out, "output certificate");
    common(tr, false);

    auto* np = app.add_subcommand("nilprobe", "probe the principal block for nilpotency signatures");
    np->add_option("group", group, "group file")->required();
    common(np, true);

    std::string which;
    std::vector<std::string> add;
    std::string y_out;
    int shift = 0;
    std::optional<int> pad;
    auto* cg = app.add_subcommand("certgen", "write a certificate over End(X)");
    cg->add_option("which", which, "identity, genvar or rickard")
        ->required()
        ->check(CLI::IsMember({"identity", "genvar", "rickard"}));
    cg->add_option("--x", xs, "side file for X")->required();
    cg->add_option("--add", add, "modules appended to X (genvar)");
    cg->add_option("--y-out", y_out, "side file written for X plus the added modules (genvar)");
    cg->add_option("--shift", shift, "shift of the Rickard certificate");
    cg->add_option("--pad", pad, "degree of a contractible padding cone");
    cg->add_option("--out", cfg.out, "output certificate")->required();
    common(cg, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitInput;
    }

    try {
        if (cfg.p && !yw::Field::is_prime(cfg.p)) throw yw::PreconditionError("p = " + std::to_string(cfg.p) + " is not prime");
        if (yo->parsed()) {
            cfg.command = "yoshida";
            cfg.inputs = {group};
            return cmd_yoshida(cfg, block);
        }
        if (ce->parsed()) {
            cfg.command = "certify";
            cfg.inputs = {cert};
            return cmd_certify(cfg, kind);
        }
        if (tr->parsed()) {
            cfg.command = "transport";
            cfg.inputs = {cert, xs, ys};
            return cmd_transport(cfg, kind);
        }
        if (np->parsed()) {
            cfg.command = "nilprobe";
            cfg.inputs = {group};
            return cmd_nilprobe(cfg);
        }
        cfg.command = "certgen";
        cfg.inputs = {xs};
        return cmd_certgen(cfg, which, add, y_out, shift, pad);
    } catch (const yw::InvariantViolation& e) {
        std::cerr << "yw: invariant violated: " << e.what() << '\n';
        return kExitFail;
    } catch (const std::exception& e) {
        std::cerr << "yw: " << e.what() << '\n';
        return kExitInput;
    }
}
