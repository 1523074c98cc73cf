#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <yw/yw.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace yw;
using namespace oracle;

namespace {

std::string str(std::size_t n) { return std::to_string(n); }

// |Q \ G / R| by orbit enumeration of Q x R on G.
std::size_t double_cosets(const PermGroup& g, const ElementSet& q, const ElementSet& r)
{
    std::vector<char> seen(g.order(), 0);
    std::size_t n = 0;
    for (std::size_t x = 0; x < g.order(); ++x) {
        if (seen[x]) continue;
        ++n;
        for (auto a : q)
            for (auto b : r) seen[g.mul(g.mul(a, x), b)] = 1;
    }
    return n;
}

// Projectivity over kG through freeness over a Sylow p-subgroup P:
// rank of the norm element of P on U equals dim U / |P|.
bool projective_by_norm(const YoshidaData& y, const Module& u)
{
    const ElementSet& p = y.class_list.sylow;
    Vec norm = y.kg.zero();
    for (auto x : p) norm[x] = 1;
    Vec nb = y.blk.from_parent(y.kg.mul(y.block, norm));
    return u.dim() % p.size() == 0 && rank(u.action(nb)) * p.size() == u.dim();
}

bool complete_orthogonal(const Algebra& a, const std::vector<Vec>& es)
{
    Vec sum = a.zero();
    for (std::size_t i = 0; i < es.size(); ++i) {
        for (std::size_t j = 0; j < es.size(); ++j)
            if (a.mul(es[i], es[j]) != (i == j ? es[i] : a.zero())) return false;
        sum = a.add(sum, es[i]);
    }
    return sum == a.unit();
}

bool square_zero(const Complex& c)
{
    for (int n = c.lo() + 2; n <= c.hi(); ++n)
        if (!(c.d(n - 1) * c.d(n)).is_zero()) return false;
    return true;
}

// g f - 1 = d h + h d, checked entrywise from the raw matrices.
bool homotopy_identity(const ChainMap& f, const ChainMap& g, const Homotopy& h)
{
    const Complex& c = f.src;
    for (int n = c.lo(); n <= c.hi(); ++n) {
        Matrix lhs = g.at(n) * f.at(n) - Matrix::identity(c.field(), c.dim(n));
        Matrix rhs = c.d(n + 1) * h.at(n, c, c) + h.at(n - 1, c, c) * c.d(n);
        if (lhs != rhs) return false;
    }
    return true;
}

Vec non_projective_idem(const YoshidaData& y)
{
    for (auto& c : y.classes)
        if (!c.projective) return y.part_idems[c.part];
    throw std::logic_error("no non-projective class");
}

struct Corner {
    const char* name;
    PermGroup (*group)();
    std::size_t dim;
};

const Corner kCorners[] = {{"S3", fx::s3, 6}, {"C3", fx::c3, 3}, {"A4", fx::a4, 3}};

// ---- criteria

Verdict yoshida_s3()
{
    Verdict v;
    auto g = fx::s3();
    auto y = yoshida_algebra(g, 3);
    v.require(y.A().dim() == g.order(), "kS3 has more than one block at p = 3");
    std::size_t oracle = 0;
    for (auto i : y.used_reps)
        for (auto j : y.used_reps) oracle += double_cosets(g, y.class_list.reps[i], y.class_list.reps[j]);
    v.require(y.E().dim() == 12, "dim E = " + str(y.E().dim()) + ", expected 12");
    v.require(oracle == 12, "double coset count " + str(oracle) + ", expected 12");
    v.require(brute_end_dim(y.endo.summands) == 12, "Hom-space oracle disagrees with dim E");
    const std::size_t semisimple = y.E().dim() - radical(y.E()).dim();
    v.require(y.classes.size() == 4, str(y.classes.size()) + " summand classes, expected 4");
    v.require(semisimple == 4, "dim E/J(E) = " + str(semisimple) + ", expected 4");
    std::size_t proj = 0;
    for (auto& c : y.classes) {
        Module part = compress(y.X(), y.parts.proj[c.part], y.parts.incl[c.part]);
        const bool p = projective_by_norm(y, part);
        proj += p;
        v.require(c.projective == p, "part " + str(c.part) + ": projectivity disagrees with the norm oracle");
        v.require(c.injective_left == p, "part " + str(c.part) + ": E iota injectivity disagrees");
        v.require(c.injective_right == p, "part " + str(c.part) + ": iota E injectivity disagrees");
    }
    v.require(proj == 2, str(proj) + " projective classes, expected 2");
    return v;
}

Verdict corner_recovery()
{
    Verdict v;
    for (auto& fxt : kCorners) {
        auto y = yoshida_algebra(fxt.group(), 3);
        auto ctx = proj_inj_corner(y);
        const std::string n = fxt.name;
        v.require(ctx.corner.alg.dim() == fxt.dim, n + ": corner dim " + str(ctx.corner.alg.dim()));
        auto iso = verify_corner_is_Aop(ctx, y.endo);
        if (!iso.ok) {
            v.fail(n + ": " + iso.diagnostic);
            continue;
        }
        const Algebra& a = y.A();
        const Algebra& c = ctx.corner.alg;
        if (iso.map.rows() != c.dim() || iso.map.cols() != c.dim() || !is_invertible(iso.map)) {
            v.fail(n + ": map is not bijective");
            continue;
        }
        v.require(iso.map.apply(c.unit()) == a.unit(), n + ": unit not preserved");
        for (std::size_t i = 0; i < c.dim(); ++i)
            for (std::size_t j = 0; j < c.dim(); ++j) {
                Vec lhs = iso.map.apply(c.product_basis(i, j));
                Vec rhs = a.mul(iso.map.col_vec(j), iso.map.col_vec(i));
                if (lhs != rhs) {
                    v.fail(n + ": map is not anti-multiplicative at (" + str(i) + ", " + str(j) + ")");
                    i = c.dim();
                    break;
                }
            }
    }
    return v;
}

Verdict selfinjective_corners()
{
    Verdict v;
    for (auto grp : {fx::s3, fx::c3, fx::a4, fx::trivial_group})
        for (std::uint64_t p : {2u, 3u}) {
            auto g = grp();
            const auto nblocks = central_primitive_idempotents(group_algebra(g, p)).size();
            for (std::size_t b = 0; b < nblocks; ++b) {
                auto y = yoshida_algebra(g, p, b);
                auto ctx = proj_inj_corner(y);
                v.require(is_injective(regular_module(ctx.corner.alg)),
                          "|G| = " + str(g.order()) + ", p = " + str(p) + ", block " + str(b) + ": corner not selfinjective");
            }
        }
    return v;
}

Verdict emf_samples()
{
    Verdict v;
    std::uint64_t seed = 4000;
    for (auto& fxt : kCorners) {
        auto y = yoshida_algebra(fxt.group(), 3);
        auto ctx = proj_inj_corner(y);
        const Algebra& e = y.E();
        Module ae = left_ideal(e, ctx.e);
        Module ea = detail::right_ideal_module(e, ctx.e);
        Rng rng(seed++);
        std::size_t good = 0;
        for (int t = 0; t < 100; ++t) {
            const bool left = t % 2 == 0;
            Module u = left ? random_in_add(ae, rng) : random_module(e, rng);
            Module w = left ? random_module(e.opposite(), rng) : random_in_add(ea, rng);
            auto r = check_eMf_identity(e, ctx.e, u, w);
            good += r.bijective && r.big_dim == brute_tensor_dim(w, u);
        }
        v.require(good == 100, std::string(fxt.name) + ": " + str(good) + "/100 samples bijective");
    }
    return v;
}

struct GenVar {
    YoshidaData y = yoshida_algebra(fx::s3(), 3);
    EndoSide x = side_of(y);
    Module pt = fx::pim_of(y.A(), fx::triv(y.group, y.A()));
    EndoSide xp = make_side(y.A(), with_pt());
    MoritaCertificate cert = generator_variation_certificate(x.endo, xp.endo);

    std::vector<Module> with_pt() const
    {
        auto s = y.endo.summands;
        s.push_back(pt);
        return s;
    }
};

const GenVar& genvar()
{
    static const GenVar g;
    return g;
}

Verdict theorem_morita()
{
    Verdict v;
    const auto& s = genvar();
    const Module& x = s.y.X();
    const std::size_t oracle = brute_hom_dim(x, x) + brute_hom_dim(x, s.pt) + brute_hom_dim(s.pt, x) + brute_hom_dim(s.pt, s.pt);
    v.require(s.cert.E.dim() == 12, "dim End(X) = " + str(s.cert.E.dim()));
    v.require(s.cert.F.dim() == 22, "dim End(X + P) = " + str(s.cert.F.dim()));
    v.require(oracle == 22, "Hom oracle gives " + str(oracle));
    v.merge(verify_morita(s.cert), "input: ");
    auto rep = transport_morita(s.cert, s.x.corner_idem, s.xp.corner_idem);
    v.merge(rep.verdict, "transported: ");
    v.merge(verify_morita(rep.output), "reverified: ");
    v.merge(check_add_correspondence(rep, s.x, s.xp), "add: ");
    v.require(rep.add_match.size() == s.x.parts.class_reps().size() &&
                  rep.add_match.size() == s.xp.parts.class_reps().size(),
              "add correspondence is not a bijection on classes");
    return v;
}

Verdict theorem_derived()
{
    Verdict v;
    auto y = yoshida_algebra(fx::s3(), 3);
    EndoSide side = side_of(y);
    const Vec& e = side.corner_idem;
    auto id = morita_to_rickard(identity_certificate(y.E()));
    Vec eps = non_projective_idem(y);
    Bimodule w = corner_padding(y.E(), eps, y.E(), eps);
    struct Case {
        std::string name;
        RickardCertificate c;
    };
    std::vector<Case> cases{{"identity", id},
                            {"shift 2", shift_certificate(id, 2)},
                            {"shift -2", shift_certificate(id, -2)},
                            {"padded", pad_certificate(id, w, w, 0)},
                            {"padded shift 2", shift_certificate(pad_certificate(id, w, w, -1), 2)}};
    auto run = [&](const std::string& name, const RickardCertificate& c, const Vec& ee, const Vec& ff) {
        auto r = transport_derived(c, ee, ff);
        v.merge(r.verdict, name + ": ");
        v.require(r.split.verdict.ok, name + ": corner split violates the boundedness lemma");
        v.require(is_contractible(r.split.n1()), name + ": N1 is not contractible");
        if (r.verdict.ok) v.merge(verify_derived(r.output), name + " reverified: ");
        return r;
    };
    for (auto& cs : cases) run(cs.name, cs.c, e, e);

    const auto& s = genvar();
    auto mrep = transport_morita(s.cert, s.x.corner_idem, s.xp.corner_idem);
    auto drep = run("degree 0", morita_to_rickard(s.cert), s.x.corner_idem, s.xp.corner_idem);
    const auto& o = drep.output;
    v.require(o.M.lo() == 0 && o.M.hi() == 0 && o.N.lo() == 0 && o.N.hi() == 0, "degree 0: output not in degree 0");
    v.require(o.M.at(0) == mrep.output.M && o.N.at(0) == mrep.output.N, "degree 0: bimodules differ from the Morita transport");
    v.require(o.qis_E.map.at(0) == mrep.output.witness_EM && o.qis_F.map.at(0) == mrep.output.witness_FN,
              "degree 0: witnesses differ from the Morita transport");
    return v;
}

Verdict minimization()
{
    Verdict v;
    const auto& s = ks3();
    for (int t = 0; t < 50; ++t) {
        Rng rng(static_cast<std::uint64_t>(t) * 7 + 900);
        Complex d = random_minimal(rng);
        Complex pad = d;
        const std::size_t ncones = 1 + rng.below(3);
        for (std::size_t k = 0; k < ncones; ++k) {
            const Bimodule& p = rng.below(2) ? s.bt : s.bs;
            pad = direct_sum(pad, cone_of_identity(p, 1 + static_cast<int>(rng.below(2))));
        }
        Complex c = scramble(pad, rng);
        auto m = minimize(c, static_cast<std::uint64_t>(t) + 1);
        const std::string n = "sample " + std::to_string(t);
        v.require(homology(c) == homology(m.c0), n + ": homology changed");
        for (int k = c.lo(); k <= c.hi(); ++k) {
            if (m.c0.dim(k) != d.dim(k)) {
                v.fail(n + ": degree " + std::to_string(k) + " has dim " + str(m.c0.dim(k)) + ", expected " + str(d.dim(k)));
                continue;
            }
            if (d.dim(k) && !is_isomorphic(m.c0.at(k), d.at(k))) v.fail(n + ": degree " + std::to_string(k) + " not isomorphic");
        }
    }
    return v;
}

Verdict nilpotent()
{
    Verdict v;
    auto a4 = nilpotent_probe(fx::a4(), 3);
    v.require(a4.consistent, "A4: probe inconsistent");
    v.require(a4.basic_dim == 3, "A4: basic algebra dim " + str(a4.basic_dim));
    v.require(a4.local && a4.commutative, "A4: basic algebra not local commutative");
    v.require(a4.radical_series == std::vector<std::size_t>{3, 2, 1}, "A4: radical series differs from (3, 2, 1)");
    auto s3 = nilpotent_probe(fx::s3(), 3);
    v.require(!s3.consistent, "S3: probe consistent");
    auto ya = yoshida_algebra(fx::a4(), 3, principal_block_index(group_algebra(fx::a4(), 3),
                                                                 central_primitive_idempotents(group_algebra(fx::a4(), 3))));
    auto yc = yoshida_algebra(fx::c3(), 3);
    v.require(ya.E().dim() == 6 && yc.E().dim() == 6,
              "Yoshida dims " + str(ya.E().dim()) + " and " + str(yc.E().dim()) + ", expected 6 and 6");
    v.require(derived_invariants(ya.E()) == derived_invariants(yc.E()), "derived invariants differ");
    return v;
}

// Every invariant of one group algebra kG.
void group_suite(Verdict& v, const PermGroup& g, std::uint64_t p, Rng& rng, const std::string& tag)
{
    const Algebra a = group_algebra(g, p);
    v.require(complete_orthogonal(a, lift_idempotents(a)), tag + ": primitive idempotents");
    auto bs = central_primitive_idempotents(a);
    v.require(complete_orthogonal(a, bs), tag + ": block idempotents");
    for (auto& b : bs) v.require(a.is_central(b), tag + ": block idempotent not central");

    const PimData& pd = pim_data(a);
    std::size_t total = 0, count = 0;
    for (std::size_t c = 0; c < pd.pims.size(); ++c) {
        total += pd.multiplicity[c] * pd.pims[c].dim();
        count += pd.multiplicity[c];
    }
    v.require(total == a.dim(), tag + ": sum of m_i dim P_i = " + str(total));
    v.require(decompose(regular_module(a)).size() == count, tag + ": multiplicities disagree with decompose");
    auto cd = cartan_matrix(a);
    for (std::size_t i = 0; i < cd.c.size(); ++i) {
        std::size_t s = 0;
        for (std::size_t k = 0; k < cd.c.size(); ++k) s += static_cast<std::size_t>(cd.c[i][k]) * cd.simple_dims[k];
        v.require(s == cd.pim_dims[i], tag + ": Cartan row " + str(i) + " inconsistent");
    }

    std::vector<Module> ms;
    for (auto& q : subgroup_class_reps(g, sylow_subgroup(g, p)).reps) ms.push_back(permutation_module(g, a, q));
    ms.push_back(permutation_module(g, a, g.all()));
    for (auto& m : pd.pims) ms.push_back(m);
    for (auto& m : ms) v.require(dual(dual(m)) == m, tag + ": dual is not an involution");
    for (auto& m : pd.pims) v.require(is_isomorphic(nakayama(m), m).has_value(), tag + ": nu(P) not isomorphic to P");

    // complexes of projectives: random two-term complex, cones, shifts, sums and minimal parts
    const Bimodule p0 = Bimodule::from_left(pd.pims[rng.below(pd.pims.size())]);
    const Bimodule p1 = Bimodule::from_left(pd.pims[rng.below(pd.pims.size())]);
    MapSpace h = hom_space(p1, p0);
    Matrix d(a.field(), p0.dim(), p1.dim());
    for (auto& b : h.basis) d.axpy(rng.residue(a.field()), b);
    Complex c(p0.left_algebra(), p0.right_algebra(), 0, {p0, p1}, {d});
    Complex k = cone(identity_map(c));
    Complex sum = direct_sum(c, shift(k, -1));
    auto m = minimize(sum, rng.below(1000) + 1);
    for (const Complex* x : {&c, &k, &sum, &m.c0, &m.c1})
        v.require(square_zero(*x), tag + ": d^2 != 0");

    ChainMap incl = sum_inclusion(sum, c, shift(k, -1), true);
    auto w = homotopy_inverse(incl);
    if (!w) {
        v.fail(tag + ": no homotopy inverse of the inclusion into C + cone");
    } else {
        v.merge(verify_homotopy_equivalence(*w), tag + ": ");
        v.require(homotopy_identity(w->f, w->g, w->hs), tag + ": g f - 1 != d h + h d");
    }
    auto nh = null_homotopy(identity_map(k));
    v.require(nh && is_homotopy(identity_map(k), *nh), tag + ": cone of the identity not contractible");
}

Verdict invariant_suites()
{
    Verdict v;
    Rng rng(77);
    for (auto grp : {fx::s3, fx::c3, fx::a4, fx::trivial_group})
        for (std::uint64_t p : {2u, 3u}) {
            auto g = grp();
            group_suite(v, g, p, rng, "fixture |G| = " + str(g.order()) + " p = " + str(p));
        }
    // Morita and Rickard witness identities on the fixture Yoshida algebras
    for (auto& fxt : kCorners) {
        auto y = yoshida_algebra(fxt.group(), 3);
        auto c = identity_certificate(y.E());
        v.merge(verify_morita(c), std::string(fxt.name) + " identity Morita: ");
        v.merge(verify_rickard(shift_certificate(morita_to_rickard(c), 1)), std::string(fxt.name) + " shifted Rickard: ");
        for (auto& cl : y.classes)
            v.require(cl.projective == cl.injective_left && cl.projective == cl.injective_right,
                      std::string(fxt.name) + ": summand conditions disagree");
    }
    for (int t = 0; t < 20; ++t) {
        const std::uint64_t p = t % 2 ? 3 : 2;
        auto g = random_small_group(static_cast<std::uint64_t>(t) * 2654435761u + 99, 48);
        group_suite(v, g, p, rng, "random " + std::to_string(t) + " |G| = " + str(g.order()) + " p = " + str(p));
        auto y = yoshida_algebra(g, p);
        v.require(y.E().dim() == brute_end_dim(y.endo.summands), "random " + std::to_string(t) + ": dim E disagrees with Hom oracle");
    }
    return v;
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"Yoshida construction for S3 at p = 3", yoshida_s3},
        {"corner recovery eEe = (kGb)^op for S3, C3, A4", corner_recovery},
        {"projective-injective corners are selfinjective", selfinjective_corners},
        {"natural map eMf bijective on 100 samples per fixture", emf_samples},
        {"Morita transport of a generator variation", theorem_morita},
        {"derived transport of identity, shifted and padded certificates", theorem_derived},
        {"minimization of 50 padded complexes over kS3", minimization},
        {"nilpotent block probe", nilpotent},
        {"invariant suites on fixtures and 20 random groups", invariant_suites},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v.fail(std::string("exception: ") + e.what());
        }
        std::cout << (v.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << '\n';
        for (auto& f : v.failures) std::cout << "    " << f << '\n';
        std::cout.flush();
        failed += !v.ok;
    }
    return failed ? 1 : 0;
}
