#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "complex.hpp"
#include "mackey.hpp"
#include "morita.hpp"

namespace yw {

/// Complexes M (E-F) and N (F-E) with homotopy equivalences
/// M (x)_F N ~ E[0] and N (x)_E M ~ F[0].
struct RickardCertificate {
    Algebra E, F;
    Complex M, N;
    HomotopyEquivalence htpy_E, htpy_F;  ///< f: total complex -> regular bimodule in degree 0
};

namespace detail {

inline void check_product(Verdict& v, const std::string& name, const HomotopyEquivalence& w, const Complex& total,
                          const Algebra& a)
{
    const Complex unit = concentrated(regular_bimodule(a));
    if (!(w.f.src == total) || !(w.f.dst == unit) || !(w.g.src == unit) || !(w.g.dst == total)) {
        v.fail(name + ": maps are not between the tensor product and the regular bimodule");
        return;
    }
    v.merge(verify_homotopy_equivalence(w), name + ": ");
}

inline void check_one_sided(Verdict& v, const std::string& name, const Complex& c, const char* l, const char* r,
                            std::uint64_t seed)
{
    for (int n = c.lo(); n <= c.hi(); ++n) {
        if (!c.dim(n)) continue;
        const std::string at = name + " degree " + std::to_string(n);
        v.require(is_projective(c.at(n).left(), seed), at + " not projective as a left " + l + "-module");
        v.require(is_projective(c.at(n).right(), seed), at + " not projective as a right " + r + "-module");
    }
}

inline bool validates(Verdict& v, const std::string& name, const Complex& c)
{
    try {
        c.validate();
        return true;
    } catch (const std::invalid_argument& e) {
        v.fail(name + ": " + e.what());
        return false;
    }
}

// (-1)^{k i} on the block of M-degree i of a tensor total, in total degree n.
inline Matrix sign_twist(const TensorComplex& t, int k, int n)
{
    const Field& f = t.total.field();
    Matrix s = Matrix::identity(f, t.total.dim(n));
    const int idx = n - t.lo;
    if (idx < 0 || idx >= static_cast<int>(t.blocks.size())) return s;
    for (auto& b : t.blocks[static_cast<std::size_t>(idx)])
        if ((k * b.i) % 2)
            for (std::size_t r = 0; r < b.t.dim(); ++r) s(b.offset + r, b.offset + r) = f.neg(1);
    return s;
}

inline HomotopyEquivalence twisted(const HomotopyEquivalence& w, const TensorComplex& old, const Complex& total, int k)
{
    HomotopyEquivalence out;
    const Complex& unit = w.f.dst;
    out.f = make_chain_map(total, unit, [&](int n) { return w.f.at(n) * sign_twist(old, k, n); });
    out.g = make_chain_map(unit, total, [&](int n) { return sign_twist(old, k, n) * w.g.at(n); });
    out.hs.lo = w.hs.lo;
    for (std::size_t i = 0; i < w.hs.h.size(); ++i) {
        const int n = w.hs.lo + static_cast<int>(i);
        out.hs.h.push_back(sign_twist(old, k, n + 1) * w.hs.h[i] * sign_twist(old, k, n));
    }
    out.ht = w.ht;
    return out;
}

}  // namespace detail

[[nodiscard]] inline Verdict verify_rickard(const RickardCertificate& c, std::uint64_t seed = 1)
{
    Verdict v;
    if (!c.M.left_algebra().same_as(c.E) || !c.M.right_algebra().same_as(c.F) || !c.N.left_algebra().same_as(c.F) ||
        !c.N.right_algebra().same_as(c.E)) {
        v.fail("complex algebras do not match E and F");
        return v;
    }
    if (!detail::validates(v, "M", c.M) || !detail::validates(v, "N", c.N)) return v;
    detail::check_product(v, "htpy_E", c.htpy_E, tensor_complexes(c.M, c.N).total, c.E);
    detail::check_product(v, "htpy_F", c.htpy_F, tensor_complexes(c.N, c.M).total, c.F);
    detail::check_one_sided(v, "M", c.M, "E", "F", seed);
    detail::check_one_sided(v, "N", c.N, "F", "E", seed);
    return v;
}

/// A Morita certificate as complexes in degree 0 with zero homotopies.
[[nodiscard]] inline RickardCertificate morita_to_rickard(const MoritaCertificate& m)
{
    RickardCertificate c{m.E, m.F, concentrated(m.M), concentrated(m.N), {}, {}};
    auto embed = [](const Complex& total, const Algebra& a, const Matrix& w) {
        auto inv = w.rows() == w.cols() ? inverse(w) : std::nullopt;
        if (!inv) throw PreconditionError("morita_to_rickard: witness is not invertible");
        const Complex unit = concentrated(regular_bimodule(a));
        HomotopyEquivalence h;
        h.f = make_chain_map(total, unit, [&](int) { return w; });
        h.g = make_chain_map(unit, total, [&](int) { return *inv; });
        h.hs = zero_homotopy(total, total);
        h.ht = zero_homotopy(unit, unit);
        return h;
    };
    c.htpy_E = embed(tensor_complexes(c.M, c.N).total, m.E, m.witness_EM);
    c.htpy_F = embed(tensor_complexes(c.N, c.M).total, m.F, m.witness_FN);
    return c;
}

/// M[k] and N[-k] with witnesses twisted by (-1)^{k i} on M-degree (resp. N-degree) i.
[[nodiscard]] inline RickardCertificate shift_certificate(const RickardCertificate& c, int k)
{
    RickardCertificate out{c.E, c.F, shift(c.M, k), shift(c.N, -k), {}, {}};
    TensorComplex mn = tensor_complexes(c.M, c.N), nm = tensor_complexes(c.N, c.M);
    out.htpy_E = detail::twisted(c.htpy_E, mn, tensor_complexes(out.M, out.N).total, k);
    out.htpy_F = detail::twisted(c.htpy_F, nm, tensor_complexes(out.N, out.M).total, k);
    return out;
}

/// cone(id) on w, in degrees n and n + 1.
[[nodiscard]] inline Complex identity_cone(const Bimodule& w, int n)
{
    return cone(identity_map(concentrated(w, n)));
}

/// E eps (x)_k eps' F, a projective E-F-bimodule.
[[nodiscard]] inline Bimodule corner_padding(const Algebra& e, const Vec& eps, const Algebra& f, const Vec& epsp)
{
    return tensor(Bimodule::from_left(left_ideal(e, eps)), Bimodule::from_right(detail::right_ideal_module(f, epsp))).result;
}

/// M + cone(id_wm) and N + cone(id_wn), both cones in degrees n and n + 1; the
/// new witnesses are f composed with the projection, completed by a joint solve.
[[nodiscard]] inline RickardCertificate pad_certificate(const RickardCertificate& c, const Bimodule& wm,
                                                        const Bimodule& wn, int n)
{
    const Complex cm = identity_cone(wm, n), cn = identity_cone(wn, n);
    RickardCertificate out{c.E, c.F, direct_sum(c.M, cm), direct_sum(c.N, cn), {}, {}};
    const ChainMap pm = sum_projection(out.M, c.M, cm, true), pn = sum_projection(out.N, c.N, cn, true);
    auto complete = [](const HomotopyEquivalence& w, const TensorComplex& big, const TensorComplex& small,
                       const ChainMap& p, const ChainMap& q) {
        auto h = homotopy_inverse(compose(w.f, tensor_chain_map(big, small, p, q)));
        if (!h) throw InvariantViolation("pad_certificate: padded map is not a homotopy equivalence");
        return *h;
    };
    out.htpy_E = complete(c.htpy_E, tensor_complexes(out.M, out.N), tensor_complexes(c.M, c.N), pm, pn);
    out.htpy_F = complete(c.htpy_F, tensor_complexes(out.N, out.M), tensor_complexes(c.N, c.M), pn, pm);
    return out;
}

/// eCf degreewise, with the condensed components.
struct CondensedComplex {
    Complex c;
    std::vector<CondensedBimodule> parts;  ///< per degree from c.lo()
};

[[nodiscard]] inline CondensedComplex condense_complex(const Complex& c, const Subalgebra* le, const Subalgebra* rf)
{
    CondensedComplex out;
    std::vector<Bimodule> comps;
    std::vector<Matrix> diffs;
    for (int n = c.lo(); n <= c.hi(); ++n) {
        out.parts.push_back(condense_bimodule(c.at(n), le, rf));
        comps.push_back(out.parts.back().result);
        if (n > c.lo()) {
            const auto& lower = out.parts[out.parts.size() - 2];
            diffs.push_back(lower.proj * c.d(n) * out.parts.back().incl);
        }
    }
    const Algebra& l = le ? le->alg : c.left_algebra();
    const Algebra& r = rf ? rf->alg : c.right_algebra();
    out.c = Complex(l, r, c.lo(), std::move(comps), std::move(diffs));
    return out;
}

[[nodiscard]] inline ChainMap condensed_inclusion(const CondensedComplex& cc, const Complex& c)
{
    return make_chain_map(cc.c, c, [&](int n) {
        if (!cc.c.in_range(n)) return Matrix(c.field(), c.dim(n), 0);
        return cc.parts[static_cast<std::size_t>(n - cc.c.lo())].incl;
    });
}

/// Whether every indecomposable summand of every component lies in add(gen), as left modules.
[[nodiscard]] inline Verdict projinj_components_check(const Complex& c, const Module& gen, std::uint64_t seed = 1)
{
    return check_components(
        c, [&](const Bimodule& b) { return in_add(b.left(), gen, seed); }, "not in add of the proj-inj corner", seed);
}

/// Ne as a complex of left F-modules, minimized into N0 + N1.
struct CornerSplit {
    Complex ne;
    Minimization parts;
    Verdict verdict;

    [[nodiscard]] const Complex& n0() const { return parts.c0; }
    [[nodiscard]] const Complex& n1() const { return parts.c1; }
};

[[nodiscard]] inline CornerSplit split_corner_complex(const Complex& n, const Vec& e, const Vec& f, std::uint64_t seed = 1)
{
    const Algebra& ealg = n.right_algebra();
    const Subalgebra ce = corner(ealg, e);
    CornerSplit s;
    s.ne = restrict_side(condense_complex(n, nullptr, &ce).c, Side::Left);
    s.parts = minimize(s.ne, seed);
    s.verdict.require(is_contractible(s.parts.c1), "N1 is not contractible");
    Verdict pi = projinj_components_check(s.parts.c0, left_ideal(n.left_algebra(), f), seed);
    if (!pi.ok) throw InvariantViolation("split_corner_complex: " + pi.failures.front());
    return s;
}

/// Quasi-isomorphism of bimodule complexes with homotopy inverses of its
/// left and right restrictions.
struct QisWitness {
    ChainMap map;
    HomotopyEquivalence left, right;
};

struct DerivedCertificate {
    Algebra E, F;  ///< eEe and fFf
    Complex M, N;  ///< eMf and fNe
    QisWitness qis_E, qis_F;
    DerivedInvariants inv_E, inv_F;
};

namespace detail {

inline ChainMap restricted(const ChainMap& m, Side side)
{
    return {restrict_side(m.src, side), restrict_side(m.dst, side), m.lo, m.f};
}

inline void check_qis(Verdict& v, const std::string& name, const QisWitness& q, const Complex& total, const Algebra& a)
{
    const Complex unit = concentrated(regular_bimodule(a));
    if (!(q.map.src == total) || !(q.map.dst == unit)) {
        v.fail(name + ": map is not between the tensor product and the regular bimodule");
        return;
    }
    v.require(is_chain_map(q.map), name + ": not a chain map");
    v.require(is_quasi_isomorphism(q.map), name + ": not a quasi-isomorphism");
    for (auto [side, w, label] : {std::tuple{Side::Left, &q.left, "left"}, std::tuple{Side::Right, &q.right, "right"}}) {
        const ChainMap r = restricted(q.map, side);
        if (!(w->f.src == r.src) || !(w->f.dst == r.dst) || w->f.f != r.f) {
            v.fail(name + ": " + label + " witness is not the restriction of the map");
            continue;
        }
        v.merge(verify_homotopy_equivalence(*w), name + " " + label + ": ");
    }
}

}  // namespace detail

[[nodiscard]] inline Verdict verify_derived(const DerivedCertificate& c, std::uint64_t seed = 1)
{
    Verdict v;
    if (!c.M.left_algebra().same_as(c.E) || !c.M.right_algebra().same_as(c.F) || !c.N.left_algebra().same_as(c.F) ||
        !c.N.right_algebra().same_as(c.E)) {
        v.fail("complex algebras do not match E and F");
        return v;
    }
    if (!detail::validates(v, "M", c.M) || !detail::validates(v, "N", c.N)) return v;
    detail::check_qis(v, "qis_E", c.qis_E, tensor_complexes(c.M, c.N).total, c.E);
    detail::check_qis(v, "qis_F", c.qis_F, tensor_complexes(c.N, c.M).total, c.F);
    v.require(c.inv_E == derived_invariants(c.E, seed) && c.inv_F == derived_invariants(c.F, seed),
              "invariants table does not match the corners");
    v.require(c.inv_E == c.inv_F, "derived invariants of the corners differ");
    return v;
}

struct DerivedReport {
    DerivedCertificate output;
    Vec e, f;
    Subalgebra ce, cf;
    CondensedComplex eMf, fNe;
    CornerSplit split;
    Verdict verdict;
};

namespace detail {

// eMf (x) fNe -> eM (x)_F Ne -> eEe[0] and its one-sided homotopy inverses.
inline QisWitness corner_qis(Verdict& v, const std::string& name, const CondensedComplex& m, const CondensedComplex& n,
                             const Complex& big_m, const Complex& big_n, const HomotopyEquivalence& w,
                             const Subalgebra& c)
{
    TensorComplex small = tensor_complexes(m.c, n.c), big = tensor_complexes(big_m, big_n);
    ChainMap nat = tensor_chain_map(small, big, condensed_inclusion(m, big_m), condensed_inclusion(n, big_n));
    const Complex unit = concentrated(regular_bimodule(c.alg));
    QisWitness q;
    q.map = make_chain_map(small.total, unit, [&](int d) {
        if (d != 0) return Matrix(c.alg.field(), 0, small.total.dim(d));
        return into_corner(c, w.f.at(0) * nat.at(0));
    });
    if (!is_quasi_isomorphism(q.map)) {
        v.fail(name + ": corner map is not a quasi-isomorphism");
        return q;
    }
    for (auto side : {Side::Left, Side::Right}) {
        auto h = homotopy_inverse(restricted(q.map, side));
        if (!h) {
            v.fail(name + ": no " + (side == Side::Left ? "left" : "right") + " homotopy inverse");
            continue;
        }
        (side == Side::Left ? q.left : q.right) = std::move(*h);
    }
    return q;
}

}  // namespace detail

/// eMf, fNe with corner quasi-isomorphisms to eEe and fFf, verified from scratch.
[[nodiscard]] inline DerivedReport transport_derived(const RickardCertificate& cert, const Vec& e, const Vec& f,
                                                     std::uint64_t seed = 1)
{
    DerivedReport r;
    r.e = e;
    r.f = f;
    r.verdict.merge(verify_rickard(cert, seed), "input: ");
    if (!r.verdict.ok) return r;
    r.ce = corner(cert.E, e);
    r.cf = corner(cert.F, f);
    r.eMf = condense_complex(cert.M, &r.ce, &r.cf);
    r.fNe = condense_complex(cert.N, &r.cf, &r.ce);
    r.split = split_corner_complex(cert.N, e, f, seed);
    r.verdict.merge(r.split.verdict, "split: ");
    DerivedCertificate& o = r.output;
    o.E = r.ce.alg;
    o.F = r.cf.alg;
    o.M = r.eMf.c;
    o.N = r.fNe.c;
    o.qis_E = detail::corner_qis(r.verdict, "qis_E", r.eMf, r.fNe, cert.M, cert.N, cert.htpy_E, r.ce);
    o.qis_F = detail::corner_qis(r.verdict, "qis_F", r.fNe, r.eMf, cert.N, cert.M, cert.htpy_F, r.cf);
    o.inv_E = derived_invariants(o.E, seed);
    o.inv_F = derived_invariants(o.F, seed);
    if (!r.verdict.ok) return r;
    r.verdict.merge(verify_derived(o, seed));
    return r;
}

/// Necessary signatures of nilpotency for the principal block.
struct NilpotentProbe {
    std::size_t sylow_order = 0;
    std::size_t basic_dim = 0;
    bool local = false, commutative = false;
    std::vector<std::size_t> radical_series, sylow_radical_series;  ///< dims of J^0, J^1, ... while nonzero
    std::size_t block_yoshida_dim = 0, sylow_yoshida_dim = 0;
    DerivedInvariants block_inv, sylow_inv;
    bool consistent = false;
    std::vector<std::string> diagnostics;
};

namespace detail {

inline std::vector<std::size_t> nonzero_series(const Algebra& a, std::uint64_t seed)
{
    auto s = radical_series_dims(a, seed);
    while (!s.empty() && s.back() == 0) s.pop_back();
    return s;
}

}  // namespace detail

[[nodiscard]] inline NilpotentProbe nilpotent_probe(const PermGroup& g, std::uint64_t p, std::uint64_t seed = 1)
{
    NilpotentProbe r;
    YoshidaData yb = yoshida_algebra(g, p, std::nullopt, seed);
    PermGroup sp = subgroup(g, sylow_subgroup(g, p));
    YoshidaData ys = yoshida_algebra(sp, p, std::nullopt, seed);
    r.sylow_order = sp.order();
    Subalgebra basic = basic_algebra(yb.A(), seed);
    r.basic_dim = basic.alg.dim();
    r.local = pim_data(basic.alg, seed).pims.size() == 1;
    r.commutative = basic.alg.is_commutative();
    r.radical_series = detail::nonzero_series(basic.alg, seed);
    r.sylow_radical_series = detail::nonzero_series(ys.A(), seed);
    r.block_yoshida_dim = yb.E().dim();
    r.sylow_yoshida_dim = ys.E().dim();
    r.block_inv = derived_invariants(yb.E(), seed);
    r.sylow_inv = derived_invariants(ys.E(), seed);
    auto note = [&](bool ok, const std::string& what) {
        if (!ok) r.diagnostics.push_back(what);
    };
    note(r.local, "basic algebra of the principal block has " + std::to_string(pim_data(basic.alg, seed).pims.size()) +
                      " simples");
    note(r.commutative, "basic algebra of the principal block is not commutative");
    note(r.basic_dim == r.sylow_order, "basic algebra dimension " + std::to_string(r.basic_dim) +
                                           " differs from the Sylow order " + std::to_string(r.sylow_order));
    note(r.radical_series == r.sylow_radical_series, "radical series differs from that of the Sylow group algebra");
    note(r.block_inv == r.sylow_inv, "derived invariants of the Yoshida algebras differ");
    r.consistent = r.diagnostics.empty();
    return r;
}

}  // namespace yw
