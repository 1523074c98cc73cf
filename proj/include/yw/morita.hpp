#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cartan.hpp"
#include "condense.hpp"
#include "verdict.hpp"

namespace yw {

/// Bimodules M (E-F), N (F-E) with witnesses M (x)_F N -> E and N (x)_E M -> F,
/// written against the canonical tensor bases.
struct MoritaCertificate {
    Algebra E, F;
    Bimodule M, N;
    Matrix witness_EM, witness_FN;
};

/// Linear map M (x)_B N -> T from a pairing on basis vectors.
[[nodiscard]] inline Matrix pairing_witness(const TensorProduct& t, std::size_t target_dim,
                                            const std::function<Vec(std::size_t, std::size_t)>& pair)
{
    const Field& f = t.result.field();
    Matrix mu(f, target_dim, t.dm * t.dn);
    for (std::size_t a = 0; a < t.dm; ++a)
        for (std::size_t b = 0; b < t.dn; ++b) {
            Vec v = pair(a, b);
            for (std::size_t r = 0; r < target_dim; ++r) mu(r, a * t.dn + b) = v[r];
        }
    return mu * t.sect;
}

namespace detail {

inline bool is_bimodule_map_to_regular(const Matrix& w, const Bimodule& src, const Algebra& e)
{
    for (auto g : e.generators()) {
        if (w * src.lact(g) != e.left(g) * w) return false;
        if (w * src.ract(g) != e.right(g) * w) return false;
    }
    return true;
}

inline void check_witness(Verdict& v, const std::string& name, const Matrix& w, const TensorProduct& t, const Algebra& e)
{
    if (w.rows() != e.dim() || w.cols() != t.dim()) {
        v.fail(name + ": shape mismatch");
        return;
    }
    v.require(is_bimodule_map_to_regular(w, t.result, e), name + ": not a bimodule map");
    v.require(w.rows() == w.cols() && is_invertible(w), name + ": not bijective");
}

}  // namespace detail

[[nodiscard]] inline Verdict verify_morita(const MoritaCertificate& c, std::uint64_t seed = 1)
{
    Verdict v;
    if (!c.M.left_algebra().same_as(c.E) || !c.M.right_algebra().same_as(c.F) || !c.N.left_algebra().same_as(c.F) ||
        !c.N.right_algebra().same_as(c.E)) {
        v.fail("bimodule algebras do not match E and F");
        return v;
    }
    TensorProduct mn = tensor(c.M, c.N), nm = tensor(c.N, c.M);
    detail::check_witness(v, "witness_EM", c.witness_EM, mn, c.E);
    detail::check_witness(v, "witness_FN", c.witness_FN, nm, c.F);
    v.require(is_projective(c.M.left(), seed), "M not projective as a left E-module");
    v.require(is_projective(c.M.right(), seed), "M not projective as a right F-module");
    v.require(is_projective(c.N.left(), seed), "N not projective as a left F-module");
    v.require(is_projective(c.N.right(), seed), "N not projective as a right E-module");
    return v;
}

/// M = N = E with multiplication witnesses.
[[nodiscard]] inline MoritaCertificate identity_certificate(const Algebra& e)
{
    Bimodule r = regular_bimodule(e);
    TensorProduct t = tensor(r, r);
    Matrix w = pairing_witness(t, e.dim(), [&](std::size_t a, std::size_t b) { return e.product_basis(a, b); });
    return {e, e, r, r, w, w};
}

/// Hom_A(Y, X) as an End(X)-End(Y)-bimodule by composition.
struct HomBimodule {
    Bimodule bim;
    MapSpace space;
};

[[nodiscard]] inline HomBimodule hom_bimodule(const EndoAlgebraData& x, const EndoAlgebraData& y)
{
    const Field& f = x.base.field();
    MapSpace h = block_hom_space(f, y.summands, x.summands);
    std::vector<Matrix> la, ra;
    for (std::size_t i = 0; i < x.E.dim(); ++i) {
        Matrix ei = x.space.basis[i];
        Matrix m(f, h.dim(), h.dim());
        for (std::size_t k = 0; k < h.dim(); ++k) {
            Vec c = h.coords(ei * h.basis[k]);
            for (std::size_t r = 0; r < h.dim(); ++r) m(r, k) = c[r];
        }
        la.push_back(std::move(m));
    }
    for (std::size_t j = 0; j < y.E.dim(); ++j) {
        const Matrix& fj = y.space.basis[j];
        Matrix m(f, h.dim(), h.dim());
        for (std::size_t k = 0; k < h.dim(); ++k) {
            Vec c = h.coords(h.basis[k] * fj);
            for (std::size_t r = 0; r < h.dim(); ++r) m(r, k) = c[r];
        }
        ra.push_back(std::move(m));
    }
    return {Bimodule(x.E, y.E, h.dim(), std::move(la), std::move(ra)), std::move(h)};
}

/// Whether every indecomposable summand of u is isomorphic to one of v, and conversely.
[[nodiscard]] inline bool same_add(const Module& u, const Module& v, std::uint64_t seed = 1)
{
    return in_add(u, v, seed) && in_add(v, u, seed);
}

/// Morita certificate End(X) ~ End(X') from M = Hom_A(X', X), N = Hom_A(X, X').
[[nodiscard]] inline MoritaCertificate generator_variation_certificate(const EndoAlgebraData& x,
                                                                       const EndoAlgebraData& xp, std::uint64_t seed = 1)
{
    if (!x.base.same_as(xp.base)) throw PreconditionError("generator_variation: modules over different algebras");
    if (!same_add(x.total, xp.total, seed)) throw PreconditionError("generator_variation: add(X) differs from add(X')");
    Module reg = regular_module(x.base);
    if (!in_add(reg, x.total, seed) || !in_add(reg, xp.total, seed))
        throw PreconditionError("generator_variation: A is not in add(X) and add(X')");
    HomBimodule m = hom_bimodule(x, xp), n = hom_bimodule(xp, x);
    TensorProduct mn = tensor(m.bim, n.bim), nm = tensor(n.bim, m.bim);
    Matrix wem = pairing_witness(mn, x.E.dim(),
                                 [&](std::size_t a, std::size_t b) { return x.element(m.space.basis[a] * n.space.basis[b]); });
    Matrix wfn = pairing_witness(nm, xp.E.dim(),
                                 [&](std::size_t a, std::size_t b) { return xp.element(n.space.basis[a] * m.space.basis[b]); });
    return {x.E, xp.E, m.bim, n.bim, wem, wfn};
}

/// X with its decomposition and projective-injective corner idempotent.
struct EndoSide {
    EndoAlgebraData endo;
    Decomposition parts;
    Vec corner_idem;
};

[[nodiscard]] inline EndoSide make_side(const Algebra& a, const std::vector<Module>& summands, std::uint64_t seed = 1)
{
    EndoSide s;
    s.endo = endo_algebra(a, summands);
    s.parts = decompose(s.endo.total, seed);
    s.corner_idem = proj_inj_idempotent(s.endo, s.parts, seed);
    return s;
}

[[nodiscard]] inline EndoSide side_of(const YoshidaData& y) { return {y.endo, y.parts, proj_inj_corner(y).e}; }

struct TransportReport {
    MoritaCertificate output;
    Vec e, f;
    Subalgebra ce, cf;
    CondensedBimodule eMf, fNe;
    Verdict verdict;
    std::vector<std::pair<std::size_t, std::size_t>> add_match;  ///< class of X -> class of Y
};

namespace detail {

// Re-express a map into E (columns in E coordinates) in corner coordinates.
inline Matrix into_corner(const Subalgebra& c, const Matrix& w)
{
    Matrix out(w.field(), c.alg.dim(), w.cols());
    for (std::size_t k = 0; k < w.cols(); ++k) {
        auto v = c.space.try_coords(w.col_vec(k));
        if (!v) throw InvariantViolation("transported witness leaves the corner");
        for (std::size_t r = 0; r < c.alg.dim(); ++r) out(r, k) = (*v)[r];
    }
    return out;
}

}  // namespace detail

/// eMf and fNe with witnesses obtained from the input ones through the
/// natural map eMf (x)_{fFf} fNe -> M (x)_F N, then verified from scratch.
[[nodiscard]] inline TransportReport transport_morita(const MoritaCertificate& cert, const Vec& e, const Vec& f,
                                                      std::uint64_t seed = 1)
{
    TransportReport r;
    r.e = e;
    r.f = f;
    r.ce = corner(cert.E, e);
    r.cf = corner(cert.F, f);
    r.eMf = condense_bimodule(cert.M, &r.ce, &r.cf);
    r.fNe = condense_bimodule(cert.N, &r.cf, &r.ce);
    TensorProduct small_mn = tensor(r.eMf.result, r.fNe.result), big_mn = tensor(cert.M, cert.N);
    TensorProduct small_nm = tensor(r.fNe.result, r.eMf.result), big_nm = tensor(cert.N, cert.M);
    Matrix nat_mn = tensor_map(small_mn, big_mn, r.eMf.incl, r.fNe.incl);
    Matrix nat_nm = tensor_map(small_nm, big_nm, r.fNe.incl, r.eMf.incl);
    r.output = {r.ce.alg,
                r.cf.alg,
                r.eMf.result,
                r.fNe.result,
                detail::into_corner(r.ce, cert.witness_EM * nat_mn),
                detail::into_corner(r.cf, cert.witness_FN * nat_nm)};
    r.verdict = verify_morita(r.output, seed);
    return r;
}

/// Hom_A(V, X) as a left End(X)-module by composition.
[[nodiscard]] inline Module hom_into(const EndoAlgebraData& x, const Module& v)
{
    const Field& f = x.base.field();
    MapSpace h = hom_space(v, x.total);
    std::vector<Matrix> act;
    for (std::size_t i = 0; i < x.E.dim(); ++i) {
        Matrix m(f, h.dim(), h.dim());
        for (std::size_t k = 0; k < h.dim(); ++k) {
            Vec c = h.coords(x.space.basis[i] * h.basis[k]);
            for (std::size_t r = 0; r < h.dim(); ++r) m(r, k) = c[r];
        }
        act.push_back(std::move(m));
    }
    return Module(x.E, h.dim(), std::move(act));
}

/// Matches each summand class V of X with the class W of Y for which
/// fNe (x)_{eEe} e Hom_A(V, X) is isomorphic to f Hom_B(W, Y); verdict is
/// whether this is a bijection on classes.
[[nodiscard]] inline Verdict check_add_correspondence(TransportReport& rep, const EndoSide& x, const EndoSide& y,
                                                      std::uint64_t seed = 1)
{
    Verdict v;
    rep.add_match.clear();
    auto xr = x.parts.class_reps(), yr = y.parts.class_reps();
    std::vector<Module> targets;
    for (auto j : yr) {
        Module w = compress(y.endo.total, y.parts.proj[j], y.parts.incl[j]);
        targets.push_back(condense_module(rep.cf, hom_into(y.endo, w)));
    }
    std::vector<char> hit(yr.size(), 0);
    for (std::size_t c = 0; c < xr.size(); ++c) {
        Module vx = compress(x.endo.total, x.parts.proj[xr[c]], x.parts.incl[xr[c]]);
        Module ev = condense_module(rep.ce, hom_into(x.endo, vx));
        Module img = tensor_module(rep.fNe.result, ev);
        bool found = false;
        for (std::size_t k = 0; k < targets.size(); ++k)
            if (targets[k].dim() == img.dim() && is_isomorphic(img, targets[k], seed)) {
                rep.add_match.emplace_back(c, k);
                if (hit[k]) v.fail("class " + std::to_string(k) + " of Y matched twice");
                hit[k] = 1;
                found = true;
                break;
            }
        if (!found) v.fail("class " + std::to_string(c) + " of X unmatched");
    }
    for (std::size_t k = 0; k < hit.size(); ++k)
        if (!hit[k]) v.fail("class " + std::to_string(k) + " of Y not reached");
    return v;
}

[[nodiscard]] inline std::pair<DerivedInvariants, DerivedInvariants> morita_invariants(const Algebra& e, const Algebra& f,
                                                                                       std::uint64_t seed = 1)
{
    return {derived_invariants(e, seed), derived_invariants(f, seed)};
}

}  // namespace yw
