#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mackey.hpp"
#include "tensor.hpp"

namespace yw {

/// A corner eEe of E with its embedding.
struct CornerContext {
    Algebra E;
    Vec e;
    Subalgebra corner;
    std::string which;
};

[[nodiscard]] inline CornerContext make_corner(const Algebra& E, Vec e, std::string which)
{
    CornerContext c{E, e, corner(E, e), std::move(which)};
    return c;
}

/// e for an endomorphism algebra of X: one part idempotent per class whose
/// summands are projective.
[[nodiscard]] inline Vec proj_inj_idempotent(const EndoAlgebraData& d, const Decomposition& dec, std::uint64_t seed = 1)
{
    Vec e = d.E.zero();
    bool any = false;
    for (auto r : dec.class_reps())
        if (is_projective(compress(d.total, dec.proj[r], dec.incl[r]), seed)) {
            e = d.E.add(e, part_idempotent(d, dec, r));
            any = true;
        }
    if (!any) throw InvariantViolation("proj_inj_corner: no projective summand class");
    return e;
}

/// The image e(X) of an idempotent of E = End(X), as a module over the base algebra.
[[nodiscard]] inline Module image_module(const EndoAlgebraData& d, std::span<const Residue> e)
{
    return submodule(d.total, Subspace::column_space(d.map(e)));
}

[[nodiscard]] inline CornerContext proj_inj_corner(const YoshidaData& y)
{
    Vec e = y.E().zero();
    for (auto& c : y.classes)
        if (c.projective) e = y.E().add(e, y.part_idems[c.part]);
    if (is_zero(e)) throw InvariantViolation("proj_inj_corner: no projective summand class");
    return make_corner(y.E(), std::move(e), "one part idempotent per projective-injective summand class");
}

/// An explicit algebra isomorphism eEe -> A^op through restriction to e(X) = A.
struct CornerIsomorphism {
    bool ok = false;
    std::string diagnostic;
    Matrix map;      ///< dim A x dim eEe
    Matrix theta;    ///< A -> e(X) module isomorphism, as dim e(X) x dim A
};

[[nodiscard]] inline CornerIsomorphism verify_corner_is_Aop(const CornerContext& ctx, const EndoAlgebraData& d,
                                                            std::uint64_t seed = 1)
{
    CornerIsomorphism out;
    const Algebra& a = d.base;
    const Field& f = a.field();
    Subspace img = Subspace::column_space(d.map(ctx.e));
    Module ex = submodule(d.total, img);
    auto theta = is_isomorphic(regular_module(a), ex, seed);
    if (!theta) {
        out.diagnostic = "e(X) is not isomorphic to the regular module";
        return out;
    }
    out.theta = *theta;
    Matrix tinv = *inverse(*theta);
    Matrix incl = img.basis_columns(), proj = img.coord_map();
    const Subalgebra& c = ctx.corner;
    Matrix psi(f, a.dim(), c.alg.dim());
    Vec one_x = theta->apply(a.unit());
    for (std::size_t k = 0; k < c.alg.dim(); ++k) {
        // restriction of phi to e(X), then its value at theta(1) pulled back to A
        Matrix phi = proj * d.map(c.to_parent(c.alg.basis_vector(k))) * incl;
        Vec v = tinv.apply(phi.apply(one_x));
        for (std::size_t r = 0; r < a.dim(); ++r) psi(r, k) = v[r];
    }
    out.map = psi;
    if (!is_invertible(psi)) {
        out.diagnostic = "restriction map is not bijective";
        return out;
    }
    if (!is_algebra_map(c.alg, a.opposite(), psi)) {
        out.diagnostic = "restriction map is not a unital algebra map onto A^op";
        return out;
    }
    out.ok = true;
    return out;
}

/// Symmetrizing form of A^op pulled back along the corner isomorphism.
[[nodiscard]] inline std::optional<Vec> transported_symform(const CornerContext& ctx, const CornerIsomorphism& iso,
                                                            const Algebra& a)
{
    if (!iso.ok || !a.symform()) return std::nullopt;
    const Field& f = a.field();
    Vec s(ctx.corner.alg.dim(), 0);
    for (std::size_t k = 0; k < s.size(); ++k)
        for (std::size_t r = 0; r < a.dim(); ++r) s[k] = f.add(s[k], f.mul((*a.symform())[r], iso.map(r, k)));
    Algebra test(f, ctx.corner.alg.lefts(), ctx.corner.alg.unit(), s, false);
    if (!test.symform_ok()) return std::nullopt;
    return s;
}

[[nodiscard]] inline bool verify_selfinjective_corner(const CornerContext& ctx, std::uint64_t seed = 1)
{
    return is_injective(regular_module(ctx.corner.alg), seed);
}

/// e U as a module over the corner eEe.
[[nodiscard]] inline Module condense_module(const Subalgebra& c, const Module& u)
{
    const Algebra& e_alg = c.parent;
    if (!u.algebra().same_as(e_alg)) throw std::invalid_argument("condense_module: module over a different algebra");
    Subspace w = Subspace::column_space(u.action(c.to_parent(c.alg.unit())));
    Matrix incl = w.basis_columns(), proj = w.coord_map();
    std::vector<Matrix> act;
    act.reserve(c.alg.dim());
    for (std::size_t k = 0; k < c.alg.dim(); ++k) act.push_back(proj * u.action(c.embed.col_vec(k)) * incl);
    return Module(c.alg, w.dim(), std::move(act));
}

/// e M f as an eEe-fFf-bimodule, with its inclusion into M.
struct CondensedBimodule {
    Bimodule result;
    Matrix incl;  ///< dim M x dim eMf
    Matrix proj;  ///< dim eMf x dim M, the left inverse given by e . f
};

[[nodiscard]] inline CondensedBimodule condense_bimodule(const Bimodule& m, const Subalgebra* le, const Subalgebra* rf)
{
    const Field& f = m.field();
    Matrix cut = Matrix::identity(f, m.dim());
    if (le) cut = m.left_action(le->to_parent(le->alg.unit())) * cut;
    if (rf) cut = m.right_action(rf->to_parent(rf->alg.unit())) * cut;
    Subspace w = Subspace::column_space(cut);
    Matrix incl = w.basis_columns(), proj = w.coord_map() * cut;
    std::vector<Matrix> la, ra;
    if (le) {
        for (std::size_t k = 0; k < le->alg.dim(); ++k) la.push_back(proj * m.left_action(le->embed.col_vec(k)) * incl);
    } else {
        for (auto& x : m.lacts()) la.push_back(proj * x * incl);
    }
    if (rf) {
        for (std::size_t k = 0; k < rf->alg.dim(); ++k) ra.push_back(proj * m.right_action(rf->embed.col_vec(k)) * incl);
    } else {
        for (auto& x : m.racts()) ra.push_back(proj * x * incl);
    }
    Bimodule out(le ? le->alg : m.left_algebra(), rf ? rf->alg : m.right_algebra(), w.dim(), std::move(la), std::move(ra));
    return {std::move(out), std::move(incl), std::move(proj)};
}

/// Natural map V e (x)_{eAe} e U -> V (x)_A U for V a module over A^op and U over A.
struct EmfCheck {
    std::size_t small_dim = 0, big_dim = 0;
    bool bijective = false;
};

[[nodiscard]] inline bool in_add(const Module& u, const Module& gen, std::uint64_t seed = 1)
{
    if (u.dim() == 0) return true;
    Decomposition dg = decompose(gen, seed);
    auto gparts = parts(gen, dg);
    Decomposition du = decompose(u, seed);
    for (auto& m : parts(u, du)) {
        bool found = false;
        for (auto r : dg.class_reps())
            if (gparts[r].dim() == m.dim() && is_isomorphic(m, gparts[r], seed)) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

[[nodiscard]] inline EmfCheck check_eMf_identity(const Algebra& a, std::span<const Residue> e, const Module& u,
                                                 const Module& v, bool check_hypothesis = true, std::uint64_t seed = 1)
{
    if (!u.algebra().same_as(a) || !v.algebra().same_as(a.opposite()))
        throw std::invalid_argument("check_eMf_identity: U must be over A and V over A^op");
    if (check_hypothesis) {
        Module ae = left_ideal(a, e);
        Module ea = detail::right_ideal_module(a, e);
        if (!in_add(u, ae, seed) && !in_add(v, ea, seed))
            throw PreconditionError("check_eMf_identity: neither U in add(Ae) nor V in add(eA)");
    }
    Subalgebra c = corner(a, e);
    Bimodule bv = Bimodule::from_right(v), bu = Bimodule::from_left(u);
    CondensedBimodule ve = condense_bimodule(bv, nullptr, &c), eu = condense_bimodule(bu, &c, nullptr);
    TensorProduct small = tensor(ve.result, eu.result), big = tensor(bv, bu);
    EmfCheck r;
    r.small_dim = small.dim();
    r.big_dim = big.dim();
    Matrix nat = tensor_map(small, big, ve.incl, eu.incl);
    r.bijective = nat.rows() == nat.cols() && is_invertible(nat);
    return r;
}

}  // namespace yw
