#pragma once

#include <yw/complex.hpp>

#include "fixtures.hpp"

namespace oracle {

using namespace yw;

// Hom dimension from the full system rho_V(b) X - X rho_U(b) = 0 over every basis element.
inline std::size_t brute_hom_dim(const Module& u, const Module& v)
{
    const Field& f = u.field();
    const std::size_t du = u.dim(), dv = v.dim(), n = du * dv;
    if (n == 0) return 0;
    Matrix sys(f, u.acts().size() * n, n);
    // vec(X) with X row-major dv x du: vec(A X B) = (A (x) B^T) vec(X)
    for (std::size_t b = 0; b < u.acts().size(); ++b)
        sys.set_block(b * n, 0,
                      kronecker(v.act(b), Matrix::identity(f, du)) -
                          kronecker(Matrix::identity(f, dv), u.act(b).transpose()));
    return n - rank(sys);
}

inline std::size_t brute_end_dim(const std::vector<Module>& summands)
{
    std::size_t s = 0;
    for (auto& a : summands)
        for (auto& b : summands) s += brute_hom_dim(a, b);
    return s;
}

// Tensor dimension with balancing over every basis element.
inline std::size_t brute_tensor_dim(const Module& v, const Module& u)
{
    const Field& f = u.field();
    const std::size_t n = v.dim() * u.dim();
    if (n == 0) return 0;
    Matrix sys(f, n, u.acts().size() * n);
    for (std::size_t b = 0; b < u.acts().size(); ++b)
        sys.set_block(0, b * n,
                      kronecker(v.act(b), Matrix::identity(f, u.dim())) -
                          kronecker(Matrix::identity(f, v.dim()), u.act(b)));
    return n - rank(sys);
}

// Random element of add(gen): a direct sum of seeded choices among its parts.
inline Module random_in_add(const Module& gen, Rng& rng)
{
    auto ps = parts(gen, decompose(gen));
    std::vector<Module> pick;
    const std::size_t n = 1 + rng.below(3);
    for (std::size_t k = 0; k < n; ++k) pick.push_back(ps[rng.below(ps.size())]);
    return direct_sum(pick);
}

// Random module over a: a random quotient of a sum of parts of the regular module.
inline Module random_module(const Algebra& a, Rng& rng)
{
    Module m = random_in_add(regular_module(a), rng);
    auto d = decompose(m);
    auto ps = parts(m, d);
    Module base = ps[rng.below(ps.size())];
    std::vector<Vec> gens{Vec(base.dim(), 0)};
    for (auto& v : gens[0]) v = rng.residue(a.field());
    Subspace sub = spin(a.field(), base.gens(), base.dim(), gens);
    return quotient_module(base, sub.dim() == base.dim() ? Subspace(a.field(), base.dim()) : sub);
}

struct KS3 {
    PermGroup g = fx::s3();
    Algebra a = group_algebra(g, 3);
    Module pt = fx::pim_of(a, fx::triv(g, a));
    Module ps = fx::pim_of(a, fx::sgn(g, a));
    Bimodule bt = Bimodule::from_left(pt), bs = Bimodule::from_left(ps);
    Algebra k = bt.right_algebra();
};

inline const KS3& ks3()
{
    static const KS3 s;
    return s;
}

// rad U as the span of the radical's action.
inline Subspace radical_of(const Module& u)
{
    const Subspace& j = radical(u.algebra());
    Subspace w(u.field(), u.dim());
    for (std::size_t k = 0; k < j.dim(); ++k) {
        Matrix m = u.action(j.basis()[k]);
        for (std::size_t c = 0; c < m.cols(); ++c) w.add(m.col_vec(c));
    }
    return w;
}

// Random module map u -> v with image in rad v.
inline Matrix random_radical_map(const Module& u, const Module& v, Rng& rng)
{
    Subspace r = radical_of(v);
    Module rv = submodule(v, r);
    MapSpace h = hom_space(u, rv);
    Matrix m(u.field(), rv.dim(), u.dim());
    for (auto& b : h.basis) m.axpy(rng.residue(u.field()), b);
    return r.basis_columns() * m;
}

inline Module random_projective(Rng& rng, std::size_t max_parts)
{
    const auto& s = ks3();
    std::vector<Module> ps;
    const std::size_t n = 1 + rng.below(max_parts);
    for (std::size_t i = 0; i < n; ++i) ps.push_back(rng.below(2) ? s.pt : s.ps);
    return direct_sum(ps);
}

// Random minimal complex of projective kS3-modules in degrees 0..2.
inline Complex random_minimal(Rng& rng)
{
    Module c0 = random_projective(rng, 2), c1 = random_projective(rng, 2), c2 = random_projective(rng, 2);
    Matrix d1 = random_radical_map(c1, c0, rng);
    // d2: radical maps c2 -> c1 landing in ker d1
    Subspace r = radical_of(c1);
    Subspace kd = Subspace::row_space(kernel(d1));
    Subspace target = intersect(r, kd);
    Module tm = submodule(c1, target);
    MapSpace h = hom_space(c2, tm);
    Matrix d2(c2.field(), tm.dim(), c2.dim());
    for (auto& b : h.basis) d2.axpy(rng.residue(c2.field()), b);
    d2 = target.basis_columns() * d2;
    const auto& s = ks3();
    return Complex(s.a, s.k, 0, {Bimodule::from_left(c0), Bimodule::from_left(c1), Bimodule::from_left(c2)}, {d1, d2});
}

// Random invertible endomorphism of a module.
inline Matrix random_auto(const Bimodule& u, Rng& rng)
{
    MapSpace h = hom_space(u, u);
    for (;;) {
        Matrix m(u.field(), u.dim(), u.dim());
        for (auto& b : h.basis) m.axpy(rng.residue(u.field()), b);
        if (is_invertible(m)) return m;
    }
}

// The same complex conjugated by random degreewise automorphisms.
inline Complex scramble(const Complex& c, Rng& rng)
{
    std::vector<Matrix> t;
    for (int n = c.lo(); n <= c.hi(); ++n) t.push_back(random_auto(c.at(n), rng));
    std::vector<Bimodule> comps;
    std::vector<Matrix> diffs;
    for (int n = c.lo(); n <= c.hi(); ++n) {
        const auto k = static_cast<std::size_t>(n - c.lo());
        comps.push_back(change_basis(c.at(n), t[k]));
        if (n > c.lo()) diffs.push_back(t[k - 1] * c.d(n) * *inverse(t[k]));
    }
    return Complex(c.left_algebra(), c.right_algebra(), c.lo(), std::move(comps), std::move(diffs));
}

inline Complex cone_of_identity(const Bimodule& p, int lo)
{
    return cone(identity_map(concentrated(p, lo - 1)));
}

}  // namespace oracle
