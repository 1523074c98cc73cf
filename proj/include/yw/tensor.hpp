#pragma once

#include <stdexcept>
#include <vector>

#include "module.hpp"

namespace yw {

/// Balancing relations v a (x) u - v (x) a u of V (x)_A U, one block per
/// algebra generator; index of v (x) u is v * dim U + u.
[[nodiscard]] inline Subspace balancing_relations(const Field& f, std::span<const Matrix> vg, std::span<const Matrix> ug,
                                                  std::size_t dv, std::size_t du)
{
    const std::size_t n = dv * du;
    if (n == 0 || vg.empty()) return Subspace(f, n);
    Matrix iv = Matrix::identity(f, dv), iu = Matrix::identity(f, du);
    Matrix rows(f, vg.size() * n, n);
    for (std::size_t g = 0; g < vg.size(); ++g) {
        // rows of the transpose span the image of (vg (x) 1 - 1 (x) ug)
        Matrix r = kronecker(vg[g].transpose(), iu) - kronecker(iv, ug[g].transpose());
        rows.set_block(g * n, 0, r);
    }
    return Subspace::row_space(rows);
}

/// M (x)_B N for an A-B-bimodule M and a B-C-bimodule N, as an A-C-bimodule in
/// the nonpivot basis of the balancing relations.
struct TensorProduct {
    Bimodule result;
    Matrix quot;  ///< dim result x (dim M * dim N)
    Matrix sect;  ///< (dim M * dim N) x dim result
    std::size_t dm = 0, dn = 0;

    [[nodiscard]] std::size_t dim() const { return result.dim(); }
    /// Class of m (x) n.
    [[nodiscard]] Vec pure(std::span<const Residue> m, std::span<const Residue> n) const
    {
        Vec v(dm * dn, 0);
        const Field& f = result.field();
        for (std::size_t i = 0; i < dm; ++i)
            if (m[i])
                for (std::size_t j = 0; j < dn; ++j) v[i * dn + j] = f.mul(m[i], n[j]);
        return quot.apply(v);
    }
};

[[nodiscard]] inline TensorProduct tensor(const Bimodule& m, const Bimodule& n)
{
    const Algebra& b = m.right_algebra();
    if (!b.same_as(n.left_algebra())) throw std::invalid_argument("tensor: middle algebras differ");
    const Field& f = m.field();
    std::vector<Matrix> vg, ug;
    for (auto g : b.generators()) {
        vg.push_back(m.ract(g));
        ug.push_back(n.lact(g));
    }
    Subspace rel = balancing_relations(f, vg, ug, m.dim(), n.dim());
    TensorProduct t;
    t.dm = m.dim();
    t.dn = n.dim();
    t.quot = rel.quotient_map();
    t.sect = rel.quotient_section();
    const std::size_t d = t.quot.rows();
    Matrix in = Matrix::identity(f, n.dim()), im = Matrix::identity(f, m.dim());
    std::vector<Matrix> la, ra;
    la.reserve(m.left_algebra().dim());
    for (auto& x : m.lacts()) la.push_back(t.quot * kronecker(x, in) * t.sect);
    ra.reserve(n.right_algebra().dim());
    for (auto& x : n.racts()) ra.push_back(t.quot * kronecker(im, x) * t.sect);
    t.result = Bimodule(m.left_algebra(), n.right_algebra(), d, std::move(la), std::move(ra));
    return t;
}

/// The map f (x) g between tensor products, for f right-linear and g left-linear.
[[nodiscard]] inline Matrix tensor_map(const TensorProduct& src, const TensorProduct& dst, const Matrix& fm,
                                       const Matrix& gm)
{
    return dst.quot * kronecker(fm, gm) * src.sect;
}

/// Dimension of V (x)_A U for V a module over A^op and U a module over A.
[[nodiscard]] inline std::size_t tensor_dim(const Module& v, const Module& u)
{
    return tensor(Bimodule::from_right(v), Bimodule::from_left(u)).dim();
}

/// M (x)_B U as a left A-module.
[[nodiscard]] inline Module tensor_module(const Bimodule& m, const Module& u)
{
    return tensor(m, Bimodule::from_left(u)).result.left();
}

}  // namespace yw
