#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "idempotent.hpp"

namespace yw {

/// Algebra structure on a space of endomorphisms closed under composition:
/// b_i * b_j is basis_i composed after basis_j.
[[nodiscard]] inline Algebra endomorphism_algebra(const MapSpace& end)
{
    const Field& f = end.f;
    const std::size_t m = end.dim(), n = end.cols;
    std::vector<Matrix> left(m, Matrix(f, m, m));
    // only the pivot entries of each product are needed
    std::vector<std::size_t> pr(m), pc(m);
    for (std::size_t k = 0; k < m; ++k) pr[k] = end.pivots[k] / n, pc[k] = end.pivots[k] % n;
    std::vector<Matrix> cols(m);
    for (std::size_t j = 0; j < m; ++j) cols[j] = end.basis[j].transpose();
    const std::uint64_t p = f.p();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) {
                const Residue* a = end.basis[i].row_ptr(pr[k]);
                const Residue* b = cols[j].row_ptr(pc[k]);
                std::uint64_t acc = 0;
                for (std::size_t t = 0; t < n; ++t) acc = (acc + static_cast<std::uint64_t>(a[t]) * b[t]) % p;
                left[i](k, j) = static_cast<Residue>(acc);
            }
    Vec unit = end.coords(Matrix::identity(f, n));
    return Algebra(f, std::move(left), std::move(unit), std::nullopt, false);
}

/// A direct sum decomposition into indecomposables with explicit
/// inclusions and projections: sum incl[i] * proj[i] = I, proj[i] * incl[j] = delta_ij I.
struct Decomposition {
    std::vector<Matrix> incl;
    std::vector<Matrix> proj;
    std::vector<std::size_t> cls;  ///< isomorphism class of each part
    std::size_t num_classes = 0;

    [[nodiscard]] std::size_t size() const { return incl.size(); }
    [[nodiscard]] std::size_t multiplicity(std::size_t c) const
    {
        return static_cast<std::size_t>(std::count(cls.begin(), cls.end(), c));
    }
    /// First part of each class.
    [[nodiscard]] std::vector<std::size_t> class_reps() const
    {
        std::vector<std::size_t> reps(num_classes, 0);
        for (std::size_t i = size(); i-- > 0;) reps[cls[i]] = i;
        return reps;
    }
};

namespace detail {

inline std::vector<Matrix> compress_gens(std::span<const Matrix> gens, const Matrix& proj, const Matrix& incl)
{
    std::vector<Matrix> out;
    for (auto& g : gens) out.push_back(proj * g * incl);
    return out;
}

// For indecomposable U, V of equal dimension: an isomorphism among the Hom basis, if any.
inline std::optional<Matrix> indecomposable_iso(const Field& f, std::span<const Matrix> gu, std::span<const Matrix> gv,
                                                std::size_t d)
{
    MapSpace h = intertwiners(f, gu, gv, d, d);
    if (h.dim() == 0) return std::nullopt;
    MapSpace k = intertwiners(f, gv, gu, d, d);
    for (auto& phi : h.basis)
        for (auto& psi : k.basis)
            if (is_invertible(psi * phi)) return phi;
    return std::nullopt;
}

}  // namespace detail

/// Decomposition of the module presented by generator matrices.
[[nodiscard]] inline Decomposition decompose_family(const Field& f, std::span<const Matrix> gens, std::size_t dim,
                                                    std::uint64_t seed = 1)
{
    Decomposition d;
    if (dim == 0) return d;
    MapSpace end = intertwiners(f, gens, gens, dim, dim);
    Algebra e = endomorphism_algebra(end);
    auto idems = lift_idempotents(e, seed);
    struct Part {
        Matrix incl, proj;
    };
    std::vector<Part> parts;
    for (auto& x : idems) {
        Matrix phi = end.from_coords(x);
        Subspace im = Subspace::column_space(phi);
        parts.push_back({im.basis_columns(), im.coord_map() * phi});
    }
    std::stable_sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) {
        if (a.incl.cols() != b.incl.cols()) return a.incl.cols() < b.incl.cols();
        return a.incl.data() < b.incl.data();
    });
    std::vector<std::vector<Matrix>> pg;
    std::vector<std::size_t> reps;
    for (auto& p : parts) {
        auto g = detail::compress_gens(gens, p.proj, p.incl);
        std::size_t c = d.num_classes;
        for (std::size_t k = 0; k < reps.size(); ++k) {
            const std::size_t i = reps[k];
            if (d.incl[i].cols() != p.incl.cols()) continue;
            if (detail::indecomposable_iso(f, pg[i], g, p.incl.cols())) {
                c = k;
                break;
            }
        }
        if (c == d.num_classes) {
            ++d.num_classes;
            reps.push_back(d.incl.size());
        }
        d.incl.push_back(p.incl);
        d.proj.push_back(p.proj);
        d.cls.push_back(c);
        pg.push_back(std::move(g));
    }
    return d;
}

[[nodiscard]] inline Decomposition decompose(const Module& u, std::uint64_t seed = 1)
{
    return decompose_family(u.field(), u.gens(), u.dim(), seed);
}
[[nodiscard]] inline Decomposition decompose(const Bimodule& u, Side side = Side::Both, std::uint64_t seed = 1)
{
    auto g = u.gens(side);
    return decompose_family(u.field(), g, u.dim(), seed);
}

/// Summand modules of a decomposition.
[[nodiscard]] inline std::vector<Module> parts(const Module& u, const Decomposition& d)
{
    std::vector<Module> out;
    for (std::size_t i = 0; i < d.size(); ++i) out.push_back(compress(u, d.proj[i], d.incl[i]));
    return out;
}
[[nodiscard]] inline std::vector<Bimodule> parts(const Bimodule& u, const Decomposition& d)
{
    std::vector<Bimodule> out;
    for (std::size_t i = 0; i < d.size(); ++i) out.push_back(compress(u, d.proj[i], d.incl[i]));
    return out;
}

[[nodiscard]] inline bool is_indecomposable(const Module& u, std::uint64_t seed = 1)
{
    return u.dim() > 0 && decompose(u, seed).size() == 1;
}

/// An isomorphism U -> V between modules presented by generator matrices:
/// dimension and Hom-dimension filters, then a search over Hom(U, V)
/// (exhaustive when small, seeded random otherwise), then an exact
/// comparison of decompositions.
[[nodiscard]] inline std::optional<Matrix> isomorphism_family(const Field& f, std::span<const Matrix> gu,
                                                              std::span<const Matrix> gv, std::size_t du,
                                                              std::size_t dv, std::uint64_t seed = 1)
{
    if (du != dv) return std::nullopt;
    if (du == 0) return Matrix(f, 0, 0);
    MapSpace h = intertwiners(f, gu, gv, du, dv);
    if (h.dim() == 0) return std::nullopt;
    if (intertwiners(f, gv, gu, dv, du).dim() != h.dim()) return std::nullopt;
    if (intertwiners(f, gu, gu, du, du).dim() != h.dim()) return std::nullopt;
    if (intertwiners(f, gv, gv, dv, dv).dim() != h.dim()) return std::nullopt;
    const double space = std::pow(static_cast<double>(f.p()), static_cast<double>(h.dim()));
    if (space <= 6561.0) {
        Vec c(h.dim(), 0);
        for (;;) {
            std::size_t k = 0;
            while (k < c.size() && ++c[k] == f.p()) c[k++] = 0;
            if (k == c.size()) return std::nullopt;
            Matrix m = h.from_coords(c);
            if (is_invertible(m)) return m;
        }
    }
    Rng rng(seed);
    for (int t = 0; t < 64; ++t) {
        Vec c(h.dim());
        for (auto& x : c) x = rng.residue(f);
        Matrix m = h.from_coords(c);
        if (is_invertible(m)) return m;
    }
    Decomposition du_ = decompose_family(f, gu, du, seed), dv_ = decompose_family(f, gv, dv, seed);
    if (du_.size() != dv_.size()) return std::nullopt;
    std::vector<char> used(dv_.size(), 0);
    Matrix iso(f, dv, du);
    for (std::size_t i = 0; i < du_.size(); ++i) {
        auto gi = detail::compress_gens(gu, du_.proj[i], du_.incl[i]);
        bool found = false;
        for (std::size_t j = 0; j < dv_.size() && !found; ++j) {
            if (used[j] || dv_.incl[j].cols() != du_.incl[i].cols()) continue;
            auto gj = detail::compress_gens(gv, dv_.proj[j], dv_.incl[j]);
            if (auto phi = detail::indecomposable_iso(f, gi, gj, du_.incl[i].cols())) {
                iso += dv_.incl[j] * *phi * du_.proj[i];
                used[j] = 1;
                found = true;
            }
        }
        if (!found) return std::nullopt;
    }
    return iso;
}

[[nodiscard]] inline std::optional<Matrix> is_isomorphic(const Module& u, const Module& v, std::uint64_t seed = 1)
{
    if (!u.algebra().same_as(v.algebra())) throw std::invalid_argument("is_isomorphic: modules over different algebras");
    return isomorphism_family(u.field(), u.gens(), v.gens(), u.dim(), v.dim(), seed);
}
[[nodiscard]] inline std::optional<Matrix> is_isomorphic(const Bimodule& u, const Bimodule& v, Side side = Side::Both,
                                                         std::uint64_t seed = 1)
{
    auto gu = u.gens(side), gv = v.gens(side);
    return isomorphism_family(u.field(), gu, gv, u.dim(), v.dim(), seed);
}

/// Projective indecomposables Ae for a complete set of primitive idempotents.
struct PimData {
    std::vector<Vec> idempotents;
    std::vector<std::size_t> cls;  ///< class of A e_i
    std::vector<Module> pims;      ///< one per class
    std::vector<std::size_t> rep;  ///< idempotent index representing each class
    std::vector<std::size_t> multiplicity;
};

/// Left ideal A e as a module.
[[nodiscard]] inline Module left_ideal(const Algebra& a, std::span<const Residue> e)
{
    return submodule(regular_module(a), Subspace::column_space(a.right_matrix(e)));
}

[[nodiscard]] inline const PimData& pim_data(const Algebra& a, std::uint64_t seed = 1)
{
    return a.memo<PimData>("pims:" + std::to_string(seed), [&] {
        PimData d;
        d.idempotents = lift_idempotents(a, seed);
        for (std::size_t i = 0; i < d.idempotents.size(); ++i) {
            Module p = left_ideal(a, d.idempotents[i]);
            std::size_t c = d.pims.size();
            for (std::size_t k = 0; k < d.pims.size(); ++k)
                if (d.pims[k].dim() == p.dim() && detail::indecomposable_iso(a.field(), d.pims[k].gens(), p.gens(), p.dim())) {
                    c = k;
                    break;
                }
            if (c == d.pims.size()) {
                d.pims.push_back(p);
                d.rep.push_back(i);
                d.multiplicity.push_back(0);
            }
            ++d.multiplicity[c];
            d.cls.push_back(c);
        }
        return d;
    });
}

/// Index of the projective indecomposable isomorphic to an indecomposable u, if any.
[[nodiscard]] inline std::optional<std::size_t> matching_pim(const Module& u, std::uint64_t seed = 1)
{
    const PimData& pd = pim_data(u.algebra(), seed);
    for (std::size_t k = 0; k < pd.pims.size(); ++k)
        if (pd.pims[k].dim() == u.dim() &&
            detail::indecomposable_iso(u.field(), pd.pims[k].gens(), u.gens(), u.dim()))
            return k;
    return std::nullopt;
}

/// Every indecomposable summand is isomorphic to a projective indecomposable.
[[nodiscard]] inline bool is_projective(const Module& u, std::uint64_t seed = 1)
{
    if (u.dim() == 0) return true;
    Decomposition d = decompose(u, seed);
    for (auto& m : parts(u, d))
        if (!matching_pim(m, seed)) return false;
    return true;
}

/// Injective iff the dual is projective over the opposite algebra.
[[nodiscard]] inline bool is_injective(const Module& u, std::uint64_t seed = 1) { return is_projective(dual(u), seed); }

/// Hom_A(U, A) as a right A-module, i.e. a module over A^op.
[[nodiscard]] inline Module hom_to_regular(const Module& u)
{
    const Algebra& a = u.algebra();
    MapSpace h = hom_space(u, regular_module(a));
    std::vector<Matrix> act;
    act.reserve(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Matrix m(a.field(), h.dim(), h.dim());
        for (std::size_t k = 0; k < h.dim(); ++k) {
            Vec c = h.coords(a.right(i) * h.basis[k]);
            for (std::size_t r = 0; r < h.dim(); ++r) m(r, k) = c[r];
        }
        act.push_back(std::move(m));
    }
    return Module(a.opposite(), h.dim(), std::move(act));
}

/// Nakayama functor: dual of Hom_A(U, A).
[[nodiscard]] inline Module nakayama(const Module& u) { return dual(hom_to_regular(u)); }

}  // namespace yw
