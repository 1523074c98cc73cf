#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "meataxe.hpp"

namespace yw {

/// Simple modules of A (one per isomorphism class), from the regular module.
[[nodiscard]] inline const std::vector<Module>& simple_modules(const Algebra& a, std::uint64_t seed = 1)
{
    return a.memo<std::vector<Module>>("simples:" + std::to_string(seed), [&] {
        return composition_factors(regular_module(a), seed).simples;
    });
}

/// Jacobson radical: elements acting as zero on every simple module.
[[nodiscard]] inline const Subspace& radical(const Algebra& a, std::uint64_t seed = 1)
{
    return a.memo<Subspace>("radical:" + std::to_string(seed), [&] {
        const auto& simples = simple_modules(a, seed);
        std::size_t rows = 0;
        for (auto& s : simples) rows += s.dim() * s.dim();
        Matrix sys(a.field(), rows, a.dim());
        std::size_t r = 0;
        for (auto& s : simples)
            for (std::size_t x = 0; x < s.dim() * s.dim(); ++x, ++r)
                for (std::size_t j = 0; j < a.dim(); ++j) sys(r, j) = s.act(j).data()[x];
        return Subspace::row_space(kernel(sys));
    });
}

/// A/J(A) in the nonpivot basis of J, with quotient map and section.
struct Quotient {
    Algebra alg;
    Matrix quot;  ///< dim A/J x dim A
    Matrix sect;  ///< dim A x dim A/J
};

[[nodiscard]] inline Quotient quotient_algebra(const Algebra& a, const Subspace& ideal)
{
    Matrix q = ideal.quotient_map(), s = ideal.quotient_section();
    const std::size_t m = q.rows();
    std::vector<Matrix> left;
    left.reserve(m);
    for (std::size_t i = 0; i < m; ++i) left.push_back(q * a.left_matrix(s.col_vec(i)) * s);
    return {Algebra(a.field(), std::move(left), q.apply(a.unit()), std::nullopt, false), q, s};
}

/// Products of the powers of a subspace of A: J, J^2, ... until zero or stable.
[[nodiscard]] inline std::vector<std::size_t> radical_series_dims(const Algebra& a, std::uint64_t seed = 1)
{
    const Subspace& j = radical(a, seed);
    std::vector<std::size_t> dims{a.dim()};
    Subspace cur = j;
    while (true) {
        dims.push_back(cur.dim());
        if (cur.dim() == 0) break;
        std::vector<Vec> prods;
        for (auto& x : cur.basis())
            for (auto& y : j.basis()) prods.push_back(a.mul(x, y));
        Subspace next = Subspace::span(a.field(), a.dim(), prods);
        if (next.dim() == cur.dim()) throw std::logic_error("radical is not nilpotent");
        cur = std::move(next);
    }
    return dims;
}

/// Matrix of the Frobenius x -> x^p on a commutative algebra.
[[nodiscard]] inline Matrix frobenius_matrix(const Algebra& a)
{
    Matrix m(a.field(), a.dim(), a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Vec v = a.pow(a.basis_vector(i), a.p());
        for (std::size_t k = 0; k < a.dim(); ++k) m(k, i) = v[k];
    }
    return m;
}

/// Fixed space of the Frobenius of a commutative algebra; its dimension is
/// the number of primitive idempotents.
[[nodiscard]] inline Subspace frobenius_fixed_space(const Algebra& a)
{
    Matrix fm = frobenius_matrix(a) - Matrix::identity(a.field(), a.dim());
    return Subspace::row_space(kernel(fm));
}

/// q(x) for an algebra element, by Horner's rule on the regular representation.
[[nodiscard]] inline Vec evaluate_element(const Algebra& a, const Poly& q, std::span<const Residue> x)
{
    Matrix lx = a.left_matrix(x);
    Vec v(a.dim(), 0);
    for (long k = q.degree(); k >= 0; --k) {
        v = lx.apply(v);
        axpy(a.field(), q.coeff(static_cast<std::size_t>(k)), a.unit(), v);
    }
    return v;
}

/// Orthogonal idempotents in k[x] from the coprime factorization of the
/// characteristic polynomial of x; a single idempotent (1) when it is a prime power.
[[nodiscard]] inline std::vector<Vec> crt_idempotents(const Algebra& a, std::span<const Residue> x, std::uint64_t seed)
{
    Poly chi = charpoly(a.left_matrix(x));
    auto fs = factor(chi, seed);
    if (fs.size() <= 1) return {a.unit()};
    std::vector<Vec> out;
    for (auto& pf : fs) {
        Poly fi = Poly::constant(a.field(), 1);
        for (std::size_t k = 0; k < pf.multiplicity; ++k) fi = fi * pf.factor;
        Poly gi = chi / fi;
        auto [g, s, t] = ext_gcd(gi, fi);
        (void)t;
        if (!g.is_one()) throw std::logic_error("crt_idempotents: factors not coprime");
        out.push_back(evaluate_element(a, (s * gi) % chi, x));
    }
    return out;
}

namespace detail {

inline bool canonical_less(const Algebra& a, const Vec& x, const Vec& y)
{
    const std::size_t dx = rank(a.right_matrix(x)), dy = rank(a.right_matrix(y));
    if (dx != dy) return dx < dy;
    return x < y;
}

// Primitive idempotents of a semisimple algebra.
inline std::vector<Vec> semisimple_primitives(const Algebra& s, Rng& rng)
{
    if (s.dim() == 0) return {};
    std::vector<Vec> split;
    if (s.is_commutative()) {
        Subspace fix = frobenius_fixed_space(s);
        if (fix.dim() == 1) return {s.unit()};
        for (int attempt = 0; attempt < 200 && split.size() <= 1; ++attempt) {
            Vec c(fix.dim());
            for (auto& v : c) v = rng.residue(s.field());
            split = crt_idempotents(s, fix.from_coords(c), rng.next());
        }
    } else {
        for (int attempt = 0; attempt < 400 && split.size() <= 1; ++attempt)
            split = crt_idempotents(s, s.random_element(rng), rng.next());
    }
    if (split.size() <= 1) throw std::runtime_error("semisimple_primitives: failed to split");
    std::vector<Vec> out;
    for (auto& e : split) {
        Subalgebra c = corner(s, e);
        for (auto& pc : semisimple_primitives(c.alg, rng)) out.push_back(c.to_parent(pc));
    }
    return out;
}

}  // namespace detail

/// Complete set of pairwise orthogonal primitive idempotents summing to 1,
/// lifted from A/J(A) by p-power stabilization.
[[nodiscard]] inline std::vector<Vec> lift_idempotents(const Algebra& a, std::uint64_t seed = 1)
{
    if (a.dim() == 0) return {};
    Rng rng(seed);
    const Subspace& j = radical(a, seed);
    std::vector<Vec> out;
    if (j.dim() == 0) {
        out = detail::semisimple_primitives(a, rng);
    } else {
        Quotient qa = quotient_algebra(a, j);
        auto bar = detail::semisimple_primitives(qa.alg, rng);
        Vec f = a.unit();
        for (std::size_t k = 0; k + 1 < bar.size(); ++k) {
            Vec x = a.mul(a.mul(f, qa.sect.apply(bar[k])), f);
            for (int it = 0; !a.is_idempotent(x); ++it) {
                if (it > 64) throw std::logic_error("lift_idempotents: p-power iteration did not stabilize");
                x = a.pow(x, a.p());
            }
            out.push_back(x);
            f = a.sub(f, x);
        }
        out.push_back(f);
    }
    std::sort(out.begin(), out.end(), [&](const Vec& x, const Vec& y) { return detail::canonical_less(a, x, y); });
    return out;
}

/// Block idempotents: primitive idempotents of the center.
[[nodiscard]] inline std::vector<Vec> central_primitive_idempotents(const Algebra& a, std::uint64_t seed = 1)
{
    Subalgebra z = center(a);
    Subspace fix = frobenius_fixed_space(z.alg);
    std::vector<Vec> cur{z.alg.unit()};
    Rng rng(seed);
    for (int attempt = 0; cur.size() < fix.dim(); ++attempt) {
        if (attempt > 400) throw std::runtime_error("central_primitive_idempotents: failed to split");
        Vec c(fix.dim());
        for (auto& v : c) v = rng.residue(a.field());
        auto parts = crt_idempotents(z.alg, fix.from_coords(c), rng.next());
        std::vector<Vec> next;
        for (auto& e : cur)
            for (auto& q : parts) {
                Vec eq = z.alg.mul(e, q);
                if (!is_zero(eq)) next.push_back(eq);
            }
        cur = std::move(next);
    }
    std::vector<Vec> out;
    for (auto& e : cur) out.push_back(z.to_parent(e));
    std::sort(out.begin(), out.end(), [&](const Vec& x, const Vec& y) { return detail::canonical_less(a, x, y); });
    return out;
}

/// Whether the corner eAe is local, i.e. e is primitive.
[[nodiscard]] inline bool is_primitive_idempotent(const Algebra& a, std::span<const Residue> e, std::uint64_t seed = 1)
{
    if (is_zero(e) || !a.is_idempotent(e)) return false;
    Subalgebra c = corner(a, e);
    const Subspace& j = radical(c.alg, seed);
    Quotient q = quotient_algebra(c.alg, j);
    return q.alg.is_commutative() && frobenius_fixed_space(q.alg).dim() == 1;
}

/// Whether algebra is local: A/J(A) is a field.
[[nodiscard]] inline bool is_local(const Algebra& a, std::uint64_t seed = 1)
{
    return is_primitive_idempotent(a, a.unit(), seed);
}

}  // namespace yw
