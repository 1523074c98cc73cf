#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "permgrp.hpp"
#include "rng.hpp"

namespace yw {

class Algebra;

namespace detail {

struct AlgebraData {
    Field f;
    std::size_t dim = 0;
    std::vector<Matrix> left;  // left[i] column j = coordinates of b_i * b_j
    Vec unit;
    std::optional<Vec> symform;
    std::vector<std::size_t> gen_hint;
    mutable std::map<std::string, std::shared_ptr<void>> cache;
    mutable std::weak_ptr<const AlgebraData> opposite_of;
};

}  // namespace detail

/// Finite-dimensional associative unital algebra given by structure constants.
/// Copies share the underlying data, including the memo cache.
class Algebra {
public:
    Algebra() = default;

    /// `left[i]` is the matrix of left multiplication by basis element i.
    Algebra(Field f, std::vector<Matrix> left, Vec unit, std::optional<Vec> symform = std::nullopt,
            bool check = true, std::vector<std::size_t> gen_hint = {})
    {
        auto d = std::make_shared<detail::AlgebraData>();
        d->f = f;
        d->dim = left.size();
        d->left = std::move(left);
        d->unit = std::move(unit);
        d->symform = std::move(symform);
        d->gen_hint = std::move(gen_hint);
        for (auto& l : d->left)
            if (l.rows() != d->dim || l.cols() != d->dim || l.p() != f.p())
                throw std::invalid_argument("algebra: structure matrix has wrong shape");
        if (d->unit.size() != d->dim) throw std::invalid_argument("algebra: unit has wrong length");
        if (d->symform && d->symform->size() != d->dim) throw std::invalid_argument("algebra: symform has wrong length");
        d_ = std::move(d);
        if (check) validate();
    }

    [[nodiscard]] bool valid() const noexcept { return static_cast<bool>(d_); }
    [[nodiscard]] const Field& field() const { return d_->f; }
    [[nodiscard]] Residue p() const { return d_->f.p(); }
    [[nodiscard]] std::size_t dim() const { return d_->dim; }
    [[nodiscard]] const Matrix& left(std::size_t i) const { return d_->left[i]; }
    [[nodiscard]] const std::vector<Matrix>& lefts() const { return d_->left; }
    [[nodiscard]] const Vec& unit() const { return d_->unit; }
    [[nodiscard]] const std::optional<Vec>& symform() const { return d_->symform; }
    [[nodiscard]] Vec basis_vector(std::size_t i) const { return unit_vector(dim(), i); }
    [[nodiscard]] Vec zero() const { return Vec(dim(), 0); }

    /// Right multiplication by basis element j: column i = b_i * b_j.
    [[nodiscard]] const std::vector<Matrix>& rights() const
    {
        return memo<std::vector<Matrix>>("rights", [&] {
            std::vector<Matrix> r(dim(), Matrix(field(), dim(), dim()));
            for (std::size_t i = 0; i < dim(); ++i)
                for (std::size_t j = 0; j < dim(); ++j)
                    for (std::size_t k = 0; k < dim(); ++k) r[j](k, i) = left(i)(k, j);
            return r;
        });
    }
    [[nodiscard]] const Matrix& right(std::size_t j) const { return rights()[j]; }

    [[nodiscard]] Vec product_basis(std::size_t i, std::size_t j) const { return left(i).col_vec(j); }

    [[nodiscard]] Vec mul(std::span<const Residue> a, std::span<const Residue> b) const
    {
        const Field& f = field();
        Vec out(dim(), 0);
        for (std::size_t i = 0; i < dim(); ++i) {
            if (!a[i]) continue;
            const Matrix& l = left(i);
            for (std::size_t j = 0; j < dim(); ++j) {
                if (!b[j]) continue;
                const Residue c = f.mul(a[i], b[j]);
                for (std::size_t k = 0; k < dim(); ++k)
                    if (l(k, j)) out[k] = f.add(out[k], f.mul(c, l(k, j)));
            }
        }
        return out;
    }
    [[nodiscard]] Vec pow(Vec a, std::uint64_t e) const
    {
        Vec r = unit();
        while (e) {
            if (e & 1) r = mul(r, a);
            e >>= 1;
            if (e) a = mul(a, a);
        }
        return r;
    }
    [[nodiscard]] Vec add(std::span<const Residue> a, std::span<const Residue> b) const
    {
        Vec out(a.begin(), a.end());
        axpy(field(), 1, b, out);
        return out;
    }
    [[nodiscard]] Vec sub(std::span<const Residue> a, std::span<const Residue> b) const
    {
        Vec out(a.begin(), a.end());
        axpy(field(), field().neg(1), b, out);
        return out;
    }

    /// Matrix of x -> a x.
    [[nodiscard]] Matrix left_matrix(std::span<const Residue> a) const
    {
        Matrix m(field(), dim(), dim());
        for (std::size_t i = 0; i < dim(); ++i)
            if (a[i]) m.axpy(a[i], left(i));
        return m;
    }
    /// Matrix of x -> x a.
    [[nodiscard]] Matrix right_matrix(std::span<const Residue> a) const
    {
        Matrix m(field(), dim(), dim());
        for (std::size_t i = 0; i < dim(); ++i)
            if (a[i]) m.axpy(a[i], right(i));
        return m;
    }

    [[nodiscard]] bool is_idempotent(std::span<const Residue> e) const { return mul(e, e) == Vec(e.begin(), e.end()); }
    [[nodiscard]] bool is_central(std::span<const Residue> z) const
    {
        for (auto g : generators())
            if (mul(z, basis_vector(g)) != mul(basis_vector(g), z)) return false;
        return true;
    }
    [[nodiscard]] bool is_commutative() const
    {
        for (std::size_t i = 0; i < dim(); ++i)
            if (left(i) != right(i)) return false;
        return true;
    }

    [[nodiscard]] Vec random_element(Rng& rng) const
    {
        Vec v(dim());
        for (auto& x : v) x = rng.residue(field());
        return v;
    }

    /// Basis indices generating the algebra; the subalgebra they generate is
    /// found by spinning 1 under left multiplication.
    [[nodiscard]] const std::vector<std::size_t>& generators() const
    {
        return memo<std::vector<std::size_t>>("generators", [&] {
            std::vector<std::size_t> gens;
            auto closure = [&] {
                Subspace w(field(), dim());
                std::vector<Vec> queue{unit()};
                w.add(unit());
                for (std::size_t q = 0; q < queue.size(); ++q)
                    for (auto g : gens) {
                        Vec y = left(g).apply(queue[q]);
                        if (w.add(y)) queue.push_back(std::move(y));
                    }
                return w;
            };
            for (auto g : d_->gen_hint) gens.push_back(g);
            Subspace w = closure();
            for (std::size_t i = 0; i < dim() && w.dim() < dim(); ++i) {
                if (w.contains(basis_vector(i))) continue;
                gens.push_back(i);
                w = closure();
            }
            return gens;
        });
    }

    /// Gram matrix of (a, b) -> s(ab); requires a symmetrizing form.
    [[nodiscard]] Matrix gram() const
    {
        if (!symform()) throw std::logic_error("algebra has no symmetrizing form");
        Matrix g(field(), dim(), dim());
        const Vec& s = *symform();
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < dim(); ++j) {
                Residue acc = 0;
                for (std::size_t k = 0; k < dim(); ++k) acc = field().add(acc, field().mul(s[k], left(i)(k, j)));
                g(i, j) = acc;
            }
        return g;
    }
    [[nodiscard]] bool symform_ok() const
    {
        if (!symform()) return false;
        Matrix g = gram();
        return g == g.transpose() && is_invertible(g);
    }

    /// Throws std::invalid_argument unless associativity and the unit law
    /// hold on all basis triples, and the symmetrizing form (if any) is valid.
    void validate() const
    {
        const Field& f = field();
        const std::size_t n = dim();
        Matrix lu = left_matrix(unit());
        if (!lu.is_identity()) throw std::invalid_argument("algebra: unit is not a left identity");
        for (std::size_t i = 0; i < n; ++i)
            if (mul(basis_vector(i), unit()) != basis_vector(i))
                throw std::invalid_argument("algebra: unit is not a right identity");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Matrix lhs = left(i) * left(j);
                Matrix rhs(f, n, n);
                for (std::size_t k = 0; k < n; ++k)
                    if (left(i)(k, j)) rhs.axpy(left(i)(k, j), left(k));
                if (lhs != rhs)
                    throw std::invalid_argument("algebra: associativity fails at basis pair (" + std::to_string(i) +
                                                "," + std::to_string(j) + ")");
            }
        if (symform() && !symform_ok()) throw std::invalid_argument("algebra: symform is not symmetric nondegenerate");
    }

    /// The opposite algebra; opposite().opposite() is this algebra.
    [[nodiscard]] Algebra opposite() const
    {
        if (auto back = d_->opposite_of.lock()) return Algebra(back);
        return memo<Algebra>("opposite", [&] {
            Algebra op(field(), rights(), unit(), symform(), false);
            op.d_->opposite_of = d_;
            return op;
        });
    }

    [[nodiscard]] bool same_as(const Algebra& o) const
    {
        if (d_ == o.d_) return true;
        return dim() == o.dim() && p() == o.p() && unit() == o.unit() && lefts() == o.lefts();
    }
    [[nodiscard]] const void* id() const noexcept { return d_.get(); }

    /// Per-algebra memo table; values live as long as the algebra.
    template <class T, class Fn>
    const T& memo(const std::string& key, Fn&& make) const
    {
        auto it = d_->cache.find(key);
        if (it == d_->cache.end()) {
            auto value = std::make_shared<T>(make());
            it = d_->cache.emplace(key, std::static_pointer_cast<void>(value)).first;
        }
        return *std::static_pointer_cast<T>(it->second);
    }

private:
    explicit Algebra(std::shared_ptr<const detail::AlgebraData> d) : d_(std::move(d)) {}

    std::shared_ptr<const detail::AlgebraData> d_;
};

/// A subalgebra S of A (possibly with a different unit, as for corners).
struct Subalgebra {
    Algebra parent;
    Algebra alg;
    Subspace space;  ///< S inside A
    Matrix embed;    ///< dim A x dim S, columns are the basis of S

    [[nodiscard]] Vec to_parent(std::span<const Residue> c) const { return embed.apply(c); }
    [[nodiscard]] Vec from_parent(std::span<const Residue> v) const
    {
        auto c = space.try_coords(v);
        if (!c) throw std::invalid_argument("element does not lie in the subalgebra");
        return *c;
    }
};

/// Subalgebra on a subspace closed under multiplication, with the given unit.
[[nodiscard]] inline Subalgebra make_subalgebra(const Algebra& a, Subspace s, std::span<const Residue> unit_in_parent,
                                                bool keep_symform = true)
{
    const std::size_t m = s.dim();
    std::vector<Matrix> left(m, Matrix(a.field(), m, m));
    const auto& b = s.basis();
    for (std::size_t i = 0; i < m; ++i) {
        Matrix li = a.left_matrix(b[i]);
        for (std::size_t j = 0; j < m; ++j) {
            Vec prod = li.apply(b[j]);
            auto c = s.try_coords(prod);
            if (!c) throw std::invalid_argument("subspace is not closed under multiplication");
            for (std::size_t k = 0; k < m; ++k) left[i](k, j) = (*c)[k];
        }
    }
    auto u = s.try_coords(unit_in_parent);
    if (!u) throw std::invalid_argument("unit does not lie in the subspace");
    std::optional<Vec> sym;
    if (keep_symform && a.symform()) {
        Vec sv(m);
        for (std::size_t i = 0; i < m; ++i) {
            Residue acc = 0;
            for (std::size_t k = 0; k < a.dim(); ++k) acc = a.field().add(acc, a.field().mul((*a.symform())[k], b[i][k]));
            sv[i] = acc;
        }
        sym = sv;
    }
    Matrix embed = s.basis_columns();
    Algebra alg(a.field(), std::move(left), *u, sym, false);
    return {a, std::move(alg), std::move(s), std::move(embed)};
}

/// Corner eAe with unit e; basis is the reduced echelon basis of span{e b_i e}.
[[nodiscard]] inline Subalgebra corner(const Algebra& a, std::span<const Residue> e)
{
    if (is_zero(e)) throw std::invalid_argument("corner: zero idempotent");
    if (!a.is_idempotent(e)) throw std::invalid_argument("corner: element is not idempotent");
    Matrix le = a.left_matrix(e), re = a.right_matrix(e);
    Matrix proj = le * re;  // x -> e x e
    Subspace s = Subspace::column_space(proj);
    Subalgebra out = make_subalgebra(a, std::move(s), e);
    if (out.alg.symform() && !out.alg.symform_ok()) {
        out = make_subalgebra(a, out.space, e, false);
    }
    return out;
}

/// The center Z(A) as a subspace of A.
[[nodiscard]] inline Subspace center_space(const Algebra& a)
{
    const auto& gens = a.generators();
    const std::size_t n = a.dim();
    Matrix sys(a.field(), n * gens.size(), n);
    for (std::size_t g = 0; g < gens.size(); ++g) sys.set_block(g * n, 0, a.right(gens[g]) - a.left(gens[g]));
    return Subspace::row_space(kernel(sys));
}

[[nodiscard]] inline Subalgebra center(const Algebra& a)
{
    return make_subalgebra(a, center_space(a), a.unit(), false);
}

/// Whether phi (dim B x dim A, column i = image of a_i) is a unital algebra map A -> B.
[[nodiscard]] inline bool is_algebra_map(const Algebra& a, const Algebra& b, const Matrix& phi)
{
    if (phi.rows() != b.dim() || phi.cols() != a.dim()) return false;
    if (phi.apply(a.unit()) != b.unit()) return false;
    std::vector<Vec> img(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) img[i] = phi.col_vec(i);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (phi.apply(a.product_basis(i, j)) != b.mul(img[i], img[j])) return false;
    return true;
}

/// Group algebra kG with basis the elements of G in their stored order.
[[nodiscard]] inline Algebra group_algebra(const PermGroup& g, std::uint64_t p)
{
    Field f(p);
    const std::size_t n = g.order();
    std::vector<Matrix> left(n, Matrix(f, n, n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) left[a](g.mul(a, b), b) = 1;
    Vec s(n, 0);
    s[0] = 1;
    return Algebra(f, std::move(left), unit_vector(n, 0), s, false, g.generator_indices());
}

/// k^n with coordinatewise product.
[[nodiscard]] inline Algebra diagonal_algebra(Field f, std::size_t n)
{
    std::vector<Matrix> left(n, Matrix(f, n, n));
    for (std::size_t i = 0; i < n; ++i) left[i](i, i) = 1;
    return Algebra(f, std::move(left), Vec(n, 1), Vec(n, 1));
}

/// Full matrix algebra M_n(k); basis E_ab at index a*n + b, trace form.
[[nodiscard]] inline Algebra matrix_algebra(Field f, std::size_t n)
{
    const std::size_t d = n * n;
    std::vector<Matrix> left(d, Matrix(f, d, d));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) left[a * n + b](a * n + c, b * n + c) = 1;
    Vec unit(d, 0), tr(d, 0);
    for (std::size_t a = 0; a < n; ++a) unit[a * n + a] = tr[a * n + a] = 1;
    return Algebra(f, std::move(left), unit, tr);
}

/// Truncated polynomial algebra k[t]/(t^n), basis 1, t, ..., t^{n-1}.
[[nodiscard]] inline Algebra truncated_polynomial_algebra(Field f, std::size_t n)
{
    std::vector<Matrix> left(n, Matrix(f, n, n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n; ++j) left[i](i + j, j) = 1;
    Vec s(n, 0);
    s[n - 1] = 1;
    return Algebra(f, std::move(left), unit_vector(n, 0), s);
}

/// Tensor product A (x) B; basis (i, j) at index i * dim B + j.
[[nodiscard]] inline Algebra tensor_algebra(const Algebra& a, const Algebra& b)
{
    std::vector<Matrix> left;
    left.reserve(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) left.push_back(kronecker(a.left(i), b.left(j)));
    Vec unit(a.dim() * b.dim(), 0);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j) unit[i * b.dim() + j] = a.field().mul(a.unit()[i], b.unit()[j]);
    // g (x) 1 and 1 (x) g generate; usable as hints when both units are basis vector 0
    std::vector<std::size_t> hint;
    if (a.unit() == unit_vector(a.dim(), 0) && b.unit() == unit_vector(b.dim(), 0)) {
        for (auto g : a.generators()) hint.push_back(g * b.dim());
        for (auto g : b.generators()) hint.push_back(g);
    }
    return Algebra(a.field(), std::move(left), std::move(unit), std::nullopt, false, std::move(hint));
}

/// Antipode g -> g^{-1} as a matrix kG -> kG.
[[nodiscard]] inline Matrix antipode(const PermGroup& g, std::uint64_t p)
{
    Matrix m(Field(p), g.order(), g.order());
    for (std::size_t a = 0; a < g.order(); ++a) m(g.inv(a), a) = 1;
    return m;
}

}  // namespace yw
