#pragma once

#include <optional>
#include <vector>

#include "matrix.hpp"

namespace yw {

struct RrefResult {
    Matrix reduced;                   ///< reduced row echelon form R
    std::size_t rank = 0;
    Matrix transform;                 ///< invertible T with T * M = R (empty unless requested)
    std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row of R
};

namespace detail {

// In-place Gauss-Jordan on `m`; applies the same row operations to `t` when non-null.
inline std::vector<std::size_t> gauss_jordan(Matrix& m, Matrix* t)
{
    const Field& f = m.field();
    const std::uint64_t p = f.p();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    auto swap_rows = [](Matrix& a, std::size_t i, std::size_t j) {
        if (i == j) return;
        std::swap_ranges(a.row_ptr(i), a.row_ptr(i) + a.cols(), a.row_ptr(j));
    };
    auto eliminate = [&](Matrix& a, std::size_t target, std::size_t src, Residue c, std::size_t from) {
        // row_target -= c * row_src, columns >= from
        const std::uint64_t mc = (p - c) % p;
        Residue* tr = a.row_ptr(target);
        const Residue* sr = a.row_ptr(src);
        for (std::size_t j = from; j < a.cols(); ++j)
            if (sr[j]) tr[j] = static_cast<Residue>((tr[j] + mc * sr[j]) % p);
    };
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        swap_rows(m, r, piv);
        if (t) swap_rows(*t, r, piv);
        const Residue inv = f.inv(m(r, c));
        if (inv != 1) {
            Residue* row = m.row_ptr(r);
            for (std::size_t j = c; j < m.cols(); ++j) row[j] = f.mul(row[j], inv);
            if (t) {
                Residue* trow = t->row_ptr(r);
                for (std::size_t j = 0; j < t->cols(); ++j) trow[j] = f.mul(trow[j], inv);
            }
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            const Residue x = m(i, c);
            if (!x) continue;
            eliminate(m, i, r, x, c);
            if (t) eliminate(*t, i, r, x, 0);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace detail

[[nodiscard]] inline RrefResult rref(const Matrix& m, bool with_transform = true)
{
    RrefResult res;
    res.reduced = m;
    if (with_transform) res.transform = Matrix::identity(m.field(), m.rows());
    res.pivots = detail::gauss_jordan(res.reduced, with_transform ? &res.transform : nullptr);
    res.rank = res.pivots.size();
    return res;
}

[[nodiscard]] inline std::size_t rank(const Matrix& m)
{
    Matrix w = m;
    return detail::gauss_jordan(w, nullptr).size();
}

/// Rows form a basis of the right null space {v : M v = 0}, in canonical
/// (free-column) form.
[[nodiscard]] inline Matrix kernel(const Matrix& m)
{
    Matrix r = m;
    auto piv = detail::gauss_jordan(r, nullptr);
    const Field& f = m.field();
    std::vector<char> is_piv(m.cols(), 0);
    for (auto c : piv) is_piv[c] = 1;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_piv[c]) free.push_back(c);
    Matrix k(f, free.size(), m.cols());
    for (std::size_t i = 0; i < free.size(); ++i) {
        k(i, free[i]) = 1;
        for (std::size_t row = 0; row < piv.size(); ++row) k(i, piv[row]) = f.neg(r(row, free[i]));
    }
    return k;
}

/// Particular solution of A x = b, or nullopt when the system is inconsistent.
[[nodiscard]] inline std::optional<Vec> solve(const Matrix& a, std::span<const Residue> b)
{
    if (b.size() != a.rows()) throw std::invalid_argument("solve: shape mismatch");
    Matrix aug = hstack(a, Matrix::column(a.field(), b));
    auto piv = detail::gauss_jordan(aug, nullptr);
    Vec x(a.cols(), 0);
    for (std::size_t r = 0; r < piv.size(); ++r) {
        if (piv[r] == a.cols()) return std::nullopt;
        x[piv[r]] = aug(r, a.cols());
    }
    return x;
}

/// Solve A X = B column by column; nullopt if any column is inconsistent.
[[nodiscard]] inline std::optional<Matrix> solve_matrix(const Matrix& a, const Matrix& b)
{
    if (b.rows() != a.rows()) throw std::invalid_argument("solve_matrix: shape mismatch");
    Matrix aug = hstack(a, b);
    auto piv = detail::gauss_jordan(aug, nullptr);
    Matrix x(a.field(), a.cols(), b.cols());
    for (std::size_t r = 0; r < piv.size(); ++r) {
        if (piv[r] >= a.cols()) return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j) x(piv[r], j) = aug(r, a.cols() + j);
    }
    return x;
}

[[nodiscard]] inline std::optional<Matrix> inverse(const Matrix& m)
{
    if (!m.square()) return std::nullopt;
    auto res = rref(m, true);
    if (res.rank != m.rows()) return std::nullopt;
    return res.transform;
}

[[nodiscard]] inline bool is_invertible(const Matrix& m) { return m.square() && rank(m) == m.rows(); }

/// A subspace of F^n kept in reduced row echelon form. Coordinates of a
/// member are its entries at the pivot columns.
class Subspace {
public:
    Subspace() = default;
    Subspace(Field f, std::size_t ambient) : f_(f), n_(ambient), row_of_col_(ambient, -1) {}

    static Subspace span(Field f, std::size_t ambient, const std::vector<Vec>& vs)
    {
        Subspace s(f, ambient);
        for (auto& v : vs) s.add(v);
        return s;
    }
    /// Span of the rows of m.
    static Subspace row_space(const Matrix& m)
    {
        Matrix r = m;
        auto piv = detail::gauss_jordan(r, nullptr);
        Subspace s(m.field(), m.cols());
        for (std::size_t i = 0; i < piv.size(); ++i) {
            s.rows_.push_back(r.row_vec(i));
            s.pivots_.push_back(piv[i]);
            s.row_of_col_[piv[i]] = static_cast<long>(i);
        }
        return s;
    }
    static Subspace column_space(const Matrix& m) { return row_space(m.transpose()); }
    static Subspace whole(Field f, std::size_t n) { return row_space(Matrix::identity(f, n)); }

    [[nodiscard]] const Field& field() const noexcept { return f_; }
    [[nodiscard]] std::size_t ambient() const noexcept { return n_; }
    [[nodiscard]] std::size_t dim() const noexcept { return rows_.size(); }
    [[nodiscard]] const std::vector<Vec>& basis() const noexcept { return rows_; }
    [[nodiscard]] const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// Basis vectors as the columns of an ambient x dim matrix.
    [[nodiscard]] Matrix basis_columns() const { return Matrix::from_columns(f_, n_, rows_); }
    [[nodiscard]] Matrix basis_rows() const { return Matrix::from_rows(f_, n_, rows_); }

    /// v minus its component along the pivots (zero iff v is in the subspace).
    [[nodiscard]] Vec reduce(Vec v) const
    {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Residue c = v[pivots_[i]];
            if (c) axpy(f_, f_.neg(c), rows_[i], v);
        }
        return v;
    }
    [[nodiscard]] bool contains(std::span<const Residue> v) const { return is_zero(reduce(Vec(v.begin(), v.end()))); }

    /// Adds v; returns true when the dimension grew.
    bool add(Vec v)
    {
        v = reduce(std::move(v));
        std::size_t c = 0;
        while (c < n_ && v[c] == 0) ++c;
        if (c == n_) return false;
        const Residue inv = f_.inv(v[c]);
        for (auto& x : v) x = f_.mul(x, inv);
        for (auto& r : rows_)
            if (r[c]) axpy(f_, f_.neg(r[c]), v, r);
        auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), c) - pivots_.begin();
        rows_.insert(rows_.begin() + pos, std::move(v));
        pivots_.insert(pivots_.begin() + pos, c);
        for (std::size_t i = static_cast<std::size_t>(pos); i < pivots_.size(); ++i)
            row_of_col_[pivots_[i]] = static_cast<long>(i);
        return true;
    }

    /// Coordinates with respect to basis(); v must be a member.
    [[nodiscard]] Vec coords(std::span<const Residue> v) const
    {
        Vec c(rows_.size());
        for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v[pivots_[i]];
        return c;
    }
    /// Coordinates, or nullopt when v is not a member.
    [[nodiscard]] std::optional<Vec> try_coords(std::span<const Residue> v) const
    {
        if (!contains(v)) return std::nullopt;
        return coords(v);
    }
    [[nodiscard]] Vec from_coords(std::span<const Residue> c) const
    {
        Vec v(n_, 0);
        for (std::size_t i = 0; i < rows_.size(); ++i) axpy(f_, c[i], rows_[i], v);
        return v;
    }

    /// Ambient coordinates not used as pivots; they index a basis of the quotient.
    [[nodiscard]] std::vector<std::size_t> nonpivots() const
    {
        std::vector<std::size_t> out;
        for (std::size_t c = 0; c < n_; ++c)
            if (row_of_col_[c] < 0) out.push_back(c);
        return out;
    }
    /// Image of v in F^n / this, in the nonpivot basis.
    [[nodiscard]] Vec quotient_coords(Vec v) const
    {
        v = reduce(std::move(v));
        Vec q;
        q.reserve(n_ - rows_.size());
        for (std::size_t c = 0; c < n_; ++c)
            if (row_of_col_[c] < 0) q.push_back(v[c]);
        return q;
    }
    /// Quotient map F^n -> F^n / this as a (n - dim) x n matrix.
    [[nodiscard]] Matrix quotient_map() const
    {
        auto np = nonpivots();
        std::vector<long> qidx(n_, -1);
        for (std::size_t i = 0; i < np.size(); ++i) qidx[np[i]] = static_cast<long>(i);
        Matrix q(f_, np.size(), n_);
        for (std::size_t c = 0; c < n_; ++c) {
            if (qidx[c] >= 0) {
                q(static_cast<std::size_t>(qidx[c]), c) = 1;
            } else {
                const Vec& r = rows_[static_cast<std::size_t>(row_of_col_[c])];
                for (std::size_t i = 0; i < np.size(); ++i) q(i, c) = f_.neg(r[np[i]]);
            }
        }
        return q;
    }
    /// Section of the quotient map: nonpivot basis vectors embedded in F^n.
    [[nodiscard]] Matrix quotient_section() const
    {
        auto np = nonpivots();
        Matrix s(f_, n_, np.size());
        for (std::size_t i = 0; i < np.size(); ++i) s(np[i], i) = 1;
        return s;
    }
    /// Matrix extracting coordinates (dim x n): entries at pivots.
    [[nodiscard]] Matrix coord_map() const
    {
        Matrix c(f_, rows_.size(), n_);
        for (std::size_t i = 0; i < rows_.size(); ++i) c(i, pivots_[i]) = 1;
        return c;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

private:
    Field f_;
    std::size_t n_ = 0;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<long> row_of_col_;
};

[[nodiscard]] inline Subspace intersect(const Subspace& a, const Subspace& b)
{
    // v = sum x_i a_i = sum y_j b_j; kernel of [A^T | -B^T].
    const Field& f = a.field();
    const std::size_t n = a.ambient();
    Matrix sys(f, n, a.dim() + b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t r = 0; r < n; ++r) sys(r, i) = a.basis()[i][r];
    for (std::size_t j = 0; j < b.dim(); ++j)
        for (std::size_t r = 0; r < n; ++r) sys(r, a.dim() + j) = f.neg(b.basis()[j][r]);
    Matrix k = kernel(sys);
    Subspace out(f, n);
    for (std::size_t t = 0; t < k.rows(); ++t) {
        Vec v(n, 0);
        for (std::size_t i = 0; i < a.dim(); ++i) axpy(f, k(t, i), a.basis()[i], v);
        out.add(std::move(v));
    }
    return out;
}

}  // namespace yw
