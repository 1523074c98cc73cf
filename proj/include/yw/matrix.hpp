#pragma once

#include <algorithm>
#include <cstddef>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "field.hpp"

namespace yw {

using Vec = std::vector<Residue>;

/// Dense row-major matrix over a prime field.
class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, std::size_t rows, std::size_t cols) : f_(f), rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    Matrix(Field f, std::size_t rows, std::size_t cols, std::vector<Residue> data)
        : f_(f), rows_(rows), cols_(cols), data_(std::move(data))
    {
        if (data_.size() != rows * cols) throw std::invalid_argument("matrix data length mismatch");
        for (auto& x : data_)
            if (x >= f_.p()) throw std::invalid_argument("matrix entry not reduced modulo p");
    }
    Matrix(Field f, std::initializer_list<std::initializer_list<std::int64_t>> rows) : f_(f)
    {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (auto& r : rows) {
            if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
            for (auto x : r) data_.push_back(f_.from_int(x));
        }
    }

    static Matrix identity(Field f, std::size_t n)
    {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    static Matrix column(Field f, std::span<const Residue> v)
    {
        return Matrix(f, v.size(), 1, std::vector<Residue>(v.begin(), v.end()));
    }
    static Matrix row(Field f, std::span<const Residue> v)
    {
        return Matrix(f, 1, v.size(), std::vector<Residue>(v.begin(), v.end()));
    }
    /// Matrix whose rows are the given vectors (all of length `cols`).
    static Matrix from_rows(Field f, std::size_t cols, const std::vector<Vec>& rows)
    {
        Matrix m(f, rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) std::copy(rows[i].begin(), rows[i].end(), m.row_ptr(i));
        return m;
    }
    static Matrix from_columns(Field f, std::size_t rows, const std::vector<Vec>& cols)
    {
        Matrix m(f, rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
        return m;
    }

    [[nodiscard]] const Field& field() const noexcept { return f_; }
    [[nodiscard]] Residue p() const noexcept { return f_.p(); }
    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool square() const noexcept { return rows_ == cols_; }
    [[nodiscard]] bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Residue& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
    Residue operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
    Residue* row_ptr(std::size_t i) noexcept { return data_.data() + i * cols_; }
    const Residue* row_ptr(std::size_t i) const noexcept { return data_.data() + i * cols_; }
    [[nodiscard]] std::span<const Residue> row_span(std::size_t i) const { return {row_ptr(i), cols_}; }
    [[nodiscard]] Vec row_vec(std::size_t i) const { return Vec(row_ptr(i), row_ptr(i) + cols_); }
    [[nodiscard]] Vec col_vec(std::size_t j) const
    {
        Vec v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    [[nodiscard]] const std::vector<Residue>& data() const noexcept { return data_; }

    [[nodiscard]] bool is_zero() const noexcept
    {
        return std::all_of(data_.begin(), data_.end(), [](Residue x) { return x == 0; });
    }
    [[nodiscard]] bool is_identity() const noexcept
    {
        if (!square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
        return true;
    }

    [[nodiscard]] Matrix transpose() const
    {
        Matrix t(f_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    [[nodiscard]] Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
    {
        if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("matrix block out of range");
        Matrix b(f_, nr, nc);
        for (std::size_t i = 0; i < nr; ++i) std::copy_n(row_ptr(r0 + i) + c0, nc, b.row_ptr(i));
        return b;
    }
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b)
    {
        if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::out_of_range("matrix block out of range");
        for (std::size_t i = 0; i < b.rows_; ++i) std::copy_n(b.row_ptr(i), b.cols_, row_ptr(r0 + i) + c0);
    }
    [[nodiscard]] Matrix select_rows(std::span<const std::size_t> idx) const
    {
        Matrix m(f_, idx.size(), cols_);
        for (std::size_t i = 0; i < idx.size(); ++i) std::copy_n(row_ptr(idx[i]), cols_, m.row_ptr(i));
        return m;
    }
    [[nodiscard]] Matrix select_cols(std::span<const std::size_t> idx) const
    {
        Matrix m(f_, rows_, idx.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
        return m;
    }

    Matrix& operator+=(const Matrix& o)
    {
        check_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = f_.add(data_[k], o.data_[k]);
        return *this;
    }
    Matrix& operator-=(const Matrix& o)
    {
        check_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] = f_.sub(data_[k], o.data_[k]);
        return *this;
    }
    Matrix& scale(Residue c)
    {
        for (auto& x : data_) x = f_.mul(x, c);
        return *this;
    }
    /// this += c * o
    Matrix& axpy(Residue c, const Matrix& o)
    {
        check_same_shape(o);
        if (c == 0) return *this;
        for (std::size_t k = 0; k < data_.size(); ++k)
            data_[k] = static_cast<Residue>((data_[k] + std::uint64_t{c} * o.data_[k]) % f_.p());
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    [[nodiscard]] Matrix operator-() const
    {
        Matrix m = *this;
        for (auto& x : m.data_) x = f_.neg(x);
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        if (a.p() != b.p()) throw std::invalid_argument("matrix modulus mismatch");
        Matrix c(a.f_, a.rows_, b.cols_);
        const std::uint64_t p = a.p();
        std::vector<std::uint64_t> acc(b.cols_);
        const bool lazy = a.f_.small();
        for (std::size_t i = 0; i < a.rows_; ++i) {
            std::fill(acc.begin(), acc.end(), 0);
            const Residue* ar = a.row_ptr(i);
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const std::uint64_t x = ar[k];
                if (!x) continue;
                const Residue* br = b.row_ptr(k);
                if (lazy) {
                    for (std::size_t j = 0; j < b.cols_; ++j) acc[j] += x * br[j];
                } else {
                    for (std::size_t j = 0; j < b.cols_; ++j) acc[j] = (acc[j] + x * br[j]) % p;
                }
            }
            Residue* cr = c.row_ptr(i);
            for (std::size_t j = 0; j < b.cols_; ++j) cr[j] = static_cast<Residue>(acc[j] % p);
        }
        return c;
    }

    [[nodiscard]] Vec apply(std::span<const Residue> v) const
    {
        if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
        Vec out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            std::uint64_t acc = 0;
            const Residue* r = row_ptr(i);
            if (f_.small()) {
                for (std::size_t j = 0; j < cols_; ++j) acc += std::uint64_t{r[j]} * v[j];
            } else {
                for (std::size_t j = 0; j < cols_; ++j) acc = (acc + std::uint64_t{r[j]} * v[j]) % f_.p();
            }
            out[i] = static_cast<Residue>(acc % f_.p());
        }
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.p() == b.p() && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    void check_same_shape(const Matrix& o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
        if (p() != o.p()) throw std::invalid_argument("matrix modulus mismatch");
    }

    Field f_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Residue> data_;
};

[[nodiscard]] inline Matrix hstack(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
    Matrix m(a.field(), a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

[[nodiscard]] inline Matrix vstack(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
    Matrix m(a.field(), a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

/// Block-diagonal sum of square-or-rectangular blocks.
[[nodiscard]] inline Matrix direct_sum(Field f, std::span<const Matrix> blocks)
{
    std::size_t r = 0, c = 0;
    for (auto& b : blocks) r += b.rows(), c += b.cols();
    Matrix m(f, r, c);
    r = c = 0;
    for (auto& b : blocks) {
        m.set_block(r, c, b);
        r += b.rows();
        c += b.cols();
    }
    return m;
}

[[nodiscard]] inline Matrix kronecker(const Matrix& a, const Matrix& b)
{
    if (a.p() != b.p()) throw std::invalid_argument("kronecker modulus mismatch");
    const Field& f = a.field();
    Matrix k(f, a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Residue x = a(i, j);
            if (!x) continue;
            for (std::size_t r = 0; r < b.rows(); ++r) {
                Residue* out = k.row_ptr(i * b.rows() + r) + j * b.cols();
                const Residue* br = b.row_ptr(r);
                for (std::size_t c = 0; c < b.cols(); ++c) out[c] = f.mul(x, br[c]);
            }
        }
    return k;
}

// ---- vector helpers -------------------------------------------------------

[[nodiscard]] inline bool is_zero(std::span<const Residue> v) noexcept
{
    return std::all_of(v.begin(), v.end(), [](Residue x) { return x == 0; });
}

inline void axpy(const Field& f, Residue c, std::span<const Residue> x, std::span<Residue> y)
{
    if (c == 0) return;
    for (std::size_t i = 0; i < x.size(); ++i)
        y[i] = static_cast<Residue>((y[i] + std::uint64_t{c} * x[i]) % f.p());
}

[[nodiscard]] inline Vec unit_vector(std::size_t n, std::size_t i)
{
    Vec v(n, 0);
    v[i] = 1;
    return v;
}

// ---- text format ----------------------------------------------------------
// "p rows cols" followed by `rows` lines of space-separated residues.

inline void write_matrix(std::ostream& os, const Matrix& m)
{
    os << m.p() << ' ' << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << m(i, j);
        }
        os << '\n';
    }
}

[[nodiscard]] inline std::string to_text(const Matrix& m)
{
    std::ostringstream os;
    write_matrix(os, m);
    return os.str();
}

}  // namespace yw
