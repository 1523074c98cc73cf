#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "decompose.hpp"
#include "tensor.hpp"
#include "verdict.hpp"

namespace yw {

/// Bounded complex of L-R-bimodules, homological indexing: d_n: C_n -> C_{n-1}.
class Complex {
public:
    Complex() = default;
    /// comps[k] sits in degree lo + k; diffs[k] is d_{lo+k+1}.
    Complex(Algebra l, Algebra r, int lo, std::vector<Bimodule> comps, std::vector<Matrix> diffs, bool check = true)
        : l_(std::move(l)), r_(std::move(r)), lo_(lo), comps_(std::move(comps)), diffs_(std::move(diffs))
    {
        zero_ = zero_bimodule(l_, r_);
        const std::size_t need = comps_.empty() ? 0 : comps_.size() - 1;
        if (diffs_.size() != need) throw std::invalid_argument("complex: need one differential between adjacent degrees");
        for (std::size_t k = 0; k < diffs_.size(); ++k)
            if (diffs_[k].rows() != comps_[k].dim() || diffs_[k].cols() != comps_[k + 1].dim())
                throw std::invalid_argument("complex: differential has wrong shape");
        if (check) validate();
    }

    [[nodiscard]] const Algebra& left_algebra() const { return l_; }
    [[nodiscard]] const Algebra& right_algebra() const { return r_; }
    [[nodiscard]] const Field& field() const { return l_.field(); }
    [[nodiscard]] int lo() const { return lo_; }
    [[nodiscard]] int hi() const { return lo_ + static_cast<int>(comps_.size()) - 1; }
    [[nodiscard]] bool in_range(int n) const { return n >= lo_ && n <= hi(); }
    [[nodiscard]] const Bimodule& at(int n) const { return in_range(n) ? comps_[static_cast<std::size_t>(n - lo_)] : zero_; }
    [[nodiscard]] std::size_t dim(int n) const { return at(n).dim(); }
    [[nodiscard]] std::size_t total_dim() const
    {
        std::size_t s = 0;
        for (auto& c : comps_) s += c.dim();
        return s;
    }
    [[nodiscard]] Matrix d(int n) const
    {
        if (in_range(n) && in_range(n - 1)) return diffs_[static_cast<std::size_t>(n - 1 - lo_)];
        return Matrix(field(), dim(n - 1), dim(n));
    }
    [[nodiscard]] const std::vector<Bimodule>& components() const { return comps_; }
    [[nodiscard]] const std::vector<Matrix>& differentials() const { return diffs_; }

    void validate() const
    {
        for (int n = lo_ + 1; n <= hi(); ++n) {
            if (!is_homomorphism(d(n), at(n), at(n - 1))) throw std::invalid_argument("complex: d_" + std::to_string(n) + " is not a bimodule map");
            if (n - 1 > lo_ && !(d(n - 1) * d(n)).is_zero()) throw std::invalid_argument("complex: d^2 != 0 at degree " + std::to_string(n));
        }
    }

    friend bool operator==(const Complex& a, const Complex& b)
    {
        return a.lo_ == b.lo_ && a.comps_ == b.comps_ && a.diffs_ == b.diffs_;
    }

private:
    Algebra l_, r_;
    int lo_ = 0;
    std::vector<Bimodule> comps_;
    std::vector<Matrix> diffs_;
    Bimodule zero_;
};

/// A bimodule in a single degree.
[[nodiscard]] inline Complex concentrated(const Bimodule& b, int n = 0)
{
    return Complex(b.left_algebra(), b.right_algebra(), n, {b}, {});
}

/// The same complex over the degree range [lo, hi], padded or cut with zeros.
[[nodiscard]] inline Complex reindexed(const Complex& c, int lo, int hi)
{
    std::vector<Bimodule> comps;
    std::vector<Matrix> diffs;
    for (int n = lo; n <= hi; ++n) {
        comps.push_back(c.at(n));
        if (n > lo) diffs.push_back(c.d(n));
    }
    return Complex(c.left_algebra(), c.right_algebra(), lo, std::move(comps), std::move(diffs), false);
}

/// Drops zero components at both ends.
[[nodiscard]] inline Complex trimmed(const Complex& c)
{
    int lo = c.lo(), hi = c.hi();
    while (lo <= hi && c.dim(lo) == 0) ++lo;
    while (hi >= lo && c.dim(hi) == 0) --hi;
    if (lo > hi) return Complex(c.left_algebra(), c.right_algebra(), 0, {}, {});
    return reindexed(c, lo, hi);
}

/// C[k]: component n moves to n + k, differentials scaled by (-1)^k.
[[nodiscard]] inline Complex shift(const Complex& c, int k)
{
    std::vector<Matrix> diffs;
    for (auto& m : c.differentials()) diffs.push_back(k % 2 ? -m : m);
    return Complex(c.left_algebra(), c.right_algebra(), c.lo() + k, c.components(), std::move(diffs), false);
}

/// One-sided restriction: the other action replaced by the ground field.
[[nodiscard]] inline Complex restrict_side(const Complex& c, Side side)
{
    if (side == Side::Both) return c;
    std::vector<Bimodule> comps;
    for (auto& b : c.components()) comps.push_back(side == Side::Left ? Bimodule::from_left(b.left()) : Bimodule::from_right(b.right()));
    Algebra k = ground_algebra(c.field());
    return Complex(side == Side::Left ? c.left_algebra() : k, side == Side::Left ? k : c.right_algebra(), c.lo(),
                   std::move(comps), c.differentials(), false);
}

namespace detail {

inline void range_union(const Complex& c, const Complex& d, int& lo, int& hi)
{
    const bool ce = c.components().empty(), de = d.components().empty();
    if (ce && de) {
        lo = 0;
        hi = -1;
        return;
    }
    lo = ce ? d.lo() : de ? c.lo() : std::min(c.lo(), d.lo());
    hi = ce ? d.hi() : de ? c.hi() : std::max(c.hi(), d.hi());
}

}  // namespace detail

/// Degreewise direct sum, C first.
[[nodiscard]] inline Complex direct_sum(const Complex& c, const Complex& d)
{
    int lo = 0, hi = 0;
    detail::range_union(c, d, lo, hi);
    std::vector<Bimodule> comps;
    std::vector<Matrix> diffs;
    for (int n = lo; n <= hi; ++n) {
        comps.push_back(direct_sum(std::vector<Bimodule>{c.at(n), d.at(n)}));
        if (n > lo) {
            std::vector<Matrix> bl{c.d(n), d.d(n)};
            diffs.push_back(direct_sum(c.field(), bl));
        }
    }
    return Complex(c.left_algebra(), c.right_algebra(), lo, std::move(comps), std::move(diffs), false);
}

/// Homology dimensions for degrees lo..hi.
[[nodiscard]] inline std::vector<std::size_t> homology(const Complex& c)
{
    std::vector<std::size_t> h;
    for (int n = c.lo(); n <= c.hi(); ++n) h.push_back(c.dim(n) - rank(c.d(n)) - rank(c.d(n + 1)));
    return h;
}


/// Degreewise maps f_n: C_n -> D_n over the union of the degree ranges.
struct ChainMap {
    Complex src, dst;
    int lo = 0;
    std::vector<Matrix> f;

    [[nodiscard]] Matrix at(int n) const
    {
        const int k = n - lo;
        if (k >= 0 && k < static_cast<int>(f.size())) return f[static_cast<std::size_t>(k)];
        return Matrix(src.field(), dst.dim(n), src.dim(n));
    }
};

/// Degree +1 maps h_n: C_n -> D_{n+1}.
struct Homotopy {
    int lo = 0;
    std::vector<Matrix> h;

    [[nodiscard]] Matrix at(int n, const Complex& c, const Complex& d) const
    {
        const int k = n - lo;
        if (k >= 0 && k < static_cast<int>(h.size())) return h[static_cast<std::size_t>(k)];
        return Matrix(c.field(), d.dim(n + 1), c.dim(n));
    }
};

[[nodiscard]] inline ChainMap make_chain_map(const Complex& c, const Complex& d, const std::function<Matrix(int)>& part)
{
    ChainMap m{c, d, 0, {}};
    int hi = 0;
    detail::range_union(c, d, m.lo, hi);
    for (int n = m.lo; n <= hi; ++n) {
        Matrix x = part(n);
        if (x.rows() != d.dim(n) || x.cols() != c.dim(n)) throw std::invalid_argument("chain map: component has wrong shape");
        m.f.push_back(std::move(x));
    }
    return m;
}

[[nodiscard]] inline ChainMap zero_map(const Complex& c, const Complex& d)
{
    return make_chain_map(c, d, [&](int n) { return Matrix(c.field(), d.dim(n), c.dim(n)); });
}

[[nodiscard]] inline ChainMap identity_map(const Complex& c)
{
    return make_chain_map(c, c, [&](int n) { return Matrix::identity(c.field(), c.dim(n)); });
}

[[nodiscard]] inline ChainMap compose(const ChainMap& g, const ChainMap& f)
{
    return make_chain_map(f.src, g.dst, [&](int n) { return g.at(n) * f.at(n); });
}

[[nodiscard]] inline ChainMap operator-(const ChainMap& a, const ChainMap& b)
{
    return make_chain_map(a.src, a.dst, [&](int n) { return a.at(n) - b.at(n); });
}

[[nodiscard]] inline bool is_chain_map(const ChainMap& m)
{
    int lo = 0, hi = 0;
    detail::range_union(m.src, m.dst, lo, hi);
    for (int n = lo; n <= hi; ++n) {
        if (!is_homomorphism(m.at(n), m.src.at(n), m.dst.at(n))) return false;
        if (m.dst.d(n) * m.at(n) != m.at(n - 1) * m.src.d(n)) return false;
    }
    return true;
}

/// Whether f = d h + h d degreewise.
[[nodiscard]] inline bool is_homotopy(const ChainMap& f, const Homotopy& h)
{
    int lo = 0, hi = 0;
    detail::range_union(f.src, f.dst, lo, hi);
    for (int n = lo - 1; n <= hi; ++n)
        if (!is_homomorphism(h.at(n, f.src, f.dst), f.src.at(n), f.dst.at(n + 1))) return false;
    for (int n = lo; n <= hi; ++n)
        if (f.at(n) != f.dst.d(n + 1) * h.at(n, f.src, f.dst) + h.at(n - 1, f.src, f.dst) * f.src.d(n)) return false;
    return true;
}

[[nodiscard]] inline Homotopy zero_homotopy(const Complex& c, const Complex& d)
{
    Homotopy h;
    int hi = 0;
    detail::range_union(c, d, h.lo, hi);
    for (int n = h.lo; n <= hi; ++n) h.h.push_back(Matrix(c.field(), d.dim(n + 1), c.dim(n)));
    return h;
}

namespace detail {

// Sparse description of a linear system in unknown bimodule maps. Every
// equation lives in a Hom space, so it is imposed on that space's pivot entries.
struct Unknown {
    MapSpace space;
};
struct Term {
    std::size_t unknown;
    Matrix left, right;  // contributes left * X * right
};
struct Equation {
    MapSpace target;
    Matrix rhs;
    std::vector<Term> terms;
};

inline std::optional<std::vector<Matrix>> solve_maps(const Field& f, const std::vector<Unknown>& xs,
                                                     const std::vector<Equation>& eqs)
{
    std::vector<std::size_t> col_off, row_off;
    std::size_t ncols = 0, nrows = 0;
    for (auto& x : xs) col_off.push_back(ncols), ncols += x.space.dim();
    for (auto& e : eqs) row_off.push_back(nrows), nrows += e.target.dim();
    Matrix a(f, nrows, ncols);
    Vec b(nrows, 0);
    for (std::size_t q = 0; q < eqs.size(); ++q) {
        const Equation& e = eqs[q];
        if (e.target.dim() == 0) continue;
        Vec rc = e.target.coords(e.rhs);
        for (std::size_t r = 0; r < rc.size(); ++r) b[row_off[q] + r] = rc[r];
        for (auto& t : e.terms) {
            const MapSpace& s = xs[t.unknown].space;
            for (std::size_t k = 0; k < s.dim(); ++k) {
                Vec c = e.target.coords(t.left * s.basis[k] * t.right);
                for (std::size_t r = 0; r < c.size(); ++r)
                    if (c[r]) a(row_off[q] + r, col_off[t.unknown] + k) = f.add(a(row_off[q] + r, col_off[t.unknown] + k), c[r]);
            }
        }
    }
    std::optional<Vec> sol = ncols ? solve(a, b) : (is_zero(b) ? std::optional<Vec>(Vec{}) : std::nullopt);
    if (!sol) return std::nullopt;
    std::vector<Matrix> out;
    for (std::size_t u = 0; u < xs.size(); ++u) {
        const MapSpace& s = xs[u].space;
        out.push_back(s.from_coords(std::span<const Residue>(sol->data() + col_off[u], s.dim())));
    }
    return out;
}

inline Matrix scaled(const Matrix& m, bool negate) { return negate ? -m : m; }

}  // namespace detail

/// h with f = d h + h d, or nullopt when f is not null-homotopic.
[[nodiscard]] inline std::optional<Homotopy> null_homotopy(const ChainMap& f)
{
    const Complex &c = f.src, &d = f.dst;
    const Field& fld = c.field();
    int lo = 0, hi = 0;
    detail::range_union(c, d, lo, hi);
    std::vector<detail::Unknown> xs;
    for (int n = lo - 1; n <= hi; ++n) xs.push_back({hom_space(c.at(n), d.at(n + 1))});
    auto hidx = [&](int n) { return static_cast<std::size_t>(n - (lo - 1)); };
    std::vector<detail::Equation> eqs;
    for (int n = lo; n <= hi; ++n) {
        detail::Equation e{hom_space(c.at(n), d.at(n)), f.at(n), {}};
        e.terms.push_back({hidx(n), d.d(n + 1), Matrix::identity(fld, c.dim(n))});
        e.terms.push_back({hidx(n - 1), Matrix::identity(fld, d.dim(n)), c.d(n)});
        eqs.push_back(std::move(e));
    }
    auto sol = detail::solve_maps(fld, xs, eqs);
    if (!sol) return std::nullopt;
    Homotopy h{lo - 1, std::move(*sol)};
    if (!is_homotopy(f, h)) throw std::logic_error("null_homotopy: solution fails the homotopy identity");
    return h;
}

[[nodiscard]] inline bool is_contractible(const Complex& c) { return null_homotopy(identity_map(c)).has_value(); }

/// f: C -> D, g: D -> C with g f - 1 = d hs + hs d and f g - 1 = d ht + ht d.
struct HomotopyEquivalence {
    ChainMap f, g;
    Homotopy hs, ht;
};

[[nodiscard]] inline Verdict verify_homotopy_equivalence(const HomotopyEquivalence& w)
{
    Verdict v;
    if (!(w.f.src == w.g.dst) || !(w.f.dst == w.g.src)) {
        v.fail("f and g are not between the same complexes");
        return v;
    }
    v.require(is_chain_map(w.f), "f is not a chain map");
    v.require(is_chain_map(w.g), "g is not a chain map");
    if (!v.ok) return v;
    v.require(is_homotopy(compose(w.g, w.f) - identity_map(w.f.src), w.hs), "g f - 1 != d h + h d on the source");
    v.require(is_homotopy(compose(w.f, w.g) - identity_map(w.f.dst), w.ht), "f g - 1 != d h + h d on the target");
    return v;
}

/// A homotopy inverse of f with both homotopies, from one joint linear solve.
[[nodiscard]] inline std::optional<HomotopyEquivalence> homotopy_inverse(const ChainMap& f)
{
    const Complex &c = f.src, &d = f.dst;
    const Field& fld = c.field();
    int lo = 0, hi = 0;
    detail::range_union(c, d, lo, hi);
    std::vector<detail::Unknown> xs;
    const std::size_t span = static_cast<std::size_t>(hi - lo + 2);
    // g_n for n in [lo, hi]; hs_n, ht_n for n in [lo - 1, hi]
    for (int n = lo; n <= hi; ++n) xs.push_back({hom_space(d.at(n), c.at(n))});
    for (int n = lo - 1; n <= hi; ++n) xs.push_back({hom_space(c.at(n), c.at(n + 1))});
    for (int n = lo - 1; n <= hi; ++n) xs.push_back({hom_space(d.at(n), d.at(n + 1))});
    const std::size_t ng = static_cast<std::size_t>(hi - lo + 1);
    auto gi = [&](int n) { return static_cast<std::size_t>(n - lo); };
    auto si = [&](int n) { return ng + static_cast<std::size_t>(n - lo + 1); };
    auto ti = [&](int n) { return ng + span + static_cast<std::size_t>(n - lo + 1); };
    std::vector<detail::Equation> eqs;
    for (int n = lo; n <= hi; ++n) {
        // d g_n - g_{n-1} d = 0
        if (n - 1 >= lo) {
            detail::Equation e{hom_space(d.at(n), c.at(n - 1)), Matrix(fld, c.dim(n - 1), d.dim(n)), {}};
            e.terms.push_back({gi(n), c.d(n), Matrix::identity(fld, d.dim(n))});
            e.terms.push_back({gi(n - 1), -Matrix::identity(fld, c.dim(n - 1)), d.d(n)});
            eqs.push_back(std::move(e));
        }
        // g f - d hs - hs d = 1
        detail::Equation es{hom_space(c.at(n), c.at(n)), Matrix::identity(fld, c.dim(n)), {}};
        es.terms.push_back({gi(n), Matrix::identity(fld, c.dim(n)), f.at(n)});
        es.terms.push_back({si(n), -c.d(n + 1), Matrix::identity(fld, c.dim(n))});
        es.terms.push_back({si(n - 1), -Matrix::identity(fld, c.dim(n)), c.d(n)});
        eqs.push_back(std::move(es));
        detail::Equation et{hom_space(d.at(n), d.at(n)), Matrix::identity(fld, d.dim(n)), {}};
        et.terms.push_back({gi(n), f.at(n), Matrix::identity(fld, d.dim(n))});
        et.terms.push_back({ti(n), -d.d(n + 1), Matrix::identity(fld, d.dim(n))});
        et.terms.push_back({ti(n - 1), -Matrix::identity(fld, d.dim(n)), d.d(n)});
        eqs.push_back(std::move(et));
    }
    auto sol = detail::solve_maps(fld, xs, eqs);
    if (!sol) return std::nullopt;
    HomotopyEquivalence w;
    w.f = f;
    w.g = make_chain_map(d, c, [&](int n) { return (*sol)[gi(n)]; });
    w.hs.lo = w.ht.lo = lo - 1;
    for (int n = lo - 1; n <= hi; ++n) {
        w.hs.h.push_back((*sol)[si(n)]);
        w.ht.h.push_back((*sol)[ti(n)]);
    }
    if (!verify_homotopy_equivalence(w).ok) throw std::logic_error("homotopy_inverse: solution fails verification");
    return w;
}

/// Whether f induces an isomorphism on homology in every degree.
[[nodiscard]] inline bool is_quasi_isomorphism(const ChainMap& f)
{
    int lo = 0, hi = 0;
    detail::range_union(f.src, f.dst, lo, hi);
    const Field& fld = f.src.field();
    for (int n = lo; n <= hi; ++n) {
        const Complex &c = f.src, &d = f.dst;
        const std::size_t hc = c.dim(n) - rank(c.d(n)) - rank(c.d(n + 1));
        const std::size_t hd = d.dim(n) - rank(d.d(n)) - rank(d.d(n + 1));
        if (hc != hd) return false;
        if (hd == 0) continue;
        // surjective: f(Z_n C) + B_n D = Z_n D
        Matrix zc = kernel(c.d(n));
        Matrix img = zc.rows() ? f.at(n) * zc.transpose() : Matrix(fld, d.dim(n), 0);
        Matrix both = hstack(img, d.d(n + 1));
        if (rank(both) != d.dim(n) - rank(d.d(n))) return false;
    }
    return true;
}

/// cone(f)_n = C_{n-1} + D_n with d = [[-d_C, 0], [f, d_D]].
[[nodiscard]] inline Complex cone(const ChainMap& f)
{
    const Complex &c = f.src, &d = f.dst;
    const Field& fld = c.field();
    const int lo = std::min(c.lo() + 1, d.lo()), hi = std::max(c.hi() + 1, d.hi());
    std::vector<Bimodule> comps;
    std::vector<Matrix> diffs;
    for (int n = lo; n <= hi; ++n) {
        comps.push_back(direct_sum(std::vector<Bimodule>{c.at(n - 1), d.at(n)}));
        if (n > lo) {
            Matrix m(fld, c.dim(n - 2) + d.dim(n - 1), c.dim(n - 1) + d.dim(n));
            m.set_block(0, 0, -c.d(n - 1));
            m.set_block(c.dim(n - 2), 0, f.at(n - 1));
            m.set_block(c.dim(n - 2), c.dim(n - 1), d.d(n));
            diffs.push_back(std::move(m));
        }
    }
    return Complex(c.left_algebra(), d.right_algebra(), lo, std::move(comps), std::move(diffs));
}

/// Inclusion of, and projection onto, one side of a degreewise direct sum C + D.
[[nodiscard]] inline ChainMap sum_inclusion(const Complex& sum, const Complex& part, const Complex& other, bool first)
{
    return make_chain_map(part, sum, [&](int n) {
        Matrix m(sum.field(), sum.dim(n), part.dim(n));
        m.set_block(first ? 0 : other.dim(n), 0, Matrix::identity(sum.field(), part.dim(n)));
        return m;
    });
}
[[nodiscard]] inline ChainMap sum_projection(const Complex& sum, const Complex& part, const Complex& other, bool first)
{
    return make_chain_map(sum, part, [&](int n) {
        Matrix m(sum.field(), part.dim(n), sum.dim(n));
        m.set_block(0, first ? 0 : other.dim(n), Matrix::identity(sum.field(), part.dim(n)));
        return m;
    });
}

/// Total complex of M (x)_B N with d(m (x) n) = dm (x) n + (-1)^{deg m} m (x) dn.
struct TensorComplex {
    struct Block {
        int i = 0, j = 0;
        std::size_t offset = 0;
        TensorProduct t;
    };
    Complex total;
    int lo = 0;
    std::vector<std::vector<Block>> blocks;  ///< per total degree lo + k

    [[nodiscard]] const Block* find(int i, int j) const
    {
        const int k = i + j - lo;
        if (k < 0 || k >= static_cast<int>(blocks.size())) return nullptr;
        for (auto& b : blocks[static_cast<std::size_t>(k)])
            if (b.i == i) return &b;
        return nullptr;
    }
};

[[nodiscard]] inline TensorComplex tensor_complexes(const Complex& m, const Complex& n)
{
    if (!m.right_algebra().same_as(n.left_algebra())) throw std::invalid_argument("tensor_complexes: middle algebras differ");
    const Field& f = m.field();
    TensorComplex tc;
    tc.lo = m.lo() + n.lo();
    const int hi = m.hi() + n.hi();
    std::vector<Bimodule> comps;
    for (int deg = tc.lo; deg <= hi; ++deg) {
        std::vector<TensorComplex::Block> row;
        std::vector<Bimodule> parts;
        std::size_t off = 0;
        for (int i = m.lo(); i <= m.hi(); ++i) {
            const int j = deg - i;
            if (!n.in_range(j) || m.dim(i) == 0 || n.dim(j) == 0) continue;
            TensorComplex::Block b{i, j, off, tensor(m.at(i), n.at(j))};
            off += b.t.dim();
            parts.push_back(b.t.result);
            row.push_back(std::move(b));
        }
        comps.push_back(parts.empty() ? zero_bimodule(m.left_algebra(), n.right_algebra()) : direct_sum(parts));
        tc.blocks.push_back(std::move(row));
    }
    std::vector<Matrix> diffs;
    for (int deg = tc.lo + 1; deg <= hi; ++deg) {
        const auto& src = tc.blocks[static_cast<std::size_t>(deg - tc.lo)];
        Matrix dd(f, comps[static_cast<std::size_t>(deg - 1 - tc.lo)].dim(), comps[static_cast<std::size_t>(deg - tc.lo)].dim());
        for (auto& b : src) {
            if (auto* t = tc.find(b.i - 1, b.j))
                dd.set_block(t->offset, b.offset,
                             tensor_map(b.t, t->t, m.d(b.i), Matrix::identity(f, n.dim(b.j))));
            if (auto* t = tc.find(b.i, b.j - 1)) {
                Matrix x = tensor_map(b.t, t->t, Matrix::identity(f, m.dim(b.i)), n.d(b.j));
                if (b.i % 2) x = -x;
                Matrix cur = dd.block(t->offset, b.offset, x.rows(), x.cols());
                dd.set_block(t->offset, b.offset, cur + x);
            }
        }
        diffs.push_back(std::move(dd));
    }
    tc.total = Complex(m.left_algebra(), n.right_algebra(), tc.lo, std::move(comps), std::move(diffs));
    return tc;
}

/// f (x) g between total complexes, blockwise.
[[nodiscard]] inline ChainMap tensor_chain_map(const TensorComplex& src, const TensorComplex& dst, const ChainMap& f,
                                               const ChainMap& g)
{
    return make_chain_map(src.total, dst.total, [&](int deg) {
        Matrix m(src.total.field(), dst.total.dim(deg), src.total.dim(deg));
        const int k = deg - src.lo;
        if (k < 0 || k >= static_cast<int>(src.blocks.size())) return m;
        for (auto& b : src.blocks[static_cast<std::size_t>(k)])
            if (auto* t = dst.find(b.i, b.j)) m.set_block(t->offset, b.offset, tensor_map(b.t, t->t, f.at(b.i), g.at(b.j)));
        return m;
    });
}

/// C = C0 + C1 with C1 contractible and C0 minimal, with the splitting maps.
struct Minimization {
    Complex c0, c1;
    ChainMap p0, i0, p1, i1;
};

namespace detail {

struct Piece {
    Matrix incl, proj;
    bool removed = false;
};

}  // namespace detail

/// Gaussian elimination of isomorphism blocks between indecomposable summands
/// of adjacent degrees, lowest degree first, until none remain.
[[nodiscard]] inline Minimization minimize(const Complex& c, std::uint64_t seed = 1)
{
    const Field& f = c.field();
    const int lo = c.lo(), hi = c.hi();
    std::vector<std::vector<detail::Piece>> pieces;
    for (int n = lo; n <= hi; ++n) {
        std::vector<detail::Piece> ps;
        if (c.dim(n)) {
            Decomposition dec = decompose(c.at(n), Side::Both, seed);
            for (std::size_t i = 0; i < dec.size(); ++i) ps.push_back({dec.incl[i], dec.proj[i], false});
        }
        pieces.push_back(std::move(ps));
    }
    auto at = [&](int n) -> std::vector<detail::Piece>& { return pieces[static_cast<std::size_t>(n - lo)]; };
    for (bool found = true; found;) {
        found = false;
        for (int n = lo + 1; n <= hi && !found; ++n) {
            const Matrix dn = c.d(n);
            auto &src = at(n), &dst = at(n - 1);
            for (std::size_t x = 0; x < src.size() && !found; ++x) {
                if (src[x].removed) continue;
                Matrix dx = dn * src[x].incl;
                for (std::size_t xp = 0; xp < dst.size() && !found; ++xp) {
                    if (dst[xp].removed || dst[xp].proj.rows() != src[x].incl.cols()) continue;
                    Matrix phi = dst[xp].proj * dx;
                    auto inv = inverse(phi);
                    if (!inv) continue;
                    for (std::size_t y = 0; y < src.size(); ++y) {
                        if (y == x || src[y].removed) continue;
                        Matrix delta = dst[xp].proj * dn * src[y].incl;
                        if (delta.is_zero()) continue;
                        Matrix t = *inv * delta;
                        src[y].incl = src[y].incl - src[x].incl * t;
                        src[x].proj = src[x].proj + t * src[y].proj;
                    }
                    for (std::size_t yp = 0; yp < dst.size(); ++yp) {
                        if (yp == xp || dst[yp].removed) continue;
                        Matrix gamma = dst[yp].proj * dx;
                        if (gamma.is_zero()) continue;
                        Matrix t = gamma * *inv;
                        dst[yp].proj = dst[yp].proj - t * dst[xp].proj;
                        dst[xp].incl = dst[xp].incl + dst[yp].incl * t;
                    }
                    src[x].removed = dst[xp].removed = true;
                    found = true;
                }
            }
        }
    }
    auto assemble = [&](bool removed, std::vector<Matrix>& incl, std::vector<Matrix>& proj) {
        std::vector<Bimodule> comps;
        std::vector<Matrix> diffs;
        for (int n = lo; n <= hi; ++n) {
            Matrix in(f, c.dim(n), 0), pr(f, 0, c.dim(n));
            for (auto& p : at(n))
                if (p.removed == removed) {
                    in = hstack(in, p.incl);
                    pr = vstack(pr, p.proj);
                }
            comps.push_back(compress(c.at(n), pr, in));
            if (n > lo) diffs.push_back(proj.back() * c.d(n) * in);
            incl.push_back(std::move(in));
            proj.push_back(std::move(pr));
        }
        return Complex(c.left_algebra(), c.right_algebra(), lo, std::move(comps), std::move(diffs));
    };
    std::vector<Matrix> in0, pr0, in1, pr1;
    Minimization m;
    m.c0 = assemble(false, in0, pr0);
    m.c1 = assemble(true, in1, pr1);
    auto pick = [&](const std::vector<Matrix>& v, int n) { return v[static_cast<std::size_t>(n - lo)]; };
    m.i0 = make_chain_map(m.c0, c, [&](int n) { return pick(in0, n); });
    m.p0 = make_chain_map(c, m.c0, [&](int n) { return pick(pr0, n); });
    m.i1 = make_chain_map(m.c1, c, [&](int n) { return pick(in1, n); });
    m.p1 = make_chain_map(c, m.c1, [&](int n) { return pick(pr1, n); });
    return m;
}

/// Whether no differential component is an isomorphism between indecomposable
/// summands of adjacent degrees.
[[nodiscard]] inline bool is_minimal(const Complex& c, std::uint64_t seed = 1)
{
    return minimize(c, seed).c1.total_dim() == 0;
}

/// Per-degree, per-summand failures of a component predicate.
[[nodiscard]] inline Verdict check_components(const Complex& c, const std::function<bool(const Bimodule&)>& ok,
                                              const std::string& what, std::uint64_t seed = 1)
{
    Verdict v;
    for (int n = c.lo(); n <= c.hi(); ++n) {
        if (!c.dim(n)) continue;
        auto ps = parts(c.at(n), decompose(c.at(n), Side::Both, seed));
        for (std::size_t i = 0; i < ps.size(); ++i)
            if (!ok(ps[i])) v.fail("degree " + std::to_string(n) + " summand " + std::to_string(i) + ": " + what);
    }
    return v;
}

}  // namespace yw
