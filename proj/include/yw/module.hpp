#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "algebra.hpp"

namespace yw {

/// Which actions a map must respect.
enum class Side { Both, Left, Right };

/// Finite-dimensional left module: one action matrix per algebra basis element.
class Module {
public:
    Module() = default;
    Module(Algebra a, std::size_t dim, std::vector<Matrix> act, bool check = false)
        : alg_(std::move(a)), dim_(dim), act_(std::move(act))
    {
        if (act_.size() != alg_.dim()) throw std::invalid_argument("module: need one action matrix per basis element");
        for (auto& m : act_)
            if (m.rows() != dim_ || m.cols() != dim_ || m.p() != alg_.p())
                throw std::invalid_argument("module: action matrix has wrong shape");
        for (auto g : alg_.generators()) gen_.push_back(act_[g]);
        if (check) validate();
    }

    [[nodiscard]] const Algebra& algebra() const { return alg_; }
    [[nodiscard]] const Field& field() const { return alg_.field(); }
    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] const Matrix& act(std::size_t i) const { return act_[i]; }
    [[nodiscard]] const std::vector<Matrix>& acts() const { return act_; }
    /// Action matrices of the algebra generators.
    [[nodiscard]] const std::vector<Matrix>& gens() const { return gen_; }

    [[nodiscard]] Matrix action(std::span<const Residue> a) const
    {
        Matrix m(field(), dim_, dim_);
        for (std::size_t i = 0; i < act_.size(); ++i)
            if (a[i]) m.axpy(a[i], act_[i]);
        return m;
    }

    /// Throws unless the unit acts as the identity and
    /// rho(g b_j) = rho(g) rho(b_j) for every generator g and basis element b_j.
    void validate() const
    {
        if (!action(alg_.unit()).is_identity()) throw std::invalid_argument("module: unit does not act as identity");
        for (auto g : alg_.generators())
            for (std::size_t j = 0; j < alg_.dim(); ++j)
                if (act_[g] * act_[j] != action(alg_.product_basis(g, j)))
                    throw std::invalid_argument("module: action does not respect multiplication at (" +
                                                std::to_string(g) + "," + std::to_string(j) + ")");
    }

    friend bool operator==(const Module& a, const Module& b)
    {
        return a.dim_ == b.dim_ && a.alg_.same_as(b.alg_) && a.act_ == b.act_;
    }

private:
    Algebra alg_;
    std::size_t dim_ = 0;
    std::vector<Matrix> act_;
    std::vector<Matrix> gen_;
};

/// The one-dimensional algebra k.
[[nodiscard]] inline Algebra ground_algebra(Field f)
{
    return Algebra(f, {Matrix::identity(f, 1)}, Vec{1}, Vec{1});
}

/// E-F-bimodule: left action matrices for E, right action matrices for F
/// (ract[j] is m -> m * f_j, so ract of a product reverses order).
class Bimodule {
public:
    Bimodule() = default;
    Bimodule(Algebra left, Algebra right, std::size_t dim, std::vector<Matrix> lact, std::vector<Matrix> ract,
             bool check = false)
        : l_(std::move(left)), r_(std::move(right)), dim_(dim), lact_(std::move(lact)), ract_(std::move(ract))
    {
        if (lact_.size() != l_.dim() || ract_.size() != r_.dim())
            throw std::invalid_argument("bimodule: need one action matrix per basis element");
        for (auto* v : {&lact_, &ract_})
            for (auto& m : *v)
                if (m.rows() != dim_ || m.cols() != dim_) throw std::invalid_argument("bimodule: action has wrong shape");
        if (check) validate();
    }

    static Bimodule from_left(const Module& m)
    {
        Algebra k = ground_algebra(m.field());
        return Bimodule(m.algebra(), k, m.dim(), m.acts(), {Matrix::identity(m.field(), m.dim())});
    }
    /// From a module over B^op, regarded as a right B-module.
    static Bimodule from_right(const Module& m)
    {
        Algebra k = ground_algebra(m.field());
        return Bimodule(k, m.algebra().opposite(), m.dim(), {Matrix::identity(m.field(), m.dim())}, m.acts());
    }

    [[nodiscard]] const Algebra& left_algebra() const { return l_; }
    [[nodiscard]] const Algebra& right_algebra() const { return r_; }
    [[nodiscard]] const Field& field() const { return l_.field(); }
    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] const Matrix& lact(std::size_t i) const { return lact_[i]; }
    [[nodiscard]] const Matrix& ract(std::size_t j) const { return ract_[j]; }
    [[nodiscard]] const std::vector<Matrix>& lacts() const { return lact_; }
    [[nodiscard]] const std::vector<Matrix>& racts() const { return ract_; }

    [[nodiscard]] Matrix left_action(std::span<const Residue> a) const { return combine(lact_, a); }
    [[nodiscard]] Matrix right_action(std::span<const Residue> b) const { return combine(ract_, b); }

    [[nodiscard]] Module left() const { return Module(l_, dim_, lact_); }
    /// As a left module over the opposite of the right algebra.
    [[nodiscard]] Module right() const { return Module(r_.opposite(), dim_, ract_); }

    /// Generator actions relevant for the given side.
    [[nodiscard]] std::vector<Matrix> gens(Side s = Side::Both) const
    {
        std::vector<Matrix> g;
        if (s != Side::Right)
            for (auto i : l_.generators()) g.push_back(lact_[i]);
        if (s != Side::Left)
            for (auto j : r_.generators()) g.push_back(ract_[j]);
        return g;
    }

    /// The same space as a left module over E (x) F^op.
    [[nodiscard]] Module enveloping_module() const
    {
        Algebra env = tensor_algebra(l_, r_.opposite());
        std::vector<Matrix> act;
        act.reserve(env.dim());
        for (std::size_t i = 0; i < l_.dim(); ++i)
            for (std::size_t j = 0; j < r_.dim(); ++j) act.push_back(lact_[i] * ract_[j]);
        return Module(env, dim_, std::move(act));
    }

    void validate() const
    {
        left().validate();
        right().validate();
        for (auto i : l_.generators())
            for (auto j : r_.generators())
                if (lact_[i] * ract_[j] != ract_[j] * lact_[i])
                    throw std::invalid_argument("bimodule: left and right actions do not commute");
    }

    friend bool operator==(const Bimodule& a, const Bimodule& b)
    {
        return a.dim_ == b.dim_ && a.l_.same_as(b.l_) && a.r_.same_as(b.r_) && a.lact_ == b.lact_ &&
               a.ract_ == b.ract_;
    }

private:
    Matrix combine(const std::vector<Matrix>& acts, std::span<const Residue> a) const
    {
        Matrix m(field(), dim_, dim_);
        for (std::size_t i = 0; i < acts.size(); ++i)
            if (a[i]) m.axpy(a[i], acts[i]);
        return m;
    }

    Algebra l_, r_;
    std::size_t dim_ = 0;
    std::vector<Matrix> lact_, ract_;
};

/// A subspace of linear maps U -> V (rows x cols = dim V x dim U) with a
/// reduced echelon basis: coordinates of a member are its entries at the pivots.
struct MapSpace {
    Field f;
    std::size_t rows = 0, cols = 0;
    std::vector<Matrix> basis;
    std::vector<std::size_t> pivots;  ///< flattened index r * cols + c

    [[nodiscard]] std::size_t dim() const { return basis.size(); }
    [[nodiscard]] Vec coords(const Matrix& m) const
    {
        Vec c(pivots.size());
        for (std::size_t i = 0; i < pivots.size(); ++i) c[i] = m.data()[pivots[i]];
        return c;
    }
    [[nodiscard]] Matrix from_coords(std::span<const Residue> c) const
    {
        Matrix m(f, rows, cols);
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (c[i]) m.axpy(c[i], basis[i]);
        return m;
    }
    [[nodiscard]] std::optional<Vec> try_coords(const Matrix& m) const
    {
        if (m.rows() != rows || m.cols() != cols) return std::nullopt;
        Vec c = coords(m);
        if (from_coords(c) != m) return std::nullopt;
        return c;
    }
    [[nodiscard]] bool contains(const Matrix& m) const { return try_coords(m).has_value(); }

    /// Canonical echelon basis of the span of the given maps.
    static MapSpace span(Field f, std::size_t rows, std::size_t cols, const std::vector<Matrix>& maps)
    {
        MapSpace s{f, rows, cols, {}, {}};
        if (maps.empty() || rows * cols == 0) return s;
        Matrix flat(f, maps.size(), rows * cols);
        for (std::size_t i = 0; i < maps.size(); ++i)
            std::copy(maps[i].data().begin(), maps[i].data().end(), flat.row_ptr(i));
        auto r = rref(flat, false);
        for (std::size_t i = 0; i < r.rank; ++i) {
            Matrix b(f, rows, cols);
            std::copy(r.reduced.row_ptr(i), r.reduced.row_ptr(i) + rows * cols, b.row_ptr(0));
            s.basis.push_back(std::move(b));
            s.pivots.push_back(r.pivots[i]);
        }
        return s;
    }
};

/// Span of the given vectors under the generator actions.
[[nodiscard]] inline Subspace spin(const Field& f, std::span<const Matrix> gens, std::size_t dim,
                                   const std::vector<Vec>& seeds)
{
    Subspace w(f, dim);
    std::vector<Vec> queue;
    for (auto& v : seeds)
        if (w.add(v)) queue.push_back(v);
    for (std::size_t q = 0; q < queue.size(); ++q)
        for (auto& g : gens) {
            Vec y = g.apply(queue[q]);
            if (w.add(y)) queue.push_back(std::move(y));
        }
    return w;
}

/// Basis of the space of linear maps phi: U -> V with phi gu[i] = gv[i] phi.
/// U is spun from its standard basis; the images of the spinning generators
/// are the unknowns and the closing relations cut out the solution space.
[[nodiscard]] inline MapSpace intertwiners(const Field& f, std::span<const Matrix> gu, std::span<const Matrix> gv,
                                           std::size_t du, std::size_t dv)
{
    if (gu.size() != gv.size()) throw std::invalid_argument("intertwiners: generator lists differ in length");
    if (du == 0 || dv == 0) return MapSpace{f, dv, du, {}, {}};
    struct Node {
        long parent = -1;
        std::size_t gen = 0;
        std::size_t seed = 0;
    };
    std::vector<Vec> sb;
    std::vector<Node> nodes;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> child;  // (node, gen) -> node
    Subspace w(f, du);
    std::size_t nseeds = 0;
    for (std::size_t i = 0; i < du && w.dim() < du; ++i) {
        Vec e = unit_vector(du, i);
        if (!w.add(e)) continue;
        sb.push_back(e);
        nodes.push_back({-1, 0, nseeds++});
        for (std::size_t q = sb.size() - 1; q < sb.size(); ++q)
            for (std::size_t g = 0; g < gu.size(); ++g) {
                Vec y = gu[g].apply(sb[q]);
                if (w.add(y)) {
                    child[{q, g}] = sb.size();
                    sb.push_back(std::move(y));
                    nodes.push_back({static_cast<long>(q), g, 0});
                }
            }
    }
    const std::size_t n = nseeds * dv;
    // image of sb[k] as a dv x n matrix in the unknowns
    std::vector<Matrix> img;
    img.reserve(sb.size());
    for (std::size_t k = 0; k < sb.size(); ++k) {
        if (nodes[k].parent < 0) {
            Matrix m(f, dv, n);
            for (std::size_t r = 0; r < dv; ++r) m(r, nodes[k].seed * dv + r) = 1;
            img.push_back(std::move(m));
        } else {
            img.push_back(gv[nodes[k].gen] * img[static_cast<std::size_t>(nodes[k].parent)]);
        }
    }
    Matrix bmat = Matrix::from_columns(f, du, sb);
    Matrix binv = *inverse(bmat);
    Subspace rel(f, n);
    for (std::size_t k = 0; k < sb.size() && rel.dim() < n; ++k)
        for (std::size_t g = 0; g < gu.size() && rel.dim() < n; ++g) {
            if (child.count({k, g})) continue;
            Vec c = binv.apply(gu[g].apply(sb[k]));
            Matrix lhs = gv[g] * img[k];
            for (std::size_t l = 0; l < sb.size(); ++l)
                if (c[l]) lhs.axpy(f.neg(c[l]), img[l]);
            for (std::size_t r = 0; r < dv && rel.dim() < n; ++r) {
                auto row = lhs.row_span(r);
                if (!is_zero(row)) rel.add(Vec(row.begin(), row.end()));
            }
        }
    Matrix sol = kernel(rel.dim() ? rel.basis_rows() : Matrix(f, 0, n));
    std::vector<Matrix> maps;
    maps.reserve(sol.rows());
    for (std::size_t s = 0; s < sol.rows(); ++s) {
        Vec y = sol.row_vec(s);
        Matrix onsb(f, dv, du);
        for (std::size_t k = 0; k < sb.size(); ++k) {
            Vec col = img[k].apply(y);
            for (std::size_t r = 0; r < dv; ++r) onsb(r, k) = col[r];
        }
        maps.push_back(onsb * binv);
    }
    return MapSpace::span(f, dv, du, maps);
}

[[nodiscard]] inline MapSpace hom_space(const Module& u, const Module& v)
{
    if (!u.algebra().same_as(v.algebra())) throw std::invalid_argument("hom_space: modules over different algebras");
    return intertwiners(u.field(), u.gens(), v.gens(), u.dim(), v.dim());
}

[[nodiscard]] inline MapSpace hom_space(const Bimodule& u, const Bimodule& v, Side side = Side::Both)
{
    if (side != Side::Right && !u.left_algebra().same_as(v.left_algebra()))
        throw std::invalid_argument("hom_space: left algebras differ");
    if (side != Side::Left && !u.right_algebra().same_as(v.right_algebra()))
        throw std::invalid_argument("hom_space: right algebras differ");
    return intertwiners(u.field(), u.gens(side), v.gens(side), u.dim(), v.dim());
}

/// Whether m (dim V x dim U) intertwines the given generator actions.
[[nodiscard]] inline bool intertwines(const Matrix& m, std::span<const Matrix> gu, std::span<const Matrix> gv)
{
    for (std::size_t i = 0; i < gu.size(); ++i)
        if (m * gu[i] != gv[i] * m) return false;
    return true;
}
[[nodiscard]] inline bool is_homomorphism(const Matrix& m, const Module& u, const Module& v)
{
    return m.rows() == v.dim() && m.cols() == u.dim() && intertwines(m, u.gens(), v.gens());
}
[[nodiscard]] inline bool is_homomorphism(const Matrix& m, const Bimodule& u, const Bimodule& v, Side side = Side::Both)
{
    return m.rows() == v.dim() && m.cols() == u.dim() && intertwines(m, u.gens(side), v.gens(side));
}

namespace detail {

inline std::vector<Matrix> compress(const std::vector<Matrix>& acts, const Matrix& proj, const Matrix& incl)
{
    std::vector<Matrix> out;
    out.reserve(acts.size());
    for (auto& a : acts) out.push_back(proj * a * incl);
    return out;
}

inline Matrix block_diag(const Field& f, const std::vector<const Matrix*>& blocks)
{
    std::size_t r = 0, c = 0;
    for (auto* b : blocks) r += b->rows(), c += b->cols();
    Matrix m(f, r, c);
    r = c = 0;
    for (auto* b : blocks) {
        m.set_block(r, c, *b);
        r += b->rows();
        c += b->cols();
    }
    return m;
}

}  // namespace detail

/// Module structure induced on a summand given inclusion (dim U x d) and
/// projection (d x dim U) with proj * incl = I and incl * proj an endomorphism.
[[nodiscard]] inline Module compress(const Module& u, const Matrix& proj, const Matrix& incl)
{
    return Module(u.algebra(), incl.cols(), detail::compress(u.acts(), proj, incl));
}
[[nodiscard]] inline Bimodule compress(const Bimodule& u, const Matrix& proj, const Matrix& incl)
{
    return Bimodule(u.left_algebra(), u.right_algebra(), incl.cols(), detail::compress(u.lacts(), proj, incl),
                    detail::compress(u.racts(), proj, incl));
}

/// Submodule on an invariant subspace, in the echelon basis of w.
[[nodiscard]] inline Module submodule(const Module& u, const Subspace& w)
{
    return compress(u, w.coord_map(), w.basis_columns());
}
/// Quotient by an invariant subspace, in the nonpivot basis.
[[nodiscard]] inline Module quotient_module(const Module& u, const Subspace& w)
{
    return compress(u, w.quotient_map(), w.quotient_section());
}
[[nodiscard]] inline Bimodule subbimodule(const Bimodule& u, const Subspace& w)
{
    return compress(u, w.coord_map(), w.basis_columns());
}

[[nodiscard]] inline Module direct_sum(const std::vector<Module>& ms)
{
    if (ms.empty()) throw std::invalid_argument("direct_sum: empty list");
    const Algebra& a = ms[0].algebra();
    std::size_t d = 0;
    for (auto& m : ms) {
        if (!m.algebra().same_as(a)) throw std::invalid_argument("direct_sum: modules over different algebras");
        d += m.dim();
    }
    std::vector<Matrix> act;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        std::vector<const Matrix*> bl;
        for (auto& m : ms) bl.push_back(&m.act(i));
        act.push_back(detail::block_diag(a.field(), bl));
    }
    return Module(a, d, std::move(act));
}

[[nodiscard]] inline Bimodule direct_sum(const std::vector<Bimodule>& ms)
{
    if (ms.empty()) throw std::invalid_argument("direct_sum: empty list");
    const Algebra& l = ms[0].left_algebra();
    const Algebra& r = ms[0].right_algebra();
    std::size_t d = 0;
    for (auto& m : ms) d += m.dim();
    std::vector<Matrix> la, ra;
    for (std::size_t i = 0; i < l.dim(); ++i) {
        std::vector<const Matrix*> bl;
        for (auto& m : ms) bl.push_back(&m.lact(i));
        la.push_back(detail::block_diag(l.field(), bl));
    }
    for (std::size_t j = 0; j < r.dim(); ++j) {
        std::vector<const Matrix*> bl;
        for (auto& m : ms) bl.push_back(&m.ract(j));
        ra.push_back(detail::block_diag(l.field(), bl));
    }
    return Bimodule(l, r, d, std::move(la), std::move(ra));
}

[[nodiscard]] inline Module zero_module(const Algebra& a)
{
    return Module(a, 0, std::vector<Matrix>(a.dim(), Matrix(a.field(), 0, 0)));
}
[[nodiscard]] inline Bimodule zero_bimodule(const Algebra& l, const Algebra& r)
{
    return Bimodule(l, r, 0, std::vector<Matrix>(l.dim(), Matrix(l.field(), 0, 0)),
                    std::vector<Matrix>(r.dim(), Matrix(l.field(), 0, 0)));
}

[[nodiscard]] inline Module regular_module(const Algebra& a) { return Module(a, a.dim(), a.lefts()); }
/// A as a right module over itself, i.e. a left module over A^op.
[[nodiscard]] inline Module right_regular_module(const Algebra& a) { return Module(a.opposite(), a.dim(), a.rights()); }
[[nodiscard]] inline Bimodule regular_bimodule(const Algebra& a) { return Bimodule(a, a, a.dim(), a.lefts(), a.rights()); }

/// Linear dual as a module over the opposite algebra: transposed actions.
[[nodiscard]] inline Module dual(const Module& u)
{
    std::vector<Matrix> act;
    act.reserve(u.acts().size());
    for (auto& m : u.acts()) act.push_back(m.transpose());
    return Module(u.algebra().opposite(), u.dim(), std::move(act));
}

/// Dual of an E-F-bimodule as an F-E-bimodule.
[[nodiscard]] inline Bimodule dual(const Bimodule& m)
{
    std::vector<Matrix> la, ra;
    for (auto& x : m.racts()) la.push_back(x.transpose());
    for (auto& x : m.lacts()) ra.push_back(x.transpose());
    return Bimodule(m.right_algebra(), m.left_algebra(), m.dim(), std::move(la), std::move(ra));
}

/// Pullback of a B-module along an algebra map phi: A -> B (dim B x dim A).
[[nodiscard]] inline Module restrict_along(const Module& u, const Algebra& a, const Matrix& phi)
{
    std::vector<Matrix> act;
    act.reserve(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) act.push_back(u.action(phi.col_vec(i)));
    return Module(a, u.dim(), std::move(act));
}

/// The same module written in a new basis: actions P rho P^{-1}.
[[nodiscard]] inline Module change_basis(const Module& u, const Matrix& p)
{
    Matrix pinv = *inverse(p);
    std::vector<Matrix> act;
    for (auto& m : u.acts()) act.push_back(p * m * pinv);
    return Module(u.algebra(), u.dim(), std::move(act));
}
[[nodiscard]] inline Bimodule change_basis(const Bimodule& u, const Matrix& p)
{
    Matrix pinv = *inverse(p);
    std::vector<Matrix> la, ra;
    for (auto& m : u.lacts()) la.push_back(p * m * pinv);
    for (auto& m : u.racts()) ra.push_back(p * m * pinv);
    return Bimodule(u.left_algebra(), u.right_algebra(), u.dim(), std::move(la), std::move(ra));
}

/// Random invertible matrix.
[[nodiscard]] inline Matrix random_invertible(const Field& f, std::size_t n, Rng& rng)
{
    for (;;) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.residue(f);
        if (is_invertible(m)) return m;
    }
}

}  // namespace yw
