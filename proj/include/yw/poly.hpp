#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "rng.hpp"

namespace yw {

/// Univariate polynomial over GF(p); coefficients stored low degree first,
/// always trimmed (the zero polynomial has no coefficients).
class Poly {
public:
    Poly() = default;
    Poly(Field f, std::vector<Residue> c) : f_(f), c_(std::move(c)) { trim(); }
    static Poly constant(Field f, Residue c) { return Poly(f, {c}); }
    static Poly x(Field f) { return Poly(f, {0, 1}); }
    static Poly monomial(Field f, std::size_t d)
    {
        std::vector<Residue> c(d + 1, 0);
        c[d] = 1;
        return Poly(f, std::move(c));
    }

    [[nodiscard]] const Field& field() const noexcept { return f_; }
    [[nodiscard]] bool is_zero() const noexcept { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    [[nodiscard]] long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    [[nodiscard]] const std::vector<Residue>& coeffs() const noexcept { return c_; }
    [[nodiscard]] Residue coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    [[nodiscard]] Residue lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
    [[nodiscard]] bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }

    [[nodiscard]] Poly monic() const
    {
        if (is_zero()) return *this;
        Residue inv = f_.inv(lead());
        std::vector<Residue> c = c_;
        for (auto& x : c) x = f_.mul(x, inv);
        return Poly(f_, std::move(c));
    }

    friend Poly operator+(const Poly& a, const Poly& b)
    {
        std::vector<Residue> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.f_.add(a.coeff(i), b.coeff(i));
        return Poly(a.f_, std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b)
    {
        std::vector<Residue> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.f_.sub(a.coeff(i), b.coeff(i));
        return Poly(a.f_, std::move(c));
    }
    friend Poly operator*(const Poly& a, const Poly& b)
    {
        if (a.is_zero() || b.is_zero()) return Poly(a.f_, {});
        std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
        const std::uint64_t p = a.f_.p();
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t{a.c_[i]} * b.c_[j]) % p;
        std::vector<Residue> c(acc.begin(), acc.end());
        return Poly(a.f_, std::move(c));
    }
    [[nodiscard]] Poly scaled(Residue s) const
    {
        std::vector<Residue> c = c_;
        for (auto& x : c) x = f_.mul(x, s);
        return Poly(f_, std::move(c));
    }

    /// (quotient, remainder) of *this by d.
    [[nodiscard]] std::pair<Poly, Poly> divmod(const Poly& d) const
    {
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        if (degree() < d.degree()) return {Poly(f_, {}), *this};
        std::vector<Residue> r = c_;
        std::vector<Residue> q(c_.size() - d.c_.size() + 1, 0);
        const Residue inv = f_.inv(d.lead());
        for (long i = static_cast<long>(r.size()) - 1; i >= d.degree(); --i) {
            const Residue coef = f_.mul(r[static_cast<std::size_t>(i)], inv);
            if (!coef) continue;
            const std::size_t shift = static_cast<std::size_t>(i - d.degree());
            q[shift] = coef;
            for (std::size_t j = 0; j < d.c_.size(); ++j)
                r[shift + j] = f_.sub(r[shift + j], f_.mul(coef, d.c_[j]));
        }
        return {Poly(f_, std::move(q)), Poly(f_, std::move(r))};
    }
    friend Poly operator%(const Poly& a, const Poly& b) { return a.divmod(b).second; }
    friend Poly operator/(const Poly& a, const Poly& b) { return a.divmod(b).first; }

    [[nodiscard]] Poly derivative() const
    {
        if (c_.size() <= 1) return Poly(f_, {});
        std::vector<Residue> c(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = f_.mul(c_[i], f_.reduce(i));
        return Poly(f_, std::move(c));
    }

    [[nodiscard]] Poly powmod(std::uint64_t e, const Poly& m) const
    {
        Poly result = constant(f_, 1) % m, base = *this % m;
        while (e) {
            if (e & 1) result = (result * base) % m;
            base = (base * base) % m;
            e >>= 1;
        }
        return result;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    Field f_;
    std::vector<Residue> c_;
};

[[nodiscard]] inline Poly gcd(Poly a, Poly b)
{
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Returns (g, s, t) with s*a + t*b = g = gcd(a, b), g monic.
[[nodiscard]] inline std::tuple<Poly, Poly, Poly> ext_gcd(const Poly& a, const Poly& b)
{
    const Field& f = a.field();
    Poly r0 = a, r1 = b, s0 = Poly::constant(f, 1), s1(f, {}), t0(f, {}), t1 = Poly::constant(f, 1);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1), s1 = std::move(s2);
        t0 = std::move(t1), t1 = std::move(t2);
    }
    const Residue inv = f.inv(r0.lead());
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

struct PolyFactor {
    Poly factor;  ///< monic irreducible
    std::size_t multiplicity;
};

namespace detail {

inline std::vector<PolyFactor> squarefree(const Poly& f)
{
    const Field& fld = f.field();
    std::vector<PolyFactor> out;
    Poly c = gcd(f, f.derivative());
    Poly w = f.monic() / c;
    std::size_t i = 1;
    while (!w.is_one()) {
        Poly y = gcd(w, c);
        Poly z = w / y;
        if (z.degree() > 0) out.push_back({z.monic(), i});
        ++i;
        w = y;
        c = c / y;
    }
    if (c.degree() > 0) {
        // c is a p-th power
        const std::size_t p = fld.p();
        std::vector<Residue> root;
        for (std::size_t k = 0; k * p < c.coeffs().size(); ++k) root.push_back(c.coeff(k * p));
        for (auto& pf : squarefree(Poly(fld, root))) out.push_back({pf.factor, pf.multiplicity * p});
    }
    return out;
}

// Split a squarefree monic g whose irreducible factors all have degree d.
inline void equal_degree(const Poly& g, std::size_t d, Rng& rng, std::vector<Poly>& out)
{
    const Field& f = g.field();
    if (static_cast<std::size_t>(g.degree()) == d) {
        out.push_back(g);
        return;
    }
    const std::size_t n = static_cast<std::size_t>(g.degree());
    for (;;) {
        std::vector<Residue> rc(n);
        for (auto& c : rc) c = rng.residue(f);
        Poly a(f, rc);
        if (a.degree() < 1) continue;
        Poly b(f, {});
        if (f.p() == 2) {
            Poly t = a, acc = a;
            for (std::size_t i = 1; i < d; ++i) {
                t = (t * t) % g;
                acc = acc + t;
            }
            b = acc;
        } else {
            Poly norm = a % g, frob = a % g;
            for (std::size_t i = 1; i < d; ++i) {
                frob = frob.powmod(f.p(), g);
                norm = (norm * frob) % g;
            }
            b = norm.powmod((f.p() - 1) / 2, g) - Poly::constant(f, 1);
        }
        Poly h = gcd(g, b);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            equal_degree(h, d, rng, out);
            equal_degree((g / h).monic(), d, rng, out);
            return;
        }
    }
}

}  // namespace detail

/// Factorization into monic irreducibles with multiplicities, sorted by
/// (degree, coefficients). Deterministic given the seed.
[[nodiscard]] inline std::vector<PolyFactor> factor(const Poly& f, std::uint64_t seed = 0)
{
    if (f.degree() < 1) return {};
    Rng rng(seed);
    std::vector<PolyFactor> out;
    const Field& fld = f.field();
    for (auto& [sq, mult] : detail::squarefree(f.monic())) {
        Poly rest = sq;
        Poly xp = Poly::x(fld);
        for (std::size_t d = 1; rest.degree() >= static_cast<long>(2 * d); ++d) {
            xp = xp.powmod(fld.p(), rest);
            Poly g = gcd(rest, xp - Poly::x(fld));
            if (g.degree() > 0) {
                std::vector<Poly> parts;
                detail::equal_degree(g, d, rng, parts);
                for (auto& q : parts) out.push_back({q, mult});
                rest = (rest / g).monic();
                xp = xp % rest;
            }
        }
        if (rest.degree() > 0) out.push_back({rest, mult});
    }
    std::sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
        if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
        return a.factor.coeffs() < b.factor.coeffs();
    });
    return out;
}

/// Characteristic polynomial det(xI - M) via Hessenberg reduction.
[[nodiscard]] inline Poly charpoly(const Matrix& m)
{
    if (!m.square()) throw std::invalid_argument("charpoly of non-square matrix");
    const Field& f = m.field();
    const std::size_t n = m.rows();
    Matrix h = m;
    for (std::size_t k = 1; k + 1 <= n; ++k) {
        std::size_t i = k;
        while (i < n && h(i, k - 1) == 0) ++i;
        if (i == n) continue;
        if (i != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(h(i, j), h(k, j));
            for (std::size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, k));
        }
        const Residue inv = f.inv(h(k, k - 1));
        for (std::size_t j = k + 1; j < n; ++j) {
            const Residue u = f.mul(h(j, k - 1), inv);
            if (!u) continue;
            for (std::size_t c = 0; c < n; ++c) h(j, c) = f.sub(h(j, c), f.mul(u, h(k, c)));
            for (std::size_t r = 0; r < n; ++r) h(r, k) = f.add(h(r, k), f.mul(u, h(r, j)));
        }
    }
    std::vector<Poly> ps;
    ps.push_back(Poly::constant(f, 1));
    for (std::size_t mm = 1; mm <= n; ++mm) {
        Poly pm = (Poly::x(f) - Poly::constant(f, h(mm - 1, mm - 1))) * ps[mm - 1];
        Residue t = 1;
        for (std::size_t i = 1; i < mm; ++i) {
            t = f.mul(t, h(mm - i, mm - i - 1));
            const Residue coef = f.mul(h(mm - i - 1, mm - 1), t);
            if (coef) pm = pm - ps[mm - i - 1].scaled(coef);
        }
        ps.push_back(std::move(pm));
    }
    return ps[n];
}

/// Horner evaluation of a polynomial at a square matrix.
[[nodiscard]] inline Matrix evaluate(const Poly& q, const Matrix& m)
{
    const Field& f = m.field();
    Matrix acc(f, m.rows(), m.cols());
    for (long i = q.degree(); i >= 0; --i) {
        acc = acc * m;
        const Residue c = q.coeff(static_cast<std::size_t>(i));
        for (std::size_t d = 0; d < m.rows(); ++d) acc(d, d) = f.add(acc(d, d), c);
    }
    return acc;
}

}  // namespace yw
