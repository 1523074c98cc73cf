#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "module.hpp"
#include "poly.hpp"

namespace yw {

namespace detail {

inline Matrix random_action(const Module& u, Rng& rng)
{
    Matrix m(u.field(), u.dim(), u.dim());
    for (auto& a : u.acts()) {
        const Residue c = rng.residue(u.field());
        if (c) m.axpy(c, a);
    }
    return m;
}

inline std::vector<Matrix> transposes(const std::vector<Matrix>& ms)
{
    std::vector<Matrix> out;
    out.reserve(ms.size());
    for (auto& m : ms) out.push_back(m.transpose());
    return out;
}

}  // namespace detail

/// Proper nonzero submodule of u, or nullopt when u is irreducible
/// (Holt-Rees form of the Norton irreducibility test).
[[nodiscard]] inline std::optional<Subspace> find_submodule(const Module& u, Rng& rng)
{
    const std::size_t n = u.dim();
    if (n <= 1) return std::nullopt;
    const Field& f = u.field();
    const auto& gens = u.gens();
    const auto tgens = detail::transposes(gens);
    for (int attempt = 0; attempt < 400; ++attempt) {
        Matrix a = detail::random_action(u, rng);
        auto fs = factor(charpoly(a), rng.next());
        std::stable_sort(fs.begin(), fs.end(),
                         [](const PolyFactor& x, const PolyFactor& y) { return x.factor.degree() < y.factor.degree(); });
        for (auto& pf : fs) {
            Matrix na = evaluate(pf.factor, a);
            Matrix ker = kernel(na);
            Subspace w = spin(f, gens, n, {ker.row_vec(0)});
            if (w.dim() < n) return w;
            if (ker.rows() != static_cast<std::size_t>(pf.factor.degree())) {
                if (ker.rows() > 1) {
                    Vec v(n, 0);
                    for (std::size_t r = 0; r < ker.rows(); ++r) axpy(f, rng.residue(f), ker.row_span(r), v);
                    if (!is_zero(v)) {
                        Subspace w2 = spin(f, gens, n, {v});
                        if (w2.dim() < n) return w2;
                    }
                }
                continue;
            }
            Matrix kt = kernel(na.transpose());
            Subspace wt = spin(f, tgens, n, {kt.row_vec(0)});
            if (wt.dim() < n) return Subspace::row_space(kernel(wt.basis_rows()));
            return std::nullopt;
        }
    }
    throw std::runtime_error("find_submodule: no good random element found");
}

[[nodiscard]] inline bool is_irreducible(const Module& u, std::uint64_t seed = 1)
{
    if (u.dim() == 0) return false;
    Rng rng(seed);
    return !find_submodule(u, rng).has_value();
}

/// Simple modules up to isomorphism with their composition multiplicities.
struct CompositionFactors {
    std::vector<Module> simples;
    std::vector<std::size_t> multiplicity;
};

namespace detail {

inline void collect_factors(const Module& u, Rng& rng, std::vector<Module>& out)
{
    if (u.dim() == 0) return;
    auto w = find_submodule(u, rng);
    if (!w) {
        out.push_back(u);
        return;
    }
    collect_factors(submodule(u, *w), rng, out);
    collect_factors(quotient_module(u, *w), rng, out);
}

}  // namespace detail

[[nodiscard]] inline CompositionFactors composition_factors(const Module& u, std::uint64_t seed = 1)
{
    Rng rng(seed);
    std::vector<Module> all;
    detail::collect_factors(u, rng, all);
    std::stable_sort(all.begin(), all.end(), [](const Module& a, const Module& b) { return a.dim() < b.dim(); });
    CompositionFactors cf;
    for (auto& s : all) {
        bool found = false;
        for (std::size_t k = 0; k < cf.simples.size(); ++k) {
            if (cf.simples[k].dim() != s.dim()) continue;
            if (hom_space(s, cf.simples[k]).dim() > 0) {
                ++cf.multiplicity[k];
                found = true;
                break;
            }
        }
        if (!found) {
            cf.simples.push_back(s);
            cf.multiplicity.push_back(1);
        }
    }
    return cf;
}

}  // namespace yw
