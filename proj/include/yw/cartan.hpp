#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <utility>
#include <vector>

#include "decompose.hpp"

namespace yw {

/// Cartan matrix c[i][j] = [P_i : S_j], classes ordered as in pim_data.
struct CartanData {
    std::vector<std::vector<long>> c;
    std::vector<std::size_t> simple_dims;  ///< dim S_j
    std::vector<std::size_t> pim_dims;     ///< dim P_i
    std::vector<std::size_t> end_dims;     ///< dim End(S_j)
    std::vector<std::size_t> multiplicity; ///< multiplicity of P_i in A
};

/// Determinant of an integer matrix by fraction-free elimination.
[[nodiscard]] inline long integer_determinant(std::vector<std::vector<long>> m)
{
    const std::size_t n = m.size();
    if (n == 0) return 1;
    std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    __int128 prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return static_cast<long>(sign * a[n - 1][n - 1]);
}

/// Simple module S_j with e_j S_j != 0, matched to each projective class.
[[nodiscard]] inline std::vector<std::size_t> simple_for_class(const Algebra& a, std::uint64_t seed = 1)
{
    const PimData& pd = pim_data(a, seed);
    const auto& simples = simple_modules(a, seed);
    if (simples.size() != pd.pims.size()) throw std::logic_error("number of simples differs from number of projective classes");
    std::vector<std::size_t> out;
    std::vector<char> used(simples.size(), 0);
    for (std::size_t c = 0; c < pd.pims.size(); ++c) {
        const Vec& e = pd.idempotents[pd.rep[c]];
        std::size_t found = simples.size();
        for (std::size_t s = 0; s < simples.size(); ++s)
            if (!used[s] && !simples[s].action(e).is_zero()) {
                found = s;
                break;
            }
        if (found == simples.size()) throw std::logic_error("no simple module for a projective class");
        used[found] = 1;
        out.push_back(found);
    }
    return out;
}

[[nodiscard]] inline CartanData cartan_matrix(const Algebra& a, std::uint64_t seed = 1)
{
    const PimData& pd = pim_data(a, seed);
    const auto& simples = simple_modules(a, seed);
    auto sc = simple_for_class(a, seed);
    const std::size_t n = pd.pims.size();
    CartanData cd;
    cd.c.assign(n, std::vector<long>(n, 0));
    for (std::size_t j = 0; j < n; ++j) {
        const Module& s = simples[sc[j]];
        cd.simple_dims.push_back(s.dim());
        cd.end_dims.push_back(rank(s.action(pd.idempotents[pd.rep[j]])));
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Vec& ei = pd.idempotents[pd.rep[i]];
        cd.pim_dims.push_back(pd.pims[i].dim());
        cd.multiplicity.push_back(pd.multiplicity[i]);
        for (std::size_t j = 0; j < n; ++j) {
            const Vec& ej = pd.idempotents[pd.rep[j]];
            const std::size_t d = rank(a.left_matrix(ej) * a.right_matrix(ei));
            if (d % cd.end_dims[j]) throw std::logic_error("cartan: corner dimension not divisible by End(S)");
            cd.c[i][j] = static_cast<long>(d / cd.end_dims[j]);
        }
    }
    return cd;
}

/// (number of simples, dimension of the center, |det C|).
struct DerivedInvariants {
    std::size_t simples = 0;
    std::size_t center_dim = 0;
    long cartan_det = 0;
    friend bool operator==(const DerivedInvariants&, const DerivedInvariants&) = default;
};

[[nodiscard]] inline DerivedInvariants derived_invariants(const Algebra& a, std::uint64_t seed = 1)
{
    CartanData cd = cartan_matrix(a, seed);
    return {cd.c.size(), center_space(a).dim(), std::labs(integer_determinant(cd.c))};
}

/// Basic algebra: the corner at one primitive idempotent per projective class.
[[nodiscard]] inline Subalgebra basic_algebra(const Algebra& a, std::uint64_t seed = 1)
{
    const PimData& pd = pim_data(a, seed);
    Vec e(a.dim(), 0);
    for (auto r : pd.rep) axpy(a.field(), 1, pd.idempotents[r], e);
    return corner(a, e);
}

}  // namespace yw
