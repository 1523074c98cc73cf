#pragma once

#include <yw/mackey.hpp>

namespace fx {

using namespace yw;

inline PermGroup s3() { return close_group(3, {{1, 0, 2}, {1, 2, 0}}); }
inline PermGroup c3() { return close_group(3, {{1, 2, 0}}); }
inline PermGroup a4() { return close_group(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}); }
inline PermGroup trivial_group() { return close_group(1, {}); }

inline int parity(const Perm& g)
{
    int s = 1;
    std::vector<char> seen(g.size(), 0);
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = g[j]) seen[j] = 1, ++len;
        if (len % 2 == 0) s = -s;
    }
    return s;
}

/// One-dimensional module g -> chi(g).
inline Module linear_character(const PermGroup& g, const Algebra& kg, bool sign)
{
    std::vector<Matrix> act;
    for (std::size_t x = 0; x < g.order(); ++x) {
        Matrix m(kg.field(), 1, 1);
        m(0, 0) = (sign && parity(g.element(x)) < 0) ? kg.field().neg(1) : 1;
        act.push_back(m);
    }
    return Module(kg, 1, std::move(act), true);
}

inline Module triv(const PermGroup& g, const Algebra& kg) { return linear_character(g, kg, false); }
inline Module sgn(const PermGroup& g, const Algebra& kg) { return linear_character(g, kg, true); }

/// Projective cover of a linear character among the PIMs.
inline Module pim_of(const Algebra& a, const Module& simple)
{
    const PimData& pd = pim_data(a);
    for (auto& p : pd.pims)
        if (hom_space(p, simple).dim() > 0) return p;
    throw std::logic_error("no projective cover");
}

}  // namespace fx
