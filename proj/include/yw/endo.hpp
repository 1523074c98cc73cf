#pragma once

#include <stdexcept>
#include <vector>

#include "decompose.hpp"

namespace yw {

/// Hom(⊕ src, ⊕ dst) assembled from the blockwise Hom spaces; block (i, j)
/// maps summand j of the source into summand i of the target.
[[nodiscard]] inline MapSpace block_hom_space(const Field& f, const std::vector<Module>& src, const std::vector<Module>& dst)
{
    std::size_t rows = 0, cols = 0;
    std::vector<std::size_t> ro, co;
    for (auto& m : dst) ro.push_back(rows), rows += m.dim();
    for (auto& m : src) co.push_back(cols), cols += m.dim();
    MapSpace s{f, rows, cols, {}, {}};
    for (std::size_t i = 0; i < dst.size(); ++i)
        for (std::size_t j = 0; j < src.size(); ++j) {
            MapSpace h = hom_space(src[j], dst[i]);
            for (std::size_t k = 0; k < h.dim(); ++k) {
                Matrix b(f, rows, cols);
                b.set_block(ro[i], co[j], h.basis[k]);
                s.basis.push_back(std::move(b));
                const std::size_t pr = h.pivots[k] / h.cols, pc = h.pivots[k] % h.cols;
                s.pivots.push_back((ro[i] + pr) * cols + co[j] + pc);
            }
        }
    return s;
}

/// E = End_A(X) for X the direct sum of the given summands.
struct EndoAlgebraData {
    Algebra base;
    std::vector<Module> summands;
    Module total;
    std::vector<std::size_t> offsets;
    MapSpace space;
    Algebra E;
    std::vector<Vec> proj_idems;  ///< projection onto each summand, in E coordinates

    /// Endomorphism of X with the given E coordinates.
    [[nodiscard]] Matrix map(std::span<const Residue> c) const { return space.from_coords(c); }
    [[nodiscard]] Vec element(const Matrix& phi) const
    {
        auto c = space.try_coords(phi);
        if (!c) throw std::invalid_argument("endo: map is not an endomorphism of X");
        return *c;
    }
};

[[nodiscard]] inline EndoAlgebraData endo_algebra(const Algebra& a, const std::vector<Module>& summands)
{
    if (summands.empty()) throw std::invalid_argument("endo_algebra: no summands");
    for (auto& m : summands)
        if (!m.algebra().same_as(a)) throw std::invalid_argument("endo_algebra: summand over a different algebra");
    EndoAlgebraData d;
    d.base = a;
    d.summands = summands;
    d.total = direct_sum(summands);
    std::size_t off = 0;
    for (auto& m : summands) d.offsets.push_back(off), off += m.dim();
    d.space = block_hom_space(a.field(), summands, summands);
    d.E = endomorphism_algebra(d.space);
    for (std::size_t i = 0; i < summands.size(); ++i) {
        Matrix pi(a.field(), off, off);
        for (std::size_t r = 0; r < summands[i].dim(); ++r) pi(d.offsets[i] + r, d.offsets[i] + r) = 1;
        d.proj_idems.push_back(d.element(pi));
    }
    return d;
}

}  // namespace yw
