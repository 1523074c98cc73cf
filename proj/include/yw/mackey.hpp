#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "endo.hpp"
#include "permgrp.hpp"

namespace yw {

/// Permutation module k[G/Q] over kG.
[[nodiscard]] inline Module permutation_module(const PermGroup& g, const Algebra& kg, const ElementSet& q)
{
    CosetAction ca = coset_action(g, q);
    std::vector<Matrix> act;
    act.reserve(g.order());
    for (std::size_t x = 0; x < g.order(); ++x) {
        Perm img = ca.element_image(g, x);
        Matrix m(kg.field(), ca.num_cosets, ca.num_cosets);
        for (std::size_t c = 0; c < ca.num_cosets; ++c) m(img[c], c) = 1;
        act.push_back(std::move(m));
    }
    return Module(kg, ca.num_cosets, std::move(act));
}

/// Principal block: the block idempotent with augmentation 1.
[[nodiscard]] inline std::size_t principal_block_index(const Algebra& kg, const std::vector<Vec>& blocks)
{
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        Residue s = 0;
        for (auto x : blocks[i]) s = kg.field().add(s, x);
        if (s == 1) return i;
    }
    throw std::logic_error("no principal block");
}

/// The block algebra kGb with its embedding into kG; kG itself when b = 1.
[[nodiscard]] inline Subalgebra block_algebra(const Algebra& kg, std::span<const Residue> b)
{
    if (Vec(b.begin(), b.end()) == kg.unit()) {
        Subspace all = Subspace::whole(kg.field(), kg.dim());
        return {kg, kg, all, Matrix::identity(kg.field(), kg.dim())};
    }
    return corner(kg, b);
}

/// b k[G/Q] as a module over the block algebra.
[[nodiscard]] inline Module block_permutation_module(const PermGroup& g, const Algebra& kg, const Subalgebra& blk,
                                                     const ElementSet& q)
{
    Module u = permutation_module(g, kg, q);
    const Vec& b = blk.to_parent(blk.alg.unit());
    if (!kg.is_central(b) || !kg.is_idempotent(b)) throw std::invalid_argument("block_permutation_module: b is not a central idempotent");
    Module bu = submodule(u, Subspace::column_space(u.action(b)));
    return restrict_along(bu, blk.alg, blk.embed);
}

/// Summand class data for the Yoshida module X.
struct SummandClass {
    std::size_t part = 0;           ///< representative part in the decomposition of X
    std::size_t dim = 0;
    std::size_t multiplicity = 0;
    bool projective = false;        ///< iota(X) projective over kGb
    bool injective_left = false;    ///< E iota injective as a left E-module
    bool injective_right = false;   ///< iota E injective as a right E-module
};

struct YoshidaData {
    PermGroup group;
    std::uint64_t p = 0;
    Algebra kg;
    std::size_t block_index = 0;
    Vec block;                      ///< b in kG coordinates
    Subalgebra blk;                 ///< kGb
    SubgroupClassList class_list;
    std::vector<std::size_t> used_reps;  ///< class reps with b k[G/Q] nonzero
    EndoAlgebraData endo;
    Decomposition parts;            ///< of X
    std::vector<Vec> part_idems;    ///< iota for each part, in E coordinates
    std::vector<SummandClass> classes;

    [[nodiscard]] const Algebra& E() const { return endo.E; }
    [[nodiscard]] const Algebra& A() const { return blk.alg; }
    [[nodiscard]] const Module& X() const { return endo.total; }
};

namespace detail {

inline Module right_ideal_module(const Algebra& a, std::span<const Residue> e)
{
    // e A as a left module over A^op
    return submodule(right_regular_module(a), Subspace::column_space(a.left_matrix(e)));
}

}  // namespace detail

/// Idempotent of E projecting X onto a part of a decomposition.
[[nodiscard]] inline Vec part_idempotent(const EndoAlgebraData& d, const Decomposition& dec, std::size_t i)
{
    return d.element(dec.incl[i] * dec.proj[i]);
}

/// Verdicts (i) E iota injective, (ii) iota E injective, (iii) iota(X) projective.
[[nodiscard]] inline SummandClass classify_part(const EndoAlgebraData& d, const Decomposition& dec, std::size_t i,
                                                std::uint64_t seed = 1)
{
    SummandClass c;
    c.part = i;
    c.dim = dec.incl[i].cols();
    c.multiplicity = dec.multiplicity(dec.cls[i]);
    Vec iota = part_idempotent(d, dec, i);
    c.injective_left = is_injective(left_ideal(d.E, iota), seed);
    c.injective_right = is_injective(detail::right_ideal_module(d.E, iota), seed);
    c.projective = is_projective(compress(d.total, dec.proj[i], dec.incl[i]), seed);
    return c;
}

class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

[[nodiscard]] inline YoshidaData yoshida_algebra(const PermGroup& g, std::uint64_t p, std::optional<std::size_t> block = {},
                                                 std::uint64_t seed = 1)
{
    YoshidaData y;
    y.group = g;
    y.p = p;
    y.kg = group_algebra(g, p);
    auto blocks = central_primitive_idempotents(y.kg, seed);
    y.block_index = block ? *block : principal_block_index(y.kg, blocks);
    if (y.block_index >= blocks.size())
        throw std::invalid_argument("block index " + std::to_string(y.block_index) + " out of range (" +
                                    std::to_string(blocks.size()) + " blocks)");
    y.block = blocks[y.block_index];
    y.blk = block_algebra(y.kg, y.block);
    y.class_list = subgroup_class_reps(g, sylow_subgroup(g, p));
    std::vector<Module> summands;
    for (std::size_t k = 0; k < y.class_list.reps.size(); ++k) {
        Module m = block_permutation_module(g, y.kg, y.blk, y.class_list.reps[k]);
        if (m.dim() == 0) continue;
        summands.push_back(std::move(m));
        y.used_reps.push_back(k);
    }
    y.endo = endo_algebra(y.blk.alg, summands);
    y.parts = decompose(y.endo.total, seed);
    for (std::size_t i = 0; i < y.parts.size(); ++i) y.part_idems.push_back(part_idempotent(y.endo, y.parts, i));
    for (auto r : y.parts.class_reps()) {
        SummandClass c = classify_part(y.endo, y.parts, r, seed);
        if (c.projective != c.injective_left || c.projective != c.injective_right)
            throw InvariantViolation("summand class conditions disagree for part " + std::to_string(r));
        y.classes.push_back(c);
    }
    return y;
}

[[nodiscard]] inline std::size_t projective_class_count(const YoshidaData& y)
{
    std::size_t n = 0;
    for (auto& c : y.classes) n += c.projective;
    return n;
}

}  // namespace yw
