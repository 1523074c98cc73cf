#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "rng.hpp"

namespace yw {

/// Permutation of {0..n-1} in image notation; (g*h)(x) = g(h(x)).
using Perm = std::vector<std::uint32_t>;

struct PermHash {
    std::size_t operator()(const Perm& p) const noexcept
    {
        std::size_t h = 1469598103934665603ULL;
        for (auto x : p) h = (h ^ x) * 1099511628211ULL;
        return h;
    }
};

[[nodiscard]] inline Perm compose(const Perm& g, const Perm& h)
{
    Perm r(h.size());
    for (std::size_t x = 0; x < h.size(); ++x) r[x] = g[h[x]];
    return r;
}

[[nodiscard]] inline Perm invert(const Perm& g)
{
    Perm r(g.size());
    for (std::size_t x = 0; x < g.size(); ++x) r[g[x]] = static_cast<std::uint32_t>(x);
    return r;
}

[[nodiscard]] inline bool is_permutation(const Perm& g)
{
    std::vector<char> seen(g.size(), 0);
    for (auto x : g) {
        if (x >= g.size() || seen[x]) return false;
        seen[x] = 1;
    }
    return true;
}

class GroupTooLarge : public std::runtime_error {
public:
    explicit GroupTooLarge(std::size_t cap)
        : std::runtime_error("group order exceeds cap of " + std::to_string(cap)) {}
};

/// Sorted element indices into a parent PermGroup.
using ElementSet = std::vector<std::size_t>;

/// Finite permutation group with its full element list; element 0 is the identity.
class PermGroup {
public:
    static constexpr std::size_t default_cap = 20000;

    PermGroup() = default;

    [[nodiscard]] std::size_t degree() const noexcept { return degree_; }
    [[nodiscard]] std::size_t order() const noexcept { return elements_.size(); }
    [[nodiscard]] const std::vector<Perm>& generators() const noexcept { return gens_; }
    [[nodiscard]] const std::vector<Perm>& elements() const noexcept { return elements_; }
    [[nodiscard]] const Perm& element(std::size_t i) const { return elements_.at(i); }
    [[nodiscard]] const std::vector<std::size_t>& generator_indices() const noexcept { return gen_idx_; }

    [[nodiscard]] std::size_t index_of(const Perm& g) const
    {
        auto it = index_.find(g);
        if (it == index_.end()) throw std::invalid_argument("permutation is not a group element");
        return it->second;
    }
    [[nodiscard]] bool contains(const Perm& g) const { return index_.count(g) != 0; }
    [[nodiscard]] std::size_t mul(std::size_t a, std::size_t b) const { return index_of(compose(elements_[a], elements_[b])); }
    [[nodiscard]] std::size_t inv(std::size_t a) const { return inverse_[a]; }
    [[nodiscard]] std::size_t element_order(std::size_t a) const
    {
        std::size_t k = 1, x = a;
        while (x != 0) x = mul(x, a), ++k;
        return k;
    }

    /// Subgroup generated by the listed elements.
    [[nodiscard]] ElementSet generated(const std::vector<std::size_t>& gens) const
    {
        std::vector<char> in(order(), 0);
        ElementSet out{0};
        in[0] = 1;
        for (std::size_t i = 0; i < out.size(); ++i)
            for (auto g : gens) {
                const std::size_t y = mul(g, out[i]);
                if (!in[y]) in[y] = 1, out.push_back(y);
            }
        std::sort(out.begin(), out.end());
        return out;
    }

    [[nodiscard]] bool is_subgroup(const ElementSet& h) const
    {
        if (h.empty() || !std::binary_search(h.begin(), h.end(), std::size_t{0})) return false;
        for (auto a : h)
            for (auto b : h)
                if (!std::binary_search(h.begin(), h.end(), mul(a, inv(b)))) return false;
        return true;
    }

    [[nodiscard]] ElementSet conjugate(const ElementSet& h, std::size_t g) const
    {
        ElementSet out;
        out.reserve(h.size());
        const std::size_t gi = inv(g);
        for (auto x : h) out.push_back(mul(mul(g, x), gi));
        std::sort(out.begin(), out.end());
        return out;
    }

    [[nodiscard]] ElementSet all() const
    {
        ElementSet out(order());
        std::iota(out.begin(), out.end(), 0);
        return out;
    }

    friend PermGroup close_group(std::size_t degree, const std::vector<Perm>& generators, std::size_t cap);

private:
    std::size_t degree_ = 0;
    std::vector<Perm> gens_;
    std::vector<std::size_t> gen_idx_;
    std::vector<Perm> elements_;
    std::vector<std::size_t> inverse_;
    std::unordered_map<Perm, std::size_t, PermHash> index_;
};

/// Closure of the generated subgroup of Sym(degree) by breadth-first search.
inline PermGroup close_group(std::size_t degree, const std::vector<Perm>& generators,
                             std::size_t cap = PermGroup::default_cap)
{
    PermGroup g;
    g.degree_ = degree;
    for (auto& s : generators) {
        if (s.size() != degree || !is_permutation(s))
            throw std::invalid_argument("generator is not a permutation of the stated degree");
    }
    g.gens_ = generators;
    Perm id(degree);
    std::iota(id.begin(), id.end(), 0);
    g.elements_.push_back(id);
    g.index_.emplace(id, 0);
    for (std::size_t i = 0; i < g.elements_.size(); ++i) {
        for (auto& s : generators) {
            Perm y = compose(s, g.elements_[i]);
            if (g.index_.count(y)) continue;
            if (g.elements_.size() >= cap) throw GroupTooLarge(cap);
            g.index_.emplace(y, g.elements_.size());
            g.elements_.push_back(std::move(y));
        }
    }
    g.inverse_.resize(g.elements_.size());
    for (std::size_t i = 0; i < g.elements_.size(); ++i) g.inverse_[i] = g.index_.at(invert(g.elements_[i]));
    for (auto& s : generators) g.gen_idx_.push_back(g.index_.at(s));
    return g;
}

[[nodiscard]] inline std::size_t p_part(std::size_t n, std::size_t p)
{
    std::size_t r = 1;
    while (n % p == 0) n /= p, r *= p;
    return r;
}

[[nodiscard]] inline bool is_power_of(std::size_t n, std::size_t p)
{
    while (n % p == 0) n /= p;
    return n == 1;
}

/// A Sylow p-subgroup, grown greedily by adjoining p-elements while the
/// generated subgroup remains a p-group.
[[nodiscard]] inline ElementSet sylow_subgroup(const PermGroup& g, std::size_t p)
{
    const std::size_t target = p_part(g.order(), p);
    ElementSet sub{0};
    std::vector<std::size_t> gens;
    while (sub.size() < target) {
        bool grown = false;
        for (std::size_t x = 1; x < g.order() && !grown; ++x) {
            if (std::binary_search(sub.begin(), sub.end(), x) || !is_power_of(g.element_order(x), p)) continue;
            auto trial = gens;
            trial.push_back(x);
            ElementSet h = g.generated(trial);
            if (is_power_of(h.size(), p) && h.size() > sub.size()) {
                gens = std::move(trial);
                sub = std::move(h);
                grown = true;
            }
        }
        if (!grown) throw std::logic_error("sylow_subgroup: no p-extension found");
    }
    return sub;
}

/// A subgroup as a permutation group in its own right, on the same points.
[[nodiscard]] inline PermGroup subgroup(const PermGroup& g, const ElementSet& h)
{
    std::vector<Perm> gens;
    for (auto x : h)
        if (x != 0) gens.push_back(g.element(x));
    return close_group(g.degree(), gens);
}

/// Representatives of the parent-conjugacy classes of subgroups of a fixed
/// p-subgroup, ordered by (order, element list); trivial group first.
struct SubgroupClassList {
    ElementSet sylow;
    std::vector<ElementSet> reps;
};

[[nodiscard]] inline bool conjugate_in(const PermGroup& g, const ElementSet& a, const ElementSet& b)
{
    if (a.size() != b.size()) return false;
    for (std::size_t x = 0; x < g.order(); ++x)
        if (g.conjugate(a, x) == b) return true;
    return false;
}

[[nodiscard]] inline std::vector<ElementSet> all_subgroups(const PermGroup& g, const ElementSet& p)
{
    std::vector<ElementSet> subs{ElementSet{0}};
    std::vector<std::vector<std::size_t>> gens{{}};
    for (std::size_t i = 0; i < subs.size(); ++i) {
        for (auto x : p) {
            if (std::binary_search(subs[i].begin(), subs[i].end(), x)) continue;
            auto trial = gens[i];
            trial.push_back(x);
            ElementSet h = g.generated(trial);
            if (std::find(subs.begin(), subs.end(), h) == subs.end()) {
                subs.push_back(std::move(h));
                gens.push_back(std::move(trial));
            }
        }
    }
    return subs;
}

[[nodiscard]] inline SubgroupClassList subgroup_class_reps(const PermGroup& g, const ElementSet& p)
{
    if (!g.is_subgroup(p)) throw std::invalid_argument("subgroup_class_reps: not a subgroup");
    auto subs = all_subgroups(g, p);
    std::sort(subs.begin(), subs.end(), [](const ElementSet& a, const ElementSet& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    SubgroupClassList out{p, {}};
    for (auto& h : subs) {
        bool seen = false;
        for (auto& r : out.reps)
            if (conjugate_in(g, h, r)) {
                seen = true;
                break;
            }
        if (!seen) out.reps.push_back(h);
    }
    return out;
}

/// Left multiplication action of G on the left cosets G/Q.
struct CosetAction {
    std::size_t num_cosets = 0;
    std::vector<std::size_t> coset_of;  ///< element index -> coset index
    std::vector<std::size_t> reps;      ///< coset index -> representative element
    std::vector<Perm> generator_images;

    /// Permutation of the cosets induced by element g.
    [[nodiscard]] Perm element_image(const PermGroup& grp, std::size_t g) const
    {
        Perm img(num_cosets);
        for (std::size_t c = 0; c < num_cosets; ++c)
            img[c] = static_cast<std::uint32_t>(coset_of[grp.mul(g, reps[c])]);
        return img;
    }
};

[[nodiscard]] inline CosetAction coset_action(const PermGroup& g, const ElementSet& q)
{
    if (!g.is_subgroup(q)) throw std::invalid_argument("coset_action: not a subgroup");
    CosetAction act;
    const std::size_t none = static_cast<std::size_t>(-1);
    act.coset_of.assign(g.order(), none);
    for (std::size_t x = 0; x < g.order(); ++x) {
        if (act.coset_of[x] != none) continue;
        const std::size_t c = act.reps.size();
        act.reps.push_back(x);
        for (auto h : q) act.coset_of[g.mul(x, h)] = c;
    }
    act.num_cosets = act.reps.size();
    for (auto gi : g.generator_indices()) act.generator_images.push_back(act.element_image(g, gi));
    return act;
}

/// Random permutation group of order in [2, max_order]: a few random
/// permutations of small degree, resampled until the closure is small.
[[nodiscard]] inline PermGroup random_small_group(std::uint64_t seed, std::size_t max_order = 48)
{
    Rng rng(seed);
    for (;;) {
        const std::size_t degree = 3 + rng.below(5);
        const std::size_t ngens = 1 + rng.below(2);
        std::vector<Perm> gens;
        for (std::size_t k = 0; k < ngens; ++k) {
            Perm s(degree);
            std::iota(s.begin(), s.end(), 0);
            for (std::size_t i = degree - 1; i > 0; --i) std::swap(s[i], s[rng.below(i + 1)]);
            gens.push_back(std::move(s));
        }
        try {
            PermGroup g = close_group(degree, gens, max_order);
            if (g.order() >= 2) return g;
        } catch (const GroupTooLarge&) {
        }
    }
}

}  // namespace yw
