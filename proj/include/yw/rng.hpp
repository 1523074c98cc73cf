#pragma once

#include <cstdint>
#include <random>

#include "field.hpp"

namespace yw {

/// Seeded generator used by every randomized routine.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed ^ 0x9e3779b97f4a7c15ULL) {}

    Residue residue(const Field& f) { return static_cast<Residue>(gen_() % f.p()); }
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(gen_() % n); }
    std::uint64_t next() { return gen_(); }
    /// Derives an independent seed for a sub-computation.
    std::uint64_t fork() { return gen_() * 0xbf58476d1ce4e5b9ULL + 1; }

private:
    std::mt19937_64 gen_;
};

}  // namespace yw
