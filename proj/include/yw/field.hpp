#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace yw {

using Residue = std::uint32_t;

/// Prime field GF(p) with 2 <= p <= 2^31. All arithmetic is exact residue
/// arithmetic with a single 64-bit reduction per product.
class Field {
public:
    Field() = default;

    explicit Field(std::uint64_t p) : p_(static_cast<Residue>(p))
    {
        if (p < 2 || p > (std::uint64_t{1} << 31))
            throw std::invalid_argument("field modulus out of range: " + std::to_string(p));
        if (!is_prime(p))
            throw std::invalid_argument("field modulus is not prime: " + std::to_string(p));
    }

    [[nodiscard]] Residue p() const noexcept { return p_; }

    // Products of two residues stay below 2^32 when p <= 2^16, so dot
    // products may accumulate many terms before reducing.
    [[nodiscard]] bool small() const noexcept { return p_ <= (1u << 16); }

    [[nodiscard]] Residue reduce(std::uint64_t x) const noexcept { return static_cast<Residue>(x % p_); }
    [[nodiscard]] Residue from_int(std::int64_t x) const noexcept
    {
        auto r = x % static_cast<std::int64_t>(p_);
        return static_cast<Residue>(r < 0 ? r + p_ : r);
    }

    [[nodiscard]] Residue add(Residue a, Residue b) const noexcept
    {
        std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<Residue>(s >= p_ ? s - p_ : s);
    }
    [[nodiscard]] Residue sub(Residue a, Residue b) const noexcept
    {
        return a >= b ? a - b : static_cast<Residue>(std::uint64_t{a} + p_ - b);
    }
    [[nodiscard]] Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
    [[nodiscard]] Residue mul(Residue a, Residue b) const noexcept
    {
        return static_cast<Residue>((std::uint64_t{a} * b) % p_);
    }
    [[nodiscard]] Residue pow(Residue a, std::uint64_t e) const noexcept
    {
        std::uint64_t r = 1 % p_, b = a % p_;
        while (e) {
            if (e & 1) r = r * b % p_;
            b = b * b % p_;
            e >>= 1;
        }
        return static_cast<Residue>(r);
    }
    [[nodiscard]] Residue inv(Residue a) const
    {
        if (a % p_ == 0) throw std::domain_error("inverse of zero in GF(p)");
        return pow(a, p_ - 2);
    }

    friend bool operator==(const Field&, const Field&) = default;

    static bool is_prime(std::uint64_t n) noexcept
    {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

private:
    Residue p_ = 2;
};

}  // namespace yw
