#pragma once

#include <cstdint>

namespace ccker {

/// GF(p) for a prime p < 2^31. Elements are canonical residues 0..p-1.
class PrimeField {
public:
    using Elem = std::uint32_t;

    explicit PrimeField(std::uint32_t p);

    /// Smallest prime p >= max(q, 2).
    static PrimeField at_least(int q);

    std::uint32_t modulus() const noexcept { return p_; }

    Elem from_int(long long x) const noexcept
    {
        long long r = x % static_cast<long long>(p_);
        return static_cast<Elem>(r < 0 ? r + p_ : r);
    }
    Elem add(Elem a, Elem b) const noexcept
    {
        Elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    Elem neg(Elem a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const noexcept
    {
        return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
    }
    Elem pow(Elem a, std::uint64_t e) const noexcept;
    /// Throws PreconditionError for 0.
    Elem inv(Elem a) const;

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint32_t p_;
};

bool is_prime(std::uint32_t n);

} // namespace ccker
