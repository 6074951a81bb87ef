#include "ccker/field.hpp"

#include <string>

#include "ccker/errors.hpp"

namespace ccker {

bool is_prime(std::uint32_t n)
{
    if (n < 2)
        return false;
    for (std::uint32_t k = 2; static_cast<std::uint64_t>(k) * k <= n; ++k)
        if (n % k == 0)
            return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p)
{
    if (p >= (std::uint32_t{1} << 31) || !is_prime(p))
        throw PreconditionError(std::to_string(p) + " is not a prime below 2^31");
}

PrimeField PrimeField::at_least(int q)
{
    std::uint32_t p = q < 2 ? 2 : static_cast<std::uint32_t>(q);
    while (!is_prime(p))
        ++p;
    return PrimeField(p);
}

PrimeField::Elem PrimeField::pow(Elem a, std::uint64_t e) const noexcept
{
    Elem result = 1 % p_;
    while (e > 0) {
        if (e & 1U)
            result = mul(result, a);
        a = mul(a, a);
        e >>= 1U;
    }
    return result;
}

PrimeField::Elem PrimeField::inv(Elem a) const
{
    if (a % p_ == 0)
        throw PreconditionError("inverse of zero");
    return pow(a, p_ - 2);
}

} // namespace ccker
