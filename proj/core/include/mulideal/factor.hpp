#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace mulideal {

// Deterministic Miller-Rabin for all 64-bit inputs.
bool is_prime(std::uint64_t n);

// Prime factorization (Pollard rho, Brent variant) as ascending (p, e) pairs.
// factorize(0) and factorize(1) are empty.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

// p-adic valuation of a nonzero integer.
int valuation(std::int64_t x, std::uint64_t p);

}  // namespace mulideal
