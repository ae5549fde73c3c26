#ifndef WEYLTASEP_DETAIL_MODULAR_HPP
#define WEYLTASEP_DETAIL_MODULAR_HPP

#include "weyltasep/rational.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace wt::detail {

using SparseRationalRow = std::vector<std::pair<std::size_t, Rational>>;

// Solves A x = b for a square, nonsingular, sparse rational A. Works modulo a
// sequence of word-size primes, lifts by CRT and rational reconstruction, and
// only returns once `accept` confirms the candidate exactly.
template <class Accept>
std::vector<Rational> solve_multimodular(const std::vector<SparseRationalRow>& rows,
                                         const std::vector<Rational>& rhs, Accept accept);

// One sparse elimination mod p. Returns nullopt if A is singular mod p.
std::optional<std::vector<std::uint64_t>>
solve_mod_p(const std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>>& rows,
            const std::vector<std::uint64_t>& rhs, std::uint64_t p);

std::optional<Rational> rational_reconstruct(const BigInt& u, const BigInt& modulus);

std::uint64_t next_prime_below(std::uint64_t x);

// Non-template core of solve_multimodular; `accept` is type-erased.
std::vector<Rational> solve_multimodular_impl(const std::vector<SparseRationalRow>& rows,
                                              const std::vector<Rational>& rhs,
                                              bool (*accept)(const std::vector<Rational>&, void*),
                                              void* ctx);

template <class Accept>
std::vector<Rational> solve_multimodular(const std::vector<SparseRationalRow>& rows,
                                         const std::vector<Rational>& rhs, Accept accept)
{
    auto thunk = [](const std::vector<Rational>& x, void* ctx) -> bool {
        return (*static_cast<Accept*>(ctx))(x);
    };
    return solve_multimodular_impl(rows, rhs, thunk, &accept);
}

} // namespace wt::detail

#endif
