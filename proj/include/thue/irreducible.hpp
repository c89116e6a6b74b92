// Irreducibility of trinomials over Z via factorization patterns modulo
// small primes, with an explicit factor search to certify reducibility.
#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "thue/form.hpp"

namespace thue {

enum class Irreducibility { irreducible, reducible, unknown };

const char* to_string(Irreducibility verdict);

struct IrreducibilityReport {
    Irreducibility verdict = Irreducibility::unknown;
    std::vector<std::uint64_t> primes_used;
    /// Factor degrees in (0, n) compatible with every tested prime.
    std::set<int> possible_factor_degrees;
    /// Integer coefficients (lowest first) of an explicit factor, if found.
    std::vector<std::int64_t> factor;
};

/// Number of usable primes (not dividing h_n, squarefree image) that are tried.
inline constexpr int kIrreducibilityPrimes = 8;

IrreducibilityReport irreducibility_report(const TrinomialForm& form);

Irreducibility is_irreducible(const TrinomialForm& form);

/// Degrees of the irreducible factors of f mod p (with multiplicity), or an
/// empty vector when p divides the leading coefficient or f mod p is not
/// squarefree. Coefficients are lowest degree first.
std::vector<int> factor_degrees_mod(const std::vector<std::int64_t>& coeffs, std::uint64_t p);

}  // namespace thue
