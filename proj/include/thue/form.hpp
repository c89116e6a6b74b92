// Trinomial binary forms F(x, y) = h_n x^n + h_k x^k y^(n-k) + h_0 y^n.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace thue {

class TrinomialForm {
public:
    /// Throws std::invalid_argument unless all coefficients are nonzero,
    /// 0 < k < n, n >= 6 and gcd(h_n, h_k, h_0) = 1.
    TrinomialForm(std::int64_t h_n, std::int64_t h_k, std::int64_t h_0, int n, int k);

    std::int64_t h_n() const { return h_n_; }
    std::int64_t h_k() const { return h_k_; }
    std::int64_t h_0() const { return h_0_; }
    int n() const { return n_; }
    int k() const { return k_; }
    /// Naive height max(|h_n|, |h_k|, |h_0|).
    std::int64_t height() const;

    /// F(p, q) exactly.
    mpz_class evaluate(const mpz_class& p, const mpz_class& q) const;
    mpz_class evaluate(std::int64_t p, std::int64_t q) const;
    /// sign of F(num/den, 1) for den > 0.
    int sign_at(const mpq_class& x) const;

    /// Dense coefficients of f(X) = F(X, 1), lowest degree first.
    std::vector<std::int64_t> dense() const;

    /// F(y, x), the form with leading and constant coefficients swapped.
    TrinomialForm reciprocal() const;

    std::string to_string() const;

    friend bool operator==(const TrinomialForm&, const TrinomialForm&) = default;

private:
    std::int64_t h_n_;
    std::int64_t h_k_;
    std::int64_t h_0_;
    int n_;
    int k_;
};

}  // namespace thue
