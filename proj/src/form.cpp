#include "thue/form.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "thue/degree.hpp"

namespace thue {

TrinomialForm::TrinomialForm(std::int64_t h_n, std::int64_t h_k, std::int64_t h_0, int n, int k)
    : h_n_(h_n), h_k_(h_k), h_0_(h_0), n_(n), k_(k) {
    require_supported_degree(n);
    if (h_n == 0 || h_k == 0 || h_0 == 0) {
        throw std::invalid_argument("trinomial form needs three nonzero coefficients");
    }
    if (k <= 0 || k >= n) throw std::invalid_argument("trinomial form needs 0 < k < n");
    if (std::gcd(std::gcd(h_n, h_k), h_0) != 1) {
        throw std::invalid_argument("trinomial form must be primitive (coefficient gcd 1)");
    }
}

std::int64_t TrinomialForm::height() const {
    return std::max({std::llabs(h_n_), std::llabs(h_k_), std::llabs(h_0_)});
}

mpz_class TrinomialForm::evaluate(const mpz_class& p, const mpz_class& q) const {
    mpz_class p_k, q_nk, term;
    mpz_pow_ui(p_k.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(k_));
    mpz_pow_ui(q_nk.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(n_ - k_));
    mpz_class p_n, q_n;
    mpz_pow_ui(p_n.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(n_));
    mpz_pow_ui(q_n.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(n_));
    return mpz_class(static_cast<long>(h_n_)) * p_n + mpz_class(static_cast<long>(h_k_)) * p_k * q_nk +
           mpz_class(static_cast<long>(h_0_)) * q_n;
}

mpz_class TrinomialForm::evaluate(std::int64_t p, std::int64_t q) const {
    return evaluate(mpz_class(static_cast<long>(p)), mpz_class(static_cast<long>(q)));
}

int TrinomialForm::sign_at(const mpq_class& x) const {
    // den^n f(num/den) = F(num, den) and den > 0, so the signs agree for even
    // and odd n alike.
    return sgn(evaluate(mpz_class(x.get_num()), mpz_class(x.get_den())));
}

std::vector<std::int64_t> TrinomialForm::dense() const {
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(n_) + 1, 0);
    coeffs[0] = h_0_;
    coeffs[static_cast<std::size_t>(k_)] = h_k_;
    coeffs[static_cast<std::size_t>(n_)] = h_n_;
    return coeffs;
}

TrinomialForm TrinomialForm::reciprocal() const { return {h_0_, h_k_, h_n_, n_, n_ - k_}; }

std::string TrinomialForm::to_string() const {
    std::ostringstream out;
    out << h_n_ << "*x^" << n_ << (h_k_ < 0 ? " - " : " + ") << std::llabs(h_k_) << "*x^" << k_ << "*y^"
        << (n_ - k_) << (h_0_ < 0 ? " - " : " + ") << std::llabs(h_0_) << "*y^" << n_;
    return out.str();
}

}  // namespace thue
