// Closed-form quantities for counting small and large special solutions of
// trinomial Thue equations, plus their validity predicates.
//
// Every formula is a template over the scalar type so that the same code path
// runs in binary64 and in 100-digit MPFR arithmetic. Logarithms are natural.
// Quantities that grow like p0^n are carried in log form so that degrees in
// the thousands stay inside the binary64 range.
#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "thue/degree.hpp"

namespace thue {

using HighReal = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<100>,
                                               boost::multiprecision::et_off>;

/// Distance to the nearest integer below which a floor is flagged for review.
inline const HighReal& near_integer_tolerance() {
    static const HighReal tol("1e-30");
    return tol;
}

/// Parameters (d0, d) of the small-solution gap argument.
struct SmallParams {
    double d0 = 0.0;
    double d = 0.0;
};

/// Parameters (a, b) of the large-solution argument.
struct LargeParams {
    double a = 0.0;
    double b = 0.0;
};

namespace detail {

/// Exact decimal constant in the requested precision.
template <class Real>
Real decimal(const char* text) {
    if constexpr (std::is_floating_point_v<Real>) {
        return static_cast<Real>(std::strtod(text, nullptr));
    } else {
        return Real(text);
    }
}

template <class Real>
int floor_to_int(const Real& x) {
    using std::floor;
    return static_cast<int>(floor(x));
}

}  // namespace detail

/// Per-degree constants of K_d(n) = m_n (r_n (1 + u_n))^d, in log form.
template <class Real>
struct DegreeConstants {
    int n = 0;
    Real n_star;
    Real p0;
    Real log_p0;
    Real log_m;       // log m_n
    Real log_growth;  // log(r_n (1 + u_n))
    Real log_n;
    Real log_n_minus_1;
    Real log2;
    Real small_margin;  // the 1.4 in d0 <= n* - 1.4

    explicit DegreeConstants(int degree) : n(degree) {
        using std::log;
        using std::pow;
        using std::sqrt;
        const DegreeProfile profile = degree_profile(degree);
        const Real nr(degree);
        n_star = (nr - 2) / 2;
        p0 = Real(profile.p0);
        log_p0 = log(p0);
        const Real m = 2 * sqrt(2 * nr / ((nr - 1) * (nr - 2)));
        const Real r = pow(detail::decimal<Real>("2.032"), 1 / nr);
        const Real u = sqrt(2 / ((nr - 2) * pow(p0, nr)));
        log_m = log(m);
        log_growth = log(r * (1 + u));
        log_n = log(nr);
        log_n_minus_1 = log(nr - 1);
        log2 = log(Real(2));
        small_margin = detail::decimal<Real>("1.4");
    }

    Real log_k(const Real& d) const { return log_m + d * log_growth; }
    Real log_q_one(const Real& d0) const { return (n_star - d0) * log_p0 - log_k(d0); }
};

template <class Real>
Real k_const(double d, int n) {
    using std::exp;
    if (d < 0) throw std::invalid_argument("k_const: d must be nonnegative");
    const DegreeConstants<Real> c(n);
    return exp(c.log_k(Real(d)));
}

template <class Real>
Real q_one(double d0, int n) {
    using std::exp;
    const DegreeConstants<Real> c(n);
    if (d0 < 0 || Real(d0) > c.n_star) {
        throw std::invalid_argument("q_one: d0 must lie in [0, n*]");
    }
    return exp(c.log_q_one(Real(d0)));
}

/// Range of (d0, d) and Q1^{d-1} > max(1, K_d(n)); false on any violation.
template <class Real>
bool valid_small(const SmallParams& params, const DegreeConstants<Real>& c) {
    using std::max;
    const Real d0(params.d0);
    const Real d(params.d);
    if (!(d0 >= 0) || !(d0 <= c.n_star - c.small_margin)) return false;
    if (!(d > 1) || !(d <= c.n_star)) return false;
    const Real lhs = (d - 1) * c.log_q_one(d0);
    const Real rhs = max(Real(0), c.log_k(d));
    return lhs > rhs;
}

template <class Real>
bool valid_small(const SmallParams& params, int n) {
    if (n < kMinDegree) return false;
    return valid_small(params, DegreeConstants<Real>(n));
}

/// 0 < a < b < 1 - sqrt(2 (n + a^2) / n^2).
template <class Real>
bool valid_large(const LargeParams& params, int n) {
    using std::sqrt;
    if (n < kMinDegree) return false;
    const Real a(params.a);
    const Real b(params.b);
    const Real nr(n);
    const Real limit = 1 - sqrt(2 * (nr + a * a) / (nr * nr));
    return a > 0 && a < b && b < limit;
}

/// Upper end of the a-range: the root of a = 1 - sqrt(2 (n + a^2) / n^2).
template <class Real>
Real a_upper(int n) {
    using std::sqrt;
    const Real nr(n);
    const Real n2 = nr * nr;
    return (2 * n2 - sqrt(4 * n2 * n2 - 4 * (n2 - 2 * nr) * (n2 - 2))) / (2 * (n2 - 2));
}

template <class Real>
struct LargeDerived {
    Real L, D, A, E, chi, pi;
};

/// L, D, A, E, chi_n and pi_n for (a, b). Throws std::domain_error if L >= n.
template <class Real>
LargeDerived<Real> large_derived(const LargeParams& params, const DegreeConstants<Real>& c) {
    using std::sqrt;
    const Real a(params.a);
    const Real b(params.b);
    const Real nr(c.n);
    LargeDerived<Real> out;
    out.L = sqrt(2 * (nr + a * a)) / (1 - b);
    if (!(out.L < nr)) {
        throw std::domain_error("large_derived: L >= n, parameters violate the (a, b) constraint");
    }
    out.D = out.L / (nr - out.L);
    out.A = 1 / (a * a);
    out.E = 1 / (2 * (b * b - a * a));
    out.chi = out.D * (out.A + 1) + 1;
    out.pi = (out.D * (4 + out.A) + 2) * c.log2 + (out.D + 1) * c.log_n / 2 +
             nr * out.A * out.D / 2;
    return out;
}

template <class Real>
LargeDerived<Real> large_derived(const LargeParams& params, int n) {
    return large_derived(params, DegreeConstants<Real>(n));
}

/// chi_n >= 2 and pi_n >= 5 log 2 + 2 log n.
template <class Real>
bool thresholds_ok(const Real& chi, const Real& pi, const DegreeConstants<Real>& c) {
    return chi >= 2 && pi >= 5 * c.log2 + 2 * c.log_n;
}

/// log Y_F = chi_n log H + pi_n.
double log_y_threshold(long long height, double chi, double pi);

/// Y_F = H^chi_n e^pi_n. Throws std::overflow_error when it leaves the binary64 range.
double y_threshold(long long height, double chi, double pi);

/// max of the two gap-principle quantities inside the floor of T.
template <class Real>
Real small_count_raw(const SmallParams& small, const LargeDerived<Real>& large,
                     const DegreeConstants<Real>& c) {
    using std::log;
    using std::max;
    const Real d0(small.d0);
    const Real d(small.d);
    const Real nr(c.n);
    const Real log_d = log(d);
    const Real first = log(large.chi * nr * (d - 1) / (d0 * (d - 1) + d) + 1) / log_d;
    // log(K_d^{-1/(d-1)} Q1)
    const Real inner = c.log_q_one(d0) - c.log_k(d) / (d - 1);
    if (!(inner > 0)) {
        throw std::domain_error("small_count: K_d^(-1/(d-1)) Q1 <= 1 (Q1 size condition fails)");
    }
    const Real second = log(large.pi / inner + 1) / log_d;
    return max(first, second);
}

/// T. Independent of the height of the form.
template <class Real>
int small_count(const SmallParams& small, const LargeParams& large, int n) {
    const DegreeConstants<Real> c(n);
    if (!valid_small(small, c)) throw std::invalid_argument("small_count: invalid (d0, d)");
    if (!valid_large<Real>(large, n)) throw std::invalid_argument("small_count: invalid (a, b)");
    return detail::floor_to_int(small_count_raw(small, large_derived(large, c), c)) + 2;
}

/// Quantity inside the floor of Z.
template <class Real>
Real large_count_raw(const LargeDerived<Real>& large, const DegreeConstants<Real>& c) {
    using std::log;
    if (!thresholds_ok(large.chi, large.pi, c)) {
        throw std::domain_error("large_count: chi_n or pi_n below the required threshold");
    }
    if (!(large.L > 2)) throw std::domain_error("large_count: L <= 2");
    return (log(large.E) + 2 * c.log_n - log(large.L - 2)) / c.log_n_minus_1;
}

/// Z.
template <class Real>
int large_count(const LargeParams& large, int n) {
    if (!valid_large<Real>(large, n)) throw std::invalid_argument("large_count: invalid (a, b)");
    const DegreeConstants<Real> c(n);
    return detail::floor_to_int(large_count_raw(large_derived(large, c), c)) + 2;
}

/// Every derived quantity for one parameter choice.
template <class Real>
struct BasicBreakdown {
    int n = 0;
    Real K_d, K_d0, Q1, L, D, A, E, chi_n, pi_n;
    Real t_raw, z_raw;  // values inside the floors
    std::optional<int> T, Z;
    bool small_valid = false;
    bool large_valid = false;
    bool thresholds_ok = false;

    bool valid() const { return small_valid && large_valid && thresholds_ok && T && Z; }
};

using BoundBreakdown = BasicBreakdown<double>;
using HighBreakdown = BasicBreakdown<HighReal>;

/// Evaluates everything that is defined for the given tuple; T and Z are set
/// only when their preconditions hold.
template <class Real>
BasicBreakdown<Real> evaluate_bounds(int n, const SmallParams& small, const LargeParams& large) {
    using std::exp;
    const DegreeConstants<Real> c(n);
    BasicBreakdown<Real> out;
    out.n = n;
    out.small_valid = valid_small(small, c);
    out.large_valid = valid_large<Real>(large, n);
    if (small.d >= 0) out.K_d = exp(c.log_k(Real(small.d)));
    if (small.d0 >= 0 && Real(small.d0) <= c.n_star) {
        out.K_d0 = exp(c.log_k(Real(small.d0)));
        out.Q1 = exp(c.log_q_one(Real(small.d0)));
    }
    if (!out.large_valid) return out;
    const LargeDerived<Real> derived = large_derived(large, c);
    out.L = derived.L;
    out.D = derived.D;
    out.A = derived.A;
    out.E = derived.E;
    out.chi_n = derived.chi;
    out.pi_n = derived.pi;
    out.thresholds_ok = thresholds_ok(derived.chi, derived.pi, c);
    if (out.small_valid) {
        out.t_raw = small_count_raw(small, derived, c);
        out.T = detail::floor_to_int(out.t_raw) + 2;
    }
    if (out.thresholds_ok && derived.L > 2) {
        out.z_raw = large_count_raw(derived, c);
        out.Z = detail::floor_to_int(out.z_raw) + 2;
    }
    return out;
}

/// Names of the admissibility inequalities the tuple violates, in the order
/// they are checked; empty for an admissible tuple.
template <class Real>
std::vector<std::string> violated_conditions(int n, const SmallParams& small, const LargeParams& large) {
    using std::log;
    using std::max;
    using std::sqrt;
    std::vector<std::string> out;
    if (n < kMinDegree) return {"n >= 6"};
    const DegreeConstants<Real> c(n);
    const Real d0(small.d0);
    const Real d(small.d);
    if (!(d0 >= 0) || !(d0 <= c.n_star - c.small_margin)) out.emplace_back("0 <= d0 <= n* - 1.4");
    if (!(d > 1) || !(d <= c.n_star)) out.emplace_back("1 < d <= n*");
    if (out.empty() && !((d - 1) * c.log_q_one(d0) > max(Real(0), c.log_k(d)))) {
        out.emplace_back("Q1^(d-1) > max(1, K_d(n))");
    }
    const Real a(large.a);
    const Real b(large.b);
    const Real nr(n);
    if (!(a > 0)) out.emplace_back("a > 0");
    if (!(a < b)) out.emplace_back("a < b");
    if (!(b < 1 - sqrt(2 * (nr + a * a) / (nr * nr)))) out.emplace_back("b < 1 - sqrt(2(n + a^2)/n^2)");
    if (valid_large<Real>(large, n)) {
        const LargeDerived<Real> derived = large_derived(large, c);
        if (!(derived.chi >= 2)) out.emplace_back("chi_n >= 2");
        if (!(derived.pi >= 5 * c.log2 + 2 * c.log_n)) out.emplace_back("pi_n >= 5 log 2 + 2 log n");
        if (!(derived.L > 2)) out.emplace_back("L > 2");
    }
    return out;
}

/// Outcome of recomputing a tuple in 100-digit arithmetic.
struct PrecisionCheck {
    BoundBreakdown low;
    HighBreakdown high;
    bool agree = false;         // identical T, Z and validity flags
    bool near_integer = false;  // a high-precision floor argument within 1e-30 of an integer
    std::string detail;

    bool accepted() const { return agree && !near_integer && low.valid(); }
};

PrecisionCheck cross_check(int n, const SmallParams& small, const LargeParams& large);

}  // namespace thue
