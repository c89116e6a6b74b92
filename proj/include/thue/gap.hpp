// Counting lemma for chains L <= y_0 <= ... <= y_l <= M with
// y_{i+1} >= y_i^{p-1} / T, its extremal chains, and a greedy oracle.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <stdexcept>
#include <vector>

#include "thue/bounds.hpp"

namespace thue {

struct GapInstance {
    double L = 0.0;
    double M = 0.0;
    double T = 0.0;
    double p = 0.0;
};

/// The same instance with L, M and T given by their natural logs, for chains
/// whose ceiling is far outside the binary64 range.
template <class Real>
struct LogGapInstance {
    Real log_L;
    Real log_M;
    Real log_T;
    Real p;
};

struct GapBound {
    double real_bound = 0.0;
    std::int64_t int_bound = 0;
};

/// Throws std::invalid_argument naming the violated condition.
void validate(const GapInstance& inst);

template <class Real>
void validate(const LogGapInstance<Real>& inst) {
    if (!(inst.log_L <= inst.log_M)) throw std::invalid_argument("gap instance: ordering L <= M violated");
    if (!(inst.p > 2)) throw std::invalid_argument("gap instance: p-range p > 2 violated");
    if (!((inst.p - 2) * inst.log_L > inst.log_T)) {
        throw std::invalid_argument("gap instance: L-vs-T condition L^(p-2) > T violated");
    }
}

/// log[log(M T^{-1/(p-2)}) / log(L T^{-1/(p-2)})] / log(p - 1).
template <class Real>
Real gap_bound_real(const LogGapInstance<Real>& inst) {
    using std::log;
    validate(inst);
    const Real shift = inst.log_T / (inst.p - 2);
    return log((inst.log_M - shift) / (inst.log_L - shift)) / log(inst.p - 1);
}

GapBound gap_bound(const GapInstance& inst);
GapBound gap_bound(const LogGapInstance<double>& inst);

/// y_0 = L, y_i = y_{i-1}^{p-1} / T. Throws std::overflow_error if a term
/// leaves the binary64 range; use sharp_chain_log for long chains.
std::vector<double> sharp_chain(double L, double T, double p, int ell);

/// Natural logs of the sharp chain, computed by the same recursion.
template <class Real>
std::vector<Real> sharp_chain_log(const Real& log_L, const Real& log_T, const Real& p, int ell) {
    if (!(p > 2)) throw std::invalid_argument("sharp_chain: p-range p > 2 violated");
    if (!((p - 2) * log_L > log_T)) {
        throw std::invalid_argument("sharp_chain: L^(p-2) > T violated, the chain would not grow");
    }
    if (ell < 0) throw std::invalid_argument("sharp_chain: ell must be nonnegative");
    std::vector<Real> out;
    out.reserve(static_cast<std::size_t>(ell) + 1);
    out.push_back(log_L);
    for (int i = 0; i < ell; ++i) out.push_back((p - 1) * out.back() - log_T);
    return out;
}

/// Longest chain that fits under M, built greedily with minimal growth.
std::int64_t max_chain_oracle(const GapInstance& inst);

/// Random valid instance: L in [1.01, 100], p in (2.01, 20],
/// T in (0, 0.99 L^(p-2)] and M = L 10^u with u in [0, 12].
GapInstance random_gap_instance(std::mt19937_64& rng);

/// Outcome of a randomized property suite.
struct SuiteResult {
    std::string name;
    std::size_t instances = 0;
    std::size_t failures = 0;
    double worst = 0.0;                     // largest observed error, where meaningful
    std::vector<std::string> counterexamples;  // the first few failures

    bool ok() const { return failures == 0; }
};

/// Sharp chains of length 0 to 10 give real_bound = ell, to 1e-9 relative in
/// binary64 or 1e-30 relative in HighReal.
SuiteResult gap_sharpness_suite(std::size_t count, std::uint64_t seed, bool high_precision);

/// max_chain_oracle never exceeds int_bound.
SuiteResult gap_soundness_suite(std::size_t count, std::uint64_t seed);

/// real_bound is nondecreasing in M and nonincreasing in L.
SuiteResult gap_monotonicity_suite(std::size_t count, std::uint64_t seed);

}  // namespace thue
