#include "thue/gap.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace thue {

namespace {

LogGapInstance<double> to_log(const GapInstance& inst) {
    return {std::log(inst.L), std::log(inst.M), std::log(inst.T), inst.p};
}

// Above this the greedy oracle continues in log space.
constexpr double kDirectLimit = 1e150;

constexpr std::size_t kKeptCounterexamples = 5;

void record_failure(SuiteResult& result, const std::string& what) {
    ++result.failures;
    if (result.counterexamples.size() < kKeptCounterexamples) result.counterexamples.push_back(what);
}

std::string describe(const GapInstance& inst) {
    std::ostringstream out;
    out.precision(17);
    out << "L=" << inst.L << " M=" << inst.M << " T=" << inst.T << " p=" << inst.p;
    return out.str();
}

}  // namespace

void validate(const GapInstance& inst) {
    if (!(inst.L > 0) || !(inst.M > 0) || !(inst.T > 0)) {
        throw std::invalid_argument("gap instance: L, M and T must be positive");
    }
    if (!(inst.L <= inst.M)) throw std::invalid_argument("gap instance: ordering L <= M violated");
    if (!(inst.p > 2)) throw std::invalid_argument("gap instance: p-range p > 2 violated");
    if (!(std::pow(inst.L, inst.p - 2) > inst.T)) {
        throw std::invalid_argument("gap instance: L-vs-T condition L^(p-2) > T violated");
    }
}

GapBound gap_bound(const LogGapInstance<double>& inst) {
    GapBound out;
    out.real_bound = gap_bound_real(inst);
    out.int_bound = static_cast<std::int64_t>(std::floor(out.real_bound));
    return out;
}

GapBound gap_bound(const GapInstance& inst) {
    validate(inst);
    return gap_bound(to_log(inst));
}

std::vector<double> sharp_chain(double L, double T, double p, int ell) {
    if (!(L > 0) || !(T > 0)) throw std::invalid_argument("sharp_chain: L and T must be positive");
    if (!(p > 2)) throw std::invalid_argument("sharp_chain: p-range p > 2 violated");
    if (!(std::pow(L, p - 2) > T)) {
        throw std::invalid_argument("sharp_chain: L^(p-2) > T violated, the chain would not grow");
    }
    if (ell < 0) throw std::invalid_argument("sharp_chain: ell must be nonnegative");
    std::vector<double> out{L};
    for (int i = 0; i < ell; ++i) {
        const double next = std::pow(out.back(), p - 1) / T;
        if (!std::isfinite(next)) throw std::overflow_error("sharp_chain: term exceeds binary64 range");
        out.push_back(next);
    }
    return out;
}

std::int64_t max_chain_oracle(const GapInstance& inst) {
    validate(inst);
    std::int64_t length = 0;
    double y = inst.L;
    while (y <= kDirectLimit) {
        const double next = std::max(y, std::pow(y, inst.p - 1) / inst.T);
        if (!(next <= inst.M)) return length;
        y = next;
        ++length;
    }
    const double log_M = std::log(inst.M);
    const double log_T = std::log(inst.T);
    double log_y = std::log(y);
    for (;;) {
        const double next = std::max(log_y, (inst.p - 1) * log_y - log_T);
        if (!(next <= log_M)) return length;
        log_y = next;
        ++length;
    }
}

GapInstance random_gap_instance(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    GapInstance inst;
    inst.L = 1.01 + unit(rng) * (100 - 1.01);
    inst.p = 20 - unit(rng) * (20 - 2.01);  // (2.01, 20]
    inst.T = (1 - unit(rng)) * 0.99 * std::pow(inst.L, inst.p - 2);  // (0, 0.99 L^(p-2)]
    inst.M = inst.L * std::pow(10.0, 12 * unit(rng));
    return inst;
}

SuiteResult gap_sharpness_suite(std::size_t count, std::uint64_t seed, bool high_precision) {
    SuiteResult result;
    result.name = high_precision ? "gap_sharpness_high" : "gap_sharpness_binary64";
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> length(0, 10);
    const double tolerance = high_precision ? 1e-30 : 1e-9;
    for (std::size_t i = 0; i < count; ++i) {
        const GapInstance inst = random_gap_instance(rng);
        const int ell = length(rng);
        double error = 0.0;
        if (high_precision) {
            using std::log;
            const HighReal log_L = log(HighReal(inst.L));
            const HighReal log_T = log(HighReal(inst.T));
            const HighReal p(inst.p);
            const HighReal log_M = sharp_chain_log(log_L, log_T, p, ell).back();
            const HighReal bound = gap_bound_real(LogGapInstance<HighReal>{log_L, log_M, log_T, p});
            error = static_cast<double>(abs(bound - ell) / std::max(1, ell));
        } else {
            const double log_L = std::log(inst.L);
            const double log_T = std::log(inst.T);
            const double log_M = sharp_chain_log(log_L, log_T, inst.p, ell).back();
            const double bound = gap_bound_real(LogGapInstance<double>{log_L, log_M, log_T, inst.p});
            error = std::fabs(bound - ell) / std::max(1, ell);
        }
        ++result.instances;
        result.worst = std::max(result.worst, error);
        if (!(error <= tolerance)) {
            std::ostringstream what;
            what << describe(inst) << " ell=" << ell << " relative error " << error;
            record_failure(result, what.str());
        }
    }
    return result;
}

SuiteResult gap_soundness_suite(std::size_t count, std::uint64_t seed) {
    SuiteResult result;
    result.name = "gap_soundness";
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        const GapInstance inst = random_gap_instance(rng);
        const std::int64_t chain = max_chain_oracle(inst);
        const GapBound bound = gap_bound(inst);
        ++result.instances;
        if (chain > bound.int_bound) {
            std::ostringstream what;
            what << describe(inst) << " chain " << chain << " > bound " << bound.int_bound;
            record_failure(result, what.str());
        }
    }
    return result;
}

SuiteResult gap_monotonicity_suite(std::size_t count, std::uint64_t seed) {
    SuiteResult result;
    result.name = "gap_monotonicity";
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double slack = 1e-9;
    for (std::size_t i = 0; i < count; ++i) {
        const GapInstance inst = random_gap_instance(rng);
        const double base = gap_bound(inst).real_bound;
        GapInstance larger_m = inst;
        larger_m.M *= std::pow(10.0, 3 * unit(rng));
        GapInstance larger_l = inst;
        larger_l.L = inst.L * std::pow(inst.M / inst.L, unit(rng));
        ++result.instances;
        const double up_m = gap_bound(larger_m).real_bound;
        const double up_l = gap_bound(larger_l).real_bound;
        if (up_m < base - slack || up_l > base + slack) {
            std::ostringstream what;
            what << describe(inst) << " bound " << base << ", larger M " << up_m << ", larger L " << up_l;
            record_failure(result, what.str());
        }
    }
    return result;
}

}  // namespace thue
