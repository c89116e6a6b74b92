#include "thue/search.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <exception>
#include <thread>

namespace thue {

SearchError::SearchError(int n, const std::string& what)
    : std::runtime_error("n = " + std::to_string(n) + ": " + what), n_(n) {}

bool admissible(const OptimalParams& params) {
    const PrecisionCheck check = cross_check(params.n, params.small(), params.large());
    return check.accepted() && *check.low.T == params.T && *check.low.Z == params.Z;
}

namespace {

// Large-side quantities for one (a, b); Z is empty when (a, b) is not admissible.
struct LargeCandidate {
    double b = 0.0;
    LargeDerived<double> derived{};
    std::optional<int> Z;
};

LargeCandidate evaluate_large(double a, double b, const DegreeConstants<double>& c) {
    LargeCandidate out;
    out.b = b;
    if (!valid_large<double>({a, b}, c.n)) return out;
    out.derived = large_derived({a, b}, c);
    if (!thresholds_ok(out.derived.chi, out.derived.pi, c) || !(out.derived.L > 2)) return out;
    out.Z = detail::floor_to_int(large_count_raw(out.derived, c)) + 2;
    return out;
}

// Accepts a binary64 hit only when the 100-digit recomputation agrees.
bool confirm(OptimalParams& params) {
    const PrecisionCheck check = cross_check(params.n, params.small(), params.large());
    if (!check.accepted()) return false;
    params.T = *check.low.T;
    params.Z = *check.low.Z;
    return true;
}

OptimalParams grid_search_one(int n, double prec, int target_sum) {
    const DegreeConstants<double> c(n);
    const double n_star = (n - 2) * 0.5;
    const double a_hi = a_upper<double>(n);
    const double d0_step = prec * (n_star - 1.4);
    const double nn = static_cast<double>(n) * n;

    std::optional<OptimalParams> best;
    int best_sum = INT_MAX;
    std::vector<LargeCandidate> column;

    // Accumulated steps mirror the reference scan so ties break identically.
    for (double a = prec; a <= a_hi && best_sum > target_sum; a += prec) {
        column.clear();
        const double b_limit = 1 - std::sqrt(2 * (n + a * a) / nn);
        for (double b = a + prec; b < b_limit; b += prec) {
            column.push_back(evaluate_large(a, b, c));
        }
        for (double d0 = 0; d0 <= n_star - 1.4 && best_sum > target_sum; d0 += d0_step) {
            const SmallParams small{d0, n_star};
            if (!valid_small(small, c)) continue;
            for (const LargeCandidate& cand : column) {
                if (best_sum <= target_sum) break;
                // T >= 2, so this column entry cannot strictly improve.
                if (!cand.Z || *cand.Z + 2 >= best_sum) continue;
                const int T = detail::floor_to_int(small_count_raw(small, cand.derived, c)) + 2;
                if (T + *cand.Z >= best_sum) continue;
                OptimalParams hit{n, d0, n_star, a, cand.b, T, *cand.Z};
                if (!confirm(hit)) continue;
                best = hit;
                best_sum = hit.sum();
            }
        }
    }
    if (!best) throw SearchError(n, "no admissible (d0, a, b) on the grid");
    return *best;
}

}  // namespace

std::vector<OptimalParams> grid_search(const SearchConfig& config) {
    if (config.n_min < kMinDegree) throw std::invalid_argument("grid_search: n_min must be >= 6");
    if (!(config.prec > 0)) throw std::invalid_argument("grid_search: prec must be positive");
    if (config.n_min > config.n_max) return {};

    const int count = config.n_max - config.n_min + 1;
    std::vector<std::optional<OptimalParams>> slots(count);
    std::vector<std::exception_ptr> errors(count);
    auto run = [&](int index) {
        try {
            slots[index] = grid_search_one(config.n_min + index, config.prec, config.target_sum);
        } catch (...) {
            errors[index] = std::current_exception();
        }
    };

    const int workers = std::clamp(config.workers, 1, count);
    if (workers == 1) {
        for (int i = 0; i < count; ++i) run(i);
    } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (int i = w; i < count; i += workers) run(i);
            });
        }
    }

    std::vector<OptimalParams> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
        out.push_back(*slots[i]);
    }
    return out;
}

std::optional<OptimalParams> descend_at(int n, double prec, int target_sum) {
    require_supported_degree(n);
    if (!(prec > 0)) throw std::invalid_argument("descend_at: prec must be positive");
    const DegreeConstants<double> c(n);
    const double n_star = (n - 2) * 0.5;
    const double a_hi = a_upper<double>(n);
    const double d0_top = n_star - 1.4;
    const double d0_step = prec * (n_star - 1.4);
    const int z_needed = target_sum - 2;

    for (double a = a_hi - prec; a > 0; a -= prec) {
        for (double b = a_hi; b > a; b -= prec) {
            const LargeCandidate cand = evaluate_large(a, b, c);
            if (!cand.Z || *cand.Z > z_needed) continue;
            for (double d0 = d0_top; d0 >= 0; d0 -= d0_step) {
                const SmallParams small{d0, n_star};
                if (!valid_small(small, c)) continue;
                const int T = detail::floor_to_int(small_count_raw(small, cand.derived, c)) + 2;
                if (T + *cand.Z == target_sum) {
                    OptimalParams hit{n, d0, n_star, a, b, T, *cand.Z};
                    if (confirm(hit)) return hit;
                }
                // The chi-term of T only grows as d0 falls, so once it alone
                // reaches the target nothing further down can hit it.
                const double log_d = std::log(n_star);
                const double chi_term =
                    std::log(cand.derived.chi * n * (n_star - 1) / (d0 * (n_star - 1) + n_star) + 1) /
                    log_d;
                if (detail::floor_to_int(chi_term) + 2 + *cand.Z > target_sum) break;
            }
        }
    }
    return std::nullopt;
}

std::vector<OptimalParams> descend_search(int n_max, double prec) {
    if (!(prec > 0)) throw std::invalid_argument("descend_search: prec must be positive");
    std::vector<OptimalParams> found;
    for (int n = n_max; n >= kMinDegree; --n) {
        const std::optional<OptimalParams> hit = descend_at(n, prec);
        if (!hit) break;
        found.push_back(*hit);
    }
    std::reverse(found.begin(), found.end());
    return found;
}

LargeParams closed_form_large(int n) {
    require_supported_degree(n);
    const double big_c = 7.0 / 6.0;
    const double c = 8 / (9 * big_c * big_c - 1);
    const double nr = n;
    return {0.25, 1 - std::sqrt(2 * nr + 1.0 / 8) / (c * nr * nr / (nr - 1) + 2)};
}

OptimalParams asymptotic_params(int n) {
    if (n < kAsymptoticDegree) {
        throw std::invalid_argument("asymptotic_params: requires n >= 507, got " + std::to_string(n));
    }
    const double n_star = (n - 2) * 0.5;
    const LargeParams large = closed_form_large(n);
    OptimalParams out;
    out.n = n;
    out.d0 = n_star / 2;
    out.d = n_star;
    out.a = large.a;
    out.b = large.b;
    const BoundBreakdown bounds = evaluate_bounds<double>(n, out.small(), out.large());
    if (!bounds.valid()) throw SearchError(n, "closed-form parameters are not admissible");
    out.T = *bounds.T;
    out.Z = *bounds.Z;
    return out;
}

namespace {

template <class Real>
std::vector<bool> side_flags(const OptimalParams& params) {
    const LargeDerived<Real> d = large_derived<Real>(params.large(), params.n);
    const Real n(params.n);
    const Real l_low = 32 * n / 45;
    return {d.E < detail::decimal<Real>("0.711"),
            Real(params.b) > detail::decimal<Real>("0.87509"),
            d.chi >= detail::decimal<Real>("42.8") && d.chi <= detail::decimal<Real>("44.08"),
            d.pi >= 46 + 19 * n && d.pi <= 37 + 21 * n,
            d.L >= l_low && d.L <= l_low + 3};
}

}  // namespace

std::vector<SideCondition> asymptotic_side_conditions(int n) {
    const OptimalParams params = asymptotic_params(n);
    const std::vector<bool> low = side_flags<double>(params);
    const std::vector<bool> high = side_flags<HighReal>(params);
    const char* names[] = {"E < 0.711", "b > 0.87509", "42.8 <= chi_n <= 44.08", "46 + 19n <= pi_n <= 37 + 21n",
                           "32n/45 <= L <= 32n/45 + 3"};
    std::vector<SideCondition> out;
    for (std::size_t i = 0; i < low.size(); ++i) out.push_back({names[i], low[i], high[i]});
    return out;
}

int z_from_counts(int n, int T, int Z) { return T + Z + (n <= 8 ? 1 : 0); }

OptimalParams z_params(int n) {
    require_supported_degree(n);
    if (n >= kAsymptoticDegree) return asymptotic_params(n);
    const OptimalParams coarse = grid_search({n, n, kGridPrec, 4, 1}).front();
    if (coarse.sum() == 4) return coarse;
    const std::optional<OptimalParams> fine = descend_at(n, kDescendPrec);
    return fine ? *fine : coarse;
}

int z_of_n(int n) {
    const OptimalParams params = z_params(n);
    return z_from_counts(n, params.T, params.Z);
}

int solution_count_bound(int n) { return 2 * degree_profile(n).v * z_of_n(n) + 8; }

ZTable ZTable::compute(int n_max, double grid_prec, double descend_prec) {
    if (n_max < kMinDegree) throw std::invalid_argument("ZTable: n_max must be >= 6");
    ZTable table;
    table.n_max_ = std::min(n_max, kAsymptoticDegree - 1);
    int lowest = table.n_max_ + 1;
    for (const OptimalParams& row : descend_search(table.n_max_, descend_prec)) {
        table.rows_[row.n] = row;
        lowest = std::min(lowest, row.n);
    }
    table.descend_floor_ = lowest <= table.n_max_ ? lowest : 0;
    for (const OptimalParams& row : grid_search({kMinDegree, lowest - 1, grid_prec, 4, 1})) {
        table.rows_[row.n] = row;
    }
    return table;
}

OptimalParams ZTable::params(int n) const {
    require_supported_degree(n);
    if (n >= kAsymptoticDegree) return asymptotic_params(n);
    const auto it = rows_.find(n);
    if (it == rows_.end()) throw std::out_of_range("ZTable: n = " + std::to_string(n) + " not computed");
    return it->second;
}

int ZTable::z(int n) const {
    const OptimalParams row = params(n);
    return z_from_counts(n, row.T, row.Z);
}

}  // namespace thue
