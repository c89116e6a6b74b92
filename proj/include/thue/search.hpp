// Brute-force parameter searches minimizing T + Z per degree, the closed-form
// choice for large degrees, and the resulting z(n) and solution-count bounds.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "thue/bounds.hpp"

namespace thue {

/// Degree from which the closed-form parameters apply.
inline constexpr int kAsymptoticDegree = 507;

struct SearchConfig {
    int n_min = kMinDegree;
    int n_max = kMinDegree;
    double prec = 0.01;
    int target_sum = 4;  // T + Z never goes below 4
    int workers = 1;     // degrees are independent; output order is fixed
};

struct OptimalParams {
    int n = 0;
    double d0 = 0.0;
    double d = 0.0;
    double a = 0.0;
    double b = 0.0;
    int T = 0;
    int Z = 0;

    int sum() const { return T + Z; }
    SmallParams small() const { return {d0, d}; }
    LargeParams large() const { return {a, b}; }
};

/// Raised when no admissible tuple exists for a degree.
class SearchError : public std::runtime_error {
public:
    SearchError(int n, const std::string& what);
    int degree() const noexcept { return n_; }

private:
    int n_;
};

/// True iff the tuple passes all four admissibility checks
/// (small, large, chi_n, pi_n) and agrees in both precisions.
bool admissible(const OptimalParams& params);

/// Ascending scan over a, then d0, then b with d = n*; keeps the first strict
/// improvement of T + Z and stops early once target_sum is reached. One row per
/// n in [n_min, n_max]; an empty range gives an empty result.
std::vector<OptimalParams> grid_search(const SearchConfig& config);

/// Single-degree descending scan (a down from aUpper, then b, then d0 from
/// n* - 1.4 down) for the first tuple with T + Z == target_sum.
std::optional<OptimalParams> descend_at(int n, double prec, int target_sum = 4);

/// Descends n from n_max while T + Z = 4 stays attainable; the result is
/// ordered by ascending n and stops above the first failing degree.
std::vector<OptimalParams> descend_search(int n_max, double prec);

/// a = 1/4 and b = 1 - sqrt(2n + 1/8) / (c n^2/(n - 1) + 2) with c = 32/45,
/// the large-solution choice behind the closed form. Defined for any n >= 6.
LargeParams closed_form_large(int n);

/// Closed-form parameters for n >= 507 with T and Z evaluated by bound-core.
OptimalParams asymptotic_params(int n);

/// One side condition of the closed-form regime, evaluated in both precisions.
struct SideCondition {
    std::string name;
    bool binary64 = false;
    bool high = false;
    bool ok() const { return binary64 && high; }
};

/// E < 0.711, b > 0.87509, 42.8 <= chi_n <= 44.08, 46 + 19n <= pi_n <= 37 + 21n
/// and (32/45) n <= L <= (32/45) n + 3 for the closed-form tuple at n.
std::vector<SideCondition> asymptotic_side_conditions(int n);

/// z(n) from T and Z: one extra for degrees 6 to 8.
int z_from_counts(int n, int T, int Z);

/// Step used by z_of_n's grid pass: 0.01 throughout, matching the reference.
inline constexpr double kGridPrec = 0.01;
/// Step of the refinement pass that looks for T + Z = 4.
inline constexpr double kDescendPrec = 0.001;

/// Parameters behind z(n): the asymptotic tuple for n >= 507, otherwise the
/// better of the coarse grid and a refined descending scan at n.
OptimalParams z_params(int n);

int z_of_n(int n);

/// 2 v(n) z(n) + 8.
int solution_count_bound(int n);

/// z(n) reproduced with the reference protocol: the descending search from
/// n_max as far down as T + Z = 4 holds, the coarse grid below it, and the
/// closed form beyond 506.
class ZTable {
public:
    static ZTable compute(int n_max = kAsymptoticDegree - 1, double grid_prec = kGridPrec,
                          double descend_prec = kDescendPrec);

    /// Throws std::out_of_range for n in the uncomputed part of [6, 506].
    int z(int n) const;
    OptimalParams params(int n) const;
    const std::map<int, OptimalParams>& rows() const { return rows_; }
    /// Smallest degree covered by the descending search (0 if it covered none).
    int descend_floor() const { return descend_floor_; }

private:
    std::map<int, OptimalParams> rows_;
    int n_max_ = 0;
    int descend_floor_ = 0;
};

}  // namespace thue
