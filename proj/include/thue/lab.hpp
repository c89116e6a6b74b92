// Enumeration of irreducible trinomial forms of fixed degree and height, and
// verification of observed solution counts against the proven bounds.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "thue/analysis.hpp"
#include "thue/form.hpp"
#include "thue/solver.hpp"

namespace thue {

struct EnumerationStats {
    std::size_t candidates = 0;  // primitive tuples of exact height tested
    std::size_t irreducible = 0;
    std::size_t reducible = 0;
    std::size_t unknown = 0;     // excluded: neither verdict could be certified
};

/// Forms with 1 <= h_n <= H, h_k in +-[1, H], |h_0| >= h_n, max coefficient
/// exactly H, gcd 1, 1 <= k < n and certified irreducible; in the order
/// h_n, then h_k, then h_0 (each ascending), then k.
std::vector<TrinomialForm> enumerate_forms(int degree, std::int64_t height,
                                           EnumerationStats* stats = nullptr);

struct BoundCheck {
    std::string name;
    bool ok = true;
    std::string detail;
};

struct VerificationReport {
    TrinomialForm form;
    std::int64_t box = 0;
    int z = 0;
    int v = 0;
    int ell = 0;
    std::size_t total = 0;
    std::size_t regular = 0;
    std::size_t near_axes = 0;  // solutions with |pq| <= 1
    int R_F = 0;
    int C_F = 0;
    std::vector<std::size_t> per_exceptional;  // regular solutions per exceptional point
    std::vector<BoundCheck> checks;
    std::vector<SolutionRecord> solutions;

    bool ok() const;
    const BoundCheck* find(const std::string& name) const;
};

/// Check names, in report order. The analysis-dependent checks are absent
/// when the analysis itself fails.
inline const std::vector<std::string>& bound_check_names() {
    static const std::vector<std::string> names{
        "total_bound",     "regular_bound",  "near_axes_bound",   "regular_pairing",
        "sign_symmetry",   "coprimality",    "per_point_bound",   "weighted_bound",
        "exceptional_count", "critical_count", "separation",      "analysis"};
    return names;
}

/// z(n), memoized per process.
int cached_z_of_n(int n);

/// Solves in the box and checks every bound; a violated bound shows up as a
/// failed check rather than an exception.
VerificationReport verify_bounds(const TrinomialForm& form, std::int64_t box);
VerificationReport verify_bounds(const TrinomialForm& form, std::int64_t box,
                                 std::vector<SolutionRecord> solutions, int z);

struct SurveyResult {
    int degree = 0;
    std::int64_t height = 0;
    std::int64_t box = 0;
    EnumerationStats stats;
    std::vector<VerificationReport> forms;  // enumeration order

    std::size_t max_count() const;
    std::size_t violations() const;
};

/// Enumerates, solves and verifies every form of the given degree and height.
/// Output order does not depend on the worker count.
SurveyResult survey(int degree, std::int64_t height, std::int64_t box, int workers = 1);

}  // namespace thue
