// Degree-dependent constants shared by the bound formulas and the form lab.
#pragma once

namespace thue {

/// Smallest supported degree. Degree five is excluded because the published
/// count for it rests on a flawed estimate.
inline constexpr int kMinDegree = 6;

struct DegreeProfile {
    int n = 0;
    double n_star = 0.0;  // (n - 2) / 2
    int p0 = 0;           // least numerator of a special solution
    int v = 0;            // bound on R_F + C_F
    int ell = 0;          // per-critical-point count multiplier
};

/// Throws std::invalid_argument for n < 6.
DegreeProfile degree_profile(int n);

/// Throws std::invalid_argument for n < 6.
void require_supported_degree(int n);

}  // namespace thue
