// Real roots, critical points and the exceptional-point partition of
// f(X) = F(X, 1) for a trinomial form.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "thue/form.hpp"

namespace thue {

/// A real root isolated in the rational interval (lo, hi).
struct RootEnclosure {
    mpq_class lo;
    mpq_class hi;
    double approx = 0.0;
};

/// A real zero of f'. Nonzero critical points are the real solutions of
/// X^(n-k) = -k h_k / (n h_n) and are represented through that equation.
struct CriticalPoint {
    double location = 0.0;
    bool at_zero = false;
    int sign = 0;       // sign of the location
    int f_sign = 0;     // sign of f at the point
    bool proper = false;
};

struct ExceptionalPoint {
    enum class Kind { root, critical };
    Kind kind = Kind::root;
    double location = 0.0;
    std::size_t source = 0;  // index into real_roots or critical_points
};

struct FormAnalysis {
    int n = 0;
    int k = 0;
    std::vector<RootEnclosure> real_roots;
    std::vector<CriticalPoint> critical_points;  // ascending
    std::vector<ExceptionalPoint> exceptional;   // ascending
    /// Improper critical points cutting the line into one interval per
    /// exceptional point: J_1 = (-inf, eta_1), J_i = [eta_{i-1}, eta_i).
    std::vector<std::size_t> boundaries;         // indices into critical_points
    int R_F = 0;
    int C_F = 0;
    /// False if two consecutive exceptional points have no improper critical
    /// point between them; `problem` then names the pair.
    bool separated = true;
    std::string problem;
};

/// Thrown when a critical point cannot be classified.
class AnalysisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

FormAnalysis analyze_form(const TrinomialForm& form);

/// Sign of (x - critical point) computed exactly for rational x.
int compare_to_critical(const mpq_class& x, const CriticalPoint& point, const TrinomialForm& form);

/// 1-based index of the exceptional point whose interval contains p/q (q > 0).
/// Throws std::invalid_argument when the analysis has no exceptional points.
std::size_t belongs_to(const FormAnalysis& analysis, const TrinomialForm& form, const mpq_class& rho);

/// Root isolation width below which bisection stops.
inline constexpr double kRootWidth = 1e-12;

}  // namespace thue
