#include "thue/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace thue {

namespace {

struct Eval {
    Complex value;
    Complex derivative;
};

Eval horner(const std::vector<long double>& c, Complex x) {
    Complex value = c.back();
    Complex derivative = 0;
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        derivative = derivative * x + value;
        value = value * x + c[i];
    }
    return {value, derivative};
}

}  // namespace

long double cauchy_bound(const std::vector<std::int64_t>& coeffs) {
    const long double lead = std::fabs(static_cast<long double>(coeffs.back()));
    long double worst = 0;
    for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) {
        worst = std::max(worst, std::fabs(static_cast<long double>(coeffs[i])) / lead);
    }
    return 1 + worst;
}

std::vector<Complex> complex_roots(const std::vector<std::int64_t>& coeffs) {
    if (coeffs.size() < 2 || coeffs.back() == 0) {
        throw std::invalid_argument("complex_roots: polynomial must have positive degree");
    }
    const std::size_t degree = coeffs.size() - 1;
    std::vector<long double> c(coeffs.begin(), coeffs.end());

    // Start on a circle inside the Cauchy bound with an irrational phase
    // offset so no start is conjugate-symmetric or on the real axis.
    const long double radius = 0.5L * cauchy_bound(coeffs);
    std::vector<Complex> z(degree);
    for (std::size_t i = 0; i < degree; ++i) {
        const long double angle = 2 * std::numbers::pi_v<long double> * i / degree + 0.4L;
        z[i] = std::polar(radius, angle);
    }

    for (int iter = 0; iter < 500; ++iter) {
        long double largest_step = 0;
        for (std::size_t i = 0; i < degree; ++i) {
            const Eval e = horner(c, z[i]);
            if (std::abs(e.value) == 0) continue;
            const Complex ratio = e.value / e.derivative;
            Complex repulsion = 0;
            for (std::size_t j = 0; j < degree; ++j) {
                if (j != i) repulsion += 1.0L / (z[i] - z[j]);
            }
            const Complex step = ratio / (1.0L - ratio * repulsion);
            z[i] -= step;
            largest_step = std::max(largest_step, std::abs(step) / std::max(1.0L, std::abs(z[i])));
        }
        if (largest_step < 1e-17L) break;
    }
    // Newton polish; simple roots converge quadratically.
    for (Complex& root : z) {
        for (int iter = 0; iter < 4; ++iter) {
            const Eval e = horner(c, root);
            if (std::abs(e.derivative) == 0) break;
            root -= e.value / e.derivative;
        }
    }
    return z;
}

}  // namespace thue
