#include "thue/bounds.hpp"

#include <cmath>
#include <sstream>

namespace thue {

double log_y_threshold(long long height, double chi, double pi) {
    if (height < 1) throw std::invalid_argument("y_threshold: height must be >= 1");
    return chi * std::log(static_cast<double>(height)) + pi;
}

double y_threshold(long long height, double chi, double pi) {
    const double log_value = log_y_threshold(height, chi, pi);
    const double value = std::exp(log_value);
    if (!std::isfinite(value)) {
        std::ostringstream msg;
        msg << "y_threshold: H^chi e^pi overflows binary64 (log value " << log_value << ")";
        throw std::overflow_error(msg.str());
    }
    return value;
}

namespace {

bool near_integer(const HighReal& x) {
    using boost::multiprecision::abs;
    using boost::multiprecision::round;
    return abs(x - round(x)) < near_integer_tolerance();
}

}  // namespace

PrecisionCheck cross_check(int n, const SmallParams& small, const LargeParams& large) {
    PrecisionCheck check;
    check.low = evaluate_bounds<double>(n, small, large);
    check.high = evaluate_bounds<HighReal>(n, small, large);

    std::ostringstream why;
    if (check.low.small_valid != check.high.small_valid) why << "small validity differs; ";
    if (check.low.large_valid != check.high.large_valid) why << "large validity differs; ";
    if (check.low.thresholds_ok != check.high.thresholds_ok) why << "thresholds differ; ";
    if (check.low.T != check.high.T) why << "T differs; ";
    if (check.low.Z != check.high.Z) why << "Z differs; ";
    check.agree = why.str().empty();

    if (check.high.T && near_integer(check.high.t_raw)) {
        check.near_integer = true;
        why << "T floor argument within 1e-30 of an integer; ";
    }
    if (check.high.Z && near_integer(check.high.z_raw)) {
        check.near_integer = true;
        why << "Z floor argument within 1e-30 of an integer; ";
    }
    check.detail = why.str();
    return check;
}

}  // namespace thue
