#include "thue/degree.hpp"

#include <stdexcept>
#include <string>

namespace thue {

void require_supported_degree(int n) {
    if (n < kMinDegree) {
        throw std::invalid_argument("unsupported degree n = " + std::to_string(n) +
                                    " (requires n >= 6)");
    }
}

DegreeProfile degree_profile(int n) {
    require_supported_degree(n);
    DegreeProfile profile;
    profile.n = n;
    profile.n_star = (n - 2) * 0.5;
    profile.p0 = n <= 8 ? 3 : 2;
    profile.v = n % 2 == 0 ? 4 : 3;
    if (n <= 7) {
        profile.ell = 4;
    } else if (n == 8) {
        profile.ell = 3;
    } else {
        profile.ell = 2;
    }
    return profile;
}

}  // namespace thue
