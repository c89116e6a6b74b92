#include "thue/analysis.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace thue {

namespace {

int sgn64(std::int64_t x) { return (x > 0) - (x < 0); }

mpq_class pow_q(const mpq_class& base, unsigned long exp) {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exp);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exp);
    mpq_class out(num, den);
    out.canonicalize();
    return out;
}

int cmp_q(const mpq_class& a, const mpq_class& b) {
    const int c = cmp(a, b);
    return (c > 0) - (c < 0);
}

// -k h_k / (n h_n): nonzero critical points solve X^(n-k) = this.
mpq_class critical_power(const TrinomialForm& form) {
    mpq_class c(mpz_class(-static_cast<long>(form.k()) * form.h_k()),
                mpz_class(static_cast<long>(form.n()) * form.h_n()));
    c.canonicalize();
    return c;
}

// Sign of f at a nonzero critical point tau of the given sign. There
// f(tau) = h_0 + h_k (n - k) / n * tau^k and |tau^k|^(n-k) = |c|^k, so the
// comparison reduces to rational powers.
int f_sign_at_critical(const TrinomialForm& form, const mpq_class& c, int tau_sign) {
    const int n = form.n();
    const int k = form.k();
    const int m = n - k;
    const int s_sign = (k % 2 == 0) ? 1 : tau_sign;  // sign of tau^k
    const int middle_sign = sgn64(form.h_k()) * s_sign;
    const int const_sign = sgn64(form.h_0());
    if (middle_sign == const_sign) return const_sign;
    // |middle| vs |h_0|: |h_k| (n-k)/n |tau|^k vs |h_0|  <=>  |c|^k vs r^m
    mpq_class r(mpz_class(static_cast<long>(n * std::labs(form.h_0()))),
                mpz_class(static_cast<long>(m * std::labs(form.h_k()))));
    r.canonicalize();
    const int order = cmp_q(pow_q(abs(c), static_cast<unsigned long>(k)), pow_q(r, static_cast<unsigned long>(m)));
    if (order == 0) throw AnalysisError("f vanishes at a critical point (repeated root)");
    return order > 0 ? middle_sign : const_sign;
}

std::vector<CriticalPoint> critical_points(const TrinomialForm& form) {
    const int n = form.n();
    const int k = form.k();
    const int m = n - k;
    const mpq_class c = critical_power(form);
    const double magnitude = std::pow(std::fabs(c.get_d()), 1.0 / m);
    std::vector<int> signs;
    if (m % 2 == 1) {
        signs.push_back(sgn(c));
    } else if (sgn(c) > 0) {
        signs = {-1, 1};
    }

    std::vector<CriticalPoint> out;
    for (int s : signs) {
        CriticalPoint point;
        point.location = s * magnitude;
        point.sign = s;
        point.f_sign = f_sign_at_critical(form, c, s);
        // f''(tau) = k h_k (k - n) tau^(k-2), whose sign is -sign(h_k) sign(tau)^k.
        const int fpp_sign = -sgn64(form.h_k()) * ((k % 2 == 0) ? 1 : s);
        point.proper = point.f_sign * fpp_sign > 0;
        out.push_back(point);
    }
    if (k >= 2) {
        // Near 0, f'' ~ k (k-1) h_k X^(k-2) and f ~ h_0: the product keeps a
        // constant sign on a punctured neighborhood only when k is even.
        CriticalPoint zero;
        zero.at_zero = true;
        zero.f_sign = sgn64(form.h_0());
        zero.proper = (k % 2 == 0) && sgn64(form.h_0()) * sgn64(form.h_k()) > 0;
        out.push_back(zero);
    }
    std::sort(out.begin(), out.end(),
              [](const CriticalPoint& a, const CriticalPoint& b) { return a.location < b.location; });
    return out;
}

mpq_class to_q(double x) { return mpq_class(x); }

// A rational point strictly between the critical point and the next root,
// found by stepping away from the critical point until f has its sign there.
mpq_class step_off(const TrinomialForm& form, const CriticalPoint& point, int direction) {
    const mpq_class base = to_q(point.location);
    for (double eps = 1e-6; eps > 1e-40; eps /= 16) {
        const mpq_class candidate = base + mpq_class(direction * eps);
        if (compare_to_critical(candidate, point, form) != direction) continue;
        if (form.sign_at(candidate) == point.f_sign) return candidate;
    }
    throw AnalysisError("could not separate a critical point from a nearby root");
}

RootEnclosure bisect(const TrinomialForm& form, mpq_class lo, mpq_class hi) {
    const int lo_sign = form.sign_at(lo);
    const mpq_class width(kRootWidth);
    while (hi - lo > width) {
        mpq_class mid = (lo + hi) / 2;
        // Keep denominators small by snapping the midpoint to a double.
        const mpq_class snapped(mid.get_d());
        if (snapped > lo && snapped < hi) mid = snapped;
        const int s = form.sign_at(mid);
        if (s == 0) return {mid, mid, mid.get_d()};
        if (s == lo_sign) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const mpq_class centre = (lo + hi) / 2;
    return {lo, hi, centre.get_d()};
}

}  // namespace

int compare_to_critical(const mpq_class& x, const CriticalPoint& point, const TrinomialForm& form) {
    const int xs = sgn(x);
    if (point.at_zero) return xs;
    if (xs != point.sign) return xs > point.sign ? 1 : -1;
    const int m = form.n() - form.k();
    const mpq_class c = critical_power(form);
    const int order = cmp_q(pow_q(abs(x), static_cast<unsigned long>(m)), abs(c));
    return xs * order;
}

FormAnalysis analyze_form(const TrinomialForm& form) {
    FormAnalysis out;
    out.n = form.n();
    out.k = form.k();
    out.critical_points = critical_points(form);

    const int lead_sign = sgn64(form.h_n());
    const int minus_inf_sign = (form.n() % 2 == 0) ? lead_sign : -lead_sign;
    const std::int64_t reach =
        1 + std::max(std::llabs(form.h_k()), std::llabs(form.h_0()));  // every root has |X| < reach

    // Walk the monotone pieces between consecutive critical points. Entries
    // are (is_root, index) in ascending order of location.
    std::vector<std::pair<bool, std::size_t>> sequence;
    const std::size_t count = out.critical_points.size();
    for (std::size_t piece = 0; piece <= count; ++piece) {
        const bool has_left = piece > 0;
        const bool has_right = piece < count;
        const int left_sign = has_left ? out.critical_points[piece - 1].f_sign : minus_inf_sign;
        const int right_sign = has_right ? out.critical_points[piece].f_sign : lead_sign;
        if (left_sign != right_sign) {
            const mpq_class lo = has_left ? step_off(form, out.critical_points[piece - 1], 1)
                                          : mpq_class(-reach);
            const mpq_class hi = has_right ? step_off(form, out.critical_points[piece], -1)
                                           : mpq_class(reach);
            out.real_roots.push_back(bisect(form, lo, hi));
            sequence.emplace_back(true, out.real_roots.size() - 1);
        }
        if (has_right) sequence.emplace_back(false, piece);
    }

    out.R_F = static_cast<int>(out.real_roots.size());
    std::optional<std::size_t> last_exceptional;
    std::vector<std::size_t> pending_improper;
    for (std::size_t pos = 0; pos < sequence.size(); ++pos) {
        const auto [is_root, index] = sequence[pos];
        const bool exceptional = is_root || out.critical_points[index].proper;
        if (!exceptional) {
            pending_improper.push_back(index);
            continue;
        }
        ExceptionalPoint point;
        point.kind = is_root ? ExceptionalPoint::Kind::root : ExceptionalPoint::Kind::critical;
        point.location = is_root ? out.real_roots[index].approx : out.critical_points[index].location;
        point.source = index;
        if (!is_root) ++out.C_F;
        if (last_exceptional) {
            if (pending_improper.empty()) {
                out.separated = false;
                std::ostringstream why;
                why << "no improper critical point between exceptional points at "
                    << out.exceptional.back().location << " and " << point.location;
                out.problem = why.str();
            } else {
                // With several candidates the leftmost one cuts the pair.
                out.boundaries.push_back(pending_improper.front());
            }
        }
        pending_improper.clear();
        out.exceptional.push_back(point);
        last_exceptional = out.exceptional.size() - 1;
    }
    return out;
}

std::size_t belongs_to(const FormAnalysis& analysis, const TrinomialForm& form, const mpq_class& rho) {
    if (analysis.exceptional.empty()) {
        throw std::invalid_argument("belongs_to: the form has no exceptional points");
    }
    std::size_t index = 1;
    for (std::size_t boundary : analysis.boundaries) {
        if (compare_to_critical(rho, analysis.critical_points[boundary], form) >= 0) ++index;
    }
    // Without separation there can be fewer boundaries than gaps.
    return std::min(index, analysis.exceptional.size());
}

}  // namespace thue
