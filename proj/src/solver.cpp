#include "thue/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>
#include <utility>

#include "thue/degree.hpp"
#include "thue/roots.hpp"

namespace thue {

namespace {

constexpr std::uint64_t kModulus = (1ULL << 61) - 1;  // Mersenne prime

std::uint64_t reduce_mod(std::int64_t x) {
    const std::int64_t m = static_cast<std::int64_t>(kModulus);
    const std::int64_t r = x % m;
    return static_cast<std::uint64_t>(r < 0 ? r + m : r);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kModulus);
}

std::uint64_t pow_mod(std::uint64_t base, int exp) {
    std::uint64_t out = 1;
    for (; exp > 0; exp >>= 1) {
        if (exp & 1) out = mul_mod(out, base);
        base = mul_mod(base, base);
    }
    return out;
}

// F(p, q) modulo 2^61 - 1; a necessary condition for |F(p, q)| = 1 is a
// residue of 1 or -1.
class ModularForm {
public:
    explicit ModularForm(const TrinomialForm& form)
        : h_n_(reduce_mod(form.h_n())), h_k_(reduce_mod(form.h_k())), h_0_(reduce_mod(form.h_0())),
          n_(form.n()), k_(form.k()) {}

    bool may_be_unit(std::int64_t p, std::int64_t q) const {
        const std::uint64_t pm = reduce_mod(p);
        const std::uint64_t qm = reduce_mod(q);
        const std::uint64_t value = (mul_mod(h_n_, pow_mod(pm, n_)) +
                                     mul_mod(h_k_, mul_mod(pow_mod(pm, k_), pow_mod(qm, n_ - k_))) +
                                     mul_mod(h_0_, pow_mod(qm, n_))) %
                                    kModulus;
        return value == 1 || value == kModulus - 1;
    }

private:
    std::uint64_t h_n_, h_k_, h_0_;
    int n_, k_;
};

SolutionRecord make_record(std::int64_t p, std::int64_t q, int value, int n) {
    SolutionRecord r;
    r.p = p;
    r.q = q;
    r.value = value;
    r.regular = is_regular(p, q);
    r.special = is_special(p, q, n);
    return r;
}

// Exact value of F(p, q) if it is +-1.
std::optional<int> unit_value(const TrinomialForm& form, std::int64_t p, std::int64_t q) {
    const mpz_class value = form.evaluate(p, q);
    if (value == 1) return 1;
    if (value == -1) return -1;
    return std::nullopt;
}

}  // namespace

bool is_regular(std::int64_t p, std::int64_t q) { return p != 0 && q > 0 && std::llabs(p) != q; }

bool is_special(std::int64_t p, std::int64_t q, int n) {
    return p > q && q >= 1 && p >= degree_profile(n).p0;
}

std::vector<SolutionRecord> solve_box(const TrinomialForm& form, std::int64_t box) {
    if (box < 1) throw std::invalid_argument("solve_box: box radius must be >= 1");
    const ModularForm modular(form);
    const std::vector<Complex> roots = complex_roots(form.dense());
    // Absorbs the root error, which is far below 1e-9 relative for these
    // degrees and heights.
    const long double slack = 1e-6L;

    std::set<std::pair<std::int64_t, std::int64_t>> found;
    auto consider = [&](std::int64_t p, std::int64_t q) {
        if (std::llabs(p) > box) return;
        if (!modular.may_be_unit(p, q)) return;
        if (unit_value(form, p, q)) found.emplace(p, q);
    };

    // q = 0: h_n p^n = +-1.
    if (std::llabs(form.h_n()) == 1) {
        consider(1, 0);
        consider(-1, 0);
    }
    for (std::int64_t q = 1; q <= box; ++q) {
        const long double ql = static_cast<long double>(q);
        for (const Complex& alpha : roots) {
            if (std::fabs(alpha.imag()) * ql > 1 + slack) continue;
            const long double centre = alpha.real() * ql;
            const long double reach = 1 + slack * (1 + ql);
            const auto lo = static_cast<std::int64_t>(std::ceil(centre - reach));
            const auto hi = static_cast<std::int64_t>(std::floor(centre + reach));
            for (std::int64_t p = std::max(lo, -box); p <= std::min(hi, box); ++p) consider(p, q);
        }
    }

    std::vector<SolutionRecord> out;
    for (const auto& [p, q] : found) {
        const int value = *unit_value(form, p, q);
        out.push_back(make_record(p, q, value, form.n()));
        if (q != 0) {
            // |F(-p, -q)| = |F(p, q)|; the sign flips for odd n.
            const int mirrored = form.n() % 2 == 0 ? value : -value;
            out.push_back(make_record(-p, -q, mirrored, form.n()));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SolutionRecord> solve_box_exhaustive(const TrinomialForm& form, std::int64_t box) {
    if (box < 1) throw std::invalid_argument("solve_box_exhaustive: box radius must be >= 1");
    std::vector<SolutionRecord> out;
    for (std::int64_t p = -box; p <= box; ++p) {
        for (std::int64_t q = -box; q <= box; ++q) {
            if (p == 0 && q == 0) continue;
            if (const std::optional<int> value = unit_value(form, p, q)) {
                out.push_back(make_record(p, q, *value, form.n()));
            }
        }
    }
    return out;
}

void attach_exceptional_points(std::vector<SolutionRecord>& solutions, const FormAnalysis& analysis,
                               const TrinomialForm& form) {
    for (SolutionRecord& s : solutions) {
        if (!s.regular || analysis.exceptional.empty()) continue;
        s.belongs_to = belongs_to(analysis, form, mpq_class(mpz_class(static_cast<long>(s.p)),
                                                            mpz_class(static_cast<long>(s.q))));
    }
}

}  // namespace thue
