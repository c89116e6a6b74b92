#include "thue/irreducible.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "thue/roots.hpp"

namespace thue {

const char* to_string(Irreducibility verdict) {
    switch (verdict) {
        case Irreducibility::irreducible:
            return "irreducible";
        case Irreducibility::reducible:
            return "reducible";
        case Irreducibility::unknown:
            return "unknown";
    }
    return "unknown";
}

namespace {

// Dense polynomials over F_p, lowest degree first, no trailing zeros.
using Poly = std::vector<std::uint64_t>;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return pow_mod(a, p - 2, p); }

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly sub(Poly a, const Poly& b, std::uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

// Remainder and quotient of a by b (b nonzero).
Poly divmod(Poly a, const Poly& b, std::uint64_t p, Poly* quotient = nullptr) {
    trim(a);
    const int db = degree(b);
    const std::uint64_t lead_inv = inv_mod(b.back(), p);
    Poly q;
    if (quotient) q.assign(std::max(0, degree(a) - db + 1), 0);
    while (degree(a) >= db) {
        const int shift = degree(a) - db;
        const std::uint64_t factor = mul_mod(a.back(), lead_inv, p);
        if (quotient) q[static_cast<std::size_t>(shift)] = factor;
        for (int i = 0; i <= db; ++i) {
            std::uint64_t& slot = a[static_cast<std::size_t>(i + shift)];
            slot = (slot + p - mul_mod(factor, b[static_cast<std::size_t>(i)], p)) % p;
        }
        trim(a);
    }
    if (quotient) {
        trim(q);
        *quotient = std::move(q);
    }
    return a;
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = (out[i + j] + mul_mod(a[i], b[j], p)) % p;
        }
    }
    trim(out);
    return out;
}

Poly mul_mod_poly(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p) {
    return divmod(mul(a, b, p), f, p);
}

Poly pow_mod_poly(Poly base, std::uint64_t exp, const Poly& f, std::uint64_t p) {
    Poly result{1};
    base = divmod(base, f, p);
    while (exp > 0) {
        if (exp & 1) result = mul_mod_poly(result, base, f, p);
        base = mul_mod_poly(base, base, f, p);
        exp >>= 1;
    }
    return result;
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = divmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const std::uint64_t lead_inv = inv_mod(a.back(), p);
        for (auto& c : a) c = mul_mod(c, lead_inv, p);
    }
    return a;
}

Poly derivative(const Poly& f, std::uint64_t p) {
    Poly out;
    for (std::size_t i = 1; i < f.size(); ++i) out.push_back(mul_mod(f[i], i % p, p));
    trim(out);
    return out;
}

Poly reduce(const std::vector<std::int64_t>& coeffs, std::uint64_t p) {
    Poly f;
    for (std::int64_t c : coeffs) {
        const std::int64_t r = c % static_cast<std::int64_t>(p);
        f.push_back(static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r));
    }
    trim(f);
    return f;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

// Subset sums of a multiset of factor degrees.
std::vector<bool> subset_sums(const std::vector<int>& parts, int total) {
    std::vector<bool> reach(static_cast<std::size_t>(total) + 1, false);
    reach[0] = true;
    for (int part : parts) {
        for (int s = total; s >= part; --s) {
            if (reach[static_cast<std::size_t>(s - part)]) reach[static_cast<std::size_t>(s)] = true;
        }
    }
    return reach;
}

std::vector<std::int64_t> positive_divisors(std::int64_t value) {
    value = std::llabs(value);
    std::vector<std::int64_t> out;
    for (std::int64_t d = 1; d <= value; ++d) {
        if (value % d == 0) out.push_back(d);
    }
    return out;
}

// Exact test that g divides f in Z[x].
bool divides(const std::vector<std::int64_t>& g, const std::vector<std::int64_t>& f) {
    std::vector<mpz_class> rem(f.begin(), f.end());
    const mpz_class lead(static_cast<long>(g.back()));
    const std::size_t dg = g.size() - 1;
    for (std::size_t top = rem.size(); top-- > dg;) {
        if (rem[top] == 0) continue;
        if (rem[top] % lead != 0) return false;
        const mpz_class factor = rem[top] / lead;
        for (std::size_t i = 0; i <= dg; ++i) rem[top - dg + i] -= factor * static_cast<long>(g[i]);
    }
    return std::all_of(rem.begin(), rem.end(), [](const mpz_class& c) { return c == 0; });
}

using ZPoly = std::vector<mpz_class>;

void make_primitive(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    mpz_class g = 0;
    for (const mpz_class& c : f) g = gcd(g, c);
    if (g == 0) return;
    if (f.back() < 0) g = -g;
    for (mpz_class& c : f) c /= g;
}

// gcd(f, f') over Q by primitive pseudo-remainders; nonconstant exactly when
// f has a repeated factor, and then it is itself an integer factor of f.
ZPoly repeated_part(const std::vector<std::int64_t>& coeffs) {
    ZPoly a, b;
    for (std::int64_t c : coeffs) a.emplace_back(static_cast<long>(c));
    for (std::size_t i = 1; i < coeffs.size(); ++i) b.emplace_back(static_cast<long>(coeffs[i] * static_cast<std::int64_t>(i)));
    make_primitive(a);
    make_primitive(b);
    while (!b.empty()) {
        ZPoly r = a;
        while (r.size() >= b.size() && !r.empty()) {
            const std::size_t shift = r.size() - b.size();
            const mpz_class lr = r.back();
            const mpz_class lb = b.back();
            for (mpz_class& c : r) c *= lb;
            for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= lr * b[i];
            while (!r.empty() && r.back() == 0) r.pop_back();
        }
        make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// A rational root num/den gives the linear factor den X - num.
std::vector<std::int64_t> rational_root_factor(const TrinomialForm& form) {
    for (std::int64_t den : positive_divisors(form.h_n())) {
        for (std::int64_t num : positive_divisors(form.h_0())) {
            for (std::int64_t sign : {1, -1}) {
                if (std::gcd(num, den) != 1) continue;
                if (form.evaluate(sign * num, den) == 0) return {-sign * num, den};
            }
        }
    }
    return {};
}

// Looks for an integer factor of the given degree among products of the
// numerical roots; any candidate is confirmed by exact division.
std::vector<std::int64_t> numeric_factor(const std::vector<std::int64_t>& coeffs, int d,
                                         const std::vector<Complex>& roots) {
    const int n = static_cast<int>(roots.size());
    std::vector<int> pick(static_cast<std::size_t>(d));
    std::iota(pick.begin(), pick.end(), 0);
    const std::vector<std::int64_t> leads = positive_divisors(coeffs.back());
    for (;;) {
        std::vector<Complex> monic{Complex(1)};
        for (int idx : pick) {
            std::vector<Complex> next(monic.size() + 1, Complex(0));
            for (std::size_t i = 0; i < monic.size(); ++i) {
                next[i + 1] += monic[i];
                next[i] -= monic[i] * roots[static_cast<std::size_t>(idx)];
            }
            monic = std::move(next);
        }
        bool real = true;
        for (const Complex& c : monic) real = real && std::fabs(c.imag()) < 1e-6L * (1 + std::abs(c));
        if (real) {
            for (std::int64_t lead : leads) {
                std::vector<std::int64_t> g;
                bool integral = true;
                for (const Complex& c : monic) {
                    const long double scaled = c.real() * lead;
                    const long double rounded = std::round(scaled);
                    if (std::fabs(scaled - rounded) > 1e-6L * (1 + std::fabs(scaled))) {
                        integral = false;
                        break;
                    }
                    g.push_back(static_cast<std::int64_t>(rounded));
                }
                if (integral && divides(g, coeffs)) return g;
            }
        }
        int i = d - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - d + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < d; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return {};
}

// h_n times the product of (X - root) matches the coefficients closely, so
// no factor can have been missed by the subset search.
bool roots_reproduce(const std::vector<std::int64_t>& coeffs, const std::vector<Complex>& roots) {
    std::vector<Complex> prod{Complex(static_cast<long double>(coeffs.back()))};
    for (const Complex& r : roots) {
        std::vector<Complex> next(prod.size() + 1, Complex(0));
        for (std::size_t i = 0; i < prod.size(); ++i) {
            next[i + 1] += prod[i];
            next[i] -= prod[i] * r;
        }
        prod = std::move(next);
    }
    if (prod.size() != coeffs.size()) return false;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (std::abs(prod[i] - Complex(static_cast<long double>(coeffs[i]))) > 1e-9L) return false;
    }
    return true;
}

}  // namespace

std::vector<int> factor_degrees_mod(const std::vector<std::int64_t>& coeffs, std::uint64_t p) {
    Poly f = reduce(coeffs, p);
    if (degree(f) != static_cast<int>(coeffs.size()) - 1 || degree(f) < 1) return {};
    const Poly fp = derivative(f, p);
    if (fp.empty() || degree(gcd(f, fp, p)) > 0) return {};

    std::vector<int> degrees;
    const Poly x{0, 1};
    Poly h = x;
    for (int d = 1; 2 * d <= degree(f); ++d) {
        h = pow_mod_poly(h, p, f, p);
        const Poly g = gcd(f, sub(h, x, p), p);
        if (degree(g) > 0) {
            for (int i = 0; i < degree(g) / d; ++i) degrees.push_back(d);
            Poly quotient;
            divmod(f, g, p, &quotient);
            f = quotient;
            h = divmod(h, f, p);
        }
    }
    if (degree(f) > 0) degrees.push_back(degree(f));
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

IrreducibilityReport irreducibility_report(const TrinomialForm& form) {
    IrreducibilityReport report;
    const int n = form.n();
    const std::vector<std::int64_t> coeffs = form.dense();

    if (std::vector<std::int64_t> linear = rational_root_factor(form); !linear.empty()) {
        report.verdict = Irreducibility::reducible;
        report.factor = std::move(linear);
        return report;
    }

    if (const ZPoly g = repeated_part(coeffs); g.size() > 1) {
        report.verdict = Irreducibility::reducible;
        for (const mpz_class& c : g) report.factor.push_back(c.get_si());
        return report;
    }

    std::vector<bool> possible(static_cast<std::size_t>(n) + 1, true);
    for (std::uint64_t p = 2; static_cast<int>(report.primes_used.size()) < kIrreducibilityPrimes; ++p) {
        if (!is_prime(p) || form.h_n() % static_cast<std::int64_t>(p) == 0) continue;
        const std::vector<int> pattern = factor_degrees_mod(coeffs, p);
        if (pattern.empty()) continue;
        report.primes_used.push_back(p);
        const std::vector<bool> sums = subset_sums(pattern, n);
        for (int d = 0; d <= n; ++d) possible[static_cast<std::size_t>(d)] = possible[static_cast<std::size_t>(d)] && sums[static_cast<std::size_t>(d)];
    }
    for (int d = 1; d < n; ++d) {
        if (possible[static_cast<std::size_t>(d)]) report.possible_factor_degrees.insert(d);
    }
    if (report.possible_factor_degrees.empty()) {
        report.verdict = Irreducibility::irreducible;
        return report;
    }

    // Every factor of degree d <= n/2 is, up to a divisor of h_n, the product
    // of some d roots, so trying all subsets settles the question.
    const std::vector<Complex> roots = complex_roots(coeffs);
    for (int d : report.possible_factor_degrees) {
        if (2 * d > n) break;
        if (std::vector<std::int64_t> g = numeric_factor(coeffs, d, roots); !g.empty()) {
            report.verdict = Irreducibility::reducible;
            report.factor = std::move(g);
            return report;
        }
    }
    report.verdict = roots_reproduce(coeffs, roots) ? Irreducibility::irreducible : Irreducibility::unknown;
    return report;
}

Irreducibility is_irreducible(const TrinomialForm& form) { return irreducibility_report(form).verdict; }

}  // namespace thue
