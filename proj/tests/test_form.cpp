#include <gtest/gtest.h>

#include <stdexcept>

#include "thue/form.hpp"
#include "thue/irreducible.hpp"
#include "thue/lab.hpp"
#include "thue/roots.hpp"

using namespace thue;

TEST(Form, Invariants) {
    const TrinomialForm form(2, -3, 5, 7, 3);
    EXPECT_EQ(form.height(), 5);
    EXPECT_EQ(form.evaluate(1, 1), 4);
    EXPECT_EQ(form.evaluate(2, -1), 2 * 128 - 3 * 8 * 1 - 5);
    EXPECT_EQ(form.dense(), (std::vector<std::int64_t>{5, 0, 0, -3, 0, 0, 0, 2}));
    EXPECT_EQ(form.reciprocal(), TrinomialForm(5, -3, 2, 7, 4));
    EXPECT_EQ(form.reciprocal().reciprocal(), form);
    EXPECT_EQ(form.to_string(), "2*x^7 - 3*x^3*y^4 + 5*y^7");
}

TEST(Form, RejectsInvalidInput) {
    EXPECT_THROW(TrinomialForm(2, 2, 2, 6, 1), std::invalid_argument);
    EXPECT_THROW(TrinomialForm(1, 0, 1, 6, 1), std::invalid_argument);
    EXPECT_THROW(TrinomialForm(1, 1, 1, 6, 0), std::invalid_argument);
    EXPECT_THROW(TrinomialForm(1, 1, 1, 6, 6), std::invalid_argument);
    EXPECT_THROW(TrinomialForm(1, 1, 1, 5, 2), std::invalid_argument);
}

TEST(Form, SignAtRational) {
    const TrinomialForm form(1, -4, 1, 6, 2);
    EXPECT_EQ(form.sign_at(mpq_class(0)), 1);
    EXPECT_EQ(form.sign_at(mpq_class(1)), -1);
    EXPECT_EQ(form.sign_at(mpq_class(-3, 2)), 1);
}

TEST(Roots, ReproduceCoefficients) {
    const std::vector<std::int64_t> coeffs{3, 0, 0, -2, 0, 0, 1};
    const std::vector<Complex> roots = complex_roots(coeffs);
    ASSERT_EQ(roots.size(), 6u);
    for (const Complex& r : roots) {
        Complex value = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) value = value * r + Complex(*it);
        EXPECT_LT(std::abs(value), 1e-12L);
        EXPECT_LE(std::abs(r), cauchy_bound(coeffs));
    }
}

TEST(FactorDegreesMod, Cyclotomic) {
    // x^6 + x^3 + 1 is the ninth cyclotomic polynomial; 2 has order 6 mod 9
    // and 7 has order 3.
    const std::vector<std::int64_t> coeffs{1, 0, 0, 1, 0, 0, 1};
    EXPECT_EQ(factor_degrees_mod(coeffs, 2), std::vector<int>{6});
    EXPECT_EQ(factor_degrees_mod(coeffs, 7), (std::vector<int>{3, 3}));
    EXPECT_EQ(factor_degrees_mod(coeffs, 19), (std::vector<int>{1, 1, 1, 1, 1, 1}));
    // mod 3 it is (x - 1)^6, not squarefree.
    EXPECT_TRUE(factor_degrees_mod(coeffs, 3).empty());
    EXPECT_TRUE(factor_degrees_mod({1, 0, 0, 1, 0, 0, 5}, 5).empty());
}

TEST(Irreducibility, KnownForms) {
    EXPECT_EQ(is_irreducible(TrinomialForm(1, 1, 1, 6, 3)), Irreducibility::irreducible);
    EXPECT_EQ(is_irreducible(TrinomialForm(1, -2, 3, 6, 3)), Irreducibility::irreducible);
    EXPECT_EQ(is_irreducible(TrinomialForm(1, -1, -1, 6, 1)), Irreducibility::irreducible);
    EXPECT_EQ(is_irreducible(TrinomialForm(1, 1, -1, 6, 2)), Irreducibility::irreducible);
    EXPECT_EQ(is_irreducible(TrinomialForm(2, -3, 3, 6, 4)), Irreducibility::irreducible);
}

TEST(Irreducibility, ReducibleForms) {
    // x^6 + x^3 - 2 has the root 1.
    EXPECT_EQ(is_irreducible(TrinomialForm(1, 1, -2, 6, 3)), Irreducibility::reducible);
    // (x^2 + 1)^2 (x^2 - 2)
    const IrreducibilityReport repeated = irreducibility_report(TrinomialForm(1, -3, -2, 6, 2));
    EXPECT_EQ(repeated.verdict, Irreducibility::reducible);
    EXPECT_FALSE(repeated.factor.empty());
    // (x + 1)^2 (x^2 - x + 1)^2 and (x^4 + 2)^2
    EXPECT_EQ(is_irreducible(TrinomialForm(1, 2, 1, 6, 3)), Irreducibility::reducible);
    EXPECT_EQ(is_irreducible(TrinomialForm(1, 4, 4, 8, 4)), Irreducibility::reducible);
}

// Squarefree, no rational root, so only a factor search can settle these.
TEST(Irreducibility, ExplicitFactorDivides) {
    for (const TrinomialForm& form : {TrinomialForm(1, -4, -4, 6, 2), TrinomialForm(1, -1, 1, 8, 1),
                                      TrinomialForm(1, -2, 3, 6, 4)}) {
        const IrreducibilityReport report = irreducibility_report(form);
        ASSERT_EQ(report.verdict, Irreducibility::reducible) << form.to_string();
        ASSERT_GE(report.factor.size(), 3u);
        ASSERT_LT(report.factor.size(), form.dense().size());
        const std::vector<std::int64_t> coeffs = form.dense();
        for (const Complex& r : complex_roots(report.factor)) {
            Complex value = 0;
            for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) value = value * r + Complex(*it);
            EXPECT_LT(std::abs(value), 1e-6L) << form.to_string();
        }
    }
}

struct CountCell {
    int degree;
    std::int64_t height;
    std::size_t candidates;
    std::size_t irreducible;
};

class EnumerationCounts : public ::testing::TestWithParam<CountCell> {};

// Counts from tests/oracles/irreducible_oracle.py.
TEST_P(EnumerationCounts, MatchIndependentFactorization) {
    const CountCell cell = GetParam();
    EnumerationStats stats;
    const std::vector<TrinomialForm> forms = enumerate_forms(cell.degree, cell.height, &stats);
    EXPECT_EQ(stats.candidates, cell.candidates);
    EXPECT_EQ(stats.irreducible, cell.irreducible);
    EXPECT_EQ(stats.unknown, 0u);
    EXPECT_EQ(stats.irreducible + stats.reducible + stats.unknown, stats.candidates);
    EXPECT_EQ(forms.size(), cell.irreducible);
}

INSTANTIATE_TEST_SUITE_P(
    Corpus, EnumerationCounts,
    ::testing::Values(CountCell{6, 1, 20, 20}, CountCell{6, 2, 80, 60}, CountCell{6, 3, 220, 188},
                      CountCell{6, 4, 340, 295}, CountCell{7, 1, 24, 20}, CountCell{7, 2, 96, 68},
                      CountCell{7, 3, 264, 228}, CountCell{7, 4, 408, 372}, CountCell{8, 1, 28, 23},
                      CountCell{8, 2, 112, 84}, CountCell{8, 3, 308, 257}, CountCell{8, 4, 476, 426},
                      CountCell{9, 1, 32, 32}, CountCell{9, 2, 128, 96}, CountCell{9, 3, 352, 304},
                      CountCell{9, 4, 544, 490}, CountCell{10, 1, 36, 30}, CountCell{12, 1, 44, 43},
                      CountCell{15, 1, 56, 52}));
