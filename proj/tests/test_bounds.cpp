#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "thue/bounds.hpp"
#include "thue/degree.hpp"
#include "thue/search.hpp"

using namespace thue;

namespace {

// Reference values from tests/oracles/bound_oracle.py (mpmath, 60 digits).
const HighReal kOracleM6("1.5491933384829667541");
const HighReal kOracleK2At6("2.066339529775500836");
const HighReal kOracleQ1At6("5.8094750193111253278");
const HighReal kOracleChi6("141.71239337700012743");
const HighReal kOraclePi6("521.84477164676885243");
const HighReal kOracleE6("9.6711798839458431123");
const HighReal kOracleL6("4.892171967359955094");
const double kOracleLimit6 = 0.42109298386240529759;
const double kOracleLogY3 = 677.53174846731043241;

constexpr SmallParams kRow6Small{0.0, 2.0};
constexpr LargeParams kRow6Large{0.18, 0.29};

bool close_high(const HighReal& a, const HighReal& b, double rel) {
    return abs(a - b) <= HighReal(rel) * abs(b);
}

}  // namespace

TEST(DegreeProfile, MatchesDefinitions) {
    const DegreeProfile six = degree_profile(6);
    EXPECT_DOUBLE_EQ(six.n_star, 2.0);
    EXPECT_EQ(six.p0, 3);
    EXPECT_EQ(six.v, 4);
    EXPECT_EQ(six.ell, 4);

    const DegreeProfile nine = degree_profile(9);
    EXPECT_DOUBLE_EQ(nine.n_star, 3.5);
    EXPECT_EQ(nine.p0, 2);
    EXPECT_EQ(nine.v, 3);
    EXPECT_EQ(nine.ell, 2);

    EXPECT_DOUBLE_EQ(degree_profile(507).n_star, 252.5);
    EXPECT_EQ(degree_profile(7).ell, 4);
    EXPECT_EQ(degree_profile(8).ell, 3);
    EXPECT_EQ(degree_profile(8).p0, 3);
}

TEST(DegreeProfile, RejectsDegreesBelowSix) {
    EXPECT_THROW(degree_profile(5), std::invalid_argument);
    EXPECT_THROW(degree_profile(0), std::invalid_argument);
}

TEST(KConst, ZeroExponentGivesMn) {
    EXPECT_NEAR(k_const<double>(0, 6), 2 * std::sqrt(12.0 / 20.0), 1e-15);
    EXPECT_TRUE(close_high(k_const<HighReal>(0, 6), kOracleM6, 1e-18));
}

TEST(KConst, DegreeSixAtTwo) {
    EXPECT_NEAR(k_const<double>(2, 6), static_cast<double>(kOracleK2At6), 1e-13);
    EXPECT_TRUE(close_high(k_const<HighReal>(2, 6), kOracleK2At6, 1e-18));
}

TEST(KConst, LargeDegreeBound) {
    const double n_star = degree_profile(507).n_star;
    EXPECT_LE(k_const<double>(n_star / 2, 507), 5 * std::exp(0.25));
    EXPECT_LE(k_const<HighReal>(n_star / 2, 507), 5 * exp(HighReal(0.25)));
}

TEST(KConst, StrictlyIncreasingInD) {
    for (int n = 6; n <= 80; ++n) {
        const double n_star = degree_profile(n).n_star;
        double previous = k_const<double>(0, n);
        for (double d = 0.05; d <= n_star; d += 0.05) {
            const double current = k_const<double>(d, n);
            ASSERT_GT(current, previous) << "n=" << n << " d=" << d;
            previous = current;
        }
    }
}

TEST(QOne, DegreeSixAtZero) {
    EXPECT_NEAR(q_one<double>(0, 6), static_cast<double>(kOracleQ1At6), 1e-13);
    EXPECT_TRUE(close_high(q_one<HighReal>(0, 6), kOracleQ1At6, 1e-18));
    EXPECT_NEAR(q_one<double>(0, 6), 9 / (2 * std::sqrt(0.6)), 1e-13);
}

TEST(QOne, FullExponentCollapses) {
    for (int n : {6, 9, 40}) {
        const double n_star = degree_profile(n).n_star;
        EXPECT_NEAR(q_one<double>(n_star, n), 1 / k_const<double>(n_star, n), 1e-12);
    }
}

TEST(QOne, LargeDegreeBound) {
    const double n_star = degree_profile(507).n_star;
    const HighReal lower = pow(HighReal(2), HighReal(n_star / 2)) / (5 * exp(HighReal(0.25)));
    EXPECT_GE(q_one<HighReal>(n_star / 2, 507), lower);
}

TEST(QOne, RejectsOutOfRange) {
    EXPECT_THROW(q_one<double>(-0.1, 6), std::invalid_argument);
    EXPECT_THROW(q_one<double>(2.1, 6), std::invalid_argument);
}

TEST(ValidSmall, Examples) {
    EXPECT_TRUE(valid_small<double>(kRow6Small, 6));
    EXPECT_TRUE(valid_small<HighReal>(kRow6Small, 6));
    const double n_star = degree_profile(6).n_star;
    EXPECT_FALSE(valid_small<double>({n_star - 1.4 + 1e-9, 2.0}, 6));
    EXPECT_FALSE(valid_small<double>({0.0, 1.0}, 6));
    EXPECT_FALSE(valid_small<double>({0.0, n_star + 0.1}, 6));
    const double big_star = degree_profile(507).n_star;
    EXPECT_TRUE(valid_small<double>({big_star / 2, big_star}, 507));
    EXPECT_TRUE(valid_small<HighReal>({big_star / 2, big_star}, 507));
}

TEST(ValidLarge, Examples) {
    EXPECT_TRUE(valid_large<double>(kRow6Large, 6));
    EXPECT_FALSE(valid_large<double>({0.29, 0.18}, 6));
    EXPECT_FALSE(valid_large<double>({0.0, 0.2}, 6));
    EXPECT_TRUE(valid_large<double>({0.18, kOracleLimit6 - 1e-9}, 6));
    EXPECT_FALSE(valid_large<double>({0.18, kOracleLimit6 + 1e-9}, 6));
    EXPECT_TRUE(valid_large<double>(closed_form_large(507), 507));
    EXPECT_GT(closed_form_large(507).b, 0.25);
}

TEST(ValidLarge, AUpperIsFixedPoint) {
    for (int n : {6, 10, 100, 506}) {
        const double a = a_upper<double>(n);
        EXPECT_NEAR(a, 1 - std::sqrt(2 * (n + a * a) / (1.0 * n * n)), 1e-12) << n;
    }
}

TEST(LargeDerived, DegreeSixRow) {
    const LargeDerived<double> low = large_derived<double>(kRow6Large, 6);
    EXPECT_NEAR(low.chi, static_cast<double>(kOracleChi6), 1e-10);
    EXPECT_NEAR(low.pi, static_cast<double>(kOraclePi6), 1e-9);
    EXPECT_NEAR(low.E, static_cast<double>(kOracleE6), 1e-12);
    EXPECT_NEAR(low.L, static_cast<double>(kOracleL6), 1e-12);
    const LargeDerived<HighReal> high = large_derived<HighReal>(kRow6Large, 6);
    EXPECT_TRUE(close_high(high.chi, kOracleChi6, 1e-18));
    EXPECT_TRUE(close_high(high.pi, kOraclePi6, 1e-18));
    EXPECT_TRUE(close_high(high.E, kOracleE6, 1e-18));
}

TEST(LargeDerived, RejectsLAtLeastN) {
    EXPECT_THROW(large_derived<double>({0.1, 0.999}, 6), std::domain_error);
}

TEST(LargeDerived, ClosedFormE) {
    EXPECT_LT(large_derived<double>(closed_form_large(507), 507).E, 0.711);
}

TEST(YThreshold, Examples) {
    const double pi = static_cast<double>(kOraclePi6);
    const double chi = static_cast<double>(kOracleChi6);
    EXPECT_NEAR(std::log(y_threshold(1, 50.0, 30.0)), 30.0, 1e-12);
    EXPECT_NEAR(y_threshold(2, 2.0, 0.0), 4.0, 1e-12);
    EXPECT_NEAR(log_y_threshold(3, chi, pi), kOracleLogY3, 1e-9);
    EXPECT_NEAR(std::log(y_threshold(3, chi, pi)), kOracleLogY3, 1e-9);
    EXPECT_GT(log_y_threshold(3, chi, 2 * pi), 710.0);
    EXPECT_THROW(y_threshold(3, chi, 2 * pi), std::overflow_error);
    EXPECT_LT(y_threshold(2, 2.0, 1.0), y_threshold(3, 2.0, 1.0));
    EXPECT_LT(y_threshold(2, 2.0, 1.0), y_threshold(2, 2.5, 1.0));
    EXPECT_LT(y_threshold(2, 2.0, 1.0), y_threshold(2, 2.0, 1.5));
}

TEST(Counts, PublishedRows) {
    EXPECT_EQ(small_count<double>(kRow6Small, kRow6Large, 6), 10);
    EXPECT_EQ(large_count<double>(kRow6Large, 6), 4);
    EXPECT_EQ(small_count<HighReal>(kRow6Small, kRow6Large, 6), 10);
    EXPECT_EQ(large_count<HighReal>(kRow6Large, 6), 4);

    EXPECT_EQ(small_count<double>({68.2227, 108.5}, {0.399258, 0.883258}, 219), 2);
    EXPECT_EQ(large_count<double>({0.399258, 0.883258}, 219), 2);
    EXPECT_EQ(large_count<double>({0.27, 0.39}, 18), 3);

    const OptimalParams closed = asymptotic_params(507);
    EXPECT_EQ(small_count<double>(closed.small(), closed.large(), 507), 2);
    EXPECT_EQ(large_count<double>(closed.large(), 507), 2);
}

TEST(Counts, RejectInvalidInput) {
    EXPECT_THROW(small_count<double>({0.0, 1.0}, kRow6Large, 6), std::invalid_argument);
    EXPECT_THROW(small_count<double>(kRow6Small, {0.29, 0.18}, 6), std::invalid_argument);
    EXPECT_THROW(large_count<double>({0.29, 0.18}, 6), std::invalid_argument);
    const DegreeConstants<double> c(6);
    LargeDerived<double> weak = large_derived<double>(kRow6Large, c);
    weak.chi = 1.5;
    EXPECT_THROW(large_count_raw(weak, c), std::domain_error);
    // d0 = n* makes log Q1 negative, so the second T quantity is undefined.
    EXPECT_THROW(small_count_raw({2.0, 2.0}, large_derived<double>(kRow6Large, c), c), std::domain_error);
}

TEST(Breakdown, DegreeSixRow) {
    const BoundBreakdown b = evaluate_bounds<double>(6, kRow6Small, kRow6Large);
    EXPECT_TRUE(b.valid());
    EXPECT_EQ(*b.T, 10);
    EXPECT_EQ(*b.Z, 4);
    EXPECT_NEAR(b.K_d, static_cast<double>(kOracleK2At6), 1e-13);
    EXPECT_NEAR(b.Q1, static_cast<double>(kOracleQ1At6), 1e-13);
    const PrecisionCheck check = cross_check(6, kRow6Small, kRow6Large);
    EXPECT_TRUE(check.agree);
    EXPECT_TRUE(check.accepted());
}

TEST(Breakdown, InvalidTupleHasNoCounts) {
    const BoundBreakdown b = evaluate_bounds<double>(6, kRow6Small, {0.29, 0.18});
    EXPECT_FALSE(b.large_valid);
    EXPECT_FALSE(b.valid());
    EXPECT_FALSE(b.T.has_value());
    EXPECT_FALSE(b.Z.has_value());
}

TEST(ViolatedConditions, NamesEachInequality) {
    EXPECT_TRUE(violated_conditions<double>(6, kRow6Small, kRow6Large).empty());
    EXPECT_EQ(violated_conditions<double>(6, kRow6Small, {0.29, 0.18}),
              std::vector<std::string>{"a < b"});
    EXPECT_EQ(violated_conditions<double>(6, {1.0, 2.0}, kRow6Large),
              std::vector<std::string>{"0 <= d0 <= n* - 1.4"});
    EXPECT_EQ(violated_conditions<double>(6, kRow6Small, {0.18, 0.5}),
              std::vector<std::string>{"b < 1 - sqrt(2(n + a^2)/n^2)"});
    EXPECT_EQ(violated_conditions<HighReal>(5, kRow6Small, kRow6Large), std::vector<std::string>{"n >= 6"});
}

TEST(Properties, CountsAtLeastTwoOnRandomValidTuples) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> degree(6, 506);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int checked = 0;
    for (int i = 0; i < 4000; ++i) {
        const int n = degree(rng);
        const double n_star = degree_profile(n).n_star;
        const SmallParams small{unit(rng) * (n_star - 1.4), n_star};
        const double top = a_upper<double>(n);
        const double a = unit(rng) * top;
        const double b = a + unit(rng) * (top - a);
        const BoundBreakdown bounds = evaluate_bounds<double>(n, small, {a, b});
        if (!bounds.valid()) continue;
        ++checked;
        ASSERT_GE(*bounds.T, 2);
        ASSERT_GE(*bounds.Z, 2);
    }
    EXPECT_GT(checked, 100);
}

TEST(Properties, ClosedFormPiGrowth) {
    for (int n = 270; n <= 3000; n += 7) {
        const LargeDerived<double> d = large_derived<double>(closed_form_large(n), n);
        ASSERT_LT(d.pi, std::log(1.9) / 8 * (n - 2.0) * (n - 4.0)) << n;
    }
}

TEST(Properties, ClosedFormSideConditions) {
    for (int n : {507, 508, 600, 777, 1000, 2001, 5000}) {
        for (const SideCondition& c : asymptotic_side_conditions(n)) {
            EXPECT_TRUE(c.ok()) << "n=" << n << ": " << c.name;
        }
    }
}
