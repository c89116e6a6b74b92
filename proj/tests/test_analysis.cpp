#include <gtest/gtest.h>

#include <cmath>

#include "thue/analysis.hpp"
#include "thue/degree.hpp"
#include "thue/irreducible.hpp"

using namespace thue;

TEST(Analysis, NoRealRoots) {
    // x^6 - 2x^3 + 3 is positive; critical points 0 (a flat point) and 1.
    const TrinomialForm form(1, -2, 3, 6, 3);
    const FormAnalysis a = analyze_form(form);
    EXPECT_EQ(a.R_F, 0);
    EXPECT_EQ(a.C_F, 1);
    ASSERT_EQ(a.critical_points.size(), 2u);
    EXPECT_TRUE(a.critical_points[0].at_zero);
    EXPECT_FALSE(a.critical_points[0].proper);
    EXPECT_NEAR(a.critical_points[1].location, 1.0, 1e-12);
    EXPECT_TRUE(a.critical_points[1].proper);
    EXPECT_EQ(a.critical_points[1].f_sign, 1);
    ASSERT_EQ(a.exceptional.size(), 1u);
    EXPECT_EQ(a.exceptional[0].kind, ExceptionalPoint::Kind::critical);
    EXPECT_TRUE(a.separated);
    EXPECT_EQ(belongs_to(a, form, mpq_class(10)), 1u);
    EXPECT_EQ(belongs_to(a, form, mpq_class(-10)), 1u);
}

TEST(Analysis, FourRealRoots) {
    // x^6 - 4x^2 + 1: roots near +-0.504 and +-1.364, all critical points improper.
    const TrinomialForm form(1, -4, 1, 6, 2);
    const FormAnalysis a = analyze_form(form);
    EXPECT_EQ(a.R_F, 4);
    EXPECT_EQ(a.C_F, 0);
    ASSERT_EQ(a.real_roots.size(), 4u);
    for (const RootEnclosure& root : a.real_roots) {
        EXPECT_LT(root.lo, root.hi);
        EXPECT_NE(form.sign_at(root.lo), form.sign_at(root.hi));
        EXPECT_NEAR(std::pow(root.approx, 6) - 4 * root.approx * root.approx + 1, 0.0, 1e-9);
    }
    EXPECT_NEAR(a.real_roots[2].approx, 0.50408, 1e-4);
    ASSERT_EQ(a.critical_points.size(), 3u);
    for (const CriticalPoint& point : a.critical_points) EXPECT_FALSE(point.proper);
    EXPECT_EQ(a.boundaries.size(), 3u);
    EXPECT_TRUE(a.separated);
    // Intervals are closed on the left, so 0 starts the third interval.
    EXPECT_EQ(belongs_to(a, form, mpq_class(0)), 3u);
    EXPECT_EQ(belongs_to(a, form, mpq_class(-1, 100)), 2u);
    EXPECT_EQ(belongs_to(a, form, mpq_class(-100)), 1u);
    EXPECT_EQ(belongs_to(a, form, mpq_class(100)), 4u);
}

TEST(Analysis, CyclotomicForm) {
    const TrinomialForm form(1, 1, 1, 6, 3);
    const FormAnalysis a = analyze_form(form);
    EXPECT_EQ(a.R_F, 0);
    EXPECT_EQ(a.C_F, 1);
    EXPECT_NEAR(a.critical_points.front().location, -std::cbrt(0.5), 1e-12);
}

TEST(Analysis, NoZeroCriticalPointForKOne) {
    const FormAnalysis a = analyze_form(TrinomialForm(1, -1, -1, 6, 1));
    for (const CriticalPoint& point : a.critical_points) EXPECT_FALSE(point.at_zero);
    EXPECT_EQ(a.R_F, 2);
}

TEST(Analysis, CountsStayWithinV) {
    for (int n : {6, 7, 8, 9}) {
        for (int k = 1; k < n; ++k) {
            for (std::int64_t h_k : {-3, -1, 2}) {
                for (std::int64_t h_0 : {-2, 1, 3}) {
                    const TrinomialForm form(1, h_k, h_0, n, k);
                    if (is_irreducible(form) != Irreducibility::irreducible) continue;
                    const FormAnalysis a = analyze_form(form);
                    EXPECT_LE(a.R_F + a.C_F, degree_profile(n).v) << form.to_string();
                    EXPECT_EQ(a.exceptional.size(), static_cast<std::size_t>(a.R_F + a.C_F));
                    for (std::size_t i = 1; i < a.exceptional.size(); ++i) {
                        EXPECT_LT(a.exceptional[i - 1].location, a.exceptional[i].location);
                    }
                }
            }
        }
    }
}

TEST(Analysis, CompareToCritical) {
    const TrinomialForm form(1, -2, 3, 6, 3);
    const FormAnalysis a = analyze_form(form);
    const CriticalPoint& one = a.critical_points[1];
    EXPECT_EQ(compare_to_critical(mpq_class(1), one, form), 0);
    EXPECT_EQ(compare_to_critical(mpq_class(99, 100), one, form), -1);
    EXPECT_EQ(compare_to_critical(mpq_class(101, 100), one, form), 1);
    EXPECT_EQ(compare_to_critical(mpq_class(-5), a.critical_points[0], form), -1);
}
