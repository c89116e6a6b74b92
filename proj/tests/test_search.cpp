#include <gtest/gtest.h>

#include <utility>

#include "thue/search.hpp"

using namespace thue;

namespace {

SearchConfig range(int lo, int hi, int workers = 1) {
    SearchConfig config;
    config.n_min = lo;
    config.n_max = hi;
    config.workers = workers;
    return config;
}

const ZTable& table() {
    static const ZTable computed = ZTable::compute();
    return computed;
}

}  // namespace

TEST(GridSearch, SmallDegrees) {
    const std::vector<OptimalParams> rows = grid_search(range(6, 9));
    ASSERT_EQ(rows.size(), 4u);
    const std::pair<int, int> expected[] = {{10, 4}, {7, 4}, {7, 3}, {6, 3}};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        EXPECT_EQ(rows[i].n, 6 + static_cast<int>(i));
        EXPECT_EQ(std::make_pair(rows[i].T, rows[i].Z), expected[i]) << rows[i].n;
        EXPECT_TRUE(admissible(rows[i])) << rows[i].n;
    }
}

TEST(GridSearch, ThirtyNineAndForty) {
    for (const OptimalParams& row : grid_search(range(39, 40))) {
        EXPECT_EQ(row.T, 2) << row.n;
        EXPECT_EQ(row.Z, 3) << row.n;
    }
}

TEST(GridSearch, EmptyRange) {
    EXPECT_TRUE(grid_search(range(10, 9)).empty());
}

TEST(GridSearch, WorkerCountDoesNotMatter) {
    const std::vector<OptimalParams> one = grid_search(range(6, 14, 1));
    const std::vector<OptimalParams> three = grid_search(range(6, 14, 3));
    ASSERT_EQ(one.size(), three.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        EXPECT_EQ(one[i].n, three[i].n);
        EXPECT_EQ(one[i].d0, three[i].d0);
        EXPECT_EQ(one[i].a, three[i].a);
        EXPECT_EQ(one[i].b, three[i].b);
        EXPECT_EQ(one[i].sum(), three[i].sum());
    }
}

TEST(GridSearch, CornerAt218) {
    const std::vector<OptimalParams> rows = grid_search(range(218, 218));
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0].T, 3);
    EXPECT_EQ(rows[0].Z, 2);
    EXPECT_NEAR(rows[0].a, 0.03, 1e-9);
    EXPECT_NEAR(rows[0].b, 0.87, 1e-9);
}

TEST(ZParams, PublishedCounts) {
    const std::pair<int, std::pair<int, int>> cases[] = {
        {12, {4, 3}}, {17, {3, 3}}, {18, {3, 3}}, {37, {3, 3}}, {38, {3, 3}},
        {218, {3, 2}}, {219, {2, 2}}, {506, {2, 2}}};
    for (const auto& [n, counts] : cases) {
        const OptimalParams params = z_params(n);
        EXPECT_EQ(std::make_pair(params.T, params.Z), counts) << n;
        EXPECT_TRUE(admissible(params)) << n;
    }
}

TEST(ZOfN, Breakpoints) {
    const std::pair<int, int> cases[] = {{6, 15},  {7, 12},  {8, 11},  {9, 9},   {10, 8},  {11, 8},
                                         {12, 7},  {16, 7},  {17, 6},  {38, 6},  {39, 5},  {218, 5},
                                         {219, 4}, {506, 4}, {507, 4}, {2000, 4}};
    for (const auto& [n, z] : cases) EXPECT_EQ(z_of_n(n), z) << n;
    EXPECT_THROW(z_of_n(5), std::invalid_argument);
}

TEST(ZFromCounts, ExtraForSmallDegrees) {
    EXPECT_EQ(z_from_counts(6, 10, 4), 15);
    EXPECT_EQ(z_from_counts(8, 7, 3), 11);
    EXPECT_EQ(z_from_counts(9, 6, 3), 9);
}

TEST(SolutionCount, Values) {
    EXPECT_EQ(solution_count_bound(6), 2 * 4 * 15 + 8);
    EXPECT_EQ(solution_count_bound(219), 32);
    EXPECT_EQ(solution_count_bound(220), 40);
    EXPECT_EQ(solution_count_bound(507), 32);
    EXPECT_EQ(solution_count_bound(1000), 40);
}

TEST(Asymptotic, ClosedForm) {
    for (int n : {507, 600, 1000, 5000}) {
        const OptimalParams params = asymptotic_params(n);
        EXPECT_EQ(params.T, 2) << n;
        EXPECT_EQ(params.Z, 2) << n;
        EXPECT_DOUBLE_EQ(params.a, 0.25);
        for (const SideCondition& side : asymptotic_side_conditions(n)) {
            EXPECT_TRUE(side.ok()) << n << " " << side.name;
        }
    }
    EXPECT_THROW(asymptotic_params(506), std::invalid_argument);
}

TEST(DescendAt, FindsSumFourAbove219) {
    const std::optional<OptimalParams> found = descend_at(300, kDescendPrec);
    ASSERT_TRUE(found.has_value());
    EXPECT_EQ(found->sum(), 4);
    EXPECT_TRUE(admissible(*found));
    EXPECT_FALSE(descend_at(100, kDescendPrec).has_value());
}

TEST(ZTableTest, BandsAndMonotonicity) {
    const ZTable& t = table();
    EXPECT_EQ(t.descend_floor(), 219);
    const std::pair<int, int> starts[] = {{6, 15}, {7, 12}, {8, 11}, {9, 9},  {10, 8},
                                          {12, 7}, {17, 6}, {39, 5}, {219, 4}};
    for (const auto& [n, z] : starts) EXPECT_EQ(t.z(n), z) << n;
    int previous = t.z(6);
    for (int n = 7; n <= 506; ++n) {
        ASSERT_LE(t.z(n), previous) << n;
        previous = t.z(n);
    }
    EXPECT_EQ(t.z(600), 4);
    for (const auto& [n, row] : t.rows()) ASSERT_TRUE(admissible(row)) << n;
}

TEST(ZTableTest, AgreesWithSingleDegreeQuery) {
    for (int n : {6, 9, 12, 17, 38, 39, 100, 218, 219, 400}) EXPECT_EQ(table().z(n), z_of_n(n)) << n;
}
