// Bounded search for integer solutions of |F(x, y)| = 1.
//
// The search is complete inside the box |p|, |q| <= B but says nothing about
// solutions outside it.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "thue/analysis.hpp"
#include "thue/form.hpp"

namespace thue {

struct SolutionRecord {
    std::int64_t p = 0;
    std::int64_t q = 0;
    int value = 0;  // F(p, q), either -1 or +1
    bool regular = false;
    bool special = false;
    std::optional<std::size_t> belongs_to;  // 1-based exceptional-point index

    friend bool operator<(const SolutionRecord& a, const SolutionRecord& b) {
        return a.p != b.p ? a.p < b.p : a.q < b.q;
    }
};

inline constexpr std::int64_t kDefaultBox = 10000;

/// p != 0, q > 0 and |p| != q.
bool is_regular(std::int64_t p, std::int64_t q);

/// p > q >= 1 and p >= p0(n).
bool is_special(std::int64_t p, std::int64_t q, int n);

/// Every (p, q) != (0, 0) in the box with |F(p, q)| = 1, sorted
/// lexicographically, with the regular and special flags set.
///
/// For q >= 1 any solution has |p - alpha q| <= 1 for some complex root alpha
/// of f, because the product of the |p/q - alpha_i| equals 1 / (|h_n| q^n).
/// Only those candidates are tested, first modulo a large prime and then
/// exactly; q <= 0 follows from the symmetry (p, q) -> (-p, -q).
std::vector<SolutionRecord> solve_box(const TrinomialForm& form, std::int64_t box);

/// Exhaustive scan of the whole box. Quadratic in B; used as an oracle.
std::vector<SolutionRecord> solve_box_exhaustive(const TrinomialForm& form, std::int64_t box);

/// Fills belongs_to for every regular solution.
void attach_exceptional_points(std::vector<SolutionRecord>& solutions, const FormAnalysis& analysis,
                               const TrinomialForm& form);

}  // namespace thue
