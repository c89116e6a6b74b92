#include "thue/lab.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "thue/degree.hpp"
#include "thue/irreducible.hpp"
#include "thue/search.hpp"

namespace thue {

std::vector<TrinomialForm> enumerate_forms(int degree, std::int64_t height, EnumerationStats* stats) {
    require_supported_degree(degree);
    if (height < 1) throw std::invalid_argument("enumerate_forms: height must be >= 1");
    EnumerationStats local;
    std::vector<TrinomialForm> out;

    std::vector<std::int64_t> middles;
    for (std::int64_t h = -height; h <= height; ++h) {
        if (h != 0) middles.push_back(h);
    }
    for (std::int64_t lead = 1; lead <= height; ++lead) {
        // |h_0| >= h_n: the reciprocal F(y, x) covers the rest.
        std::vector<std::int64_t> constants;
        for (std::int64_t c = -height; c <= -lead; ++c) constants.push_back(c);
        for (std::int64_t c = lead; c <= height; ++c) constants.push_back(c);
        for (std::int64_t mid : middles) {
            for (std::int64_t constant : constants) {
                const bool exact_height =
                    lead == height || std::llabs(mid) == height || std::llabs(constant) == height;
                if (!exact_height || std::gcd(std::gcd(lead, mid), constant) != 1) continue;
                for (int k = 1; k < degree; ++k) {
                    TrinomialForm form(lead, mid, constant, degree, k);
                    ++local.candidates;
                    switch (is_irreducible(form)) {
                        case Irreducibility::irreducible:
                            ++local.irreducible;
                            out.push_back(form);
                            break;
                        case Irreducibility::reducible:
                            ++local.reducible;
                            break;
                        case Irreducibility::unknown:
                            ++local.unknown;
                            break;
                    }
                }
            }
        }
    }
    if (stats) *stats = local;
    return out;
}

bool VerificationReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.ok; });
}

const BoundCheck* VerificationReport::find(const std::string& name) const {
    for (const BoundCheck& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

int cached_z_of_n(int n) {
    static std::mutex mutex;
    static std::map<int, int> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    const int z = z_of_n(n);
    std::lock_guard lock(mutex);
    cache[n] = z;
    return z;
}

namespace {

template <class T>
BoundCheck compare_le(const std::string& name, T value, T limit, const std::string& what) {
    std::ostringstream detail;
    detail << what << " = " << value << " <= " << limit;
    return {name, value <= limit, detail.str()};
}

}  // namespace

VerificationReport verify_bounds(const TrinomialForm& form, std::int64_t box) {
    return verify_bounds(form, box, solve_box(form, box), cached_z_of_n(form.n()));
}

VerificationReport verify_bounds(const TrinomialForm& form, std::int64_t box,
                                 std::vector<SolutionRecord> solutions, int z) {
    const DegreeProfile profile = degree_profile(form.n());
    VerificationReport report{form, box, z, profile.v, profile.ell, solutions.size(), 0, 0, 0, 0, {}, {}, {}};

    std::optional<FormAnalysis> analysis;
    std::string analysis_error;
    try {
        analysis = analyze_form(form);
    } catch (const AnalysisError& e) {
        analysis_error = e.what();
    }

    std::set<std::pair<std::int64_t, std::int64_t>> points;
    bool coprime = true;
    for (const SolutionRecord& s : solutions) {
        points.emplace(s.p, s.q);
        if (s.regular) ++report.regular;
        if (std::llabs(s.p) * std::llabs(s.q) <= 1) ++report.near_axes;
        if (s.q != 0 && std::gcd(s.p, s.q) != 1) coprime = false;
    }
    bool symmetric = true;
    for (const auto& [p, q] : points) symmetric = symmetric && points.count({-p, -q}) == 1;

    const std::size_t zv = static_cast<std::size_t>(z) * static_cast<std::size_t>(profile.v);
    report.checks.push_back(compare_le<std::size_t>("total_bound", report.total, 2 * zv + 8, "N_total"));
    report.checks.push_back(compare_le<std::size_t>("regular_bound", report.regular, zv, "N_regular"));
    report.checks.push_back(compare_le<std::size_t>("near_axes_bound", report.near_axes, 8, "#{|pq| <= 1}"));
    report.checks.push_back(
        compare_le<std::size_t>("regular_pairing", report.total, 2 * report.regular + 8, "N_total vs 2 N_regular + 8"));
    report.checks.push_back({"sign_symmetry", symmetric, symmetric ? "" : "a solution lacks its negation"});
    report.checks.push_back({"coprimality", coprime, coprime ? "" : "a solution has gcd(p, q) > 1"});

    if (analysis) {
        report.R_F = analysis->R_F;
        report.C_F = analysis->C_F;
        attach_exceptional_points(solutions, *analysis, form);
        report.per_exceptional.assign(analysis->exceptional.size(), 0);
        bool assigned = true;
        for (const SolutionRecord& s : solutions) {
            if (!s.regular) continue;
            if (!s.belongs_to) {
                assigned = false;
                continue;
            }
            ++report.per_exceptional[*s.belongs_to - 1];
        }
        std::ostringstream per_point;
        bool per_point_ok = assigned;
        if (!assigned) per_point << "regular solutions but no exceptional point; ";
        for (std::size_t i = 0; i < analysis->exceptional.size(); ++i) {
            const bool is_root = analysis->exceptional[i].kind == ExceptionalPoint::Kind::root;
            const std::size_t limit = static_cast<std::size_t>(is_root ? z : profile.ell);
            if (report.per_exceptional[i] > limit) {
                per_point_ok = false;
                per_point << (is_root ? "root" : "critical point") << " #" << (i + 1) << " has "
                          << report.per_exceptional[i] << " > " << limit << "; ";
            }
        }
        report.checks.push_back({"per_point_bound", per_point_ok, per_point.str()});
        report.checks.push_back(compare_le<std::size_t>(
            "weighted_bound", report.regular,
            static_cast<std::size_t>(z * analysis->R_F + profile.ell * analysis->C_F), "N_F vs z R_F + l C_F"));
        report.checks.push_back(
            compare_le<int>("exceptional_count", analysis->R_F + analysis->C_F, profile.v, "R_F + C_F"));
        report.checks.push_back(compare_le<std::size_t>("critical_count", analysis->critical_points.size(), 3,
                                                        "critical points"));
        report.checks.push_back({"separation", analysis->separated, analysis->problem});
        report.checks.push_back({"analysis", true, ""});
    } else {
        report.checks.push_back({"analysis", false, analysis_error});
    }
    report.solutions = std::move(solutions);
    return report;
}

std::size_t SurveyResult::max_count() const {
    std::size_t best = 0;
    for (const VerificationReport& r : forms) best = std::max(best, r.total);
    return best;
}

std::size_t SurveyResult::violations() const {
    return static_cast<std::size_t>(
        std::count_if(forms.begin(), forms.end(), [](const VerificationReport& r) { return !r.ok(); }));
}

SurveyResult survey(int degree, std::int64_t height, std::int64_t box, int workers) {
    SurveyResult result;
    result.degree = degree;
    result.height = height;
    result.box = box;
    const std::vector<TrinomialForm> forms = enumerate_forms(degree, height, &result.stats);
    const int z = cached_z_of_n(degree);

    std::vector<std::optional<VerificationReport>> slots(forms.size());
    auto run = [&](std::size_t i) { slots[i] = verify_bounds(forms[i], box, solve_box(forms[i], box), z); };
    const std::size_t count = forms.size();
    const std::size_t pool_size = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), 1,
                                                          std::max<std::size_t>(count, 1));
    if (pool_size == 1) {
        for (std::size_t i = 0; i < count; ++i) run(i);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < pool_size; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < count; i += pool_size) run(i);
            });
        }
    }
    result.forms.reserve(count);
    for (auto& slot : slots) result.forms.push_back(std::move(*slot));
    return result;
}

}  // namespace thue
