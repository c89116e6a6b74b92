// Command-line front end: bound breakdowns, parameter searches, z(n) tables,
// trinomial enumeration and verification.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "thue/bounds.hpp"
#include "thue/degree.hpp"
#include "thue/gap.hpp"
#include "thue/lab.hpp"
#include "thue/report.hpp"
#include "thue/search.hpp"

namespace fs = std::filesystem;
using namespace thue;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

// Raised for invalid input detected after parsing; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Common {
    int workers = 1;
    std::uint64_t seed = 20240611;
    std::string output_dir = ".";
};

std::string low_text(double x) {
    std::ostringstream out;
    out << std::setprecision(12) << x;
    return out.str();
}

std::string high_text(const HighReal& x) { return x.str(24); }

template <class T>
std::string optional_text(const std::optional<T>& x) {
    return x ? std::to_string(*x) : "-";
}

// ---- bounds ----

struct BoundsOptions {
    int n = 0;
    std::optional<double> d0, d, a, b;
    bool asymptotic = false;
};

int run_bounds(const BoundsOptions& opt) {
    if (opt.n < kMinDegree) throw UsageError("unsupported degree n = " + std::to_string(opt.n) + " (need n >= 6)");
    const bool explicit_params = opt.d0 || opt.a || opt.b;
    if (explicit_params && !(opt.d0 && opt.a && opt.b)) throw UsageError("--d0, --a and --b must be given together");
    if (explicit_params && opt.asymptotic) throw UsageError("--asymptotic excludes explicit parameters");

    OptimalParams params;
    std::string source;
    if (explicit_params) {
        params.n = opt.n;
        params.d0 = *opt.d0;
        params.d = opt.d ? *opt.d : degree_profile(opt.n).n_star;
        params.a = *opt.a;
        params.b = *opt.b;
        source = "explicit";
    } else if (opt.asymptotic || opt.n >= kAsymptoticDegree) {
        if (opt.n < kAsymptoticDegree) throw UsageError("--asymptotic requires n >= 507");
        params = asymptotic_params(opt.n);
        source = "closed form";
    } else {
        params = z_params(opt.n);
        source = "search";
    }

    const std::vector<std::string> low_violations = violated_conditions<double>(opt.n, params.small(), params.large());
    const std::vector<std::string> high_violations =
        violated_conditions<HighReal>(opt.n, params.small(), params.large());

    const PrecisionCheck check = cross_check(opt.n, params.small(), params.large());
    const BoundBreakdown& lo = check.low;
    const HighBreakdown& hi = check.high;

    std::cout << "n = " << opt.n << " (" << source << "): d0 = " << report::format_number(params.d0)
              << ", d = " << report::format_number(params.d) << ", a = " << report::format_number(params.a)
              << ", b = " << report::format_number(params.b) << "\n\n";
    std::vector<std::vector<std::string>> rows{
        {"K_d", low_text(lo.K_d), high_text(hi.K_d)},
        {"K_d0", low_text(lo.K_d0), high_text(hi.K_d0)},
        {"Q1", low_text(lo.Q1), high_text(hi.Q1)},
        {"L", low_text(lo.L), high_text(hi.L)},
        {"D", low_text(lo.D), high_text(hi.D)},
        {"A", low_text(lo.A), high_text(hi.A)},
        {"E", low_text(lo.E), high_text(hi.E)},
        {"chi_n", low_text(lo.chi_n), high_text(hi.chi_n)},
        {"pi_n", low_text(lo.pi_n), high_text(hi.pi_n)},
        {"T (inside floor)", low_text(lo.t_raw), high_text(hi.t_raw)},
        {"Z (inside floor)", low_text(lo.z_raw), high_text(hi.z_raw)},
        {"T", optional_text(lo.T), optional_text(hi.T)},
        {"Z", optional_text(lo.Z), optional_text(hi.Z)},
        {"small valid", lo.small_valid ? "yes" : "no", hi.small_valid ? "yes" : "no"},
        {"large valid", lo.large_valid ? "yes" : "no", hi.large_valid ? "yes" : "no"},
        {"thresholds", lo.thresholds_ok ? "yes" : "no", hi.thresholds_ok ? "yes" : "no"},
    };
    std::cout << report::text_table({"quantity", "binary64", "100 digits"}, rows);
    std::cout << "\nprecisions agree: " << (check.agree ? "yes" : "no");
    if (!check.detail.empty()) std::cout << " (" << check.detail << ")";
    std::cout << "\n";

    if (!low_violations.empty() || !high_violations.empty()) {
        std::cerr << "invalid parameters, violated:";
        for (const std::string& v : low_violations.empty() ? high_violations : low_violations) std::cerr << " [" << v << "]";
        std::cerr << "\n";
        return kExitUsage;
    }
    if (lo.T && lo.Z) {
        const int z = z_from_counts(opt.n, *lo.T, *lo.Z);
        std::cout << "T + Z = " << *lo.T + *lo.Z << ", z = " << z
                  << ", 2 v z + 8 = " << 2 * degree_profile(opt.n).v * z + 8 << "\n";
    }
    return check.accepted() ? kExitOk : kExitViolation;
}

// ---- optimize / descend ----

struct TableOptions {
    int n_min = kMinDegree;
    int n_max = kMinDegree;
    double prec = kGridPrec;
    std::string format = "text";
};

void print_params(const std::vector<OptimalParams>& rows, const std::string& format) {
    if (format == "csv") {
        report::write_params_csv(std::cout, rows);
    } else {
        std::cout << report::params_text_table(rows);
    }
}

int check_rows(const std::vector<OptimalParams>& rows) {
    for (const OptimalParams& row : rows) {
        if (!admissible(row)) {
            std::cerr << "tuple for n = " << row.n << " failed re-verification\n";
            return kExitViolation;
        }
    }
    return kExitOk;
}

int run_optimize(const TableOptions& opt, const Common& common) {
    if (opt.n_min <= opt.n_max && opt.n_min < kMinDegree) throw UsageError("--n-min must be >= 6");
    if (!(opt.prec > 0 && opt.prec < 1)) throw UsageError("--prec must lie in (0, 1)");
    const std::vector<OptimalParams> rows = grid_search({opt.n_min, opt.n_max, opt.prec, 4, common.workers});
    print_params(rows, opt.format);
    return check_rows(rows);
}

int run_descend(const TableOptions& opt) {
    if (opt.n_max < kMinDegree) throw UsageError("--n-max must be >= 6");
    if (!(opt.prec > 0 && opt.prec < 1)) throw UsageError("--prec must lie in (0, 1)");
    const std::vector<OptimalParams> rows = descend_search(opt.n_max, opt.prec);
    print_params(rows, opt.format);
    if (!rows.empty()) {
        std::cerr << "T + Z = 4 holds for " << rows.front().n << " <= n <= " << rows.back().n << "\n";
    }
    return check_rows(rows);
}

// ---- ztable ----

int run_ztable(int n_max, const std::string& format) {
    if (n_max < kMinDegree) throw UsageError("--n-max must be >= 6");
    const ZTable table = ZTable::compute(std::min(n_max, kAsymptoticDegree - 1));
    const std::vector<report::ZBand> bands = report::z_bands(table, n_max);
    if (format == "csv") {
        std::cout << "n_min,n_max,z,w,bound_odd,bound_even,thomas_odd,thomas_even\n";
        for (const report::ZBand& band : bands) {
            std::cout << band.n_lo << ',' << (band.open ? std::string() : std::to_string(band.n_hi)) << ','
                      << band.z << ',' << band.w << ',' << band.odd_total << ',' << band.even_total << ','
                      << band.odd_total_w << ',' << band.even_total_w << '\n';
        }
    } else {
        std::cout << report::z_bands_text(bands);
    }
    for (const auto& [n, row] : table.rows()) {
        if (!admissible(row)) {
            std::cerr << "tuple for n = " << n << " failed re-verification\n";
            return kExitViolation;
        }
    }
    return kExitOk;
}

// ---- enumerate ----

struct EnumerateOptions {
    int degree = kMinDegree;
    std::int64_t height = 1;
    std::int64_t box = kDefaultBox;
    std::string certified;
};

int run_enumerate(const EnumerateOptions& opt, const Common& common) {
    if (opt.degree < kMinDegree) throw UsageError("--degree must be >= 6");
    if (opt.height < 1) throw UsageError("--height must be >= 1");
    if (opt.box < 1) throw UsageError("--box must be >= 1");
    // Read before writing, in case the certified file is the output path.
    std::optional<std::vector<report::EnumerationRow>> certified;
    if (!opt.certified.empty()) {
        std::ifstream in(opt.certified, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open " + opt.certified);
        certified = report::read_enumeration_csv(in);
    }
    const SurveyResult survey = thue::survey(opt.degree, opt.height, opt.box, common.workers);

    fs::create_directories(common.output_dir);
    const fs::path path = fs::path(common.output_dir) / report::enumeration_filename(opt.degree, opt.height);
    {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
        report::write_enumeration_csv(out, survey);
        if (!out) throw std::runtime_error("write failed for " + path.string());
    }
    std::cout << "wrote " << path.string() << ": " << survey.forms.size() << " irreducible forms ("
              << survey.stats.candidates << " candidates, " << survey.stats.reducible << " reducible, "
              << survey.stats.unknown << " undecided), box-complete to B = " << opt.box << "\n";
    std::cout << "maximum number of solutions: " << survey.max_count() << "\n";

    int status = kExitOk;
    if (survey.violations() > 0) {
        std::cerr << survey.violations() << " form(s) violate a bound; run verify for details\n";
        status = kExitViolation;
    }
    if (certified) {
        std::vector<report::EnumerationRow> ours;
        for (const VerificationReport& r : survey.forms) ours.push_back(report::to_row(r));
        const auto mismatches = report::cross_check(ours, *certified, opt.box);
        for (const report::CountMismatch& m : mismatches) {
            std::cerr << "(" << m.lead << ", " << m.middle << ", " << m.constant << ", k=" << m.middle_degree
                      << "): " << m.detail << "\n";
        }
        std::cout << "cross-check against " << opt.certified << ": " << mismatches.size() << " mismatch(es)\n";
        if (!mismatches.empty()) status = kExitViolation;
    }
    return status;
}

// ---- verify ----

struct VerifyOptions {
    int degree_min = kMinDegree;
    int degree_max = 9;
    std::int64_t height_min = 1;
    std::int64_t height_max = 2;
    std::int64_t box = kDefaultBox;
    std::size_t gap_count = 100000;
    std::size_t sharpness_count = 10000;
    std::string out;
};

int run_verify(const VerifyOptions& opt, const Common& common) {
    if (opt.degree_min <= opt.degree_max && opt.degree_min < kMinDegree) throw UsageError("--degree-min must be >= 6");
    if (opt.height_min <= opt.height_max && opt.height_min < 1) throw UsageError("--height-min must be >= 1");
    if (opt.box < 1) throw UsageError("--box must be >= 1");

    nlohmann::json doc;
    doc["seed"] = common.seed;
    bool ok = true;

    nlohmann::json surveys = nlohmann::json::array();
    for (int degree = opt.degree_min; degree <= opt.degree_max; ++degree) {
        for (std::int64_t height = opt.height_min; height <= opt.height_max; ++height) {
            const SurveyResult survey = thue::survey(degree, height, opt.box, common.workers);
            ok = ok && survey.violations() == 0;
            surveys.push_back(report::survey_json(survey));
        }
    }
    doc["surveys"] = surveys;

    nlohmann::json suites = nlohmann::json::array();
    for (const SuiteResult& suite :
         {gap_sharpness_suite(opt.sharpness_count, common.seed, false),
          gap_sharpness_suite(opt.sharpness_count, common.seed, true), gap_soundness_suite(opt.gap_count, common.seed),
          gap_monotonicity_suite(opt.gap_count, common.seed)}) {
        ok = ok && suite.ok();
        suites.push_back(report::to_json(suite));
    }
    doc["gap_suites"] = suites;

    nlohmann::json asymptotic = nlohmann::json::array();
    for (int n : {507, 600, 1000, 5000}) {
        const OptimalParams params = asymptotic_params(n);
        nlohmann::json entry{{"n", n}, {"T", params.T}, {"Z", params.Z}, {"admissible", admissible(params)}};
        bool entry_ok = params.T == 2 && params.Z == 2 && admissible(params);
        for (const SideCondition& c : asymptotic_side_conditions(n)) {
            entry["conditions"].push_back({{"name", c.name}, {"binary64", c.binary64}, {"high", c.high}});
            entry_ok = entry_ok && c.ok();
        }
        entry["ok"] = entry_ok;
        ok = ok && entry_ok;
        asymptotic.push_back(std::move(entry));
    }
    doc["asymptotic"] = asymptotic;
    doc["ok"] = ok;

    const std::string text = doc.dump(2) + "\n";
    if (opt.out.empty()) {
        std::cout << text;
    } else {
        const fs::path path = fs::path(common.output_dir) / opt.out;
        if (path.has_parent_path()) fs::create_directories(path.parent_path());
        std::ofstream file(path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open " + path.string() + " for writing");
        file << text;
        std::cout << "wrote " << path.string() << " (" << (ok ? "all pass" : "FAILURES") << ")\n";
    }
    return ok ? kExitOk : kExitViolation;
}

// ---- gap-demo ----

struct GapDemoOptions {
    double L = 3;
    double T = 2;
    double p = 4;
    int ell = 2;
};

int run_gap_demo(const GapDemoOptions& opt) {
    if (opt.ell < 0) throw UsageError("--ell must be >= 0");
    std::vector<HighReal> logs;
    try {
        logs = sharp_chain_log(log(HighReal(opt.L)), log(HighReal(opt.T)), HighReal(opt.p), opt.ell);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    std::cout << "sharp chain y_0 .. y_" << opt.ell << ":\n";
    for (std::size_t i = 0; i < logs.size(); ++i) {
        std::cout << "  y_" << i << " = " << exp(logs[i]).str(20) << "\n";
    }
    const HighReal log_L = logs.front();
    const HighReal log_M = logs.back();
    const HighReal log_T = log(HighReal(opt.T));
    const HighReal high = gap_bound_real(LogGapInstance<HighReal>{log_L, log_M, log_T, HighReal(opt.p)});
    const GapBound low = gap_bound(LogGapInstance<double>{static_cast<double>(log_L), static_cast<double>(log_M),
                                                          std::log(opt.T), opt.p});
    std::cout << "gap bound with M = y_" << opt.ell << ": binary64 " << std::setprecision(17) << low.real_bound
              << ", 100 digits " << high.str(35) << ", integer " << low.int_bound << "\n";
    const double M = static_cast<double>(exp(log_M));
    if (std::isfinite(M)) {
        std::cout << "longest greedy chain under M: " << max_chain_oracle({opt.L, M, opt.T, opt.p}) << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bounds on the number of solutions of trinomial Thue equations |F(x, y)| = 1"};
    app.set_config("--config", "", "TOML or INI file with option defaults (flags take precedence)");
    app.require_subcommand(1);

    Common common;
    app.add_option("--workers", common.workers, "Worker threads")->check(CLI::Range(1, 1024));
    app.add_option("--seed", common.seed, "Seed for every randomized suite");
    app.add_option("--output-dir", common.output_dir, "Directory for generated files")->envname("THUE_OUTPUT_DIR");

    BoundsOptions bounds_opt;
    CLI::App* bounds = app.add_subcommand("bounds", "Every intermediate quantity for one degree, in both precisions");
    bounds->add_option("--n", bounds_opt.n, "Degree")->required();
    bounds->add_option("--d0", bounds_opt.d0, "Small-solution parameter d0");
    bounds->add_option("--d", bounds_opt.d, "Small-solution parameter d (default n*)");
    bounds->add_option("--a", bounds_opt.a, "Large-solution parameter a");
    bounds->add_option("--b", bounds_opt.b, "Large-solution parameter b");
    bounds->add_flag("--asymptotic", bounds_opt.asymptotic, "Closed-form parameters (n >= 507)");

    TableOptions optimize_opt;
    CLI::App* optimize = app.add_subcommand("optimize", "Grid search minimizing T + Z over a range of degrees");
    optimize->add_option("--n-min", optimize_opt.n_min, "First degree");
    optimize->add_option("--n-max", optimize_opt.n_max, "Last degree");
    optimize->add_option("--prec", optimize_opt.prec, "Grid step");
    optimize->add_option("--format", optimize_opt.format, "text or csv")->check(CLI::IsMember({"text", "csv"}));

    TableOptions descend_opt;
    descend_opt.n_max = kAsymptoticDegree - 1;
    descend_opt.prec = kDescendPrec;
    CLI::App* descend = app.add_subcommand("descend", "Descending scan for degrees where T + Z = 4");
    descend->add_option("--n-max", descend_opt.n_max, "Starting degree");
    descend->add_option("--prec", descend_opt.prec, "Scan step");
    descend->add_option("--format", descend_opt.format, "text or csv")->check(CLI::IsMember({"text", "csv"}));

    int ztable_max = kAsymptoticDegree - 1;
    std::string ztable_format = "text";
    CLI::App* ztable = app.add_subcommand("ztable", "z(n) bands, final bounds and the earlier w(n)");
    ztable->add_option("--n-max", ztable_max, "Largest degree to tabulate");
    ztable->add_option("--format", ztable_format, "text or csv")->check(CLI::IsMember({"text", "csv"}));

    EnumerateOptions enumerate_opt;
    CLI::App* enumerate = app.add_subcommand("enumerate", "Solve every irreducible trinomial of one degree and height");
    enumerate->add_option("--degree", enumerate_opt.degree, "Degree n")->required();
    enumerate->add_option("--height", enumerate_opt.height, "Height H")->required();
    enumerate->add_option("--box", enumerate_opt.box, "Search box radius B");
    enumerate->add_option("--certified", enumerate_opt.certified, "CSV from a certified solver to cross-check against");

    VerifyOptions verify_opt;
    CLI::App* verify = app.add_subcommand("verify", "Check every bound and property suite, JSON report");
    verify->add_option("--degree-min", verify_opt.degree_min, "First degree");
    verify->add_option("--degree-max", verify_opt.degree_max, "Last degree");
    verify->add_option("--height-min", verify_opt.height_min, "First height");
    verify->add_option("--height-max", verify_opt.height_max, "Last height");
    verify->add_option("--box", verify_opt.box, "Search box radius B");
    verify->add_option("--gap-count", verify_opt.gap_count, "Instances for the soundness and monotonicity suites");
    verify->add_option("--sharpness-count", verify_opt.sharpness_count, "Instances for the sharpness suites");
    verify->add_option("--out", verify_opt.out, "Write the report under the output directory instead of stdout");

    GapDemoOptions gap_opt;
    CLI::App* gap_demo = app.add_subcommand("gap-demo", "Print a sharp chain and the gap-principle bound");
    gap_demo->add_option("--L", gap_opt.L, "Lower end L");
    gap_demo->add_option("--T", gap_opt.T, "Growth divisor T");
    gap_demo->add_option("--p", gap_opt.p, "Exponent p");
    gap_demo->add_option("--ell", gap_opt.ell, "Chain length");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (bounds->parsed()) return run_bounds(bounds_opt);
        if (optimize->parsed()) return run_optimize(optimize_opt, common);
        if (descend->parsed()) return run_descend(descend_opt);
        if (ztable->parsed()) return run_ztable(ztable_max, ztable_format);
        if (enumerate->parsed()) return run_enumerate(enumerate_opt, common);
        if (verify->parsed()) return run_verify(verify_opt, common);
        if (gap_demo->parsed()) return run_gap_demo(gap_opt);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    }
    return kExitUsage;
}
