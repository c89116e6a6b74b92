// CSV, JSON and text renderings of search tables, enumeration surveys and
// verification results, plus the comparison with the earlier w(n) bounds.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "thue/gap.hpp"
#include "thue/lab.hpp"
#include "thue/search.hpp"

namespace thue::report {

// ---- CSV primitives (RFC 4180 style: minimal quoting, CRLF rows) ----

std::string csv_field(std::string_view value);
std::string csv_row(const std::vector<std::string>& fields);
/// Splits one logical row; throws std::runtime_error on an unterminated quote.
std::vector<std::string> parse_csv_row(std::string_view line);

// ---- Enumeration data ----

/// The six column heads of the enumeration files, byte for byte.
const std::vector<std::string>& enumeration_columns();

/// "degree_{n}_height_{H}_thue_equations.csv"
std::string enumeration_filename(int degree, std::int64_t height);

using Point = std::pair<std::int64_t, std::int64_t>;

/// "[[p, q], [p, q], ...]" in the given order; "[]" when empty.
std::string format_solutions(const std::vector<Point>& points);
/// Accepts [] or () around each pair and around the list; throws
/// std::runtime_error on malformed text.
std::vector<Point> parse_solutions(std::string_view text);

struct EnumerationRow {
    std::size_t count = 0;
    std::int64_t lead = 0;
    std::int64_t middle = 0;
    std::int64_t constant = 0;
    int middle_degree = 0;
    std::vector<Point> solutions;  // sorted lexicographically
};

EnumerationRow to_row(const VerificationReport& report);
void write_enumeration_csv(std::ostream& out, const SurveyResult& survey);
/// Parses a file in the enumeration schema; the header must match exactly.
std::vector<EnumerationRow> read_enumeration_csv(std::istream& in);

/// A disagreement between box-search rows and an externally certified file.
struct CountMismatch {
    std::int64_t lead = 0;
    std::int64_t middle = 0;
    std::int64_t constant = 0;
    int middle_degree = 0;
    std::string detail;
};

/// Compares per-form solution sets. Certified solutions outside the box are
/// ignored, since the box search cannot see them; everything else must agree,
/// including the set of forms.
std::vector<CountMismatch> cross_check(const std::vector<EnumerationRow>& ours,
                                       const std::vector<EnumerationRow>& certified, std::int64_t box);

// ---- Parameter tables ----

/// Columns n,d0,d,a,b,T,Z.
void write_params_csv(std::ostream& out, const std::vector<OptimalParams>& rows);
std::string params_text_table(const std::vector<OptimalParams>& rows);

// ---- Comparison with earlier bounds ----

/// The earlier w(n), for n >= 5. n = 5 carries the
/// caveat in thomas_caveat() and is never used in computations.
std::optional<int> thomas_w(int n);
const char* thomas_caveat();

struct ZBand {
    int n_lo = 0;
    int n_hi = 0;         // inclusive
    bool open = false;    // the band continues beyond n_hi
    int z = 0;
    int w = 0;
    int odd_total = 0;    // 2 v z + 8 for odd n (v = 3)
    int even_total = 0;   // 2 v z + 8 for even n (v = 4)
    int odd_total_w = 0;
    int even_total_w = 0;
};

/// Maximal runs of constant (z, w) over [6, n_max] using the table; the last
/// run is open when the table reaches the closed-form regime.
std::vector<ZBand> z_bands(const ZTable& table, int n_max);
std::string z_bands_text(const std::vector<ZBand>& bands);

// ---- Verification reports ----

nlohmann::json to_json(const BoundCheck& check);
nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const SuiteResult& suite);

/// Per-check pass counts over a survey with the failing forms listed.
nlohmann::json survey_json(const SurveyResult& survey);

/// Aligned text table: each row padded to the widest cell per column.
std::string text_table(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows);

/// General notation with six significant digits, as in the parameter table.
std::string format_number(double value);

}  // namespace thue::report
