#include "thue/report.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "thue/degree.hpp"

namespace thue::report {

std::string csv_field(std::string_view value) {
    const bool quote = value.find_first_of(",\"\r\n") != std::string_view::npos;
    if (!quote) return std::string(value);
    std::string out = "\"";
    for (char c : value) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) out += ',';
        out += csv_field(fields[i]);
    }
    out += "\r\n";
    return out;
}

std::vector<std::string> parse_csv_row(std::string_view line) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.remove_suffix(1);
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c != '"') {
                current += c;
            } else if (i + 1 < line.size() && line[i + 1] == '"') {
                current += '"';
                ++i;
            } else {
                quoted = false;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(current));
            current.clear();
        } else {
            current += c;
        }
    }
    if (quoted) throw std::runtime_error("csv: unterminated quoted field");
    fields.push_back(std::move(current));
    return fields;
}

const std::vector<std::string>& enumeration_columns() {
    static const std::vector<std::string> columns{
        "Number of Solutions to |F(x,y)| = 1", "Leading Coefficient", "Middle Coefficient",
        "Constant Coefficient",                "Middle Degree",       "List of Solutions to |F(x,y)| = 1"};
    return columns;
}

std::string enumeration_filename(int degree, std::int64_t height) {
    return "degree_" + std::to_string(degree) + "_height_" + std::to_string(height) + "_thue_equations.csv";
}

std::string format_solutions(const std::vector<Point>& points) {
    std::string out = "[";
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i > 0) out += ", ";
        out += "[" + std::to_string(points[i].first) + ", " + std::to_string(points[i].second) + "]";
    }
    out += "]";
    return out;
}

namespace {

class SolutionParser {
public:
    explicit SolutionParser(std::string_view text) : text_(text) {}

    std::vector<Point> parse() {
        std::vector<Point> out;
        const char close = closer(expect_open());
        skip_space();
        if (peek() == close) {
            ++pos_;
        } else {
            for (;;) {
                const char pair_close = closer(expect_open());
                const std::int64_t p = integer();
                expect(',');
                const std::int64_t q = integer();
                expect(pair_close);
                out.emplace_back(p, q);
                skip_space();
                if (peek() == ',') {
                    ++pos_;
                    continue;
                }
                expect(close);
                break;
            }
        }
        skip_space();
        if (pos_ != text_.size()) fail("trailing characters");
        return out;
    }

private:
    static char closer(char open) { return open == '[' ? ']' : ')'; }

    [[noreturn]] void fail(const std::string& what) const {
        throw std::runtime_error("solution list: " + what + " at offset " + std::to_string(pos_) + " in \"" +
                                 std::string(text_) + "\"");
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    char expect_open() {
        skip_space();
        const char c = peek();
        if (c != '[' && c != '(') fail("expected '[' or '('");
        ++pos_;
        return c;
    }

    void expect(char c) {
        skip_space();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::int64_t integer() {
        skip_space();
        const std::size_t start = pos_;
        if (peek() == '-' || peek() == '+') ++pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start || !std::isdigit(static_cast<unsigned char>(text_[pos_ - 1]))) fail("expected an integer");
        return std::stoll(std::string(text_.substr(start, pos_ - start)));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::int64_t parse_integer(const std::string& field, const char* column, std::size_t line) {
    std::size_t used = 0;
    std::int64_t value = 0;
    try {
        value = std::stoll(field, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != field.size()) {
        throw std::runtime_error("csv line " + std::to_string(line) + ": bad " + column + " \"" + field + "\"");
    }
    return value;
}

using FormKey = std::tuple<std::int64_t, std::int64_t, std::int64_t, int>;

FormKey key_of(const EnumerationRow& row) { return {row.lead, row.middle, row.constant, row.middle_degree}; }

}  // namespace

std::vector<Point> parse_solutions(std::string_view text) { return SolutionParser(text).parse(); }

EnumerationRow to_row(const VerificationReport& report) {
    EnumerationRow row;
    row.count = report.total;
    row.lead = report.form.h_n();
    row.middle = report.form.h_k();
    row.constant = report.form.h_0();
    row.middle_degree = report.form.k();
    for (const SolutionRecord& s : report.solutions) row.solutions.emplace_back(s.p, s.q);
    std::sort(row.solutions.begin(), row.solutions.end());
    return row;
}

void write_enumeration_csv(std::ostream& out, const SurveyResult& survey) {
    out << csv_row(enumeration_columns());
    for (const VerificationReport& report : survey.forms) {
        const EnumerationRow row = to_row(report);
        out << csv_row({std::to_string(row.count), std::to_string(row.lead), std::to_string(row.middle),
                        std::to_string(row.constant), std::to_string(row.middle_degree),
                        format_solutions(row.solutions)});
    }
}

std::vector<EnumerationRow> read_enumeration_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("csv: empty input");
    if (parse_csv_row(line) != enumeration_columns()) throw std::runtime_error("csv: header does not match");
    std::vector<EnumerationRow> rows;
    std::size_t number = 1;
    while (std::getline(in, line)) {
        ++number;
        if (line.empty() || line == "\r") continue;
        const std::vector<std::string> fields = parse_csv_row(line);
        if (fields.size() != enumeration_columns().size()) {
            throw std::runtime_error("csv line " + std::to_string(number) + ": expected 6 fields, got " +
                                     std::to_string(fields.size()));
        }
        EnumerationRow row;
        row.count = static_cast<std::size_t>(parse_integer(fields[0], "count", number));
        row.lead = parse_integer(fields[1], "leading coefficient", number);
        row.middle = parse_integer(fields[2], "middle coefficient", number);
        row.constant = parse_integer(fields[3], "constant coefficient", number);
        row.middle_degree = static_cast<int>(parse_integer(fields[4], "middle degree", number));
        row.solutions = parse_solutions(fields[5]);
        std::sort(row.solutions.begin(), row.solutions.end());
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<CountMismatch> cross_check(const std::vector<EnumerationRow>& ours,
                                       const std::vector<EnumerationRow>& certified, std::int64_t box) {
    std::map<FormKey, const EnumerationRow*> mine;
    for (const EnumerationRow& row : ours) mine[key_of(row)] = &row;
    std::set<FormKey> seen;
    std::vector<CountMismatch> out;
    auto mismatch = [&](const FormKey& key, std::string detail) {
        out.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), std::get<3>(key), std::move(detail)});
    };
    for (const EnumerationRow& row : certified) {
        const FormKey key = key_of(row);
        seen.insert(key);
        const auto it = mine.find(key);
        if (it == mine.end()) {
            mismatch(key, "form missing from the box-search data");
            continue;
        }
        std::vector<Point> inside;
        for (const Point& point : row.solutions) {
            if (std::llabs(point.first) <= box && std::llabs(point.second) <= box) inside.push_back(point);
        }
        std::sort(inside.begin(), inside.end());
        if (inside != it->second->solutions) {
            mismatch(key, "solutions differ: box search " + format_solutions(it->second->solutions) +
                              ", certified within box " + format_solutions(inside));
        } else if (inside.size() != row.solutions.size()) {
            mismatch(key, std::to_string(row.solutions.size() - inside.size()) +
                              " certified solution(s) lie outside the box");
        }
    }
    for (const EnumerationRow& row : ours) {
        if (!seen.count(key_of(row))) mismatch(key_of(row), "form missing from the certified data");
    }
    return out;
}

std::string format_number(double value) {
    std::ostringstream out;
    out.precision(6);
    out << value;
    return out.str();
}

void write_params_csv(std::ostream& out, const std::vector<OptimalParams>& rows) {
    out << "n,d0,d,a,b,T,Z\n";
    for (const OptimalParams& row : rows) {
        out << row.n << ',' << format_number(row.d0) << ',' << format_number(row.d) << ',' << format_number(row.a)
            << ',' << format_number(row.b) << ',' << row.T << ',' << row.Z << '\n';
    }
}

std::string text_table(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size(), 0);
    auto widen = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) width[i] = std::max(width[i], cells[i].size());
    };
    widen(header);
    for (const auto& row : rows) widen(row);
    auto render = [&](const std::vector<std::string>& cells) {
        std::string line;
        for (std::size_t i = 0; i < width.size(); ++i) {
            const std::string cell = i < cells.size() ? cells[i] : "";
            if (i > 0) line += "  ";
            line += std::string(width[i] - cell.size(), ' ') + cell;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        return line + "\n";
    };
    std::string out = render(header);
    std::size_t total = 0;
    for (std::size_t w : width) total += w;
    out += std::string(total + 2 * (width.empty() ? 0 : width.size() - 1), '-') + "\n";
    for (const auto& row : rows) out += render(row);
    return out;
}

std::string params_text_table(const std::vector<OptimalParams>& rows) {
    std::vector<std::vector<std::string>> cells;
    for (const OptimalParams& row : rows) {
        cells.push_back({std::to_string(row.n), format_number(row.d0), format_number(row.d), format_number(row.a),
                         format_number(row.b), std::to_string(row.T), std::to_string(row.Z)});
    }
    return text_table({"n", "d0", "d", "a", "b", "T", "Z"}, cells);
}

// w(n) of the earlier trinomial bound 2 v(n) w(n) + 8.
std::optional<int> thomas_w(int n) {
    if (n < 5) return std::nullopt;
    if (n == 5) return 27;
    if (n == 6) return 16;
    if (n == 7) return 13;
    if (n == 8) return 11;
    if (n == 9) return 9;
    if (n <= 11) return 8;
    if (n <= 16) return 7;
    if (n <= 37) return 6;
    return 5;
}

const char* thomas_caveat() {
    return "w(5) = 27 rests on an estimate that fails for b = 1.5, n = 5; not used here";
}

std::vector<ZBand> z_bands(const ZTable& table, int n_max) {
    std::vector<ZBand> bands;
    const int last = std::min(n_max, kAsymptoticDegree - 1);
    for (int n = kMinDegree; n <= last; ++n) {
        const int z = table.z(n);
        const int w = *thomas_w(n);
        if (bands.empty() || bands.back().z != z || bands.back().w != w) {
            ZBand band;
            band.n_lo = n;
            band.z = z;
            band.w = w;
            band.odd_total = 2 * 3 * z + 8;
            band.even_total = 2 * 4 * z + 8;
            band.odd_total_w = 2 * 3 * w + 8;
            band.even_total_w = 2 * 4 * w + 8;
            bands.push_back(band);
        }
        bands.back().n_hi = n;
    }
    if (!bands.empty() && n_max >= kAsymptoticDegree - 1) bands.back().open = true;
    return bands;
}

std::string z_bands_text(const std::vector<ZBand>& bands) {
    std::vector<std::vector<std::string>> cells;
    for (const ZBand& band : bands) {
        std::string range;
        if (band.open) {
            range = ">=" + std::to_string(band.n_lo);
        } else if (band.n_lo == band.n_hi) {
            range = std::to_string(band.n_lo);
        } else {
            range = std::to_string(band.n_lo) + "-" + std::to_string(band.n_hi);
        }
        cells.push_back({range, std::to_string(band.z), std::to_string(band.w),
                         std::to_string(band.odd_total) + "/" + std::to_string(band.even_total),
                         std::to_string(band.odd_total_w) + "/" + std::to_string(band.even_total_w)});
    }
    std::string out = text_table({"n", "z(n)", "w(n)", "2vz+8 (odd/even)", "2vw+8 (odd/even)"}, cells);
    out += "n = 5: w = 27 (dagger). ";
    out += thomas_caveat();
    out += "\n";
    return out;
}

nlohmann::json to_json(const BoundCheck& check) {
    return {{"name", check.name}, {"ok", check.ok}, {"detail", check.detail}};
}

nlohmann::json to_json(const VerificationReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const BoundCheck& check : report.checks) checks.push_back(to_json(check));
    nlohmann::json solutions = nlohmann::json::array();
    for (const SolutionRecord& s : report.solutions) {
        nlohmann::json entry{{"p", s.p}, {"q", s.q}, {"value", s.value}, {"regular", s.regular}, {"special", s.special}};
        entry["belongs_to"] = s.belongs_to ? nlohmann::json(*s.belongs_to) : nlohmann::json(nullptr);
        solutions.push_back(std::move(entry));
    }
    return {{"form", report.form.to_string()},
            {"coefficients", {report.form.h_n(), report.form.h_k(), report.form.h_0()}},
            {"n", report.form.n()},
            {"k", report.form.k()},
            {"box", report.box},
            {"box_complete", true},
            {"z", report.z},
            {"v", report.v},
            {"ell", report.ell},
            {"total", report.total},
            {"regular", report.regular},
            {"near_axes", report.near_axes},
            {"R_F", report.R_F},
            {"C_F", report.C_F},
            {"per_exceptional", report.per_exceptional},
            {"ok", report.ok()},
            {"checks", checks},
            {"solutions", solutions}};
}

nlohmann::json to_json(const SuiteResult& suite) {
    return {{"name", suite.name},           {"instances", suite.instances},
            {"failures", suite.failures},   {"passed", suite.instances - suite.failures},
            {"worst", suite.worst},         {"ok", suite.ok()},
            {"counterexamples", suite.counterexamples}};
}

nlohmann::json survey_json(const SurveyResult& survey) {
    nlohmann::json checks = nlohmann::json::object();
    for (const std::string& name : bound_check_names()) checks[name] = {{"passed", 0}, {"failed", 0}};
    nlohmann::json failures = nlohmann::json::array();
    for (const VerificationReport& report : survey.forms) {
        for (const BoundCheck& check : report.checks) {
            auto& slot = checks[check.name][check.ok ? "passed" : "failed"];
            slot = slot.get<std::size_t>() + 1;
        }
        if (!report.ok()) failures.push_back(to_json(report));
    }
    return {{"degree", survey.degree},
            {"height", survey.height},
            {"box", survey.box},
            {"candidates", survey.stats.candidates},
            {"irreducible", survey.stats.irreducible},
            {"reducible", survey.stats.reducible},
            {"unknown", survey.stats.unknown},
            {"forms", survey.forms.size()},
            {"max_count", survey.max_count()},
            {"violations", survey.violations()},
            {"checks", checks},
            {"counterexamples", failures}};
}

}  // namespace thue::report
