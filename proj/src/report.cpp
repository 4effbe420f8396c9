#include "permsign/report.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include <json.hpp>

#include "permsign/errors.hpp"

namespace permsign::report {

using verifier::CountPair;
using verifier::Parity;
using verifier::Status;
using verifier::TheoremCase;
using verifier::TheoremId;
using verifier::Value;
using verifier::VerificationRecord;
using ordered_json = nlohmann::ordered_json;

namespace {

// Which CSV columns a theorem populates. Lerch's multiplier rides in the k
// column because the flat schema has no slot of its own for it.
struct Columns {
    bool p = false, r = false, k = false, g = false, n = false;
};

Columns columns_for(TheoremId id) {
    switch (id) {
        case TheoremId::lerch: return {.k = true, .n = true};
        case TheoremId::kth_power: return {.p = true, .k = true};
        case TheoremId::primroot_sign: return {.p = true, .r = true, .g = true};
        case TheoremId::primroot_split: return {.p = true, .r = true};
        case TheoremId::kohl_ii: return {.p = true, .g = true};
        default: return {.p = true};
    }
}

// The five parameter columns of one row, in schema order.
struct ParamColumns {
    std::optional<std::int64_t> p, r, k, g, n;
};

ParamColumns to_columns(const TheoremCase& c) {
    ParamColumns cols;
    cols.p = c.params.p;
    cols.r = c.params.r;
    cols.k = c.id == TheoremId::lerch ? c.params.a : c.params.k;
    cols.g = c.params.g;
    cols.n = c.params.n;
    return cols;
}

std::string encode_value(const Value& v) {
    if (const auto* s = std::get_if<perm::Sign>(&v))
        return *s == perm::Sign::positive ? "+1" : "-1";
    if (const auto* p = std::get_if<Parity>(&v)) return *p == Parity::even ? "even" : "odd";
    const auto& pair = std::get<CountPair>(v);
    return std::to_string(pair.plus) + ":" + std::to_string(pair.minus);
}

std::optional<std::int64_t> parse_int(std::string_view s) {
    std::int64_t value = 0;
    const char* begin = s.data();
    const char* end = begin + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) return std::nullopt;
    return value;
}

Value decode_value(std::string_view s) {
    if (s == "+1") return perm::Sign::positive;
    if (s == "-1") return perm::Sign::negative;
    if (s == "even") return Parity::even;
    if (s == "odd") return Parity::odd;
    if (auto colon = s.find(':'); colon != std::string_view::npos) {
        auto plus = parse_int(s.substr(0, colon));
        auto minus = parse_int(s.substr(colon + 1));
        if (plus && minus && *plus >= 0 && *minus >= 0) return CountPair{*plus, *minus};
    }
    throw std::runtime_error("bad value '" + std::string(s) +
                             "' (want +1, -1, even, odd, or plus:minus)");
}

// One row in transit between a record and either serialization.
struct RawRow {
    std::string theorem_id;
    ParamColumns params;
    Value predicted = perm::Sign::positive;
    Value observed = perm::Sign::positive;
    std::optional<std::int64_t> h_neg_p;
    std::optional<std::int64_t> aux_jacobi;
    std::string status;
};

VerificationRecord assemble(const RawRow& row) {
    auto id = verifier::theorem_from_string(row.theorem_id);
    if (!id) throw std::runtime_error("unknown theorem_id '" + row.theorem_id + "'");
    auto status = verifier::status_from_string(row.status);
    if (!status) throw std::runtime_error("unknown status '" + row.status + "'");

    Columns want = columns_for(*id);
    auto check = [&](bool needed, const std::optional<std::int64_t>& v, const char* name) {
        if (needed && !v)
            throw std::runtime_error(row.theorem_id + " row is missing column " + name);
        if (!needed && v)
            throw std::runtime_error(row.theorem_id + " row must leave column " +
                                     std::string(name) + " empty");
    };
    check(want.p, row.params.p, "p");
    check(want.r, row.params.r, "r");
    check(want.k, row.params.k, "k");
    check(want.g, row.params.g, "g");
    check(want.n, row.params.n, "n");

    if (row.predicted.index() != row.observed.index())
        throw std::runtime_error("predicted and observed are different kinds of value");
    if (row.aux_jacobi && *row.aux_jacobi != 1 && *row.aux_jacobi != -1 && *row.aux_jacobi != 0)
        throw std::runtime_error("aux_jacobi must be -1, 0 or 1");

    VerificationRecord rec;
    rec.theorem_case.id = *id;
    rec.theorem_case.params.p = row.params.p;
    rec.theorem_case.params.r = row.params.r;
    rec.theorem_case.params.g = row.params.g;
    rec.theorem_case.params.n = row.params.n;
    if (*id == TheoremId::lerch) rec.theorem_case.params.a = row.params.k;
    else rec.theorem_case.params.k = row.params.k;
    rec.predicted = row.predicted;
    rec.observed = row.observed;
    rec.h_neg_p = row.h_neg_p;
    if (row.aux_jacobi) rec.jacobi_symbol = static_cast<int>(*row.aux_jacobi);
    rec.status = *status;
    return rec;
}

std::string opt_str(const std::optional<std::int64_t>& v) {
    return v ? std::to_string(*v) : std::string();
}

std::vector<VerificationRecord> parse_csv_text(const std::string& text,
                                               const std::string& filename) {
    std::vector<VerificationRecord> records;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        lineno++;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!saw_header) {
            if (line != kCsvHeader)
                throw parse_error(filename, lineno,
                                  "bad header (want '" + std::string(kCsvHeader) + "')");
            saw_header = true;
            continue;
        }
        if (line.empty()) continue;

        std::vector<std::string> fields;
        std::size_t start = 0;
        for (;;) {
            std::size_t comma = line.find(',', start);
            fields.push_back(line.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (fields.size() != 11)
            throw parse_error(filename, lineno,
                              "want 11 comma-separated fields, got " +
                                  std::to_string(fields.size()));

        auto int_field = [&](std::size_t i, const char* name) -> std::optional<std::int64_t> {
            if (fields[i].empty()) return std::nullopt;
            auto v = parse_int(fields[i]);
            if (!v)
                throw parse_error(filename, lineno,
                                  std::string("column ") + name + ": '" + fields[i] +
                                      "' is not an integer");
            return v;
        };
        try {
            RawRow row;
            row.theorem_id = fields[0];
            row.params.p = int_field(1, "p");
            row.params.r = int_field(2, "r");
            row.params.k = int_field(3, "k");
            row.params.g = int_field(4, "g");
            row.params.n = int_field(5, "n");
            row.predicted = decode_value(fields[6]);
            row.observed = decode_value(fields[7]);
            row.h_neg_p = int_field(8, "h_neg_p");
            row.aux_jacobi = int_field(9, "aux_jacobi");
            row.status = fields[10];
            records.push_back(assemble(row));
        } catch (const parse_error&) {
            throw;
        } catch (const std::exception& e) {
            throw parse_error(filename, lineno, e.what());
        }
    }
    if (!saw_header) throw parse_error(filename, 1, "empty file (missing header)");
    return records;
}

ordered_json value_to_json(const Value& v) {
    if (const auto* s = std::get_if<perm::Sign>(&v)) return perm::to_int(*s);
    if (const auto* p = std::get_if<Parity>(&v))
        return *p == Parity::even ? "even" : "odd";
    const auto& pair = std::get<CountPair>(v);
    return ordered_json::array({pair.plus, pair.minus});
}

Value value_from_json(const ordered_json& j) {
    if (j.is_number_integer()) {
        std::int64_t v = j.get<std::int64_t>();
        if (v == 1) return perm::Sign::positive;
        if (v == -1) return perm::Sign::negative;
        throw std::runtime_error("numeric value must be 1 or -1, got " + std::to_string(v));
    }
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "even") return Parity::even;
        if (s == "odd") return Parity::odd;
        throw std::runtime_error("string value must be 'even' or 'odd', got '" + s + "'");
    }
    if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer()) {
        CountPair pair{j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
        if (pair.plus >= 0 && pair.minus >= 0) return pair;
    }
    throw std::runtime_error("bad value (want +-1, 'even'/'odd', or [plus, minus])");
}

// 1-based line of the byte at `offset` within `text`.
std::size_t line_of_offset(const std::string& text, std::size_t offset) {
    offset = std::min(offset, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + offset, '\n'));
}

// Start line of each top-level array element, by a small depth scanner.
// `expecting` is raised by the opening '[' and by each top-level comma, and
// the next non-space byte (object, array, or scalar alike) claims the line.
std::vector<std::size_t> element_lines(const std::string& text) {
    std::vector<std::size_t> lines;
    std::size_t line = 1;
    int depth = 0;
    bool in_string = false, escaped = false, expecting = false;
    for (char ch : text) {
        if (ch == '\n') line++;
        if (in_string) {
            if (escaped) escaped = false;
            else if (ch == '\\') escaped = true;
            else if (ch == '"') in_string = false;
            continue;
        }
        if (depth == 1 && expecting && !std::isspace(static_cast<unsigned char>(ch)) &&
            ch != ']') {
            lines.push_back(line);
            expecting = false;
        }
        if (ch == '"') in_string = true;
        else if (ch == '[' || ch == '{') {
            if (ch == '[' && depth == 0) expecting = true;
            depth++;
        } else if (ch == ']' || ch == '}') depth--;
        else if (ch == ',' && depth == 1) expecting = true;
    }
    return lines;
}

std::vector<VerificationRecord> parse_json_text(const std::string& text,
                                                const std::string& filename) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(filename, line_of_offset(text, e.byte ? e.byte - 1 : 0), e.what());
    }
    if (!doc.is_array()) throw parse_error(filename, 1, "top level must be an array of records");

    std::vector<std::size_t> lines = element_lines(text);
    std::vector<VerificationRecord> records;
    for (std::size_t i = 0; i < doc.size(); i++) {
        std::size_t lineno = i < lines.size() ? lines[i] : 1;
        const ordered_json& o = doc[i];
        try {
            if (!o.is_object()) throw std::runtime_error("record must be an object");
            RawRow row;
            bool saw_predicted = false, saw_observed = false;
            for (const auto& [key, val] : o.items()) {
                auto int_key = [&]() -> std::int64_t {
                    if (!val.is_number_integer())
                        throw std::runtime_error("field " + key + " must be an integer");
                    return val.get<std::int64_t>();
                };
                if (key == "theorem_id") row.theorem_id = val.get<std::string>();
                else if (key == "p") row.params.p = int_key();
                else if (key == "r") row.params.r = int_key();
                else if (key == "k") row.params.k = int_key();
                else if (key == "g") row.params.g = int_key();
                else if (key == "n") row.params.n = int_key();
                else if (key == "predicted") { row.predicted = value_from_json(val); saw_predicted = true; }
                else if (key == "observed") { row.observed = value_from_json(val); saw_observed = true; }
                else if (key == "h_neg_p") row.h_neg_p = int_key();
                else if (key == "aux_jacobi") row.aux_jacobi = int_key();
                else if (key == "status") row.status = val.get<std::string>();
                else throw std::runtime_error("unknown field '" + key + "'");
            }
            if (row.theorem_id.empty()) throw std::runtime_error("missing theorem_id");
            if (!saw_predicted || !saw_observed)
                throw std::runtime_error("missing predicted/observed");
            if (row.status.empty()) throw std::runtime_error("missing status");
            records.push_back(assemble(row));
        } catch (const std::exception& e) {
            throw parse_error(filename, lineno, "record " + std::to_string(i + 1) + ": " + e.what());
        }
    }
    return records;
}

std::string slurp(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string case_label(const TheoremCase& c) {
    std::string out;
    auto put = [&](const char* name, const std::optional<std::int64_t>& v) {
        if (!v) return;
        if (!out.empty()) out += ' ';
        out += name;
        out += '=';
        out += std::to_string(*v);
    };
    put("p", c.params.p);
    put("n", c.params.n);
    put("a", c.params.a);
    put("k", c.params.k);
    put("r", c.params.r);
    put("g", c.params.g);
    return out;
}

const char* status_color(Status s) {
    switch (s) {
        case Status::match:
        case Status::conjecture_match: return "32";
        case Status::mismatch: return "31";
        case Status::conjecture_mismatch: return "33";
        case Status::paper_discrepancy_noted: return "36";
    }
    return "0";
}

}  // namespace

std::string to_csv(const std::vector<VerificationRecord>& records) {
    std::string out(kCsvHeader);
    out += '\n';
    for (const auto& rec : records) {
        ParamColumns cols = to_columns(rec.theorem_case);
        out += verifier::to_string(rec.theorem_case.id);
        out += ',' + opt_str(cols.p) + ',' + opt_str(cols.r) + ',' + opt_str(cols.k) + ',' +
               opt_str(cols.g) + ',' + opt_str(cols.n);
        out += ',' + encode_value(rec.predicted) + ',' + encode_value(rec.observed);
        out += ',' + opt_str(rec.h_neg_p);
        out += ',';
        if (rec.jacobi_symbol) out += std::to_string(*rec.jacobi_symbol);
        out += ',';
        out += verifier::to_string(rec.status);
        out += '\n';
    }
    return out;
}

std::string to_json(const std::vector<VerificationRecord>& records) {
    ordered_json arr = ordered_json::array();
    for (const auto& rec : records) {
        ordered_json o = ordered_json::object();
        o["theorem_id"] = verifier::to_string(rec.theorem_case.id);
        ParamColumns cols = to_columns(rec.theorem_case);
        if (cols.p) o["p"] = *cols.p;
        if (cols.r) o["r"] = *cols.r;
        if (cols.k) o["k"] = *cols.k;
        if (cols.g) o["g"] = *cols.g;
        if (cols.n) o["n"] = *cols.n;
        o["predicted"] = value_to_json(rec.predicted);
        o["observed"] = value_to_json(rec.observed);
        if (rec.h_neg_p) o["h_neg_p"] = *rec.h_neg_p;
        if (rec.jacobi_symbol) o["aux_jacobi"] = *rec.jacobi_symbol;
        o["status"] = verifier::to_string(rec.status);
        arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
}

std::vector<VerificationRecord> parse_csv(std::istream& in, const std::string& filename) {
    return parse_csv_text(slurp(in), filename);
}

std::vector<VerificationRecord> parse_json(std::istream& in, const std::string& filename) {
    return parse_json_text(slurp(in), filename);
}

std::vector<VerificationRecord> parse_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error(path, 1, "cannot open file");
    std::string text = slurp(in);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[')
        return parse_json_text(text, path);
    return parse_csv_text(text, path);
}

std::string render_table(const std::vector<VerificationRecord>& records, bool color) {
    const std::vector<std::string> header = {"theorem",  "case",   "predicted", "observed",
                                             "h(-p)",    "jacobi", "status"};
    std::vector<std::vector<std::string>> rows;
    rows.push_back(header);
    for (const auto& rec : records) {
        rows.push_back({std::string(verifier::to_string(rec.theorem_case.id)),
                        case_label(rec.theorem_case), encode_value(rec.predicted),
                        encode_value(rec.observed), opt_str(rec.h_neg_p),
                        rec.jacobi_symbol ? std::to_string(*rec.jacobi_symbol) : std::string(),
                        std::string(verifier::to_string(rec.status))});
    }
    std::vector<std::size_t> width(header.size(), 0);
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); i++) width[i] = std::max(width[i], row[i].size());

    std::string out;
    for (std::size_t r = 0; r < rows.size(); r++) {
        std::string line;
        for (std::size_t i = 0; i < rows[r].size(); i++) {
            std::string cell = rows[r][i];
            std::size_t pad = width[i] - cell.size();
            if (color && r > 0 && i == 6)
                cell = "\x1b[" + std::string(status_color(records[r - 1].status)) + "m" + cell +
                       "\x1b[0m";
            line += cell;
            if (i + 1 < rows[r].size()) line += std::string(pad + 2, ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    }
    return out;
}

verifier::SweepSummary summarize(const std::vector<VerificationRecord>& records) {
    verifier::SweepSummary summary;
    for (const auto& rec : records) summary.add(rec.status);
    return summary;
}

}  // namespace permsign::report
