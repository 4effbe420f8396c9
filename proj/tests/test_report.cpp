#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "permsign/errors.hpp"
#include "permsign/report.hpp"
#include "permsign/verifier.hpp"

using namespace permsign;
using namespace permsign::verifier;
namespace report = permsign::report;

namespace {

VerificationRecord one(TheoremId id, CaseParams params) { return verify({id, params}); }

// A record set touching every value shape and every status, including an
// honest mismatch (the p = 3 closed form misses the observed sign at r = 1).
std::vector<VerificationRecord> mixed_records() {
    std::vector<VerificationRecord> records;
    auto append = [&](SweepResult r) {
        records.insert(records.end(), r.records.begin(), r.records.end());
    };
    SweepOptions small;
    small.pmin = 3;
    small.pmax = 30;
    append(sweep(TheoremId::lerch, {.pmin = 3, .pmax = 14}));
    append(sweep(TheoremId::sigma31, {.pmin = 3, .pmax = 60}));
    append(sweep(TheoremId::np_parity, {.pmin = 3, .pmax = 60}));
    append(sweep(TheoremId::primroot_split, {.pmin = 3, .pmax = 40, .max_modulus = 700}));
    append(sweep(TheoremId::primroot_sign, small));
    SweepOptions sampled;
    sampled.pmin = 13;
    sampled.pmax = 17;
    sampled.roots = RootSelection::smallest(1);
    append(sweep(TheoremId::primroot_split, sampled));
    return records;
}

std::filesystem::path temp_file(const char* name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("csv layout: header plus one fixed-shape line per record") {
    std::string text = report::to_csv({one(TheoremId::lerch, {.n = 6, .a = 5}),
                                       one(TheoremId::tau_star, {.p = 7}),
                                       one(TheoremId::np_parity, {.p = 3}),
                                       one(TheoremId::primroot_split, {.p = 13, .r = 1})});
    std::istringstream lines(text);
    std::string line;
    std::getline(lines, line);
    CHECK(line == report::kCsvHeader);
    std::getline(lines, line);
    CHECK(line == "lerch,,,5,,6,+1,+1,,,match");  // lerch's a rides in the k column
    std::getline(lines, line);
    CHECK(line == "tau-star,7,,,,,-1,-1,1,1,match");
    std::getline(lines, line);
    CHECK(line == "np-parity,3,,,,,even,even,1,,match");
    std::getline(lines, line);
    CHECK(line == "primroot-split,13,1,,,,2:2,2:2,,,match");
    CHECK(!std::getline(lines, line));
}

TEST_CASE("json layout: array of flat objects, absent fields omitted") {
    std::string text = report::to_json(
        {one(TheoremId::lerch, {.n = 6, .a = 5}), one(TheoremId::np_parity, {.p = 5}),
         one(TheoremId::primroot_split, {.p = 13, .r = 1})});
    CHECK(text.front() == '[');
    CHECK(text.back() == '\n');

    auto doc = nlohmann::json::parse(text);
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() == 3);
    CHECK(doc[0]["theorem_id"] == "lerch");
    CHECK(doc[0]["k"] == 5);
    CHECK(doc[0]["n"] == 6);
    CHECK(!doc[0].contains("p"));
    CHECK(!doc[0].contains("h_neg_p"));
    CHECK(!doc[0].contains("aux_jacobi"));  // even modulus: no symbol
    CHECK(doc[0]["predicted"] == 1);
    CHECK(doc[0]["status"] == "match");
    CHECK(doc[1]["theorem_id"] == "np-parity");
    CHECK(doc[1]["predicted"] == "even");
    CHECK(doc[1]["observed"] == "even");
    CHECK(doc[1]["status"] == "conjecture-match");
    CHECK(!doc[1].contains("h_neg_p"));  // p = 1 (mod 4)
    CHECK(doc[2]["predicted"] == nlohmann::json::array({2, 2}));
}

TEST_CASE("round trip: csv and json reproduce the records exactly") {
    std::vector<VerificationRecord> records = mixed_records();
    REQUIRE(records.size() > 100);
    // Nothing in the sweeps yields conjecture-mismatch; doctor one record so
    // every status string passes through the writers and parsers.
    records.push_back(records.back());
    records.back().status = Status::conjecture_mismatch;

    std::istringstream csv(report::to_csv(records));
    std::vector<VerificationRecord> from_csv = report::parse_csv(csv, "mem.csv");
    CHECK(from_csv == records);

    std::istringstream json(report::to_json(records));
    std::vector<VerificationRecord> from_json = report::parse_json(json, "mem.json");
    CHECK(from_json == records);

    CHECK(report::summarize(from_csv) == report::summarize(records));

    SweepSummary summary = report::summarize(records);
    CHECK(summary.total == records.size());
    CHECK(summary.mismatch > 0);
    CHECK(summary.conjecture_match > 0);
    CHECK(summary.conjecture_mismatch > 0);
    CHECK(summary.paper_discrepancy_noted > 0);
    CHECK(summary.match > 0);
}

TEST_CASE("csv parser: location-bearing rejections") {
    auto expect_error = [](const std::string& text, std::size_t line) {
        std::istringstream in(text);
        try {
            report::parse_csv(in, "f.csv");
            FAIL("expected parse_error for: " << text);
        } catch (const parse_error& e) {
            CHECK(e.file == "f.csv");
            CHECK(e.line == line);
        }
    };
    const std::string header(report::kCsvHeader);
    expect_error("nope\n", 1);
    expect_error("", 1);
    expect_error(header + "\nlerch,1\n", 2);
    expect_error(header + "\nzzz,,,5,,6,+1,+1,,,match\n", 2);
    expect_error(header + "\nlerch,,,5,,6,+2,+1,,,match\n", 2);
    expect_error(header + "\nlerch,,,5,,6,+1,+1,,,sideways\n", 2);
    expect_error(header + "\nlerch,,,5,,6,+1,odd,,,match\n", 2);   // value kinds differ
    expect_error(header + "\nlerch,,,5,,,+1,+1,,,match\n", 2);     // n missing
    expect_error(header + "\ntau-star,7,,,,6,-1,-1,1,1,match\n", 2);  // stray n
    expect_error(header + "\ntau-star,7,,,,,-1,-1,1,5,match\n", 2);   // symbol out of range
    expect_error(header + "\ntau-star,7,,,,,-1,-1,1,1,match\nlerch,1\n", 3);
    expect_error(header + "\nprimroot-split,13,1,,,,2:x,2:2,,,match\n", 2);
}

TEST_CASE("csv parser: tolerates blank lines and CR line endings") {
    std::string text(report::kCsvHeader);
    text += "\r\n\r\ntau-star,7,,,,,-1,-1,1,1,match\r\n\n";
    std::istringstream in(text);
    std::vector<VerificationRecord> records = report::parse_csv(in, "f.csv");
    REQUIRE(records.size() == 1);
    CHECK(records[0] == one(TheoremId::tau_star, {.p = 7}));
}

TEST_CASE("json parser: location-bearing rejections") {
    auto expect_error = [](const std::string& text, std::size_t line) {
        std::istringstream in(text);
        try {
            report::parse_json(in, "f.json");
            FAIL("expected parse_error for: " << text);
        } catch (const parse_error& e) {
            CHECK(e.file == "f.json");
            CHECK(e.line == line);
        }
    };
    expect_error("{}\n", 1);  // top level must be an array
    expect_error("[\n  {\"theorem_id\": \"zzz\"}\n]\n", 2);
    expect_error("[\n\n  {\"theorem_id\": \"tau-star\", \"p\": 7}\n]\n", 3);  // missing fields
    expect_error(
        "[\n  {\"theorem_id\": \"tau-star\", \"p\": 7, \"predicted\": -1, \"observed\": -1,\n"
        "   \"h_neg_p\": 1, \"aux_jacobi\": 1, \"status\": \"match\", \"bogus\": 3}\n]\n",
        2);
    expect_error("[\n  17\n]\n", 2);  // record must be an object
    // Syntax error: the stray comma trips the parser inside line 2.
    expect_error("[\n  {\"theorem_id\": \"tau-star\",}\n]\n", 2);
}

TEST_CASE("json parser: accepts its own output for every value shape") {
    std::vector<VerificationRecord> records = {one(TheoremId::primroot_split, {.p = 5, .r = 2}),
                                               one(TheoremId::np_parity, {.p = 7})};
    std::istringstream in(report::to_json(records));
    CHECK(report::parse_json(in, "mem.json") == records);
}

TEST_CASE("parse_file dispatches on the first non-space byte") {
    std::vector<VerificationRecord> records = {one(TheoremId::tau_star, {.p = 7}),
                                               one(TheoremId::sigma31, {.p = 5})};

    auto csv_path = temp_file("permsign_report_test.csv");
    std::ofstream(csv_path) << report::to_csv(records);
    CHECK(report::parse_file(csv_path.string()) == records);

    auto json_path = temp_file("permsign_report_test.json");
    std::ofstream(json_path) << "\n  " << report::to_json(records);
    CHECK(report::parse_file(json_path.string()) == records);

    std::filesystem::remove(csv_path);
    std::filesystem::remove(json_path);
    try {
        report::parse_file(csv_path.string());
        FAIL("expected parse_error for a missing file");
    } catch (const parse_error& e) {
        CHECK(e.file == csv_path.string());
    }
}

TEST_CASE("render_table: alignment, plain text, and status coloring") {
    std::vector<VerificationRecord> records = {one(TheoremId::tau_star, {.p = 7}),
                                               one(TheoremId::sigma31, {.p = 5}),
                                               one(TheoremId::np_parity, {.p = 13}),
                                               one(TheoremId::primroot_sign, {.p = 3, .r = 1, .g = 2})};

    std::string plain = report::render_table(records, false);
    CHECK(plain.find("\x1b[") == std::string::npos);
    CHECK(plain.find("theorem") != std::string::npos);
    CHECK(plain.find("h(-p)") != std::string::npos);
    CHECK(plain.find("p=7") != std::string::npos);
    CHECK(plain.find("p=3 r=1 g=2") != std::string::npos);
    CHECK(plain.find("paper-discrepancy-noted") != std::string::npos);
    std::istringstream lines(plain);
    std::string line;
    std::size_t count = 0;
    while (std::getline(lines, line)) {
        count++;
        CHECK(line.find_last_not_of(' ') == line.size() - 1);  // no trailing spaces
    }
    CHECK(count == records.size() + 1);

    std::string colored = report::render_table(records, true);
    CHECK(colored.find("\x1b[32mmatch\x1b[0m") != std::string::npos);
    CHECK(colored.find("\x1b[36mpaper-discrepancy-noted\x1b[0m") != std::string::npos);
    CHECK(colored.find("\x1b[31mmismatch\x1b[0m") != std::string::npos);

    std::vector<VerificationRecord> disagreeing = {records[3]};
    disagreeing[0].status = Status::conjecture_mismatch;
    CHECK(report::render_table(disagreeing, true).find("\x1b[33m") != std::string::npos);
}
