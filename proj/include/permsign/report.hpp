#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "permsign/verifier.hpp"

namespace permsign::report {

inline constexpr std::string_view kCsvHeader =
    "theorem_id,p,r,k,g,n,predicted,observed,h_neg_p,aux_jacobi,status";

// One flat row shape covers every theorem; inapplicable fields stay empty.
// The schema has no `a` column, so lerch's multiplier a travels in the k
// column; parsers move it back.
std::string to_csv(const std::vector<verifier::VerificationRecord>& records);

// Array of objects with the same fields as the CSV columns. Signs are +1/-1
// integers, parities "even"/"odd" strings, count pairs [plus, minus] arrays.
std::string to_json(const std::vector<verifier::VerificationRecord>& records);

// Both parsers throw parse_error carrying `filename` and a 1-based line.
std::vector<verifier::VerificationRecord> parse_csv(std::istream& in,
                                                    const std::string& filename);
std::vector<verifier::VerificationRecord> parse_json(std::istream& in,
                                                     const std::string& filename);

// Reads the file and dispatches on the first non-space byte ('[' means JSON).
std::vector<verifier::VerificationRecord> parse_file(const std::string& path);

// Aligned dump for terminals. Colors only the status column; pass
// color = false (e.g. when NO_COLOR is set or stdout is not a tty) for
// plain text.
std::string render_table(const std::vector<verifier::VerificationRecord>& records,
                         bool color);

verifier::SweepSummary summarize(const std::vector<verifier::VerificationRecord>& records);

}  // namespace permsign::report
