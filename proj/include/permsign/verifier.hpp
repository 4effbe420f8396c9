#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "permsign/permutation.hpp"

namespace permsign::verifier {

// Every closed-form claim the verifier knows how to check. Each pairs a
// prediction (evaluated from the closed form, no permutation built) with an
// observation (brute-force construction and measurement).
enum class TheoremId {
    lerch,             // sign of t -> a*t mod n, all three residue classes of n
    kth_power,         // sign of x -> x^k on (Z/pZ)*
    sun_cube,          // sign of x -> x^3 on Z/pZ, p = 2 (mod 3)
    sigma21,           // A2 against A1
    sigma31,           // A3 against A1
    sigma23,           // A2 against A3
    sigma01_sun,       // A0 against A1, p = 3 (mod 4)
    sigma40,           // A4 against A0, p = 3 (mod 4)
    sigma41,           // A4 against A1, p = 3 (mod 4)
    np_parity,         // inversions of folded squares
    tau_star,          // folded-inverse involution on 1..(p-1)/2
    lemma_sum_squares, // prod (i^2 + j^2) mod p
    mordell,           // ((p-1)/2)! against (-1)^((h+1)/2)
    vandermonde_e,     // prod of all pairwise differences 1..p-1
    primroot_sign,     // sigma_g over p^r, p = 3 (mod 4)
    primroot_split,    // sign split of all primitive roots, p = 1 (mod 4)
    kohl_ii,           // sigma_g at r = 1 against -((p-1)/2)! mod p
};

std::string_view to_string(TheoremId id);
std::optional<TheoremId> theorem_from_string(std::string_view name);
const std::vector<TheoremId>& all_theorems();

// Parameters of a single case. Which keys must be present depends on the
// theorem id; verify() rejects missing or extra keys.
struct CaseParams {
    std::optional<std::int64_t> p;
    std::optional<std::int64_t> n;
    std::optional<std::int64_t> a;
    std::optional<std::int64_t> k;
    std::optional<std::int64_t> r;
    std::optional<std::int64_t> g;
    bool operator==(const CaseParams&) const = default;
};

struct TheoremCase {
    TheoremId id = TheoremId::lerch;
    CaseParams params;
    bool operator==(const TheoremCase&) const = default;
};

enum class Parity { even, odd };

// Sign split of a set of primitive roots: how many give +1 / -1.
struct CountPair {
    std::int64_t plus = 0;
    std::int64_t minus = 0;
    bool operator==(const CountPair&) const = default;
};

using Value = std::variant<perm::Sign, Parity, CountPair>;

enum class Status {
    match,                    // theorem-backed, predicted = observed
    mismatch,                 // theorem-backed, predicted != observed (build-failing)
    conjecture_match,         // conjecture-only case, values agree
    conjecture_mismatch,      // conjecture-only case, values differ (not build-failing)
    paper_discrepancy_noted,  // agreement with a corrected form whose printed
                              // source value differs
};

std::string_view to_string(Status s);
std::optional<Status> status_from_string(std::string_view name);

struct VerificationRecord {
    TheoremCase theorem_case;
    Value predicted = perm::Sign::positive;
    Value observed = perm::Sign::positive;
    std::optional<std::int64_t> h_neg_p;        // present whenever p = 3 (mod 4)
    std::optional<int> jacobi_symbol;           // symbol used by the prediction
    Status status = Status::match;
    bool operator==(const VerificationRecord&) const = default;
};

struct VerifyOptions {
    // primroot-split only: observe this many smallest roots instead of all of
    // them. A sample cannot confirm the exact half-split, so such records are
    // reported as conjecture-match while neither sign count exceeds the
    // predicted half, conjecture-mismatch once one does.
    std::optional<std::size_t> split_sample;
};

// Closed-form value. Uses arith/classnum only; never builds a permutation.
Value predict(const TheoremCase& c);

// Brute-force value: builds the permutation (or product) and measures it.
Value observe(const TheoremCase& c, const VerifyOptions& options = {});

VerificationRecord verify(const TheoremCase& c, const VerifyOptions& options = {});

// Which primitive roots a sweep feeds to root-indexed theorems.
struct RootSelection {
    bool all = false;
    std::size_t count = 8;
    static RootSelection every() { return {true, 0}; }
    static RootSelection smallest(std::size_t k) { return {false, k}; }
};

struct SweepOptions {
    std::int64_t pmin = 3;
    std::int64_t pmax = 3;
    std::int64_t kmax = 100;         // kth-power only
    std::uint64_t max_modulus = 0;   // p^r bound for prime-power theorems; 0 = pmax
    std::optional<RootSelection> roots;  // default: all for primroot-split, smallest 8 otherwise
    int jobs = 1;
};

struct SweepSummary {
    std::uint64_t total = 0;
    std::uint64_t match = 0;
    std::uint64_t mismatch = 0;
    std::uint64_t conjecture_match = 0;
    std::uint64_t conjecture_mismatch = 0;
    std::uint64_t paper_discrepancy_noted = 0;
    void add(Status s);
    bool failing() const { return mismatch > 0; }
    bool operator==(const SweepSummary&) const = default;
};

struct SweepResult {
    std::vector<VerificationRecord> records;
    SweepSummary summary;
};

// Deterministic case list, ascending in (p | n, then secondary parameters).
std::vector<TheoremCase> generate_cases(TheoremId id, const SweepOptions& options);

// Runs every generated case. Record order and content are independent of
// options.jobs; workers only fill a pre-ordered slot table.
SweepResult sweep(TheoremId id, const SweepOptions& options);

// `count` units mod n, deterministic and spread across [1, n): evenly spaced
// starting points, each advanced to the next residue coprime to n.
std::vector<std::uint64_t> sample_units(std::uint64_t n, std::size_t count);

}  // namespace permsign::verifier
