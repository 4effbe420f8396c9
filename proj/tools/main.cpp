// permsign: compute, verify and sweep permutation-sign identities on
// residue systems, and aggregate the resulting reports.
//
// Exit codes: 0 all theorem-backed cases match, 1 at least one theorem-backed
// mismatch, 2 usage or I/O error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <unistd.h>

#include <CLI11.hpp>

#include "permsign/arith.hpp"
#include "permsign/classnum.hpp"
#include "permsign/constructions.hpp"
#include "permsign/errors.hpp"
#include "permsign/report.hpp"
#include "permsign/verifier.hpp"

namespace {

using permsign::arith::Modulus;
using permsign::arith::PrimePower;
using permsign::perm::Sign;
namespace constructions = permsign::constructions;
namespace verifier = permsign::verifier;
namespace report = permsign::report;

bool stdout_color() {
    return isatty(fileno(stdout)) != 0 && std::getenv("NO_COLOR") == nullptr;
}

std::string sign_str(Sign s) { return s == Sign::positive ? "+1" : "-1"; }

// Optional int64 flag. attach() binds CLI11 to this object's storage, so the
// object must stay put (declare it, then attach).
struct OptInt {
    std::int64_t value = 0;
    CLI::Option* opt = nullptr;
    CLI::Option* attach(CLI::App* cmd, const std::string& flag, const std::string& help) {
        opt = cmd->add_option(flag, value, help);
        return opt;
    }
    std::optional<std::int64_t> get() const {
        if (opt && opt->count()) return value;
        return std::nullopt;
    }
    std::int64_t require(const char* name) const {
        auto v = get();
        if (!v) throw permsign::domain_error(std::string("missing required option --") + name);
        return *v;
    }
};

struct RootsFlag {
    std::string text;
    CLI::Option* opt = nullptr;
    std::optional<verifier::RootSelection> get() const {
        if (!opt || !opt->count()) return std::nullopt;
        if (text == "all") return verifier::RootSelection::every();
        try {
            std::size_t pos = 0;
            unsigned long k = std::stoul(text, &pos);
            if (pos == text.size() && k > 0) return verifier::RootSelection::smallest(k);
        } catch (...) {
        }
        throw permsign::domain_error("--roots wants 'all' or a positive count, got '" + text +
                                     "'");
    }
};

int run_compute_sign(const std::string& construction, const OptInt& p, const OptInt& n,
                     const OptInt& a, const OptInt& k, const OptInt& i, const OptInt& j,
                     const OptInt& r, const OptInt& g) {
    Sign s = Sign::positive;
    if (construction == "mul") {
        s = constructions::mul_perm(Modulus(static_cast<std::uint64_t>(n.require("n"))),
                                    a.require("a"))
                .sign();
    } else if (construction == "power") {
        s = constructions::power_perm(static_cast<std::uint64_t>(p.require("p")),
                                      static_cast<std::uint64_t>(k.require("k")))
                .sign();
    } else if (construction == "sigma-ij") {
        s = constructions::sigma_ij(static_cast<int>(i.require("i")),
                                    static_cast<int>(j.require("j")),
                                    static_cast<std::uint64_t>(p.require("p")))
                .sign();
    } else if (construction == "tau-star") {
        s = constructions::tau_p_perm(static_cast<std::uint64_t>(p.require("p"))).sign();
    } else if (construction == "sigma-g") {
        PrimePower pp(static_cast<std::uint64_t>(p.require("p")),
                      static_cast<unsigned>(r.get().value_or(1)));
        s = constructions::sigma_g_perm(pp, static_cast<std::uint64_t>(g.require("g"))).sign();
    } else if (construction == "cube") {
        s = constructions::cube_perm_with_zero(static_cast<std::uint64_t>(p.require("p"))).sign();
    } else {
        throw permsign::domain_error(
            "unknown construction '" + construction +
            "' (want mul, power, sigma-ij, tau-star, sigma-g, or cube)");
    }
    std::cout << sign_str(s) << "\n";
    return 0;
}

verifier::TheoremId parse_theorem(const std::string& name) {
    auto id = verifier::theorem_from_string(name);
    if (id) return *id;
    std::string known;
    for (verifier::TheoremId t : verifier::all_theorems()) {
        if (!known.empty()) known += ", ";
        known += verifier::to_string(t);
    }
    throw permsign::domain_error("unknown theorem '" + name + "' (known: " + known + ")");
}

int summary_exit(const verifier::SweepSummary& summary) { return summary.failing() ? 1 : 0; }

void print_summary(std::ostream& os, const verifier::SweepSummary& s) {
    os << "cases " << s.total << "  match " << s.match << "  mismatch " << s.mismatch
       << "  conjecture-match " << s.conjecture_match << "  conjecture-mismatch "
       << s.conjecture_mismatch << "  paper-discrepancy-noted " << s.paper_discrepancy_noted
       << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"permutation signs of residue sequences: compute, verify, sweep, report"};
    app.require_subcommand(1);

    // ---- compute ----
    CLI::App* compute = app.add_subcommand("compute", "compute a single value");
    compute->require_subcommand(1);

    CLI::App* c_sign = compute->add_subcommand(
        "sign", "sign of one named construction (mul, power, sigma-ij, tau-star, sigma-g, cube)");
    std::string construction;
    c_sign->add_option("construction", construction, "construction name")->required();
    OptInt cs_p;
    cs_p.attach(c_sign, "--p", "odd prime");
    OptInt cs_n;
    cs_n.attach(c_sign, "--n", "modulus");
    OptInt cs_a;
    cs_a.attach(c_sign, "--a", "multiplier");
    OptInt cs_k;
    cs_k.attach(c_sign, "--k", "exponent");
    OptInt cs_i;
    cs_i.attach(c_sign, "--i", "source sequence index (0..4)");
    OptInt cs_j;
    cs_j.attach(c_sign, "--j", "target sequence index (0..4)");
    OptInt cs_r;
    cs_r.attach(c_sign, "--r", "prime power exponent (default 1)");
    OptInt cs_g;
    cs_g.attach(c_sign, "--g", "primitive root");

    CLI::App* c_jacobi = compute->add_subcommand("jacobi", "Jacobi symbol (a/n), n odd");
    OptInt cj_a;
    cj_a.attach(c_jacobi, "--a", "numerator");
    OptInt cj_n;
    cj_n.attach(c_jacobi, "--n", "odd modulus");

    CLI::App* c_classnum =
        compute->add_subcommand("classnum", "class number h(-p) for p = 3 (mod 4)");
    OptInt cc_p;
    cc_p.attach(c_classnum, "--p", "prime = 3 (mod 4)");

    CLI::App* c_primroots = compute->add_subcommand("primroots", "primitive roots of p^r");
    OptInt cp_p;
    cp_p.attach(c_primroots, "--p", "odd prime");
    OptInt cp_r;
    cp_r.attach(c_primroots, "--r", "exponent (default 1)");
    OptInt cp_count;
    cp_count.attach(c_primroots, "--count", "only the smallest this many");

    CLI::App* c_np = compute->add_subcommand("np", "inversion count N_p of the folded squares");
    OptInt cn_p;
    cn_p.attach(c_np, "--p", "odd prime");

    CLI::App* c_sequence = compute->add_subcommand("sequence", "one residue sequence");
    std::string seq_label;
    c_sequence->add_option("label", seq_label, "a0, a1, a2, a3, a4, or units")->required();
    OptInt cq_p;
    cq_p.attach(c_sequence, "--p", "odd prime");
    OptInt cq_r;
    cq_r.attach(c_sequence, "--r", "exponent for label 'units' (default 1)");

    // ---- verify ----
    CLI::App* verify_cmd = app.add_subcommand("verify", "verify one theorem case");
    std::string v_theorem;
    verify_cmd->add_option("--theorem", v_theorem, "theorem id")->required();
    OptInt v_p;
    v_p.attach(verify_cmd, "--p", "odd prime");
    OptInt v_n;
    v_n.attach(verify_cmd, "--n", "modulus (lerch)");
    OptInt v_a;
    v_a.attach(verify_cmd, "--a", "multiplier (lerch)");
    OptInt v_k;
    v_k.attach(verify_cmd, "--k", "exponent (kth-power)");
    OptInt v_r;
    v_r.attach(verify_cmd, "--r", "prime power exponent");
    OptInt v_g;
    v_g.attach(verify_cmd, "--g", "primitive root");

    // ---- sweep ----
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "verify a theorem over a parameter range");
    std::string s_theorem;
    sweep_cmd->add_option("--theorem", s_theorem, "theorem id")->required();
    OptInt s_pmin;
    s_pmin.attach(sweep_cmd, "--pmin", "lower bound for p or n (default 3)");
    OptInt s_pmax;
    s_pmax.attach(sweep_cmd, "--pmax", "upper bound for p or n");
    s_pmax.opt->required();
    OptInt s_kmax;
    s_kmax.attach(sweep_cmd, "--kmax", "largest exponent k (default 100)");
    OptInt s_rmax;
    s_rmax.attach(sweep_cmd, "--rmax-modulus", "largest p^r to visit (default pmax)");
    RootsFlag s_roots;
    s_roots.opt = sweep_cmd->add_option(
        "--roots", s_roots.text,
        "primitive roots per modulus: 'all' or smallest K (default: all for primroot-split, "
        "8 otherwise)");
    std::string s_format = "table";
    sweep_cmd->add_option("--format", s_format, "table, csv, or json (default table)")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    std::string s_out;
    CLI::Option* s_out_opt = sweep_cmd->add_option("--out", s_out, "write the report here");
    std::int64_t s_jobs = 1;
    sweep_cmd->add_option("--jobs", s_jobs, "worker threads (default 1)")
        ->check(CLI::PositiveNumber);

    // ---- report ----
    CLI::App* report_cmd = app.add_subcommand("report", "merge sweep reports");
    std::vector<std::string> r_in;
    report_cmd->add_option("--in", r_in, "input report files (csv or json)");
    std::string r_out;
    CLI::Option* r_out_opt =
        report_cmd->add_option("--out", r_out, "write merged records here (.json for JSON)");

    try {
        app.parse(argc, argv);

        if (c_sign->parsed())
            return run_compute_sign(construction, cs_p, cs_n, cs_a, cs_k, cs_i, cs_j, cs_r, cs_g);
        if (c_jacobi->parsed()) {
            std::int64_t a = cj_a.require("a");
            std::uint64_t n = static_cast<std::uint64_t>(cj_n.require("n"));
            if (n % 2 == 0) throw permsign::domain_error("jacobi needs odd n");
            std::cout << permsign::arith::jacobi(a, n) << "\n";
            return 0;
        }
        if (c_classnum->parsed()) {
            std::uint64_t p = static_cast<std::uint64_t>(cc_p.require("p"));
            auto result = permsign::classnum::class_number_neg_p(p);
            std::cout << "h(-" << p << ") = " << result.h << "\n";
            return 0;
        }
        if (c_primroots->parsed()) {
            PrimePower pp(static_cast<std::uint64_t>(cp_p.require("p")),
                          static_cast<unsigned>(cp_r.get().value_or(1)));
            auto roots = cp_count.get()
                             ? permsign::arith::smallest_primitive_roots(
                                   pp, static_cast<std::size_t>(*cp_count.get()))
                             : permsign::arith::enumerate_primitive_roots(pp);
            for (std::size_t t = 0; t < roots.size(); t++)
                std::cout << (t ? " " : "") << roots[t];
            std::cout << "\n";
            return 0;
        }
        if (c_np->parsed()) {
            std::uint64_t p = static_cast<std::uint64_t>(cn_p.require("p"));
            std::cout << "N_" << p << " = " << constructions::count_Np(p) << "\n";
            return 0;
        }
        if (c_sequence->parsed()) {
            std::vector<std::uint64_t> entries;
            if (seq_label == "units") {
                PrimePower pp(static_cast<std::uint64_t>(cq_p.require("p")),
                              static_cast<unsigned>(cq_r.get().value_or(1)));
                entries = constructions::reduced_residues(pp).entries;
            } else if (seq_label.size() == 2 && seq_label[0] == 'a' && seq_label[1] >= '0' &&
                       seq_label[1] <= '4') {
                entries = constructions::sequence_A(seq_label[1] - '0',
                                                    static_cast<std::uint64_t>(cq_p.require("p")))
                              .entries;
            } else {
                throw permsign::domain_error("unknown sequence label '" + seq_label +
                                             "' (want a0..a4 or units)");
            }
            for (std::size_t t = 0; t < entries.size(); t++)
                std::cout << (t ? " " : "") << entries[t];
            std::cout << "\n";
            return 0;
        }

        if (verify_cmd->parsed()) {
            verifier::TheoremCase c;
            c.id = parse_theorem(v_theorem);
            c.params.p = v_p.get();
            c.params.n = v_n.get();
            c.params.a = v_a.get();
            c.params.k = v_k.get();
            c.params.r = v_r.get();
            c.params.g = v_g.get();
            verifier::VerificationRecord rec = verifier::verify(c);
            std::cout << report::render_table({rec}, stdout_color());
            bool failing = rec.status == verifier::Status::mismatch;
            return failing ? 1 : 0;
        }

        if (sweep_cmd->parsed()) {
            verifier::SweepOptions options;
            options.pmin = s_pmin.get().value_or(3);
            options.pmax = s_pmax.require("pmax");
            if (options.pmin > options.pmax)
                throw permsign::domain_error("--pmin must not exceed --pmax");
            options.kmax = s_kmax.get().value_or(100);
            if (auto m = s_rmax.get()) {
                if (*m < 0) throw permsign::domain_error("--rmax-modulus must be positive");
                options.max_modulus = static_cast<std::uint64_t>(*m);
            }
            options.roots = s_roots.get();
            options.jobs = static_cast<int>(s_jobs);
            verifier::SweepResult result = verifier::sweep(parse_theorem(s_theorem), options);

            std::string rendered;
            if (s_format == "csv") rendered = report::to_csv(result.records);
            else if (s_format == "json") rendered = report::to_json(result.records);
            else rendered = report::render_table(result.records, !s_out_opt->count() && stdout_color());

            if (s_out_opt->count()) {
                std::ofstream out(s_out, std::ios::binary);
                if (!out) throw permsign::parse_error(s_out, 1, "cannot open for writing");
                out << rendered;
                if (!out.good()) throw permsign::parse_error(s_out, 1, "write failed");
            } else {
                std::cout << rendered;
            }
            print_summary(std::cerr, result.summary);
            return summary_exit(result.summary);
        }

        if (report_cmd->parsed()) {
            std::vector<verifier::VerificationRecord> merged;
            for (const std::string& path : r_in) {
                std::vector<verifier::VerificationRecord> records = report::parse_file(path);
                merged.insert(merged.end(), records.begin(), records.end());
            }

            // Per-theorem totals, in theorem table order, then the overall line.
            for (verifier::TheoremId id : verifier::all_theorems()) {
                verifier::SweepSummary s;
                for (const auto& rec : merged)
                    if (rec.theorem_case.id == id) s.add(rec.status);
                if (s.total == 0) continue;
                std::cout << verifier::to_string(id) << ": ";
                print_summary(std::cout, s);
            }
            verifier::SweepSummary total = report::summarize(merged);
            std::cout << "total: ";
            print_summary(std::cout, total);

            std::vector<verifier::VerificationRecord> bad;
            for (const auto& rec : merged)
                if (rec.status == verifier::Status::mismatch ||
                    rec.status == verifier::Status::conjecture_mismatch)
                    bad.push_back(rec);
            if (!bad.empty()) {
                std::cout << "disagreeing records:\n"
                          << report::render_table(bad, stdout_color());
            }

            if (r_out_opt->count()) {
                std::ofstream out(r_out, std::ios::binary);
                if (!out) throw permsign::parse_error(r_out, 1, "cannot open for writing");
                bool json = r_out.size() >= 5 && r_out.substr(r_out.size() - 5) == ".json";
                out << (json ? report::to_json(merged) : report::to_csv(merged));
                if (!out.good()) throw permsign::parse_error(r_out, 1, "write failed");
            }
            return summary_exit(total);
        }

        return 2;  // unreachable: require_subcommand guarantees one branch ran
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const permsign::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
