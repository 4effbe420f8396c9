#pragma once

#include <stdexcept>
#include <string>

namespace permsign {

// Base for everything thrown by this library.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// A precondition on input values does not hold (bad modulus, wrong residue
// class, composite where a prime is required, ...).
struct domain_error : error {
    explicit domain_error(const std::string& what) : error(what) {}
};

// gcd(a, n) > 1 where an inverse was requested.
struct not_invertible_error : domain_error {
    explicit not_invertible_error(const std::string& what) : domain_error(what) {}
};

// Two sequences that must pair up have different lengths.
struct length_mismatch_error : domain_error {
    explicit length_mismatch_error(const std::string& what) : domain_error(what) {}
};

// Two sequences that must pair up do not hold the same set of values.
struct set_mismatch_error : domain_error {
    explicit set_mismatch_error(const std::string& what) : domain_error(what) {}
};

// A map that must be a bijection is not one (e.g. power map with
// gcd(k, p-1) > 1).
struct not_bijective_error : domain_error {
    explicit not_bijective_error(const std::string& what) : domain_error(what) {}
};

// Two internal evaluation routes that must agree disagreed. Always a bug.
struct inconsistency_error : error {
    explicit inconsistency_error(const std::string& what) : error(what) {}
};

// Malformed report file. Carries the offending location.
struct parse_error : error {
    parse_error(const std::string& file, std::size_t line, const std::string& what)
        : error(file + ":" + std::to_string(line) + ": " + what), file(file), line(line) {}
    std::string file;
    std::size_t line;
};

}  // namespace permsign
