#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "emit.hpp"
#include "hecke/typebd.hpp"

/*
  Parsed invocation and run outcome.

  Exit codes: 0 success, 1 usage or parse error, 2 precondition violation,
  3 verification failure (verify only), 4 internal invariant breach.
*/

namespace hecke::cli {

struct Request {
    std::string subcommand;

    std::optional<std::string> argument;      // positional literal
    std::optional<std::string> file;          // batch input path, "-" = stdin

    std::vector<int> l_list;                  // resolved; empty = not given
    bool semisimple = false;
    Format format = Format::table;
    int degree_bound = 24;                    // poincare
    std::optional<int> beads;                 // core / weight
    int max_n = 10;                           // verify
    std::string inject_fault;                 // verify, testing aid
    std::optional<QSpec> q;                   // typebd
    ClassicalType bd_type = ClassicalType::B; // typebd
    int jobs = 1;

    // Single l for subcommands that take exactly one.
    int single_l(int minimum = 2) const;
};

struct Failure {
    std::string input;
    std::string expected;
    std::string got;
    std::string rule;
};

struct Report {
    int exit_code = 0;
    std::vector<Failure> failures;            // nonempty only on exit 3
};

// Thrown by parse_args when --help and friends were handled; carries the
// code the process should exit with.
struct early_exit {
    int code = 0;
};

Request parse_args(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err);

Report run(const Request& request, std::istream* batch_input, std::ostream& out,
           std::ostream& err);

} // namespace hecke::cli
