#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "hecke/bigint.hpp"
#include "hecke/invariants.hpp"
#include "hecke/partition.hpp"
#include "hecke/polynomial.hpp"

/*
  Output records. Every subcommand produces rows of cells; a cell carries
  its key, a pre-rendered JSON value and a pre-rendered flat text used by
  the csv and table printers. JSON and csv therefore always expose the
  same fields, and all rendering is deterministic by construction.

  Arbitrary-precision integers are written as bare decimal numerals: the
  JSON grammar puts no bound on number size, and nothing is rounded on
  the way out.
*/

namespace hecke::cli {

enum class Format { table, json, csv };

struct Cell {
    std::string key;
    std::string json;            // rendered JSON value
    std::string text;            // rendered csv/table cell
    bool json_omitted = false;   // optional field, absent from JSON output
};

struct Row {
    std::vector<Cell> cells;
};

std::string json_quote(const std::string& text);

Cell cell_int(std::string key, long long value);
Cell cell_big(std::string key, const Int& value);
Cell cell_bool(std::string key, bool value);
Cell cell_text(std::string key, const std::string& value);
Cell cell_partition(std::string key, const Partition& value);
Cell cell_partition_absent(std::string key);               // optional, omitted
Cell cell_int_list(std::string key, const std::vector<int>& values);
Cell cell_poly(std::string key, const IntPolynomial& value);
// Coefficients 0..degree_bound, trailing zeros kept.
Cell cell_coefficients(std::string key, const IntPolynomial& value, int degree_bound);
Cell cell_exponent_map(std::string key, const std::map<int, int>& exponents);
Cell cell_support(std::string key, const SupportDatum& support);
Cell cell_null(std::string key);                           // JSON null, text "inf"

std::string row_to_json(const Row& row);
void emit_rows(std::ostream& out, Format format, const std::vector<Row>& rows);

} // namespace hecke::cli
