#pragma once

#include <optional>
#include <string>
#include <vector>

#include "request.hpp"

/*
  The verification driver: every rule pairs a closed-form computation
  with an independent route and scans all partitions in a range. A rule
  reports how many comparisons it ran and, on mismatch, the minimal
  counterexample in scan order (n ascending, partitions reverse-
  lexicographic, l ascending).

  Rules, by name:
    block-coverage        every block of weight w shows complexities {0..w}
    dim-routes            hook-quotient value = core-factored dimension
    dimq-factorization    expanded cyclotomic factorization = hook quotient
    ladic-unique          exhaustive search finds exactly the expansion
    poincare-series       generating function = multiset enumeration
    syt-dimension         dim_1 = tableau count; sum of squares = n!
    trivial-consistency   floor(d/l) three ways
    typebd-morita         closed-form f-invertibility = Z[q]/Phi_l oracle
    vertex-bounds         bounds sane; |lambda| < l^2 pins the vertex
    weight-hooks          abacus weight = number of hooks divisible by l
*/

namespace hecke::cli {

struct RuleResult {
    std::string rule;
    long long checks = 0;
    long long failures = 0;
    std::optional<Failure> first_failure;
    std::string note;     // informational, e.g. clamp occurrences
};

struct VerifyOptions {
    int max_n = 10;
    std::vector<int> l_list = {2, 3};
    std::string inject_fault;     // empty or "weight-off-by-one"
    int jobs = 1;
};

// All rules, sorted by rule name.
std::vector<RuleResult> run_verify(const VerifyOptions& options);

// Individual rules; the acceptance suite drives them at pinned ranges.
RuleResult rule_block_coverage(int max_n, const std::vector<int>& l_list);
RuleResult rule_dim_routes(int max_n);
RuleResult rule_dimq_factorization(int max_n);
RuleResult rule_ladic_unique(int max_n, const std::vector<int>& l_list);
RuleResult rule_poincare_series(const std::vector<int>& l_list, int max_multiplicity,
                                int degree_bound);
RuleResult rule_syt_dimension(int max_n);
RuleResult rule_trivial_consistency(int max_d, const std::vector<int>& l_list);
RuleResult rule_typebd_morita(int max_n, const std::vector<int>& l_list);
RuleResult rule_vertex_bounds(int max_n, const std::vector<int>& l_list);
RuleResult rule_weight_hooks(int max_n, const std::vector<int>& l_list, int weight_offset);

} // namespace hecke::cli
