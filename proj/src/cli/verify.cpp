#include "verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "hecke/abacus.hpp"
#include "hecke/invariants.hpp"
#include "hecke/qpoly.hpp"
#include "hecke/textio.hpp"
#include "parallel.hpp"

namespace hecke::cli {

namespace {

void record(RuleResult& result, const std::string& input, const std::string& expected,
            const std::string& got) {
    result.failures += 1;
    if (!result.first_failure)
        result.first_failure = Failure{input, expected, got, result.rule};
}

void check_equal(RuleResult& result, const std::string& input, long long expected,
                 long long got) {
    result.checks += 1;
    if (expected != got)
        record(result, input, std::to_string(expected), std::to_string(got));
}

std::string describe(const Partition& lambda, int l) {
    return "lambda=(" + format_partition(lambda) + ") l=" + std::to_string(l);
}

bool is_prime(int n) {
    if (n < 2)
        return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

} // namespace

RuleResult rule_weight_hooks(int max_n, const std::vector<int>& l_list,
                                 int weight_offset) {
    RuleResult result;
    result.rule = "weight-hooks";
    for (int n = 0; n <= max_n; ++n) {
        for (const Partition& lambda : enumerate_partitions(n)) {
            for (int l : l_list) {
                check_equal(result, describe(lambda, l),
                            count_hooks_divisible(lambda, l),
                            l_weight(lambda, l) + weight_offset);
            }
        }
    }
    return result;
}

RuleResult rule_dimq_factorization(int max_n) {
    RuleResult result;
    result.rule = "dimq-factorization";
    for (int n = 0; n <= max_n; ++n) {
        for (const Partition& lambda : enumerate_partitions(n)) {
            const IntPolynomial hook_route = graded_dim_specht(lambda);
            const IntPolynomial core_route =
                expand_factorization(cyclotomic_factorization(lambda));
            result.checks += 1;
            if (hook_route != core_route)
                record(result, describe(lambda, 0), hook_route.to_string(),
                       core_route.to_string());
            result.checks += 1;
            bool nonnegative = true;
            for (const Int& c : hook_route.coefficients())
                if (c < 0)
                    nonnegative = false;
            if (!nonnegative)
                record(result, describe(lambda, 0), "nonnegative coefficients",
                       hook_route.to_string());
        }
    }
    return result;
}

RuleResult rule_dim_routes(int max_n) {
    RuleResult result;
    result.rule = "dim-routes";
    for (int n = 0; n <= max_n; ++n) {
        for (const Partition& lambda : enumerate_partitions(n)) {
            result.checks += 1;
            try {
                const SpechtDim dim = specht_dim(lambda);
                const Int graded = graded_dim_specht(lambda).evaluate(1);
                if (dim.value != graded)
                    record(result, describe(lambda, 0), graded.str(), dim.value.str());
            } catch (const internal_error& error) {
                record(result, describe(lambda, 0), "route agreement", error.what());
            }
        }
    }
    return result;
}

RuleResult rule_syt_dimension(int max_n) {
    RuleResult result;
    result.rule = "syt-dimension";
    for (int n = 0; n <= std::min(max_n, 8); ++n) {
        Int squares = 0;
        for (const Partition& lambda : enumerate_partitions(n)) {
            const Int dim = graded_dim_specht(lambda).evaluate(1);
            const Int tableaux = count_syt(lambda);
            result.checks += 1;
            if (dim != tableaux)
                record(result, describe(lambda, 0), tableaux.str(), dim.str());
            squares += dim * dim;
        }
        Int factorial = 1;
        for (int i = 2; i <= n; ++i)
            factorial *= i;
        result.checks += 1;
        if (squares != factorial)
            record(result, "n=" + std::to_string(n) + " sum of dim^2", factorial.str(),
                   squares.str());
    }
    return result;
}

namespace {

// Row-wise lambda - l*mu with validity checks; empty optional when the
// difference is not an l-restricted partition.
std::optional<Partition> restricted_difference(const Partition& lambda,
                                               const Partition& mu, int l) {
    if (mu.length() > lambda.length())
        return std::nullopt;
    std::vector<int> parts;
    parts.reserve(lambda.length());
    for (int i = 1; i <= lambda.length(); ++i) {
        const int value = lambda.row(i) - l * mu.row(i);
        if (value < 0)
            return std::nullopt;
        parts.push_back(value);
    }
    // Weakly decreasing including interior zeros; trailing zeros strip.
    for (size_t i = 1; i < parts.size(); ++i)
        if (parts[i - 1] < parts[i])
            return std::nullopt;
    Partition candidate{std::vector<int>(parts)};
    if (!is_l_restricted(candidate, l))
        return std::nullopt;
    return candidate;
}

} // namespace

RuleResult rule_ladic_unique(int max_n, const std::vector<int>& l_list) {
    RuleResult result;
    result.rule = "ladic-unique";
    for (int l : l_list) {
        if (l < 2)
            continue;
        for (int n = 0; n <= max_n; ++n) {
            for (const Partition& lambda : enumerate_partitions(n)) {
                int found = 0;
                Partition found0, found1;
                for (int m = 0; m * l <= n; ++m) {
                    for (const Partition& mu : enumerate_partitions(m)) {
                        const auto diff = restricted_difference(lambda, mu, l);
                        if (diff) {
                            ++found;
                            found0 = *diff;
                            found1 = mu;
                        }
                    }
                }
                const LAdicExpansion expansion = l_adic_expansion(lambda, l);
                result.checks += 1;
                if (found != 1)
                    record(result, describe(lambda, l), "exactly 1 decomposition",
                           std::to_string(found) + " decompositions");
                else if (found0 != expansion.lambda0 || found1 != expansion.lambda1)
                    record(result, describe(lambda, l),
                           "(" + format_partition(found0) + ")+" + std::to_string(l) +
                               "(" + format_partition(found1) + ")",
                           "(" + format_partition(expansion.lambda0) + ")+" +
                               std::to_string(l) + "(" +
                               format_partition(expansion.lambda1) + ")");
            }
        }
    }
    return result;
}

RuleResult rule_block_coverage(int max_n, const std::vector<int>& l_list) {
    RuleResult result;
    result.rule = "block-coverage";
    for (int l : l_list) {
        if (l < 2)
            continue;
        for (int d = 0; d <= max_n; ++d) {
            result.checks += 1;
            try {
                const std::vector<Block> blocks = blocks_of(d, l);
                size_t total = 0;
                for (const Block& block : blocks)
                    total += block.members.size();
                if (total != enumerate_partitions(d).size())
                    record(result, "d=" + std::to_string(d) + " l=" + std::to_string(l),
                           "blocks partition all of Lambda+(d)",
                           std::to_string(total) + " members");
            } catch (const verification_error& error) {
                record(result, "d=" + std::to_string(d) + " l=" + std::to_string(l),
                       "complexity coverage {0..w}", error.what());
            }
        }
    }
    return result;
}

RuleResult rule_trivial_consistency(int max_d, const std::vector<int>& l_list) {
    RuleResult result;
    result.rule = "trivial-consistency";
    for (int l : l_list) {
        if (l < 2)
            continue;
        for (int d = 0; d <= max_d; ++d) {
            const std::string input = "d=" + std::to_string(d) + " l=" + std::to_string(l);
            const int expected = d / l;
            check_equal(result, input, expected, trivial_complexity(d, l));
            check_equal(result, input, expected,
                        perm_module_complexity(Composition({d}), l).complexity);
            const YoungComplexity young =
                young_module_complexity(Partition(d == 0 ? std::vector<int>{}
                                                         : std::vector<int>{d}),
                                        l);
            check_equal(result, input, expected, young.complexity);
            check_equal(result, input, expected, young.support.dim);
        }
    }
    return result;
}

RuleResult rule_vertex_bounds(int max_n, const std::vector<int>& l_list) {
    RuleResult result;
    result.rule = "vertex-bounds";
    long long clamped = 0;
    for (int l : l_list) {
        if (!is_prime(l))
            continue;
        for (int n = 0; n <= max_n; ++n) {
            for (const Partition& lambda : enumerate_partitions(n)) {
                const VertexBounds bounds = specht_vertex_bounds(lambda, l);
                const int weight = l_weight(lambda, l);
                const std::string input = describe(lambda, l);

                // The raw lower bound wt - sum of corrections can dip below
                // zero; count how often the clamp at 0 actually fires.
                int correction = 0;
                for (long long power = static_cast<long long>(l) * l;
                     power <= lambda.size(); power *= l)
                    correction += l_core(lambda, static_cast<int>(power)).size() /
                                  static_cast<int>(power);
                if (weight - correction < 0)
                    ++clamped;

                check_equal(result, input, weight, bounds.a_max);
                result.checks += 1;
                if (bounds.a_min < 0 || bounds.a_min > bounds.a_max)
                    record(result, input, "0 <= a_min <= a_max",
                           std::to_string(bounds.a_min) + ".." +
                               std::to_string(bounds.a_max));

                const Partition upper = specht_relative_vertex_upper(lambda, l);
                const int l_parts = static_cast<int>(std::count(
                    upper.parts().begin(), upper.parts().end(), l));
                check_equal(result, input, weight, l_parts);

                if (static_cast<long long>(n) < static_cast<long long>(l) * l) {
                    result.checks += 1;
                    if (!bounds.exact || !bounds.vertex || *bounds.vertex != upper)
                        record(result, input,
                               "exact vertex (" + format_partition(upper) + ")",
                               bounds.exact && bounds.vertex
                                   ? "(" + format_partition(*bounds.vertex) + ")"
                                   : "not exact");
                }
                result.checks += 1;
                if (bounds.exact && (!bounds.vertex || bounds.a_min != bounds.a_max))
                    record(result, input, "exact implies pinned vertex", "violated");
            }
        }
    }
    if (clamped > 0)
        result.note = "lower bound clamped at 0 for " + std::to_string(clamped) + " inputs";
    return result;
}

RuleResult rule_poincare_series(const std::vector<int>& l_list, int max_multiplicity,
                                int degree_bound) {
    RuleResult result;
    result.rule = "poincare-series";
    for (int l : l_list) {
        if (l < 2)
            continue;
        for (int m = 0; m <= max_multiplicity; ++m) {
            const Composition composition({m * l});
            const IntPolynomial series = poincare_series(composition, l, degree_bound);
            const IntPolynomial brute =
                poincare_series_bruteforce(composition, l, degree_bound);
            result.checks += 1;
            if (series != brute)
                record(result, "l=" + std::to_string(l) + " m=" + std::to_string(m),
                       brute.to_string(), series.to_string());
        }
        // One multi-part composition exercises the cross-part product.
        const Composition mixed({l, 2 * l});
        result.checks += 1;
        if (poincare_series(mixed, l, degree_bound) !=
            poincare_series_bruteforce(mixed, l, degree_bound))
            record(result, "l=" + std::to_string(l) + " composition=(l,2l)",
                   "generating function = enumeration", "mismatch");
    }
    return result;
}

RuleResult rule_typebd_morita(int max_n, const std::vector<int>& l_list) {
    RuleResult result;
    result.rule = "typebd-morita";
    for (int l : l_list) {
        if (l < 2)
            continue;
        for (int n = 1; n <= max_n; ++n) {
            const std::string base = "n=" + std::to_string(n) + " l=" + std::to_string(l);
            check_equal(result, base + " f_D", f_D_invertible_eval(n, l),
                        f_D_invertible(n, l));
            if (f_D_invertible(n, l))
                check_equal(result, base + " trivial D", n / l,
                            typeBD_trivial_complexity(n, l, ClassicalType::D));
            for (int m = 0; m < l; ++m) {
                for (int sign : {1, -1}) {
                    const QSpec Q{sign, m};
                    const std::string input = base + " Q=" + format_qspec(Q);
                    check_equal(result, input, f_B_invertible_eval(n, l, Q),
                                f_B_invertible(n, l, Q));
                    if (f_B_invertible(n, l, Q)) {
                        const Bipartition trivial{Partition({n}), Partition()};
                        check_equal(result, input, n / l,
                                    typeB_young_complexity(trivial, l, Q).complexity);
                        check_equal(result, input, n / l,
                                    typeBD_trivial_complexity(n, l, ClassicalType::B, Q));
                    }
                }
            }
        }
    }
    return result;
}

std::vector<RuleResult> run_verify(const VerifyOptions& options) {
    const int offset = options.inject_fault == "weight-off-by-one" ? 1 : 0;
    using Runner = std::function<RuleResult()>;
    // Already sorted by rule name.
    const std::vector<Runner> runners = {
        [&] { return rule_block_coverage(options.max_n, options.l_list); },
        [&] { return rule_dim_routes(options.max_n); },
        [&] { return rule_dimq_factorization(options.max_n); },
        [&] { return rule_ladic_unique(options.max_n, options.l_list); },
        [&] { return rule_poincare_series(options.l_list, 3, 24); },
        [&] { return rule_syt_dimension(options.max_n); },
        [&] { return rule_trivial_consistency(options.max_n, options.l_list); },
        [&] { return rule_typebd_morita(options.max_n, options.l_list); },
        [&] { return rule_vertex_bounds(options.max_n, options.l_list); },
        [&] { return rule_weight_hooks(options.max_n, options.l_list, offset); },
    };
    return parallel_map<RuleResult>(runners.size(), options.jobs,
                                    [&](size_t i) { return runners[i](); });
}

} // namespace hecke::cli
