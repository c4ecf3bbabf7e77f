#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hecke/abacus.hpp"
#include "hecke/invariants.hpp"
#include "hecke/qpoly.hpp"
#include "hecke/textio.hpp"
#include "parallel.hpp"
#include "request.hpp"
#include "verify.hpp"

namespace hecke::cli {

namespace {

int parse_degree(const Request& request) {
    if (!request.argument)
        throw usage_error(request.subcommand + ": a degree argument is required");
    try {
        size_t used = 0;
        const int value = std::stoi(*request.argument, &used);
        if (used != request.argument->size() || value < 0)
            throw std::invalid_argument("");
        if (value > 64)
            throw usage_error(request.subcommand + ": degree " + *request.argument +
                              " is beyond this tool's enumeration range (64)");
        return value;
    } catch (const usage_error&) {
        throw;
    } catch (const std::exception&) {
        throw usage_error(request.subcommand + ": '" + *request.argument +
                          "' is not a nonnegative integer");
    }
}

// ---- single-input handlers ------------------------------------------------

Row handle_core(const Request& request, const std::string& literal) {
    const Partition lambda = parse_partition(literal);
    Row row;
    if (request.semisimple) {
        row.cells.push_back(cell_partition("core", lambda));
        return row;
    }
    const int l = request.single_l(1);
    Partition core;
    if (request.beads) {
        const Abacus abacus = to_abacus(lambda, l, *request.beads);
        core = abacus_decode(slide_to_core(abacus).slid);
    } else {
        core = l_core(lambda, l);
    }
    row.cells.push_back(cell_partition("core", core));
    return row;
}

Row handle_weight(const Request& request, const std::string& literal) {
    const Partition lambda = parse_partition(literal);
    Row row;
    if (request.semisimple) {
        row.cells.push_back(cell_int("weight", 0));
        return row;
    }
    const int l = request.single_l(1);
    int weight = 0;
    if (request.beads)
        weight = slide_to_core(to_abacus(lambda, l, *request.beads)).steps;
    else
        weight = l_weight(lambda, l);
    row.cells.push_back(cell_int("weight", weight));
    return row;
}

Row handle_adic(const Request& request, const std::string& literal) {
    const Partition lambda = parse_partition(literal);
    Row row;
    if (request.semisimple) {
        row.cells.push_back(cell_partition("lambda0", lambda));
        row.cells.push_back(cell_partition("lambda1", Partition()));
        return row;
    }
    const LAdicExpansion expansion = l_adic_expansion(lambda, request.single_l());
    row.cells.push_back(cell_partition("lambda0", expansion.lambda0));
    row.cells.push_back(cell_partition("lambda1", expansion.lambda1));
    return row;
}

Row handle_hooks(const Request&, const std::string& literal) {
    const Partition lambda = parse_partition(literal);
    Row row;
    row.cells.push_back(cell_int_list("hooks", hook_lengths(lambda)));
    return row;
}

Row handle_dimq(const Request&, const std::string& literal) {
    const Partition lambda = parse_partition(literal);
    const IntPolynomial poly = graded_dim_specht(lambda);
    Row row;
    row.cells.push_back(cell_poly("poly", poly));
    row.cells.push_back(
        cell_exponent_map("factorization", cyclotomic_factorization(lambda).exponents));
    row.cells.push_back(cell_big("dim", poly.evaluate(1)));
    return row;
}

Row handle_factor(const Request&, const std::string& literal) {
    const Partition lambda = parse_partition(literal);
    Row row;
    row.cells.push_back(
        cell_exponent_map("factorization", cyclotomic_factorization(lambda).exponents));
    return row;
}

Row handle_dim(const Request&, const std::string& literal) {
    const Partition lambda = parse_partition(literal);
    const SpechtDim dim = specht_dim(lambda);
    Row row;
    row.cells.push_back(cell_big("dim", dim.value));
    row.cells.push_back(cell_exponent_map("primes", dim.prime_factorization));
    return row;
}

Row handle_young(const Request& request, const std::string& literal) {
    const Partition lambda = parse_partition(literal);
    Row row;
    if (request.semisimple) {
        row.cells.push_back(cell_int("complexity", 0));
        row.cells.push_back(cell_partition("rho", parabolic_partition(1, 0, lambda.size())));
        Cell support = cell_null("support");
        row.cells.push_back(support);
        row.cells.push_back(cell_bool("projective", true));
        row.cells.push_back(cell_bool("complexity_one", false));
        return row;
    }
    const int l = request.single_l();
    const YoungComplexity young = young_module_complexity(lambda, l);
    row.cells.push_back(cell_int("complexity", young.complexity));
    row.cells.push_back(cell_partition("rho", young.rho));
    row.cells.push_back(cell_support("support", young.support));
    row.cells.push_back(cell_bool("projective", is_young_projective(lambda, l)));
    row.cells.push_back(cell_bool("complexity_one", has_complexity_one(lambda, l)));
    return row;
}

Row handle_perm(const Request& request, const std::string& literal) {
    const Composition lambda = parse_composition(literal);
    Row row;
    if (request.semisimple) {
        row.cells.push_back(cell_int("complexity", 0));
        row.cells.push_back(cell_null("support"));
        return row;
    }
    const PermComplexity perm = perm_module_complexity(lambda, request.single_l());
    row.cells.push_back(cell_int("complexity", perm.complexity));
    row.cells.push_back(cell_support("support", perm.support));
    return row;
}

Row handle_block(const Request& request, const std::string& literal) {
    const Partition lambda = parse_partition(literal);
    Row row;
    if (request.semisimple) {
        row.cells.push_back(cell_partition("core", lambda));
        row.cells.push_back(cell_int("weight", 0));
        row.cells.push_back(
            cell_partition("rho_max", parabolic_partition(1, 0, lambda.size())));
        return row;
    }
    const BlockDescriptor descriptor = block_descriptor(lambda, request.single_l());
    row.cells.push_back(cell_partition("core", descriptor.core));
    row.cells.push_back(cell_int("weight", descriptor.weight));
    row.cells.push_back(cell_partition("rho_max", descriptor.rho_max));
    return row;
}

Row handle_vertex(const Request& request, const std::string& literal) {
    const Partition lambda = parse_partition(literal);
    Row row;
    if (request.semisimple) {
        row.cells.push_back(cell_int("a_min", 0));
        row.cells.push_back(cell_int("a_max", 0));
        row.cells.push_back(cell_bool("exact", true));
        row.cells.push_back(
            cell_partition("vertex", parabolic_partition(1, 0, lambda.size())));
        return row;
    }
    const VertexBounds bounds = specht_vertex_bounds(lambda, request.single_l());
    row.cells.push_back(cell_int("a_min", bounds.a_min));
    row.cells.push_back(cell_int("a_max", bounds.a_max));
    row.cells.push_back(cell_bool("exact", bounds.exact));
    if (bounds.vertex)
        row.cells.push_back(cell_partition("vertex", *bounds.vertex));
    else
        row.cells.push_back(cell_partition_absent("vertex"));
    return row;
}

Row handle_poincare(const Request& request, const std::string& literal) {
    const Composition lambda = parse_composition(literal);
    Row row;
    if (request.semisimple) {
        row.cells.push_back(cell_null("l"));
        row.cells.push_back(cell_null("even_degree"));
        row.cells.push_back(cell_null("odd_degree"));
        row.cells.push_back(cell_int("m", 0));
        row.cells.push_back(cell_coefficients("coefficients", IntPolynomial::constant(1),
                                              request.degree_bound));
        return row;
    }
    const int l = request.single_l();
    const PoincareSpec spec = poincare_spec(lambda, l);
    const IntPolynomial series = poincare_series(lambda, l, request.degree_bound);
    row.cells.push_back(cell_int("l", spec.l));
    row.cells.push_back(cell_int("even_degree", spec.even_generator_degree));
    row.cells.push_back(cell_int("odd_degree", spec.odd_generator_degree));
    row.cells.push_back(cell_int("m", spec.m));
    row.cells.push_back(cell_coefficients("coefficients", series, request.degree_bound));
    return row;
}

Row handle_typebd(const Request& request, const std::string& literal) {
    const Bipartition bipartition = parse_bipartition(literal);
    const int n = bipartition.n();
    Row row;
    row.cells.push_back(
        cell_text("type", request.bd_type == ClassicalType::B ? "B" : "D"));
    if (request.bd_type == ClassicalType::B && request.q)
        row.cells.push_back(cell_text("q", format_qspec(*request.q)));
    row.cells.push_back(cell_int("component", morita_component(bipartition)));
    if (request.semisimple) {
        row.cells.push_back(cell_int("complexity", 0));
        row.cells.push_back(cell_int("bound", 0));
        row.cells.push_back(cell_null("support"));
        return row;
    }
    const int l = request.single_l();
    if (request.bd_type == ClassicalType::B) {
        const TypeBComplexity complexity = typeB_young_complexity(bipartition, l, *request.q);
        row.cells.push_back(cell_int("complexity", complexity.complexity));
        row.cells.push_back(cell_int(
            "bound", n == 0 ? 0 : typeBD_trivial_complexity(n, l, ClassicalType::B, *request.q)));
        row.cells.push_back(cell_support("support", complexity.support));
        return row;
    }
    if (n > 0 && !f_D_invertible(n, l))
        throw precondition_error("typebd: f_" + std::to_string(n) +
                                 "(q) vanishes (l even with n - 1 >= l/2); "
                                 "no Morita transport for type D");
    int complexity = 0;
    if (bipartition.left.size() == bipartition.right.size())
        complexity = typeD_clifford_complexity(bipartition.left, bipartition.right, l);
    else
        complexity = l_adic_expansion(bipartition.left, l).lambda1.size() +
                     l_adic_expansion(bipartition.right, l).lambda1.size();
    row.cells.push_back(cell_int("complexity", complexity));
    row.cells.push_back(
        cell_int("bound", n == 0 ? 0 : typeBD_trivial_complexity(n, l, ClassicalType::D)));
    row.cells.push_back(cell_support(
        "support", SupportDatum{n, l, complexity, n - l * complexity, complexity}));
    return row;
}

using Handler = Row (*)(const Request&, const std::string&);

Handler find_handler(const std::string& subcommand) {
    if (subcommand == "core") return handle_core;
    if (subcommand == "weight") return handle_weight;
    if (subcommand == "adic") return handle_adic;
    if (subcommand == "hooks") return handle_hooks;
    if (subcommand == "dimq") return handle_dimq;
    if (subcommand == "factor") return handle_factor;
    if (subcommand == "dim") return handle_dim;
    if (subcommand == "young") return handle_young;
    if (subcommand == "perm") return handle_perm;
    if (subcommand == "block") return handle_block;
    if (subcommand == "vertex") return handle_vertex;
    if (subcommand == "poincare") return handle_poincare;
    if (subcommand == "typebd") return handle_typebd;
    return nullptr;
}

// ---- whole-degree subcommands ----------------------------------------------

std::string complexity_set_braces(std::vector<int> values) {
    std::sort(values.begin(), values.end());
    std::string out = "{";
    for (size_t i = 0; i < values.size(); ++i) {
        if (i > 0)
            out += ',';
        out += std::to_string(values[i]);
    }
    return out + "}";
}

void run_blocks(const Request& request, std::ostream& out) {
    const int d = parse_degree(request);
    std::vector<Block> blocks;
    if (request.semisimple) {
        for (const Partition& lambda : enumerate_partitions(d)) {
            Block block;
            block.descriptor.core = lambda;
            block.descriptor.weight = 0;
            block.descriptor.rho_max = parabolic_partition(1, 0, d);
            block.members = {lambda};
            block.young_complexities = {0};
            blocks.push_back(std::move(block));
        }
    } else {
        blocks = blocks_of(d, request.single_l());
    }

    std::vector<Row> rows;
    rows.reserve(blocks.size());
    for (const Block& block : blocks) {
        Row row;
        row.cells.push_back(cell_partition("core", block.descriptor.core));
        row.cells.push_back(cell_int("weight", block.descriptor.weight));
        row.cells.push_back(cell_partition("rho_max", block.descriptor.rho_max));
        std::string members_json = "[", members_text;
        for (size_t i = 0; i < block.members.size(); ++i) {
            const Cell cell = cell_partition("member", block.members[i]);
            if (i > 0) {
                members_json += ',';
                members_text += "; ";
            }
            members_json += cell.json;
            members_text += cell.text;
        }
        members_json += ']';
        row.cells.push_back({"members", members_json, members_text});
        Cell complexities = cell_int_list("complexities", block.young_complexities);
        if (request.format == Format::table)
            complexities.text = complexity_set_braces(block.young_complexities);
        row.cells.push_back(std::move(complexities));
        rows.push_back(std::move(row));
    }

    if (request.format == Format::json) {
        std::string json = "{\"d\":" + std::to_string(d);
        if (request.semisimple)
            json += ",\"l\":null";
        else
            json += ",\"l\":" + std::to_string(request.single_l());
        json += ",\"blocks\":[";
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i > 0)
                json += ',';
            json += row_to_json(rows[i]);
        }
        json += "]}";
        out << json << "\n";
        return;
    }
    emit_rows(out, request.format, rows);
}

void run_enumerate(const Request& request, std::ostream& out) {
    const int n = parse_degree(request);
    const std::vector<Partition> partitions = enumerate_partitions(n);
    if (request.format == Format::json) {
        std::string json =
            "{\"n\":" + std::to_string(n) + ",\"count\":" + std::to_string(partitions.size()) +
            ",\"partitions\":[";
        for (size_t i = 0; i < partitions.size(); ++i) {
            if (i > 0)
                json += ',';
            json += cell_partition("p", partitions[i]).json;
        }
        json += "]}";
        out << json << "\n";
        return;
    }
    std::vector<Row> rows;
    rows.reserve(partitions.size());
    for (const Partition& lambda : partitions) {
        Row row;
        row.cells.push_back(cell_partition("partition", lambda));
        rows.push_back(std::move(row));
    }
    emit_rows(out, request.format, rows);
}

Report run_verify_command(const Request& request, std::ostream& out) {
    VerifyOptions options;
    options.max_n = request.max_n;
    options.l_list = request.l_list;
    options.inject_fault = request.inject_fault;
    options.jobs = request.jobs;
    const std::vector<RuleResult> results = run_verify(options);

    Report report;
    long long total_checks = 0, total_failures = 0;
    for (const RuleResult& result : results) {
        total_checks += result.checks;
        total_failures += result.failures;
        if (result.first_failure)
            report.failures.push_back(*result.first_failure);
    }

    if (request.format == Format::json) {
        std::string json = "{\"max_n\":" + std::to_string(request.max_n) + ",\"l\":[";
        for (size_t i = 0; i < request.l_list.size(); ++i) {
            if (i > 0)
                json += ',';
            json += std::to_string(request.l_list[i]);
        }
        json += "],\"rules\":[";
        for (size_t i = 0; i < results.size(); ++i) {
            const RuleResult& result = results[i];
            if (i > 0)
                json += ',';
            json += "{\"rule\":" + json_quote(result.rule) +
                    ",\"status\":" + json_quote(result.failures ? "fail" : "pass") +
                    ",\"checks\":" + std::to_string(result.checks) +
                    ",\"failures\":" + std::to_string(result.failures);
            if (!result.note.empty())
                json += ",\"note\":" + json_quote(result.note);
            if (result.first_failure) {
                json += ",\"counterexample\":{\"input\":" +
                        json_quote(result.first_failure->input) +
                        ",\"expected\":" + json_quote(result.first_failure->expected) +
                        ",\"got\":" + json_quote(result.first_failure->got) + "}";
            }
            json += "}";
        }
        json += "],\"status\":" + json_quote(total_failures ? "fail" : "pass") + "}";
        out << json << "\n";
    } else if (request.format == Format::csv) {
        std::vector<Row> rows;
        for (const RuleResult& result : results) {
            Row row;
            row.cells.push_back(cell_text("rule", result.rule));
            row.cells.push_back(cell_text("status", result.failures ? "fail" : "pass"));
            row.cells.push_back(cell_int("checks", result.checks));
            row.cells.push_back(cell_int("failures", result.failures));
            row.cells.push_back(cell_text(
                "counterexample",
                result.first_failure
                    ? result.first_failure->input + " expected " +
                          result.first_failure->expected + " got " + result.first_failure->got
                    : ""));
            row.cells.push_back(cell_text("note", result.note));
            rows.push_back(std::move(row));
        }
        emit_rows(out, request.format, rows);
    } else {
        for (const RuleResult& result : results) {
            out << (result.failures ? "FAIL" : "PASS") << " " << result.rule
                << " checks=" << result.checks << " failures=" << result.failures;
            if (!result.note.empty())
                out << " (" << result.note << ")";
            out << "\n";
            if (result.first_failure)
                out << "  counterexample: " << result.first_failure->input << " expected "
                    << result.first_failure->expected << " got " << result.first_failure->got
                    << "\n";
        }
        out << (total_failures ? "FAIL" : "PASS") << " total checks=" << total_checks
            << " failures=" << total_failures << "\n";
    }
    report.exit_code = total_failures ? 3 : 0;
    return report;
}

// ---- batch plumbing ---------------------------------------------------------

std::vector<std::string> read_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

} // namespace

Report run(const Request& request, std::istream* batch_input, std::ostream& out,
           std::ostream& err) {
    try {
        if (request.subcommand == "verify")
            return run_verify_command(request, out);
        if (request.subcommand == "blocks") {
            run_blocks(request, out);
            return {};
        }
        if (request.subcommand == "enumerate") {
            run_enumerate(request, out);
            return {};
        }

        const Handler handler = find_handler(request.subcommand);
        if (!handler)
            throw usage_error("unknown subcommand '" + request.subcommand + "'");

        std::vector<std::string> inputs;
        if (request.file) {
            if (*request.file == "-") {
                if (!batch_input)
                    throw usage_error("no input stream attached for --file -");
                inputs = read_lines(*batch_input);
            } else {
                std::ifstream file(*request.file);
                if (!file)
                    throw usage_error("cannot open input file '" + *request.file + "'");
                inputs = read_lines(file);
            }
        } else if (request.argument) {
            inputs.push_back(*request.argument);
        } else {
            throw usage_error(request.subcommand +
                              ": an argument or --file is required");
        }

        const std::vector<Row> rows = parallel_map<Row>(
            inputs.size(), request.jobs,
            [&](size_t i) { return handler(request, inputs[i]); });
        emit_rows(out, request.format, rows);
        return {};
    } catch (const usage_error& error) {
        err << "error: " << error.what() << "\n";
        return {1, {Failure{request.subcommand, "", error.what(), "usage"}}};
    } catch (const precondition_error& error) {
        err << "error: " << error.what() << "\n";
        return {2, {Failure{request.subcommand, "", error.what(), "precondition"}}};
    } catch (const verification_error& error) {
        err << "error: " << error.what() << "\n";
        return {3, {Failure{request.subcommand, "", error.what(), "verification"}}};
    } catch (const std::exception& error) {
        err << "internal error: " << error.what() << "\n";
        return {4, {Failure{request.subcommand, "", error.what(), "internal"}}};
    }
}

} // namespace hecke::cli
