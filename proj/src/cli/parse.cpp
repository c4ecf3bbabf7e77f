#include "request.hpp"

#include <CLI11.hpp>

#include "config.hpp"
#include "hecke/errors.hpp"
#include "hecke/textio.hpp"

namespace hecke::cli {

int Request::single_l(int minimum) const {
    if (semisimple)
        throw internal_error("single_l queried in semisimple mode");
    if (l_list.empty())
        throw usage_error("l is required: pass --l or set 'l' in the config file");
    if (l_list.size() != 1)
        throw usage_error("only 'verify' accepts a comma list for --l");
    if (l_list[0] < minimum)
        throw precondition_error("l must be >= " + std::to_string(minimum) +
                                 " for this subcommand");
    return l_list[0];
}

namespace {

std::vector<int> parse_l_list(const std::string& text) {
    std::vector<int> values;
    size_t begin = 0;
    while (begin <= text.size()) {
        size_t end = text.find(',', begin);
        if (end == std::string::npos)
            end = text.size();
        const std::string token = text.substr(begin, end - begin);
        try {
            size_t used = 0;
            const int value = std::stoi(token, &used);
            if (used != token.size() || value < 1)
                throw std::invalid_argument("");
            values.push_back(value);
        } catch (const std::exception&) {
            throw usage_error("--l: '" + token + "' is not a positive integer");
        }
        begin = end + 1;
        if (end == text.size())
            break;
    }
    if (values.empty())
        throw usage_error("--l: empty list");
    return values;
}

} // namespace

Request parse_args(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
    const Config config = load_config();

    CLI::App app{"homological invariants of Hecke algebras at an l-th root of unity"};
    app.require_subcommand(1);

    Request request;
    std::string l_text;
    bool want_json = false, want_csv = false, want_table = false;

    auto add_common = [&](CLI::App* sub, bool l_used) {
        // --l parses everywhere; subcommands whose output is l-independent
        // simply ignore it, so one configured default fits every call.
        sub->add_option("--l", l_text,
                        l_used ? "root-of-unity order (verify: comma list)"
                               : "accepted for uniformity; unused here");
        sub->add_flag("--json", want_json, "JSON output, one object per input");
        sub->add_flag("--csv", want_csv, "CSV output");
        sub->add_flag("--table", want_table, "aligned text output (default)");
        sub->add_option("--jobs", request.jobs, "worker threads for batch inputs")
            ->check(CLI::Range(1, 256));
    };
    auto add_input = [&](CLI::App* sub, const char* name, const char* what) {
        sub->add_option(name, request.argument, what);
        sub->add_option("--file", request.file,
                        "batch input, one literal per line ('-' reads stdin)");
        sub->add_flag("--semisimple", request.semisimple,
                      "treat q as a non-root of unity (l = infinity)");
    };

    struct SubSpec {
        const char* name;
        const char* description;
        bool takes_l;
        const char* argument;
    };
    static const SubSpec partition_subs[] = {
        {"core", "l-core of a partition", true, "partition"},
        {"weight", "l-weight of a partition", true, "partition"},
        {"adic", "l-adic expansion lambda0 + l*lambda1", true, "partition"},
        {"hooks", "hook length multiset", false, "partition"},
        {"dimq", "graded Specht dimension, factorization and value", false, "partition"},
        {"factor", "cyclotomic factorization of the graded dimension", false, "partition"},
        {"dim", "Specht dimension with prime factorization", false, "partition"},
        {"young", "Young module complexity, vertex datum and support", true, "partition"},
        {"perm", "permutation module complexity and support", true, "composition"},
        {"block", "block descriptor: core, weight, rho_max", true, "partition"},
        {"vertex", "Specht vertex bounds (prime l)", true, "partition"},
    };

    for (const SubSpec& spec : partition_subs) {
        CLI::App* sub = app.add_subcommand(spec.name, spec.description);
        add_input(sub, spec.argument, spec.argument);
        add_common(sub, spec.takes_l);
        if (std::string(spec.name) == "core" || std::string(spec.name) == "weight") {
            sub->add_option("--beads", request.beads,
                            "bead count for the abacus (>= number of parts)");
        }
    }

    CLI::App* poincare = app.add_subcommand(
        "poincare", "Hilbert series of the invariant cohomology ring");
    add_input(poincare, "composition", "composition");
    add_common(poincare, true);
    poincare->add_option("--degree", request.degree_bound, "truncation degree (default 24)")
        ->check(CLI::Range(0, 100000));

    CLI::App* typebd = app.add_subcommand(
        "typebd", "type B/D invariants through the Morita transport");
    add_input(typebd, "bipartition", "bipartition 'left|right'");
    add_common(typebd, true);
    std::string type_text = "B", q_text;
    typebd->add_option("--type", type_text, "B or D (default B)");
    typebd->add_option("--q", q_text, "second parameter, e.g. +q^1 (type B only)");

    CLI::App* blocks = app.add_subcommand("blocks", "all blocks of degree d with Young data");
    blocks->add_option("d", request.argument, "degree");
    blocks->add_flag("--semisimple", request.semisimple,
                     "treat q as a non-root of unity (l = infinity)");
    add_common(blocks, true);

    CLI::App* enumerate = app.add_subcommand("enumerate", "partitions of n, reverse-lexicographic");
    enumerate->add_option("n", request.argument, "size");
    add_common(enumerate, false);

    CLI::App* verify = app.add_subcommand(
        "verify", "run every oracle pairing and report one line per rule");
    add_common(verify, true);
    verify->add_option("--max-n", request.max_n, "largest partition size (default 10)")
        ->check(CLI::Range(0, 40));
    verify->add_option("--inject-fault", request.inject_fault,
                       "testing aid: force a named rule to fail (weight-off-by-one)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& help) {
        out << app.help();
        throw early_exit{0};
    } catch (const CLI::ParseError& error) {
        err << "error: " << error.what() << "\n";
        throw early_exit{1};
    }

    request.subcommand = app.get_subcommands().front()->get_name();

    if (int(want_json) + int(want_csv) + int(want_table) > 1)
        throw usage_error("choose at most one of --json, --csv, --table");
    if (want_json)
        request.format = Format::json;
    else if (want_csv)
        request.format = Format::csv;
    else if (want_table)
        request.format = Format::table;
    else if (config.default_format) {
        if (*config.default_format == "json")
            request.format = Format::json;
        else if (*config.default_format == "csv")
            request.format = Format::csv;
        else
            request.format = Format::table;
    }

    if (!l_text.empty())
        request.l_list = parse_l_list(l_text);
    else if (config.default_l)
        request.l_list = {*config.default_l};
    if (request.semisimple)
        request.l_list.clear();

    if (request.subcommand == "verify") {
        if (request.l_list.empty())
            request.l_list = {2, 3};
        if (!request.inject_fault.empty() && request.inject_fault != "weight-off-by-one")
            throw usage_error("--inject-fault: unknown fault '" + request.inject_fault + "'");
    }

    if (request.subcommand == "typebd") {
        if (type_text == "B" || type_text == "b")
            request.bd_type = ClassicalType::B;
        else if (type_text == "D" || type_text == "d")
            request.bd_type = ClassicalType::D;
        else
            throw usage_error("--type: expected B or D");
        if (!q_text.empty())
            request.q = parse_qspec(q_text);
        if (request.bd_type == ClassicalType::B && !request.q && !request.semisimple)
            throw usage_error("typebd --type B requires --q");
        if (request.bd_type == ClassicalType::D && request.q)
            throw usage_error("--q only applies to type B");
    }

    if (request.argument && request.file)
        throw usage_error("give either a positional literal or --file, not both");

    return request;
}

} // namespace hecke::cli
