#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "config.hpp"
#include "request.hpp"
#include "verify.hpp"

using namespace hecke::cli;

namespace {

struct Invocation {
    int exit_code = 0;
    std::string out;
    std::string err;
};

// parse + run in process, stdin supplied as a string
Invocation invoke(const std::vector<std::string>& args, const std::string& input = "") {
    std::ostringstream out, err;
    std::istringstream in(input);
    Invocation result;
    try {
        const Request request = parse_args(args, out, err);
        result.exit_code = run(request, &in, out, err).exit_code;
    } catch (const early_exit& done) {
        result.exit_code = done.code;
    } catch (const hecke::usage_error& error) {
        err << "error: " << error.what() << "\n";
        result.exit_code = 1;
    } catch (const hecke::precondition_error& error) {
        err << "error: " << error.what() << "\n";
        result.exit_code = 2;
    }
    result.out = out.str();
    result.err = err.str();
    return result;
}

struct ConfigGuard {
    ConfigGuard() { setenv("HECKE_CONFIG", "/nonexistent/hecke-test.conf", 1); }
};
const ConfigGuard config_guard; // keep user config out of every test

} // namespace

TEST_CASE("parse_args basics") {
    std::ostringstream sink;
    const Request dimq = parse_args({"dimq", "2,1", "--l", "2"}, sink, sink);
    CHECK(dimq.subcommand == "dimq");
    CHECK(dimq.argument == "2,1");
    CHECK(dimq.l_list == std::vector<int>{2});

    const Request core = parse_args({"core", "4,1", "--l", "2", "--json"}, sink, sink);
    CHECK(core.format == Format::json);

    const Request verify = parse_args({"verify", "--max-n", "10", "--l", "2,3"}, sink, sink);
    CHECK(verify.max_n == 10);
    CHECK(verify.l_list == std::vector<int>{2, 3});

    CHECK_THROWS_AS(parse_args({"dimq", "2,1", "--json", "--csv"}, sink, sink),
                    hecke::usage_error);
    CHECK_THROWS_AS(parse_args({"young", "2,1", "--l", "0"}, sink, sink),
                    hecke::usage_error);
    CHECK_THROWS_AS(parse_args({"verify", "--inject-fault", "bogus"}, sink, sink),
                    hecke::usage_error);
    CHECK_THROWS_AS(parse_args({"typebd", "1|", "--l", "2", "--type", "X"}, sink, sink),
                    hecke::usage_error);
    CHECK_THROWS_AS(parse_args({"typebd", "1|", "--l", "2"}, sink, sink),
                    hecke::usage_error); // type B without --q
}

TEST_CASE("config file parsing") {
    const Config config = parse_config_text("# comment\n\nl = 3\nformat=csv\nextra = 1\n", "test");
    CHECK(config.default_l == 3);
    CHECK(config.default_format == "csv");
    CHECK_THROWS_AS(parse_config_text("l = x\n", "test"), hecke::usage_error);
    CHECK_THROWS_AS(parse_config_text("format = yaml\n", "test"), hecke::usage_error);
    CHECK_THROWS_AS(parse_config_text("justaline\n", "test"), hecke::usage_error);
    CHECK(parse_config_text("", "test").default_l == std::nullopt);
}

TEST_CASE("documented dimq invocation is byte exact") {
    const Invocation result = invoke({"dimq", "2,1", "--l", "2", "--json"});
    CHECK(result.exit_code == 0);
    CHECK(result.out == "{\"poly\":[1,1],\"factorization\":{\"2\":1},\"dim\":2}\n");
}

TEST_CASE("exit code contract") {
    CHECK(invoke({"core", "4,1", "--l", "2"}).exit_code == 0);
    CHECK(invoke({"nonsense"}).exit_code == 1);
    CHECK(invoke({"core", "1,3", "--l", "2"}).exit_code == 1);          // parse error
    CHECK(invoke({"core", "4,1"}).exit_code == 1);                      // l missing
    CHECK(invoke({"vertex", "3,1", "--l", "4"}).exit_code == 2);        // l not prime
    CHECK(invoke({"core", "3,1,1", "--l", "2", "--beads", "2"}).exit_code == 2);
    CHECK(invoke({"typebd", "1|", "--l", "2", "--q", "-q^0"}).exit_code == 2);
    CHECK(invoke({"verify", "--max-n", "4", "--l", "2"}).exit_code == 0);
    CHECK(invoke({"verify", "--max-n", "4", "--l", "2", "--inject-fault",
                  "weight-off-by-one"}).exit_code == 3);
    CHECK(invoke({"--help"}).exit_code == 0);
}

TEST_CASE("verify report names the failing rule with a minimal counterexample") {
    const Invocation fault =
        invoke({"verify", "--max-n", "4", "--l", "2", "--inject-fault", "weight-off-by-one"});
    CHECK(fault.exit_code == 3);
    CHECK(fault.out.find("FAIL weight-hooks") != std::string::npos);
    CHECK(fault.out.find("counterexample: lambda=() l=2 expected 0 got 1") !=
          std::string::npos);
    // all other rules stay green
    CHECK(fault.out.find("PASS dimq-factorization") != std::string::npos);
}

TEST_CASE("batch mode preserves input order") {
    const std::string input = "3,1\n\n5\n";
    const Invocation json = invoke({"weight", "--file", "-", "--l", "2", "--json"}, input);
    CHECK(json.exit_code == 0);
    CHECK(json.out == "{\"weight\":2}\n{\"weight\":0}\n{\"weight\":2}\n");

    const Invocation csv = invoke({"weight", "--file", "-", "--l", "2", "--csv"}, input);
    CHECK(csv.out == "weight\n2\n0\n2\n");

    SUBCASE("worker count changes nothing") {
        for (const char* jobs : {"2", "4", "7"}) {
            const Invocation parallel =
                invoke({"weight", "--file", "-", "--l", "2", "--json", "--jobs", jobs}, input);
            CHECK(parallel.out == json.out);
        }
    }

    SUBCASE("a bad line fails the whole batch deterministically") {
        const Invocation bad =
            invoke({"weight", "--file", "-", "--l", "2", "--jobs", "4"}, "3,1\n1,3\n2\n");
        CHECK(bad.exit_code == 1);
    }
}

TEST_CASE("json and csv expose the same fields") {
    const Invocation json = invoke({"young", "4,2,1", "--l", "2", "--json"});
    const Invocation csv = invoke({"young", "4,2,1", "--l", "2", "--csv"});
    CHECK(json.out == "{\"complexity\":1,\"rho\":[2,1,1,1,1,1],"
                      "\"support\":{\"d\":7,\"l\":2,\"a\":1,\"s\":5,\"dim\":1},"
                      "\"projective\":false,\"complexity_one\":true}\n");
    CHECK(csv.out == "complexity,rho,support,projective,complexity_one\n"
                     "1,\"2,1,1,1,1,1\",d=7 l=2 a=1 s=5 dim=1,false,true\n");
}

TEST_CASE("vertex output omits the vertex only in JSON when not exact") {
    const Invocation exact = invoke({"vertex", "3,1", "--l", "2", "--json"});
    CHECK(exact.out ==
          "{\"a_min\":2,\"a_max\":2,\"exact\":true,\"vertex\":[2,2]}\n");
    const Invocation open = invoke({"vertex", "2,2", "--l", "2", "--json"});
    CHECK(open.out == "{\"a_min\":1,\"a_max\":2,\"exact\":false}\n");
    const Invocation csv = invoke({"vertex", "2,2", "--l", "2", "--csv"});
    CHECK(csv.out == "a_min,a_max,exact,vertex\n1,2,false,\n");
}

TEST_CASE("semisimple mode reports zero complexity") {
    CHECK(invoke({"young", "9,5,2", "--semisimple", "--json"}).out.find("\"complexity\":0") !=
          std::string::npos);
    CHECK(invoke({"perm", "9,5,2", "--semisimple", "--json"}).out.find("\"complexity\":0") !=
          std::string::npos);
    CHECK(invoke({"weight", "9,5,2", "--semisimple", "--json"}).out == "{\"weight\":0}\n");
    CHECK(invoke({"core", "9,5,2", "--semisimple", "--json"}).out == "{\"core\":[9,5,2]}\n");
}

TEST_CASE("blocks table matches the documented shape") {
    const Invocation table = invoke({"blocks", "5", "--l", "2", "--table"});
    CHECK(table.out ==
          "core  weight  rho_max  members                          complexities\n"
          "2,1   1       2,1,1,1  4,1; 2,1,1,1                     {0,1}\n"
          "1     2       2,2,1    5; 3,2; 3,1,1; 2,2,1; 1,1,1,1,1  {0,0,1,2,2}\n");
    const Invocation json = invoke({"blocks", "3", "--l", "2", "--json"});
    CHECK(json.out ==
          "{\"d\":3,\"l\":2,\"blocks\":[{\"core\":[2,1],\"weight\":0,\"rho_max\":[1,1,1],"
          "\"members\":[[2,1]],\"complexities\":[0]},{\"core\":[1],\"weight\":1,"
          "\"rho_max\":[2,1],\"members\":[[3],[1,1,1]],\"complexities\":[1,0]}]}\n");
}

TEST_CASE("verify rules pass at the default window") {
    const VerifyOptions options{6, {2, 3}, "", 1};
    for (const RuleResult& result : run_verify(options)) {
        CAPTURE(result.rule);
        CHECK(result.failures == 0);
        CHECK(result.checks > 0);
    }
}

TEST_CASE("verify with max-n 0 passes vacuously") {
    const Invocation empty = invoke({"verify", "--max-n", "0", "--l", "2"});
    CHECK(empty.exit_code == 0);
    CHECK(empty.out.find("FAIL") == std::string::npos);
}

TEST_CASE("JSON output round-trips through the documented schema") {
    const struct {
        std::vector<std::string> args;
        std::vector<std::string> keys;
    } cases[] = {
        {{"core", "4,1", "--l", "2"}, {"core"}},
        {{"weight", "4,1", "--l", "2"}, {"weight"}},
        {{"adic", "4,1", "--l", "2"}, {"lambda0", "lambda1"}},
        {{"hooks", "4,1"}, {"hooks"}},
        {{"dimq", "4,1"}, {"poly", "factorization", "dim"}},
        {{"factor", "4,1"}, {"factorization"}},
        {{"dim", "4,1"}, {"dim", "primes"}},
        {{"young", "4,1", "--l", "2"},
         {"complexity", "rho", "support", "projective", "complexity_one"}},
        {{"perm", "1,4", "--l", "2"}, {"complexity", "support"}},
        {{"block", "4,1", "--l", "2"}, {"core", "weight", "rho_max"}},
        {{"vertex", "3,1", "--l", "2"}, {"a_min", "a_max", "exact", "vertex"}},
        {{"poincare", "6", "--l", "3"},
         {"l", "even_degree", "odd_degree", "m", "coefficients"}},
        {{"typebd", "4,1|2", "--l", "3", "--q", "+q^1"},
         {"type", "q", "component", "complexity", "bound", "support"}},
    };
    for (const auto& c : cases) {
        std::vector<std::string> args = c.args;
        args.push_back("--json");
        const Invocation json = invoke(args);
        REQUIRE_MESSAGE(json.exit_code == 0, args[0]);
        const nlohmann::ordered_json parsed = nlohmann::ordered_json::parse(json.out);
        std::vector<std::string> keys;
        for (const auto& item : parsed.items())
            keys.push_back(item.key());
        CHECK_MESSAGE(keys == c.keys, args[0]);

        // csv exposes exactly the same fields in the same order
        args.back() = "--csv";
        const Invocation csv = invoke(args);
        const std::string header = csv.out.substr(0, csv.out.find('\n'));
        std::string joined;
        for (const auto& key : c.keys)
            joined += (joined.empty() ? "" : ",") + key;
        CHECK_MESSAGE(header == joined, args[0]);
    }

    SUBCASE("support objects carry the five documented fields") {
        const Invocation young = invoke({"young", "5", "--l", "2", "--json"});
        const auto parsed = nlohmann::json::parse(young.out);
        const auto& support = parsed.at("support");
        CHECK(support.at("d") == 5);
        CHECK(support.at("l") == 2);
        CHECK(support.at("a") == 2);
        CHECK(support.at("s") == 1);
        CHECK(support.at("dim") == 2);
        CHECK(support.at("d").get<int>() ==
              support.at("a").get<int>() * 2 + support.at("s").get<int>());
    }

    SUBCASE("blocks JSON parses with the nested block objects") {
        const Invocation blocks = invoke({"blocks", "5", "--l", "2", "--json"});
        const auto parsed = nlohmann::json::parse(blocks.out);
        CHECK(parsed.at("d") == 5);
        CHECK(parsed.at("blocks").size() == 2);
        CHECK(parsed.at("blocks")[0].at("core") == nlohmann::json::array({2, 1}));
    }

    SUBCASE("verify JSON parses") {
        const Invocation verify = invoke({"verify", "--max-n", "3", "--l", "2", "--json"});
        const auto parsed = nlohmann::json::parse(verify.out);
        CHECK(parsed.at("status") == "pass");
        CHECK(parsed.at("rules").size() == 10);
    }
}

TEST_CASE("command-line flags win over the config file") {
    const std::string path = "/tmp/hecke-test-config.conf";
    {
        std::ofstream out(path);
        out << "l = 3\nformat = csv\n";
    }
    setenv("HECKE_CONFIG", path.c_str(), 1);
    std::ostringstream sink;
    const Request from_config = parse_args({"weight", "3,1"}, sink, sink);
    CHECK(from_config.l_list == std::vector<int>{3});
    CHECK(from_config.format == Format::csv);
    const Request overridden = parse_args({"weight", "3,1", "--l", "2", "--json"}, sink, sink);
    CHECK(overridden.l_list == std::vector<int>{2});
    CHECK(overridden.format == Format::json);
    setenv("HECKE_CONFIG", "/nonexistent/hecke-test.conf", 1);
    std::remove(path.c_str());
}

TEST_CASE("bead count flag validates but never changes the result") {
    const Invocation reference = invoke({"core", "4,2,1", "--l", "2", "--json"});
    for (const char* beads : {"3", "5", "8"}) {
        const Invocation with_beads =
            invoke({"core", "4,2,1", "--l", "2", "--beads", beads, "--json"});
        CHECK(with_beads.out == reference.out);
    }
    CHECK(invoke({"core", "4,2,1", "--l", "2", "--beads", "2"}).exit_code == 2);
}
