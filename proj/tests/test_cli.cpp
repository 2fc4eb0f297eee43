#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "maxbv/constructions.hpp"
#include "maxbv/corpus.hpp"
#include "maxbv/io.hpp"
#include "test_support.hpp"

using namespace maxbv;
using maxbv::testing::Q;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class Scratch {
public:
    Scratch() {
        std::random_device rd;
        dir_ = fs::temp_directory_path() / ("maxbv_cli_" + std::to_string(rd()));
        fs::create_directories(dir_);
    }
    ~Scratch() { fs::remove_all(dir_); }
    std::string write(const std::string& name, const std::string& text) const {
        const fs::path p = dir_ / name;
        std::ofstream(p, std::ios::binary) << text;
        return p.string();
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

private:
    fs::path dir_;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    for (std::string l; std::getline(ss, l);) out.push_back(l);
    return out;
}

const char* kChi = R"({"breakpoints": ["-1", "0"], "values": ["1"]})";

}  // namespace

TEST_CASE("function files") {
    SUBCASE("indicator") {
        const StepFunction f = parse_step_function(kChi);
        CHECK(f.size() == 2);
        CHECK(f == StepFunction::indicator(-1, 0));
    }
    SUBCASE("integers, decimals and tails") {
        const StepFunction f = parse_step_function(
            R"({"breakpoints": [0, "0.75", "3/2"], "values": ["-2/7", 3], "tails": {"right": "1"}})");
        CHECK(f == StepFunction({0, Q("3/4"), Q("3/2")}, {Q("-2/7"), 3}, 0, 1));
    }
    SUBCASE("values length mismatch names the field") {
        CHECK_THROWS_WITH_AS(parse_step_function(R"({"breakpoints": ["0", "1"], "values": []})", "f.json"),
                             doctest::Contains("f.json: values"), InputError);
    }
    SUBCASE("other malformed input") {
        CHECK_THROWS_WITH_AS(parse_step_function(R"({"breakpoints": ["1", "0"], "values": ["1"]})"),
                             doctest::Contains("breakpoints[1]"), InputError);
        CHECK_THROWS_WITH_AS(parse_step_function(R"({"breakpoints": ["0", "x"], "values": ["1"]})"),
                             doctest::Contains("breakpoints[1]"), InputError);
        CHECK_THROWS_AS(parse_step_function("[1, 2]"), InputError);
        CHECK_THROWS_AS(parse_step_function("{"), InputError);
        CHECK_THROWS_WITH_AS(parse_step_function(R"({"values": []})"), doctest::Contains("breakpoints"), InputError);
    }
    SUBCASE("negative radius node") {
        CHECK_THROWS_WITH_AS(parse_radius(R"({"breakpoints": ["0", "1"], "values": ["1", "-1/2"]})"),
                             doctest::Contains("values[1]: truncation radius must be nonnegative"), InputError);
    }
    SUBCASE("round trip") {
        for (const auto& f : step_corpus(1, 40)) CHECK(parse_step_function(to_json(f)) == f);
        const StepFunction tails({-1, 2}, {Q("1/3")}, Q("-5/2"), 7);
        CHECK(parse_step_function(to_json(tails)) == tails);
        CHECK(parse_step_function(to_json(StepFunction::constant(2))) == StepFunction::constant(2));
        const auto n = make_divergence_N(Q("3/4"), 4);
        CHECK(parse_radius(to_json(n)) == n);
        const auto r = random_lipschitz_N(3, Q("1/2"), {-4, 4});
        CHECK(parse_radius(to_json(r)) == r);
    }
}

TEST_CASE("emit_csv") {
    const std::vector<Column> schema{{"name", ColumnKind::Text}, {"k", ColumnKind::Integer}, {"r", ColumnKind::Exact}};
    SUBCASE("header only for no rows") {
        std::ostringstream out;
        emit_csv(out, schema, {});
        CHECK(out.str() == "name,k,r,r_decimal\n");
    }
    SUBCASE("exact and decimal columns, quoting, empty cells") {
        std::ostringstream out;
        emit_csv(out, schema,
                 {{std::string("a,b"), 3LL, Q("1/3")}, {std::string("say \"hi\""), std::monostate{}, std::monostate{}}});
        CHECK(out.str() ==
              "name,k,r,r_decimal\n"
              "\"a,b\",3,1/3,0.33333333333333333\n"
              "\"say \"\"hi\"\"\",,,\n");
    }
    SUBCASE("rows must match the schema") {
        std::ostringstream out;
        CHECK_THROWS(emit_csv(out, schema, {{std::string("x")}}));
        CHECK_THROWS(emit_csv(out, schema, {{3LL, 3LL, Q("1")}}));
        CHECK_THROWS(emit_table(out, schema, {{std::string("x"), 1LL}}));
    }
    SUBCASE("table") {
        std::ostringstream out;
        emit_table(out, schema, {{std::string("a"), 1LL, Q("1/2")}});
        const auto ls = lines(out.str());
        REQUIRE(ls.size() == 2);
        CHECK(ls[0].rfind("name", 0) == 0);
        CHECK(ls[1].find("1/2 (0.5)") != std::string::npos);
    }
}

TEST_CASE("eval") {
    const Scratch s;
    const std::string chi = s.write("chi.json", kChi);
    SUBCASE("table") {
        const auto r = run({"eval", "--operator", "cone", "--alpha", "1", "--x", "1", "--input", chi});
        CHECK(r.code == cli::kSuccess);
        const auto ls = lines(r.out);
        REQUIRE(ls.size() == 2);
        CHECK(ls[1].find("1/2") != std::string::npos);
        CHECK(ls[1].find("(-1, 1)") != std::string::npos);
    }
    SUBCASE("csv") {
        const auto r = run({"eval", "--alpha", "1", "--x", "1", "--input", chi, "--format", "csv"});
        CHECK(r.out == "x,value,witness,x_decimal,value_decimal\n1,1/2,\"(-1, 1)\",1,0.5\n");
    }
    SUBCASE("flags before the subcommand") {
        const auto a = run({"--format", "csv", "--input", chi, "eval", "--x", "1"});
        const auto b = run({"eval", "--format", "csv", "--input", chi, "--x", "1"});
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
    SUBCASE("other operators") {
        CHECK(run({"eval", "--operator", "diamond", "--truncation", "1/2", "--x", "0", "--input", chi, "--format",
                   "csv"})
                  .out.find("\n0,1,") != std::string::npos);
        const auto one = run({"eval", "--operator", "one-sided", "--side", "left", "--truncation", "1", "--x", "1/2",
                              "--input", chi, "--format", "csv"});
        CHECK(one.out.find("\n1/2,2/3,") != std::string::npos);
        const std::string n = s.write("n.json", R"({"breakpoints": ["0", "4/5"], "values": ["1", "2/5"]})");
        const auto mixed = run({"eval", "--operator", "mixed", "--alpha", "1/2", "--lipschitz", n, "--x", "0",
                                "--input", chi});
        CHECK(mixed.code == 0);
        CHECK(mixed.err.find("Lipschitz constant of N: 3/4") != std::string::npos);
        CHECK(run({"eval", "--operator", "lipschitz", "--lipschitz", n, "--x", "0", "--input", chi}).code == 0);
    }
    SUBCASE("--out writes the file instead of stdout") {
        const std::string out = s.path("eval.csv");
        const auto r = run({"eval", "--x", "1", "--input", chi, "--format", "csv", "--out", out});
        CHECK(r.code == 0);
        CHECK(r.out.empty());
        CHECK(slurp(out) == "x,value,witness,x_decimal,value_decimal\n1,1/2,\"(-1, 1)\",1,0.5\n");
    }
}

TEST_CASE("input errors exit with 2") {
    const Scratch s;
    const std::string chi = s.write("chi.json", kChi);
    const std::string bad_len = s.write("bad.json", R"({"breakpoints": ["0", "1"], "values": ["1", "2"]})");
    const std::string neg = s.write("neg.json", R"({"breakpoints": ["0"], "values": ["-1"]})");
    const std::vector<std::vector<std::string>> cases{
        {},
        {"nonsense"},
        {"eval", "--x", "0"},
        {"eval", "--x", "0", "--input", s.path("missing.json")},
        {"eval", "--x", "0", "--input", s.write("broken.json", "{")},
        {"eval", "--x", "abc", "--input", chi},
        {"eval", "--x", "0", "--input", chi, "--alpha", "-1"},
        {"eval", "--x", "0", "--input", chi, "--operator", "square"},
        {"eval", "--x", "0", "--input", chi, "--operator", "truncated"},
        {"eval", "--x", "0", "--input", chi, "--operator", "lipschitz"},
        {"eval", "--x", "0", "--input", chi, "--operator", "mixed", "--alpha", "2", "--lipschitz", neg},
        {"eval", "--x", "0", "--input", chi, "--format", "xml"},
        {"eval", "--x", "0", "--input", chi, "--unknown-flag"},
        {"maximal-variation", "--input", chi, "--window", "3"},
        {"maximal-variation", "--input", chi, "--window", "1:0"},
        {"maximal-variation", "--input", chi, "--tol", "1e-x"},
        {"counterexample"},
        {"counterexample", "lipschitz", "--beta", "1/2"},
        {"counterexample", "cone-spike", "--n", "1"},
        {"weaktype", "--input", chi},
        {"weaktype", "--input", chi, "--lambda", "0"},
        {"sweep", "--input", s.write("const.json", R"({"breakpoints": ["0"], "values": [], "tails": {"left": "1", "right": "1"}})")},
        {"verify", "--suite", "nope"},
        {"verify", "--seed", "-3"},
    };
    for (const auto& args : cases) {
        std::string joined;
        for (const auto& a : args) joined += a + " ";
        CAPTURE(joined);
        const auto r = run(args);
        CHECK(r.code == cli::kInputError);
        CHECK_FALSE(r.err.empty());
    }
    const auto len = run({"eval", "--x", "0", "--input", bad_len});
    CHECK(len.code == cli::kInputError);
    CHECK(len.err.find("values") != std::string::npos);
    const auto n = run({"eval", "--x", "0", "--input", chi, "--operator", "lipschitz", "--lipschitz", neg});
    CHECK(n.code == cli::kInputError);
    CHECK(n.err.find("truncation radius must be nonnegative") != std::string::npos);
    CHECK(run({"--help"}).code == cli::kSuccess);
}

TEST_CASE("tolerance formats") {
    const Scratch s;
    const std::string chi = s.write("chi.json", kChi);
    for (const char* tol : {"1e-6", "1E-6", "0.000001", "1/1000000"}) {
        CAPTURE(tol);
        const auto r = run({"maximal-variation", "--input", chi, "--tol", tol, "--format", "csv"});
        REQUIRE(r.code == 0);
        CHECK(r.out.find(",1/1000000,") != std::string::npos);
    }
}

TEST_CASE("counterexample lipschitz") {
    const auto r = run({"counterexample", "lipschitz", "--beta", "3/4", "--bumps", "200", "--format", "csv"});
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 202);
    CHECK(ls[0] == "K,x_prime,value,S,x_prime_decimal,value_decimal,S_decimal");
    CHECK(ls[1] == "0,0,1,1,0,1,1");
    CHECK(ls[2].rfind("1,24/5,5/29,34/29,4.8,", 0) == 0);
    Rational s;
    for (int k = 0; k <= 200; ++k) s += 1 / ((k == 0 ? Rational(0) : Q("24/5") + Rational(k - 1) * Q("22/5")) + 1);
    CHECK(ls[201].rfind("200,", 0) == 0);
    CHECK(ls[201].find("," + s.str() + ",") != std::string::npos);
}

TEST_CASE("counterexample cone-spike") {
    const auto r = run({"counterexample", "cone-spike", "--alpha", "1/5", "--n", "1000", "--format", "csv"});
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 2);
    CHECK(ls[0].rfind("n,value_third,value_half,value_two_thirds,local_max", 0) == 0);
    CHECK(ls[1].find(",yes,") != std::string::npos);
}

TEST_CASE("analysis subcommands") {
    const Scratch s;
    const std::string chi = s.write("chi.json", kChi);
    SUBCASE("sweep header") {
        const auto r = run({"sweep", "--input", chi, "--alphas", "1/2,1", "--format", "csv"});
        REQUIRE(r.code == 0);
        const auto ls = lines(r.out);
        REQUIRE(ls.size() == 3);
        CHECK(ls[0].rfind("alpha,variation_f,variation_Mf_lower,variation_Mf_struct,ratio", 0) == 0);
        CHECK(ls[2].rfind("1,2,2,2,1,", 0) == 0);
    }
    SUBCASE("sweep leaves the structural value empty below one third on the spike pair") {
        const std::string spike = s.write("spike.json", to_json(make_spike_pair(10)));
        const auto r = run({"sweep", "--input", spike, "--alphas", "1/5", "--format", "csv"});
        REQUIRE(r.code == 0);
        const auto row = lines(r.out).at(1);
        CHECK(row.rfind("1/5,40,", 0) == 0);
        CHECK(row.find(",,") != std::string::npos);
    }
    SUBCASE("detachment") {
        const auto r = run({"detachment", "--input", chi, "--window", "-10:10", "--format", "csv"});
        REQUIRE(r.code == 0);
        const auto ls = lines(r.out);
        REQUIRE(ls.size() == 3);
        CHECK(ls[1].rfind("-10,", 0) == 0);
        CHECK(ls[1].find(",yes,no,monotone,") != std::string::npos);
        CHECK(ls[2].find(",no,yes,monotone,") != std::string::npos);
    }
    SUBCASE("detachment of a constant is header only") {
        const std::string c =
            s.write("c.json", R"({"breakpoints": ["0"], "values": [], "tails": {"left": "2", "right": "2"}})");
        const std::string out = s.path("d.csv");
        CHECK(run({"detachment", "--input", c, "--format", "csv", "--out", out}).code == 0);
        CHECK(slurp(out) ==
              "lo,hi,lo_clipped,hi_clipped,shape,vertex,value_lo,value_hi,"
              "lo_decimal,hi_decimal,vertex_decimal,value_lo_decimal,value_hi_decimal\n");
    }
    SUBCASE("maximal-variation and variation") {
        const auto m = run({"maximal-variation", "--input", chi, "--alpha", "1/2", "--format", "csv"});
        REQUIRE(m.code == 0);
        CHECK(lines(m.out).at(1).rfind("2,2,2,", 0) == 0);
        const auto v = run({"variation", "--input", chi, "--level", "4", "--format", "csv"});
        REQUIRE(v.code == 0);
        CHECK(lines(v.out).at(0) == "variation_f,variation_Mf_partition,partition_size,"
                                    "variation_f_decimal,variation_Mf_partition_decimal");
    }
    SUBCASE("weaktype") {
        const auto r = run({"weaktype", "--input", chi, "--alpha", "1", "--lambda", "1/2", "--format", "csv"});
        REQUIRE(r.code == 0);
        const auto row = lines(r.out).at(1);
        // measure 3, ratio 3/2, up to the location tolerance
        CHECK(row.find(",2.99999999") != std::string::npos);
        CHECK(row.find(",1.49999999") != std::string::npos);
    }
}

TEST_CASE("verify") {
    SUBCASE("passing suites exit 0") {
        const auto r = run({"verify", "--suite", "spike,bpl,sandwich", "--quick", "--seed", "42", "--format", "csv"});
        CHECK(r.code == cli::kSuccess);
        CHECK(lines(r.out).size() == 4);
        CHECK(r.out.find(",fail,") == std::string::npos);
    }
    SUBCASE("fault injection exits 1") {
        for (const char* suite : {"square", "sandwich"}) {
            CAPTURE(suite);
            const auto r = run({"verify", "--suite", suite, "--quick", "--inject-fault", "--format", "csv"});
            CHECK(r.code == cli::kVerificationFailure);
            CHECK(r.out.find(",fail,") != std::string::npos);
        }
    }
    SUBCASE("identical seeds give identical bytes") {
        const std::vector<std::string> args{"verify", "--suite", "bpl,square,sandwich", "--quick", "--seed",
                                            "123",    "--format", "csv"};
        const auto a = run(args);
        const auto b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
    SUBCASE("MAXBV_SEED stands in for --seed; the flag wins") {
        const std::vector<std::string> base{"verify", "--suite", "bpl", "--quick", "--format", "csv"};
        auto with_seed = [&base](const char* seed) {
            auto args = base;
            args.insert(args.end(), {"--seed", seed});
            return run(args).out;
        };
        ::setenv("MAXBV_SEED", "9", 1);
        const std::string env9 = run(base).out;
        const std::string flag5 = with_seed("5");
        ::unsetenv("MAXBV_SEED");
        CHECK(env9 == with_seed("9"));
        CHECK(flag5 == with_seed("5"));
        CHECK(run(base).out == with_seed("42"));
    }
}
