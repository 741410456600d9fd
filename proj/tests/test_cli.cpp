#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cli.hpp"
#include "helpers.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sys/wait.h>

using namespace ciqw;
using namespace ciqw::cli;
using nlohmann::json;

namespace {

struct ProcessResult {
    std::string output;
    int exit_code = -1;
};

ProcessResult run_binary(const std::string& args) {
    const std::string cmd = std::string(CIQW_CLI_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof(buf), pipe)) output.append(buf, got);
    const int status = pclose(pipe);
    return {output, WIFEXITED(status) ? WEXITSTATUS(status) : -1};
}

std::filesystem::path write_p4_file() {
    const auto path = std::filesystem::temp_directory_path() / "ciqw_test_p4.edges";
    std::ofstream out(path);
    out << serialize_graph(ciqw::testing::path_graph(4));
    return path;
}

RunConfig base_config(Command cmd, std::string graph) {
    RunConfig cfg;
    cfg.command = cmd;
    cfg.graph_args = {std::move(graph)};
    return cfg;
}

} // namespace

TEST_CASE("parse_graph_arg") {
    GraphSpec spec = parse_graph_arg("johnson:4,2");
    CHECK(spec.family == Family::Johnson);
    CHECK(spec.params == std::vector<long long>{4, 2});
    CHECK(parse_graph_arg("complete:5").family == Family::Complete);
    CHECK(parse_graph_arg("antiregular:6").family == Family::Antiregular);
    CHECK_THROWS_AS(parse_graph_arg("tree:3"), ParameterError);
    CHECK_THROWS_AS(parse_graph_arg("johnson:4,x"), ParameterError);
    CHECK_THROWS_AS(parse_graph_arg("johnson:9,4,1"), ParameterError);
    CHECK_THROWS_AS(parse_graph_arg("/nonexistent/file.edges"), ParseError);

    const auto p4 = write_p4_file();
    GraphSpec custom = parse_graph_arg(p4.string());
    CHECK(custom.family == Family::Custom);
    CHECK(custom.custom_n == 4);
    CHECK(parse_graph_arg("custom:" + p4.string()).custom_edges == custom.custom_edges);
}

TEST_CASE("certify command reports the integral spectrum") {
    RunConfig cfg = base_config(Command::Certify, "star:3");
    CommandOutput out = execute(cfg);
    CHECK(out.exit_code == 0);
    json doc = json::parse(out.text);
    CHECK(doc["graph"]["n"] == 4);
    CHECK(doc["spectrum"]["integral"] == true);
    CHECK(doc["spectrum"]["values"] == json::array({0, 1, 4}));
    CHECK(doc["spectrum"]["multiplicities"] == json::array({1, 2, 1}));
}

TEST_CASE("depth command emits d_L and the chain") {
    RunConfig cfg = base_config(Command::Depth, "hamming:4,2");
    json doc = json::parse(execute(cfg).text);
    CHECK(doc["depth"]["d_l"] == 3);
    CHECK(doc["depth"]["chain"] ==
          json::array({{0, 2, 4, 6, 8}, {0, 4, 8}, {0, 8}, {0}}));
    CHECK(doc["depth"]["gcds"] == json::array({2, 4, 8}));
}

TEST_CASE("certify rejection is data, not a fault") {
    const auto p4 = write_p4_file();
    RunConfig cfg = base_config(Command::Certify, p4.string());
    CommandOutput out = execute(cfg);
    CHECK(out.exit_code == 0);
    json doc = json::parse(out.text);
    CHECK(doc["spectrum"]["integral"] == false);
    REQUIRE_FALSE(doc["spectrum"]["offenders"].empty());
    bool cites_sqrt2 = false;
    for (const auto& off : doc["spectrum"]["offenders"])
        if (std::abs(off["eigenvalue"].get<double>() - (2.0 - std::numbers::sqrt2)) < 1e-9)
            cites_sqrt2 = true;
    CHECK(cites_sqrt2);
    // depth of a non-integral graph reports the rejection with a null depth
    cfg.command = Command::Depth;
    json depth_doc = json::parse(execute(cfg).text);
    CHECK(depth_doc["depth"].is_null());
}

TEST_CASE("depth csv on a non-integral graph falls back to the certification table") {
    const auto p4 = write_p4_file();
    RunConfig cfg = base_config(Command::Depth, p4.string());
    cfg.format = OutputFormat::Csv;
    CommandOutput out = execute(cfg);
    CHECK(out.exit_code == 0);
    CHECK(out.text.rfind("index,eigenvalue,nearest,distance,within_tol", 0) == 0);
    CHECK(out.text.find("false") != std::string::npos);
}

TEST_CASE("search command: complete(8) with two seeded marked vertices") {
    RunConfig cfg = base_config(Command::Search, "complete:8");
    cfg.marked_counts = {2};
    cfg.seed = 7;
    CommandOutput out = execute(cfg);
    CHECK(out.exit_code == 0);
    json doc = json::parse(out.text);
    CHECK(doc["config"]["seed"] == 7);
    CHECK(doc["marked"].size() == 2);
    CHECK(doc["search"]["params"]["k"] == 1);
    CHECK(doc["search"]["params"]["alpha"].get<double>() ==
          doctest::Approx(std::numbers::pi).epsilon(1e-7));
    CHECK(doc["search"]["result"]["success_probability"].get<double>() >= 1.0 - 1e-9);
}

TEST_CASE("search command: rook(2,3) with an explicit marked set") {
    RunConfig cfg = base_config(Command::Search, "rook:2,3");
    cfg.marked = {0, 2, 4};
    json doc = json::parse(execute(cfg).text);
    CHECK(doc["search"]["params"]["s"] == 3); // lambda_N = m + n = 5
    CHECK(doc["search"]["cost"]["ctqw_calls"] == 6);
    CHECK(doc["search"]["result"]["success_probability"].get<double>() >= 1.0 - 1e-9);
}

TEST_CASE("search with a supplied epsilon override exits 2 when below tolerance") {
    RunConfig cfg = base_config(Command::Search, "complete:3");
    cfg.marked = {1};
    cfg.epsilon_override = Rational(1, 2);
    CommandOutput out = execute(cfg);
    CHECK(out.exit_code == 2);
    json doc = json::parse(out.text);
    CHECK(doc["search"]["result"]["success_probability"].get<double>() ==
          doctest::Approx(25.0 / 27.0).epsilon(1e-9));
}

TEST_CASE("identical configs produce byte-identical output") {
    RunConfig cfg = base_config(Command::Search, "kneser:5,2");
    cfg.marked_counts = {3};
    cfg.seed = 99;
    CHECK(execute(cfg).text == execute(cfg).text);
    cfg.command = Command::Sweep;
    cfg.graph_args = {"johnson:4,2", "star:4"};
    CHECK(execute(cfg).text == execute(cfg).text);
}

TEST_CASE("sweep: success column at 1 for johnson n = 4,5,6") {
    RunConfig cfg;
    cfg.command = Command::Sweep;
    cfg.graph_args = {"johnson:4,2", "johnson:5,2", "johnson:6,2"};
    cfg.marked_counts = {1};
    cfg.seed = 11;
    json doc = json::parse(execute(cfg).text);
    REQUIRE(doc["rows"].size() == 3);
    for (const auto& row : doc["rows"]) {
        CHECK(row["error"] == "");
        CHECK(row["success"].get<double>() >= 1.0 - 1e-9);
    }
}

TEST_CASE("sweep records per-cell errors and continues") {
    const auto p4 = write_p4_file();
    RunConfig cfg;
    cfg.command = Command::Sweep;
    cfg.graph_args = {p4.string(), "complete:3"};
    cfg.marked_counts = {1};
    cfg.seed = 4;
    json doc = json::parse(execute(cfg).text);
    REQUIRE(doc["rows"].size() == 2);
    CHECK(doc["rows"][0]["error"] != "");
    CHECK(doc["rows"][0]["success"].is_null());
    CHECK(doc["rows"][1]["error"] == "");
    CHECK(doc["rows"][1]["success"].get<double>() >= 1.0 - 1e-9);
}

TEST_CASE("compare: hypercube depth column equals floor(log2 n) + 1") {
    RunConfig cfg;
    cfg.command = Command::Compare;
    cfg.graph_args = {"hamming:2,2", "hamming:4,2", "hamming:8,2", "hamming:16,2"};
    cfg.marked_counts = {1};
    json doc = json::parse(execute(cfg).text);
    REQUIRE(doc["rows"].size() == 4);
    const std::vector<long long> expected_d = {2, 3, 4, 5};
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(doc["rows"][i]["d_l"].get<long long>() == expected_d[i]);
        CHECK(doc["rows"][i]["error"] == "");
    }
    CHECK(doc["rows"][3]["n"] == 65536);
}

TEST_CASE("empty grid yields a header-only table") {
    RunConfig cfg;
    cfg.command = Command::Compare;
    cfg.format = OutputFormat::Csv;
    CommandOutput out = execute(cfg);
    CHECK(out.text ==
          "graph,n,marked,epsilon,k,queries,ctqw_calls,total_time,d_l,two_pow_d_l,"
          "sqrt_n_over_m,two_pow_d_l_sqrt_n,error\n");
}

TEST_CASE("csv output uses dot decimals and a mandatory header") {
    RunConfig cfg = base_config(Command::Search, "complete:2");
    cfg.marked = {0};
    cfg.format = OutputFormat::Csv;
    CommandOutput out = execute(cfg);
    CHECK(out.text.rfind("family,n,mode,marked,epsilon,", 0) == 0);
    CHECK(out.text.find("0.5") != std::string::npos);
    CHECK(out.text.find(';') == std::string::npos);
}

TEST_CASE("cli binary end to end") {
    SUBCASE("successful search exits 0") {
        ProcessResult r = run_binary("search --graph complete:4 --marked 1");
        CHECK(r.exit_code == 0);
        CHECK(json::parse(r.output)["search"]["result"]["success_probability"]
                  .get<double>() >= 1.0 - 1e-9);
    }
    SUBCASE("below-threshold search exits 2") {
        ProcessResult r =
            run_binary("search --graph complete:3 --marked 0 --params epsilon=1/2");
        CHECK(r.exit_code == 2);
    }
    SUBCASE("circuit search on a non-integral graph exits 3") {
        const auto p4 = write_p4_file();
        ProcessResult r = run_binary("search --graph " + p4.string() + " --marked 0");
        CHECK(r.exit_code == 3);
    }
    SUBCASE("bad flags exit 3") {
        CHECK(run_binary("search --graph complete:3").exit_code == 3); // no marked source
        CHECK(run_binary("search --graph nosuchfamily:3 --marked 0").exit_code == 3);
        CHECK(run_binary("bogus-subcommand").exit_code == 3);
    }
    SUBCASE("families lists the catalog") {
        ProcessResult r = run_binary("families");
        CHECK(r.exit_code == 0);
        json doc = json::parse(r.output);
        CHECK(doc["families"].size() == 11);
    }
    SUBCASE("identical invocations are byte-identical") {
        const std::string args = "search --graph johnson:4,2 --marked-count 2 --seed 5";
        CHECK(run_binary(args).output == run_binary(args).output);
    }
    SUBCASE("--out writes the report to a file") {
        const auto path = std::filesystem::temp_directory_path() / "ciqw_out.json";
        ProcessResult r =
            run_binary("certify --graph star:3 --out " + path.string());
        CHECK(r.exit_code == 0);
        CHECK(r.output.empty());
        std::ifstream in(path);
        json doc = json::parse(in);
        CHECK(doc["spectrum"]["integral"] == true);
    }
}
