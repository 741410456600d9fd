#pragma once

#include "ciqw/search.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ciqw::cli {

enum class Command { Families, Spectrum, Certify, Depth, Search, Sweep, Compare };
enum class OutputFormat { Json, Csv };

/// Parsed command-line configuration. Identical configs (including seed)
/// produce byte-identical output.
struct RunConfig {
    Command command = Command::Families;
    std::vector<std::string> graph_args; // one graph, or a grid for sweep/compare
    std::vector<int> marked;             // explicit marked vertices
    std::vector<int> marked_counts;      // seeded selection sizes
    std::optional<std::uint64_t> seed;
    std::optional<Rational> epsilon_override; // --params epsilon=NUM/DEN
    std::optional<int> k_override;            // --params k=INT
    SearchMode mode = SearchMode::Circuit;
    double tol = 1e-9;             // success-probability assertion threshold
    double integrality_tol = 1e-6; // certification tolerance
    bool bypass_certify = false;
    OutputFormat format = OutputFormat::Json;
    std::string out_path; // empty writes to stdout
};

struct CommandOutput {
    std::string text;
    int exit_code = 0; // 0 success, 2 assertion failure, 3 input error
};

/// "family:p1,p2,..." or a path to an edge-list file ("custom:PATH" also works).
GraphSpec parse_graph_arg(const std::string& arg);

const char* command_name(Command c);

/// Runs the configured command and renders its report. Input errors raised
/// by the core library surface as exceptions; run_cli maps them to exit 3.
CommandOutput execute(const RunConfig& cfg);

/// Full CLI entry point: parse flags, execute, write --out or stdout.
int run_cli(int argc, const char* const* argv);

} // namespace ciqw::cli
