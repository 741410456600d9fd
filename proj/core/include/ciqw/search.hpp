#pragma once

#include "ciqw/walk.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ciqw {

/// Exact fraction, kept reduced with den > 0.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational&) const = default;
};

/// Nonempty subset of vertex indices; ε = |members|/N carried exactly.
struct MarkedSet {
    std::vector<int> members; // sorted, distinct, in [0, n)
    int n_vertices = 0;

    Rational epsilon() const;
    bool contains(int v) const;

    static MarkedSet of(std::vector<int> members, int n_vertices);
};

/// Deterministic marked-set selection: splitmix64 stream from the seed
/// drives a partial Fisher–Yates shuffle of 0..n-1; the first `count`
/// entries are returned sorted. Pure function of (seed, n, count).
std::vector<int> select_marked_vertices(std::uint64_t seed, int n_vertices, int count);

/// Exact-search parameters: α = β = 2·arcsin(sin(π/(4k+2))/√ε) with k the
/// smallest positive integer making the arcsin argument ≤ 1. s and t0 are
/// filled in by run_search from the spectrum.
struct SearchParams {
    Rational epsilon;
    int k = 0;
    double alpha = 0.0;
    double beta = 0.0;
    int s = 0;
    double t0 = 0.0;
};

SearchParams long_params(const Rational& epsilon);
/// Same phases for a caller-chosen iteration count k ≥ the minimal one.
SearchParams long_params(const Rational& epsilon, int k);

struct CostReport {
    long long oracle_queries = 0;       // k
    long long ctqw_calls = 0;           // 2·s·k
    double total_evolution_time = 0.0;  // k · per_reflection_time
    double per_reflection_time = 0.0;   // 4π(1 - 2^{-s})
};

enum class SearchMode { Circuit, Exact };

struct SearchOptions {
    SearchMode mode = SearchMode::Circuit;
    std::optional<SearchParams> params; // defaults to long_params(|M|/N)
    bool bypass_certification = false;
    double integrality_tol = 1e-6;
};

struct SearchResult {
    double success_probability = 0.0;
    std::vector<double> vertex_distribution;
    double ancilla_residue = 0.0;
    CostReport cost;
    SearchParams params; // parameters actually used
};

/// Circuit-mode search on a graph whose spectrum fails integrality
/// certification; carries the offending eigenvalues.
struct NonIntegralError : std::runtime_error {
    std::vector<NonIntegralValue> offenders;

    NonIntegralError(const std::string& msg, std::vector<NonIntegralValue> off)
        : std::runtime_error(msg), offenders(std::move(off)) {}
};

/// General oracle e^{iαΠ_M}: multiplies the amplitude of every marked
/// vertex by e^{iα}. Acts on the vertex index in either layout.
void oracle_phase(StateVector& state, const MarkedSet& m, double alpha);

/// The two-invocation construction of the general oracle from the standard
/// oracle: O_M, then R_z(θ) = diag(e^{-iθ/2}, e^{iθ/2}) on the flag qubit,
/// then O_M. The state must be flag⊗vertex (one ancilla) with flag |0⟩;
/// the result is e^{-iθ/2}·e^{iθΠ_M} on the vertex register, flag restored.
void oracle_via_standard(StateVector& flag_joint, const MarkedSet& m, double theta);

/// Exact search: prepare |π⟩, repeat k times [oracle e^{iαΠ_M}, then the
/// reflection e^{iβ|π⟩⟨π|} (Fig-style circuit or exact projector)], read
/// out the exact distribution and cost accounting.
SearchResult run_search(const Graph& g, const MarkedSet& m, const SearchOptions& opts = {});
SearchResult run_search(const GraphSpec& spec, const MarkedSet& m,
                        const SearchOptions& opts = {});

/// Product-formula exponential-count bound 2m²5^{2k}·‖H‖t·(m‖H‖t/ε)^{1/2k};
/// within_validity reflects ε ≤ 1 ≤ 2m·5^{k-1}·‖H‖t.
struct TrotterBound {
    double value = 0.0;
    bool within_validity = true;
};

TrotterBound trotter_bound(long long m, double norm_ht, double eps, int order_k);

/// Elementary-gate estimate for simulating e^{iLt} by Pauli-decomposed
/// product formulas: the exponential-count bound at m = N² terms,
/// ‖H‖t = λ_N·t, order 1, error 1/2, times log₂N gates per exponential.
/// An upper-bound estimator, not a tight count.
double ctqw_gate_estimate(long long lambda_n, double t, long long n);

} // namespace ciqw
