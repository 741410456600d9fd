#include "ciqw/search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>

namespace ciqw {

namespace {

constexpr double kPi = std::numbers::pi;

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::string describe_offenders(const std::vector<NonIntegralValue>& offenders) {
    std::ostringstream out;
    out << "spectrum is not integral: ";
    for (std::size_t i = 0; i < offenders.size(); ++i) {
        if (i) out << ", ";
        out << offenders[i].eigenvalue << " (off by " << offenders[i].distance << ")";
    }
    return out.str();
}

CostReport make_cost_report(int k, int s) {
    CostReport cost;
    cost.oracle_queries = k;
    cost.ctqw_calls = 2LL * s * k;
    cost.per_reflection_time = 4.0 * kPi * (1.0 - 1.0 / static_cast<double>(1LL << s));
    cost.total_evolution_time = static_cast<double>(k) * cost.per_reflection_time;
    return cost;
}

} // namespace

Rational::Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const long long g = std::gcd(std::abs(num), den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational MarkedSet::epsilon() const {
    return Rational(static_cast<long long>(members.size()), n_vertices);
}

bool MarkedSet::contains(int v) const {
    return std::binary_search(members.begin(), members.end(), v);
}

MarkedSet MarkedSet::of(std::vector<int> members, int n_vertices) {
    if (members.empty()) throw ParameterError("marked set must be nonempty");
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
        throw ParameterError("marked set has duplicate vertices");
    if (members.front() < 0 || members.back() >= n_vertices)
        throw ParameterError("marked vertex out of range");
    return MarkedSet{std::move(members), n_vertices};
}

std::vector<int> select_marked_vertices(std::uint64_t seed, int n_vertices, int count) {
    if (count < 1 || count > n_vertices)
        throw ParameterError("marked count must lie in [1, n]");
    std::vector<int> pool(n_vertices);
    std::iota(pool.begin(), pool.end(), 0);
    std::uint64_t state = seed;
    for (int i = 0; i < count; ++i) {
        const int j = i + static_cast<int>(splitmix64(state) %
                                           static_cast<std::uint64_t>(n_vertices - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    std::sort(pool.begin(), pool.end());
    return pool;
}

SearchParams long_params(const Rational& epsilon) {
    if (epsilon.num <= 0 || epsilon.num > epsilon.den)
        throw ParameterError("epsilon must lie in (0, 1]");
    const double sqrt_eps = std::sqrt(epsilon.value());
    int k = 1;
    while (std::sin(kPi / (4.0 * k + 2.0)) > sqrt_eps * (1.0 + 1e-12)) ++k;
    return long_params(epsilon, k);
}

SearchParams long_params(const Rational& epsilon, int k) {
    if (epsilon.num <= 0 || epsilon.num > epsilon.den)
        throw ParameterError("epsilon must lie in (0, 1]");
    if (k < 1) throw ParameterError("iteration count must be positive");
    const double ratio = std::sin(kPi / (4.0 * k + 2.0)) / std::sqrt(epsilon.value());
    if (ratio > 1.0 + 1e-12)
        throw ParameterError("iteration count too small for this epsilon");
    SearchParams params;
    params.epsilon = epsilon;
    params.k = k;
    params.alpha = 2.0 * std::asin(std::min(ratio, 1.0));
    params.beta = params.alpha;
    return params;
}

void oracle_phase(StateVector& state, const MarkedSet& m, double alpha) {
    if (m.members.empty()) throw ParameterError("marked set must be nonempty");
    if (m.n_vertices != state.n_vertices())
        throw DimensionError("marked set does not match state dimension");
    const Complex phase = std::polar(1.0, alpha);
    for (int a = 0; a < state.ancilla_dim(); ++a)
        for (int v : m.members) state.amp(a, v) *= phase;
}

void oracle_via_standard(StateVector& flag_joint, const MarkedSet& m, double theta) {
    if (flag_joint.ancilla_count() != 1)
        throw DimensionError("oracle_via_standard expects a single flag qubit");
    if (m.n_vertices != flag_joint.n_vertices())
        throw DimensionError("marked set does not match state dimension");
    if (flag_joint.ancilla_residue() > 1e-12)
        throw std::invalid_argument("oracle_via_standard: flag qubit is not |0>");

    auto standard_oracle = [&] {
        for (int v : m.members) std::swap(flag_joint.amp(0, v), flag_joint.amp(1, v));
    };
    standard_oracle();
    const Complex lo = std::polar(1.0, -theta / 2.0);
    const Complex hi = std::polar(1.0, theta / 2.0);
    for (int v = 0; v < flag_joint.n_vertices(); ++v) {
        flag_joint.amp(0, v) *= lo;
        flag_joint.amp(1, v) *= hi;
    }
    standard_oracle();
}

SearchResult run_search(const Graph& g, const MarkedSet& m, const SearchOptions& opts) {
    if (m.n_vertices != g.n_vertices)
        throw DimensionError("marked set does not match graph size");
    if (!is_connected(g)) throw ParameterError("search requires a connected graph");

    const Spectrum raw = eigendecompose(laplacian(g));
    Spectrum snapped;
    const Spectrum* sim = &raw;
    double lambda_max = raw.eigenvalues.back();

    if (opts.mode == SearchMode::Circuit && !opts.bypass_certification) {
        CertifyResult cert = certify_integral(raw, opts.integrality_tol);
        if (!cert.integral()) {
            std::string msg = describe_offenders(cert.offenders);
            throw NonIntegralError(msg, std::move(cert.offenders));
        }
        snapped = with_integer_eigenvalues(raw);
        sim = &snapped;
        lambda_max = static_cast<double>(cert.spectrum->max_value());
    } else {
        // exact mode still reports circuit costs; snap λ_N when it certifies
        CertifyResult cert = certify_integral(raw, opts.integrality_tol);
        if (cert.integral()) lambda_max = static_cast<double>(cert.spectrum->max_value());
    }

    const PhaseEstimationConfig cfg = PhaseEstimationConfig::for_max_eigenvalue(lambda_max);
    SearchParams params = opts.params ? *opts.params : long_params(m.epsilon());
    params.s = cfg.s;
    params.t0 = cfg.t0;

    SearchResult result;
    result.params = params;
    result.cost = make_cost_report(params.k, params.s);

    if (opts.mode == SearchMode::Circuit) {
        StateVector state =
            StateVector::with_ancilla(StateVector::uniform(g.n_vertices), cfg.s);
        WalkCounters counters;
        for (int it = 0; it < params.k; ++it) {
            oracle_phase(state, m, params.alpha);
            reflection_circuit(state, *sim, cfg, params.beta, &counters);
        }
        result.vertex_distribution = state.vertex_distribution();
        result.ancilla_residue = state.ancilla_residue();
    } else {
        StateVector state = StateVector::uniform(g.n_vertices);
        for (int it = 0; it < params.k; ++it) {
            oracle_phase(state, m, params.alpha);
            reflection_exact(state, params.beta);
        }
        result.vertex_distribution = state.vertex_distribution();
        result.ancilla_residue = 0.0;
    }

    result.success_probability = 0.0;
    for (int v : m.members) result.success_probability += result.vertex_distribution[v];
    return result;
}

SearchResult run_search(const GraphSpec& spec, const MarkedSet& m, const SearchOptions& opts) {
    return run_search(build_graph(spec), m, opts);
}

TrotterBound trotter_bound(long long m, double norm_ht, double eps, int order_k) {
    if (m < 1 || norm_ht <= 0.0 || eps <= 0.0 || order_k < 1)
        throw ParameterError("trotter_bound requires positive inputs");
    const double md = static_cast<double>(m);
    TrotterBound bound;
    bound.value = 2.0 * md * md * std::pow(5.0, 2.0 * order_k) * norm_ht *
                  std::pow(md * norm_ht / eps, 1.0 / (2.0 * order_k));
    bound.within_validity =
        eps <= 1.0 && 1.0 <= 2.0 * md * std::pow(5.0, order_k - 1) * norm_ht;
    return bound;
}

double ctqw_gate_estimate(long long lambda_n, double t, long long n) {
    if (lambda_n < 1 || t <= 0.0 || n < 1)
        throw ParameterError("ctqw_gate_estimate requires positive inputs");
    const long long terms = n * n; // Pauli-string decomposition
    const double norm_ht = static_cast<double>(lambda_n) * t;
    const double exponentials = trotter_bound(terms, norm_ht, 0.5, 1).value;
    return exponentials * std::log2(static_cast<double>(n));
}

} // namespace ciqw
