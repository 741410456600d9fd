#pragma once

#include "ciqw/search.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

namespace ciqw::testing {

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return build_graph(GraphSpec::custom(n, std::move(edges)));
}

inline Spectrum spectrum_of(const GraphSpec& spec) {
    return eigendecompose(laplacian(build_graph(spec)));
}

inline double max_abs_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

// Dense vertex-space matrix of an operator, built column by column from
// basis states. op receives a vertex-layout StateVector to mutate.
template <typename Op>
std::vector<Complex> operator_matrix(int n, Op&& op) {
    std::vector<Complex> m(static_cast<std::size_t>(n) * n);
    for (int col = 0; col < n; ++col) {
        StateVector basis = StateVector::vertex_basis(n, col);
        op(basis);
        for (int row = 0; row < n; ++row)
            m[static_cast<std::size_t>(row) * n + col] = basis.amplitudes()[row];
    }
    return m;
}

// e^{iβ|π⟩⟨π|} = I - (1 - e^{iβ})|π⟩⟨π| as a dense matrix.
inline std::vector<Complex> exact_reflection_matrix(int n, double beta) {
    std::vector<Complex> m(static_cast<std::size_t>(n) * n, Complex{0.0, 0.0});
    const Complex off = -(Complex{1.0, 0.0} - std::polar(1.0, beta)) / static_cast<double>(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m[static_cast<std::size_t>(i) * n + j] = off + (i == j ? Complex{1.0, 0.0} : 0.0);
    return m;
}

// Seeded Erdős–Rényi-style graph for property tests.
inline Graph random_graph(int n, double p, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) edges.emplace_back(u, v);
    return build_graph(GraphSpec::custom(n, std::move(edges)));
}

inline int count_components(const Graph& g) {
    std::vector<std::vector<int>> adj(g.n_vertices);
    for (auto [u, v] : g.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> component(g.n_vertices, -1);
    int count = 0;
    for (int start = 0; start < g.n_vertices; ++start) {
        if (component[start] >= 0) continue;
        std::vector<int> stack{start};
        component[start] = count;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[u])
                if (component[v] < 0) {
                    component[v] = count;
                    stack.push_back(v);
                }
        }
        ++count;
    }
    return count;
}

// The acceptance grid of family instances used across suites.
inline std::vector<GraphSpec> acceptance_instances() {
    std::vector<GraphSpec> specs;
    for (long long n : {2, 3, 5, 8}) specs.push_back(GraphSpec::complete(n));
    specs.push_back(GraphSpec::johnson(4, 2));
    specs.push_back(GraphSpec::johnson(5, 2));
    specs.push_back(GraphSpec::kneser(5, 2));
    specs.push_back(GraphSpec::hamming(3, 2));
    specs.push_back(GraphSpec::hamming(2, 3));
    specs.push_back(GraphSpec::grassmann(2, 3, 1));
    specs.push_back(GraphSpec::rook(2, 3));
    specs.push_back(GraphSpec::rook(3, 3));
    specs.push_back(GraphSpec::complete_square(3));
    specs.push_back(GraphSpec::cocktail_party(3));
    specs.push_back(GraphSpec::complete_multipartite(6, 3));
    specs.push_back(GraphSpec::star(4));
    for (long long n = 4; n <= 8; ++n) specs.push_back(GraphSpec::antiregular(n));
    return specs;
}

} // namespace ciqw::testing
