#include "ciqw/graphs.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace ciqw {

namespace {

constexpr long long kMaxVertices = 1 << 20;

[[noreturn]] void fail(const std::string& msg) { throw ParameterError(msg); }

long long checked_mul(long long a, long long b, const char* what) {
    long long r = 0;
    if (__builtin_mul_overflow(a, b, &r) || r > kMaxVertices) {
        fail(std::string(what) + ": instance too large");
    }
    return r;
}

bool is_small_prime(long long q) {
    return q == 2 || q == 3 || q == 5 || q == 7;
}

// binom(n,k) with the vertex-count cap applied.
long long checked_binomial(long long n, long long k, const char* what) {
    if (k > n - k) k = n - k;
    long long r = 1;
    for (long long i = 0; i < k; ++i) {
        r = checked_mul(r, n - i, what);
        r /= i + 1;
    }
    return r;
}

// Gaussian binomial [n choose k]_q (the Grassmann vertex count) with the
// cap applied; the double-precision estimate guards the exact arithmetic.
void check_gaussian_binomial(long long n, long long k, long long q) {
    if (k > n - k) k = n - k;
    double estimate = 1.0;
    for (long long i = 0; i < k; ++i) {
        estimate *= (std::pow(static_cast<double>(q), static_cast<double>(n - i)) - 1.0) /
                    (std::pow(static_cast<double>(q), static_cast<double>(i + 1)) - 1.0);
        if (estimate > static_cast<double>(kMaxVertices)) fail("grassmann: instance too large");
    }
}

std::string label_set(const std::vector<int>& subset) {
    std::string s = "{";
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(subset[i]);
    }
    return s + "}";
}

std::string label_tuple(const std::vector<int>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(t[i]);
    }
    return s + ")";
}

std::string label_pair(long long a, long long b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// All k-subsets of {1..n} in lexicographic order.
std::vector<std::vector<int>> subsets_lex(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i + 1;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
    int count = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++count;
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return count;
}

Graph make_graph(int n, std::vector<std::pair<int, int>> edges,
                 std::vector<std::string> labels) {
    std::sort(edges.begin(), edges.end());
    Graph g;
    g.n_vertices = n;
    g.edges = std::move(edges);
    g.vertex_labels = std::move(labels);
    return g;
}

std::vector<std::string> index_labels(int n) {
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
    return labels;
}

Graph build_complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return make_graph(n, std::move(edges), index_labels(n));
}

Graph build_subset_graph(int n, int k, bool kneser) {
    auto verts = subsets_lex(n, k);
    const int target = kneser ? 0 : k - 1;
    std::vector<std::pair<int, int>> edges;
    for (std::size_t u = 0; u < verts.size(); ++u)
        for (std::size_t v = u + 1; v < verts.size(); ++v)
            if (intersection_size(verts[u], verts[v]) == target)
                edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    std::vector<std::string> labels;
    labels.reserve(verts.size());
    for (const auto& s : verts) labels.push_back(label_set(s));
    return make_graph(static_cast<int>(verts.size()), std::move(edges), std::move(labels));
}

Graph build_hamming(int d, int q) {
    std::vector<std::vector<int>> verts;
    std::vector<int> cur(d, 0);
    while (true) {
        verts.push_back(cur);
        int i = d - 1;
        while (i >= 0 && cur[i] == q - 1) cur[i--] = 0;
        if (i < 0) break;
        ++cur[i];
    }
    std::vector<std::pair<int, int>> edges;
    for (std::size_t u = 0; u < verts.size(); ++u)
        for (std::size_t v = u + 1; v < verts.size(); ++v) {
            int diff = 0;
            for (int i = 0; i < d; ++i) diff += verts[u][i] != verts[v][i];
            if (diff == 1) edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        }
    std::vector<std::string> labels;
    labels.reserve(verts.size());
    for (const auto& t : verts) labels.push_back(label_tuple(t));
    return make_graph(static_cast<int>(verts.size()), std::move(edges), std::move(labels));
}

// Rank of a rows×cols matrix over F_p (p prime), destroying `m`.
int rank_mod_p(std::vector<std::vector<int>>& m, int p) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] % p != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        // normalize pivot row
        int inv = 1;
        for (int x = 1; x < p; ++x)
            if (m[rank][c] * x % p == 1) {
                inv = x;
                break;
            }
        for (int cc = c; cc < cols; ++cc) m[rank][cc] = m[rank][cc] * inv % p;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] % p == 0) continue;
            int f = m[r][c] % p;
            for (int cc = c; cc < cols; ++cc)
                m[r][cc] = ((m[r][cc] - f * m[rank][cc]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

// Enumerate k-dim subspaces of F_q^n as canonical RREF matrices: choose the
// pivot columns in lex order, then run a base-q odometer over the free
// entries (row-major).
std::vector<std::vector<std::vector<int>>> grassmann_rrefs(int q, int n, int k) {
    std::vector<std::vector<std::vector<int>>> out;
    auto pivot_sets = subsets_lex(n, k); // 1-based columns
    for (const auto& piv1 : pivot_sets) {
        std::vector<int> piv(piv1.size());
        for (std::size_t i = 0; i < piv1.size(); ++i) piv[i] = piv1[i] - 1;
        std::vector<bool> is_pivot(n, false);
        for (int c : piv) is_pivot[c] = true;
        std::vector<std::pair<int, int>> free_pos; // (row, col)
        for (int r = 0; r < k; ++r)
            for (int c = piv[r] + 1; c < n; ++c)
                if (!is_pivot[c]) free_pos.emplace_back(r, c);
        std::vector<int> digits(free_pos.size(), 0);
        while (true) {
            std::vector<std::vector<int>> mat(k, std::vector<int>(n, 0));
            for (int r = 0; r < k; ++r) mat[r][piv[r]] = 1;
            for (std::size_t i = 0; i < free_pos.size(); ++i)
                mat[free_pos[i].first][free_pos[i].second] = digits[i];
            out.push_back(std::move(mat));
            int i = static_cast<int>(digits.size()) - 1;
            while (i >= 0 && digits[i] == q - 1) digits[i--] = 0;
            if (i < 0) break;
            ++digits[i];
        }
    }
    return out;
}

Graph build_grassmann(int q, int n, int k) {
    auto verts = grassmann_rrefs(q, n, k);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t u = 0; u < verts.size(); ++u)
        for (std::size_t v = u + 1; v < verts.size(); ++v) {
            std::vector<std::vector<int>> stacked = verts[u];
            stacked.insert(stacked.end(), verts[v].begin(), verts[v].end());
            // dim(A∩B) = k-1  <=>  dim(A+B) = k+1
            if (rank_mod_p(stacked, q) == k + 1)
                edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        }
    std::vector<std::string> labels;
    labels.reserve(verts.size());
    for (const auto& mat : verts) {
        std::string s = "[";
        for (std::size_t r = 0; r < mat.size(); ++r) {
            if (r) s += '|';
            for (int x : mat[r]) s += static_cast<char>('0' + x);
        }
        labels.push_back(s + "]");
    }
    return make_graph(static_cast<int>(verts.size()), std::move(edges), std::move(labels));
}

Graph build_rook(int m, int n) {
    const int total = m * n;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels(total);
    auto idx = [n](int a, int b) { return a * n + b; };
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < n; ++b) labels[idx(a, b)] = label_pair(a, b);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < n; ++b) {
            for (int b2 = b + 1; b2 < n; ++b2) edges.emplace_back(idx(a, b), idx(a, b2));
            for (int a2 = a + 1; a2 < m; ++a2) edges.emplace_back(idx(a, b), idx(a2, b));
        }
    return make_graph(total, std::move(edges), std::move(labels));
}

Graph build_complete_square(int n) {
    const int total = 4 * n;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels(total);
    auto idx = [](int u, int c) { return u * 4 + c; };
    static constexpr std::array<std::pair<int, int>, 4> square_edges{
        {{0, 1}, {1, 2}, {2, 3}, {0, 3}}};
    for (int u = 0; u < n; ++u)
        for (int c = 0; c < 4; ++c) labels[idx(u, c)] = label_pair(u, c);
    for (int u = 0; u < n; ++u)
        for (auto [c1, c2] : square_edges) edges.emplace_back(idx(u, c1), idx(u, c2));
    for (int c = 0; c < 4; ++c)
        for (int u = 0; u < n; ++u)
            for (int u2 = u + 1; u2 < n; ++u2) edges.emplace_back(idx(u, c), idx(u2, c));
    return make_graph(total, std::move(edges), std::move(labels));
}

Graph build_cocktail_party(int n) {
    const int total = 2 * n;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels(total);
    for (int u = 0; u < n; ++u)
        for (int b = 0; b < 2; ++b) labels[u * 2 + b] = label_pair(u, b);
    for (int i = 0; i < total; ++i)
        for (int j = i + 1; j < total; ++j)
            if (i / 2 != j / 2) edges.emplace_back(i, j); // partners stay unlinked
    return make_graph(total, std::move(edges), std::move(labels));
}

Graph build_complete_multipartite(int n, int k) {
    const int class_size = n / k;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels(n);
    for (int v = 0; v < n; ++v) labels[v] = label_pair(v / class_size, v % class_size);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (u / class_size != v / class_size) edges.emplace_back(u, v);
    return make_graph(n, std::move(edges), std::move(labels));
}

Graph build_star(int n) {
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> labels(n + 1);
    labels[0] = "center";
    for (int leaf = 1; leaf <= n; ++leaf) {
        labels[leaf] = "leaf" + std::to_string(leaf);
        edges.emplace_back(0, leaf);
    }
    return make_graph(n + 1, std::move(edges), std::move(labels));
}

// Iterative construction from A_2 = K_2: the new vertex joins every vertex
// of degree > ⌊N'/2⌋ and the most recently added member of the pair that
// shares the duplicated degree ⌊N'/2⌋.
Graph build_antiregular(int n) {
    std::vector<std::pair<int, int>> edges{{0, 1}};
    for (int built = 2; built < n; ++built) {
        std::vector<int> deg(built, 0);
        for (auto [u, v] : edges) {
            ++deg[u];
            ++deg[v];
        }
        const int dup = built / 2;
        std::vector<int> pair;
        for (int v = 0; v < built; ++v) {
            if (deg[v] > dup) edges.emplace_back(v, built);
            if (deg[v] == dup) pair.push_back(v);
        }
        if (pair.size() != 2)
            throw std::logic_error("antiregular: duplicated-degree pair not found");
        edges.emplace_back(pair.back(), built);
    }
    return make_graph(n, std::move(edges), index_labels(n));
}

Graph build_custom(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 1) fail("custom graph requires at least one vertex");
    std::set<std::pair<int, int>> seen;
    for (auto& [u, v] : edges) {
        if (u == v) fail("custom graph: loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            fail("custom graph: vertex out of range in edge " + label_pair(u, v));
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second)
            fail("custom graph: duplicate edge " + label_pair(u, v));
    }
    return make_graph(n, std::move(edges), index_labels(n));
}

} // namespace

GraphSpec GraphSpec::complete(long long n) { return {Family::Complete, {n}, 0, {}}; }
GraphSpec GraphSpec::johnson(long long n, long long k) { return {Family::Johnson, {n, k}, 0, {}}; }
GraphSpec GraphSpec::kneser(long long n, long long k) { return {Family::Kneser, {n, k}, 0, {}}; }
GraphSpec GraphSpec::hamming(long long d, long long q) { return {Family::Hamming, {d, q}, 0, {}}; }
GraphSpec GraphSpec::grassmann(long long q, long long n, long long k) {
    return {Family::Grassmann, {q, n, k}, 0, {}};
}
GraphSpec GraphSpec::rook(long long m, long long n) { return {Family::Rook, {m, n}, 0, {}}; }
GraphSpec GraphSpec::complete_square(long long n) { return {Family::CompleteSquare, {n}, 0, {}}; }
GraphSpec GraphSpec::cocktail_party(long long n) { return {Family::CocktailParty, {n}, 0, {}}; }
GraphSpec GraphSpec::complete_multipartite(long long n, long long k) {
    return {Family::CompleteMultipartite, {n, k}, 0, {}};
}
GraphSpec GraphSpec::star(long long n) { return {Family::Star, {n}, 0, {}}; }
GraphSpec GraphSpec::antiregular(long long n) { return {Family::Antiregular, {n}, 0, {}}; }
GraphSpec GraphSpec::custom(int n, std::vector<std::pair<int, int>> edges) {
    GraphSpec s;
    s.family = Family::Custom;
    s.custom_n = n;
    s.custom_edges = std::move(edges);
    return s;
}

const char* family_name(Family f) {
    switch (f) {
        case Family::Complete: return "complete";
        case Family::Johnson: return "johnson";
        case Family::Kneser: return "kneser";
        case Family::Hamming: return "hamming";
        case Family::Grassmann: return "grassmann";
        case Family::Rook: return "rook";
        case Family::CompleteSquare: return "completesquare";
        case Family::CocktailParty: return "cocktailparty";
        case Family::CompleteMultipartite: return "completemultipartite";
        case Family::Star: return "star";
        case Family::Antiregular: return "antiregular";
        case Family::Custom: return "custom";
    }
    return "?";
}

const std::vector<FamilyInfo>& family_catalog() {
    static const std::vector<FamilyInfo> catalog = {
        {Family::Complete, "complete", "n", "n >= 1"},
        {Family::Johnson, "johnson", "n,k", "1 <= k <= n"},
        {Family::Kneser, "kneser", "n,k", "1 <= k and k < n/2"},
        {Family::Hamming, "hamming", "d,q", "d >= 1, q >= 1"},
        {Family::Grassmann, "grassmann", "q,n,k", "q prime <= 7, n <= 14, 1 <= k <= n"},
        {Family::Rook, "rook", "m,n", "m >= 1, n >= 1"},
        {Family::CompleteSquare, "completesquare", "n", "n >= 1"},
        {Family::CocktailParty, "cocktailparty", "n", "n >= 1"},
        {Family::CompleteMultipartite, "completemultipartite", "n,k",
         "1 <= k <= n and k divides n"},
        {Family::Star, "star", "n", "n >= 1"},
        {Family::Antiregular, "antiregular", "N", "N >= 2"},
    };
    return catalog;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(n_vertices, 0);
    for (auto [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

long long Graph::degree_sum() const { return 2LL * static_cast<long long>(edges.size()); }

void validate_spec(const GraphSpec& spec) {
    const auto& p = spec.params;
    auto need = [&](std::size_t count) {
        if (p.size() != count)
            fail(std::string(family_name(spec.family)) + " expects " + std::to_string(count) +
                 " parameter(s)");
    };
    switch (spec.family) {
        case Family::Complete:
            need(1);
            if (p[0] < 1) fail("complete requires n >= 1");
            break;
        case Family::Johnson:
            need(2);
            if (p[1] < 1 || p[1] > p[0]) fail("johnson requires 1 <= k <= n");
            checked_binomial(p[0], p[1], "johnson");
            break;
        case Family::Kneser:
            need(2);
            if (p[1] < 1) fail("kneser requires k >= 1");
            if (2 * p[1] >= p[0]) fail("kneser requires k < n/2");
            checked_binomial(p[0], p[1], "kneser");
            break;
        case Family::Hamming: {
            need(2);
            if (p[0] < 1) fail("hamming requires d >= 1");
            if (p[1] < 1) fail("hamming requires q >= 1");
            long long total = 1;
            for (long long i = 0; i < p[0]; ++i) total = checked_mul(total, p[1], "hamming");
            break;
        }
        case Family::Grassmann:
            need(3);
            if (!is_small_prime(p[0]))
                fail("grassmann requires q to be a prime <= 7 at this scale");
            if (p[1] > 14) fail("grassmann requires n <= 14 at this scale");
            if (p[2] < 1 || p[2] > p[1]) fail("grassmann requires 1 <= k <= n");
            check_gaussian_binomial(p[1], p[2], p[0]);
            break;
        case Family::Rook:
            need(2);
            if (p[0] < 1 || p[1] < 1) fail("rook requires m >= 1 and n >= 1");
            checked_mul(p[0], p[1], "rook");
            break;
        case Family::CompleteSquare:
            need(1);
            if (p[0] < 1) fail("completesquare requires n >= 1");
            checked_mul(p[0], 4, "completesquare");
            break;
        case Family::CocktailParty:
            need(1);
            if (p[0] < 1) fail("cocktailparty requires n >= 1");
            checked_mul(p[0], 2, "cocktailparty");
            break;
        case Family::CompleteMultipartite:
            need(2);
            if (p[1] < 1 || p[1] > p[0]) fail("completemultipartite requires 1 <= k <= n");
            if (p[0] % p[1] != 0) fail("completemultipartite requires k to divide n");
            if (p[0] > kMaxVertices) fail("completemultipartite: instance too large");
            break;
        case Family::Star:
            need(1);
            if (p[0] < 1) fail("star requires n >= 1");
            break;
        case Family::Antiregular:
            need(1);
            if (p[0] < 2) fail("antiregular requires N >= 2");
            if (p[0] > kMaxVertices) fail("antiregular: instance too large");
            break;
        case Family::Custom:
            if (spec.custom_n < 1) fail("custom graph requires at least one vertex");
            break;
    }
}

Graph build_graph(const GraphSpec& spec) {
    validate_spec(spec);
    const auto& p = spec.params;
    switch (spec.family) {
        case Family::Complete: return build_complete(static_cast<int>(p[0]));
        case Family::Johnson:
            return build_subset_graph(static_cast<int>(p[0]), static_cast<int>(p[1]), false);
        case Family::Kneser:
            return build_subset_graph(static_cast<int>(p[0]), static_cast<int>(p[1]), true);
        case Family::Hamming:
            return build_hamming(static_cast<int>(p[0]), static_cast<int>(p[1]));
        case Family::Grassmann:
            return build_grassmann(static_cast<int>(p[0]), static_cast<int>(p[1]),
                                   static_cast<int>(p[2]));
        case Family::Rook: return build_rook(static_cast<int>(p[0]), static_cast<int>(p[1]));
        case Family::CompleteSquare: return build_complete_square(static_cast<int>(p[0]));
        case Family::CocktailParty: return build_cocktail_party(static_cast<int>(p[0]));
        case Family::CompleteMultipartite:
            return build_complete_multipartite(static_cast<int>(p[0]), static_cast<int>(p[1]));
        case Family::Star: return build_star(static_cast<int>(p[0]));
        case Family::Antiregular: return build_antiregular(static_cast<int>(p[0]));
        case Family::Custom: return build_custom(spec.custom_n, spec.custom_edges);
    }
    fail("unknown family");
}

LaplacianMatrix laplacian(const Graph& g) {
    LaplacianMatrix L;
    L.n = g.n_vertices;
    L.entries.assign(static_cast<std::size_t>(L.n) * L.n, 0.0);
    auto at = [&](int i, int j) -> double& {
        return L.entries[static_cast<std::size_t>(i) * L.n + j];
    };
    for (auto [u, v] : g.edges) {
        at(u, u) += 1.0;
        at(v, v) += 1.0;
        at(u, v) = -1.0;
        at(v, u) = -1.0;
    }
    return L;
}

bool is_connected(const Graph& g) {
    if (g.n_vertices <= 1) return true;
    std::vector<std::vector<int>> adj(g.n_vertices);
    for (auto [u, v] : g.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<bool> seen(g.n_vertices, false);
    std::queue<int> queue;
    queue.push(0);
    seen[0] = true;
    int reached = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop();
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = true;
                ++reached;
                queue.push(v);
            }
    }
    return reached == g.n_vertices;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    auto bad = [&](const std::string& why) {
        throw ParseError("edge list line " + std::to_string(line_no) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue; // blank line
        if (!(ls >> b) || (ls >> extra)) bad("expected two fields, got '" + line + "'");
        if (n < 0) {
            if (a != "n") bad("expected header 'n <count>'");
            try {
                n = std::stoi(b);
            } catch (const std::exception&) {
                bad("bad vertex count '" + b + "'");
            }
            if (n < 1) bad("vertex count must be positive");
            continue;
        }
        int u = 0, v = 0;
        try {
            u = std::stoi(a);
            v = std::stoi(b);
        } catch (const std::exception&) {
            bad("bad edge '" + line + "'");
        }
        if (u == v) bad("loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n) bad("vertex out of range in '" + line + "'");
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) bad("duplicate edge " + label_pair(u, v));
        edges.emplace_back(u, v);
    }
    if (n < 0) throw ParseError("edge list: missing header 'n <count>'");
    return make_graph(n, std::move(edges), index_labels(n));
}

std::string serialize_graph(const Graph& g) {
    std::string out = "n " + std::to_string(g.n_vertices) + "\n";
    for (auto [u, v] : g.edges)
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

} // namespace ciqw
