#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ciqw {

/// Invalid family parameters or malformed custom graph data. The message
/// names the violated constraint.
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed edge-list text. The message names the offending line.
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Family {
    Complete,             // K_n
    Johnson,              // J(n,k): k-subsets of [n], adjacent iff |S ∩ S'| = k-1
    Kneser,               // K(n,k): k-subsets of [n] (k < n/2), adjacent iff disjoint
    Hamming,              // H(d,q): q-ary d-tuples, adjacent iff they differ in one slot
    Grassmann,            // G_q(n,k): k-dim subspaces of F_q^n, adjacent iff dim(A∩B)=k-1
    Rook,                 // R(m,n) = K_m □ K_n
    CompleteSquare,       // K_n □ C_4
    CocktailParty,        // CP(n) = K_{2n} minus a perfect matching
    CompleteMultipartite, // n vertices in k equal classes, edges across classes
    Star,                 // K_{1,n}
    Antiregular,          // A_N, built iteratively from A_2 = K_2
    Custom,               // explicit edge list
};

/// A parametrized graph-family instance. For Custom, `custom_n` and
/// `custom_edges` carry the explicit realization and `params` is empty.
struct GraphSpec {
    Family family = Family::Custom;
    std::vector<long long> params;
    int custom_n = 0;
    std::vector<std::pair<int, int>> custom_edges;

    static GraphSpec complete(long long n);
    static GraphSpec johnson(long long n, long long k);
    static GraphSpec kneser(long long n, long long k);
    static GraphSpec hamming(long long d, long long q);
    static GraphSpec grassmann(long long q, long long n, long long k);
    static GraphSpec rook(long long m, long long n);
    static GraphSpec complete_square(long long n);
    static GraphSpec cocktail_party(long long n);
    static GraphSpec complete_multipartite(long long n, long long k);
    static GraphSpec star(long long n);
    static GraphSpec antiregular(long long n);
    static GraphSpec custom(int n, std::vector<std::pair<int, int>> edges);
};

const char* family_name(Family f);

struct FamilyInfo {
    Family family;
    const char* name;        // CLI spelling, e.g. "johnson"
    const char* parameters;  // e.g. "n,k"
    const char* constraints; // human-readable validity rule
};

/// Catalog of the supported named families (excludes Custom).
const std::vector<FamilyInfo>& family_catalog();

/// Simple undirected graph. Edges are stored once as (u,v) with u < v,
/// sorted ascending; vertex_labels[i] is the canonical label of vertex i
/// (the k-subset for Johnson, the tuple for Hamming, the RREF basis for
/// Grassmann, ...). Vertex order is the canonical label order.
struct Graph {
    int n_vertices = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::string> vertex_labels;

    std::vector<int> degrees() const;
    long long degree_sum() const; // equals 2·|edges|
};

/// Dense symmetric Laplacian L = D - A, row-major.
struct LaplacianMatrix {
    int n = 0;
    std::vector<double> entries;

    double operator()(int i, int j) const {
        return entries[static_cast<std::size_t>(i) * n + j];
    }
};

/// Throws ParameterError naming the violated constraint if the spec's
/// parameters are invalid for its family.
void validate_spec(const GraphSpec& spec);

/// Realizes the family instance with canonical vertex ordering.
Graph build_graph(const GraphSpec& spec);

LaplacianMatrix laplacian(const Graph& g);

bool is_connected(const Graph& g);

/// Edge-list text format: header "n <count>" followed by one "u v" line
/// per edge. parse(serialize(g)) == g.
Graph parse_edge_list(const std::string& text);
std::string serialize_graph(const Graph& g);

} // namespace ciqw
