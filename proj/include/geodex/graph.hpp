#pragma once

#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "geodex/vertex_set.hpp"

namespace geodex {

using Edge = std::pair<Vertex, Vertex>;

class Graph;

/// Factors a graph was built from by cartesian_product(). Coordinates are
/// mixed-radix with the first factor most significant.
struct ProductInfo {
    std::vector<Graph> factors;
};

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;
    /// Throws CapacityError above VertexSet::kCapacity vertices and
    /// std::invalid_argument on self-loops or out-of-range ids. Duplicate
    /// edges are ignored.
    Graph(int n, const std::vector<Edge>& edges);

    int order() const { return n_; }
    int size() const { return m_; }
    VertexSet vertices() const { return VertexSet::range(n_); }
    const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return adj_[v].size(); }
    bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
    bool valid(Vertex v) const { return v >= 0 && v < n_; }

    /// Sorted (u < v) edge list.
    std::vector<Edge> edges() const;

    /// Subgraph induced by `keep`, relabelled densely in increasing id order.
    /// `labels`, when given, receives the original id of each new vertex.
    Graph induced(const VertexSet& keep, std::vector<Vertex>* labels = nullptr) const;

    /// Non-null only for graphs built by cartesian_product().
    const ProductInfo* product() const { return product_.get(); }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
    friend Graph cartesian_product(const std::vector<Graph>& factors);

    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
    std::shared_ptr<const ProductInfo> product_;
};

/// Edge-list text: '#' comments, then `n <count>`, then `<u> <v>` per line.
Graph parse_graph(std::string_view text);
Graph load_graph(const std::string& path);
std::string format_graph(const Graph& g);

/// Hop distances. Pairs in different components hold kInfinity.
class DistanceMatrix {
public:
    static constexpr int kInfinity = std::numeric_limits<int>::max();

    DistanceMatrix() = default;
    explicit DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, kInfinity) {}

    int order() const { return n_; }
    int operator()(Vertex u, Vertex v) const { return d_[index(u, v)]; }
    int& at(Vertex u, Vertex v) { return d_[index(u, v)]; }
    bool reachable(Vertex u, Vertex v) const { return (*this)(u, v) != kInfinity; }

    friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

private:
    std::size_t index(Vertex u, Vertex v) const { return static_cast<std::size_t>(u) * n_ + v; }
    int n_ = 0;
    std::vector<int> d_;
};

/// BFS from every source, sources spread over OpenMP threads.
DistanceMatrix all_pairs_distances(const Graph& g);

/// Geodesic intervals I(u,v) for every pair, precomputed once per graph and
/// shared read-only by all solvers. Cross-component intervals are empty.
class IntervalTable {
public:
    IntervalTable() = default;
    IntervalTable(int n, std::vector<VertexSet> table) : n_(n), table_(std::move(table)) {}

    int order() const { return n_; }
    /// Raw lookup; empty for pairs in different components.
    const VertexSet& operator()(Vertex u, Vertex v) const {
        return table_[static_cast<std::size_t>(u) * n_ + v];
    }

    friend bool operator==(const IntervalTable&, const IntervalTable&) = default;

private:
    int n_ = 0;
    std::vector<VertexSet> table_;
};

IntervalTable build_intervals(const Graph& g, const DistanceMatrix& dm);

/// Checked interval: throws std::invalid_argument when u and v are in
/// different components.
VertexSet interval(const Graph& g, const DistanceMatrix& dm, Vertex u, Vertex v);

/// Geodetic closure: union of I(u,v) over all pairs of `s`, applied once.
VertexSet closure(const IntervalTable& it, const VertexSet& s);

/// Everything the game layers need about a graph's geodesics.
struct Geodesics {
    explicit Geodesics(const Graph& g)
        : distances(all_pairs_distances(g)), intervals(build_intervals(g, distances)) {}
    DistanceMatrix distances;
    IntervalTable intervals;
};

namespace serial {
/// Single-threaded references for the parallel kernels above.
DistanceMatrix all_pairs_distances(const Graph& g);
IntervalTable build_intervals(const Graph& g, const DistanceMatrix& dm);
}  // namespace serial

/// Vertices whose open neighbourhood is a clique (degree 0 and 1 included).
VertexSet simplicial_vertices(const Graph& g);
/// Same, for the subgraph induced by `within`.
VertexSet simplicial_vertices(const Graph& g, const VertexSet& within);

std::vector<VertexSet> connected_components(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within);
bool is_connected(const Graph& g, const VertexSet& within);

struct BlockCutTree {
    VertexSet articulation_points;
    /// Biconnected components; a bridge is a two-vertex block and an isolated
    /// vertex is a one-vertex block.
    std::vector<VertexSet> blocks;
    /// For each vertex, indices of the blocks containing it.
    std::vector<std::vector<int>> blocks_of;
};

BlockCutTree block_cut_tree(const Graph& g);
/// Block structure of the subgraph induced by `within` (ids stay global).
BlockCutTree block_cut_tree(const Graph& g, const VertexSet& within);

/// Components of G[within - {c}], i.e. the branches hanging at c.
std::vector<VertexSet> branches_at(const Graph& g, const VertexSet& within, Vertex c);

struct GraphClassTag {
    enum class Kind {
        Path,
        Cycle,
        Complete,
        Star,
        CompleteBipartite,
        Tree,
        BlockGraph,
        Cactus,
        Grid,
        General,
    };

    Kind kind = Kind::General;
    int n = 0;              // Path/Cycle/Complete order, Star leaf count, bipartite second part
    int m = 0;              // bipartite first part (m <= n)
    std::vector<int> dims;  // Grid

    std::string name() const;
    friend bool operator==(const GraphClassTag&, const GraphClassTag&) = default;
};

bool is_tree(const Graph& g, const VertexSet& within);
bool is_tree(const Graph& g);
bool is_block_graph(const Graph& g);
bool is_cactus(const Graph& g);
bool is_cycle(const Graph& g, const VertexSet& within);
bool is_clique(const Graph& g, const VertexSet& within);

/// Most specific tag, checked in the order
/// Complete > Cycle > Star > CompleteBipartite > Path > Grid > Tree >
/// BlockGraph > Cactus > General. Grid only comes from product metadata.
/// Throws std::invalid_argument on disconnected input.
GraphClassTag recognize_family(const Graph& g);

/// G1 x G2 x ... ; a vertex is a mixed-radix tuple of factor vertices, two
/// tuples are adjacent when exactly one coordinate moves along a factor edge.
Graph cartesian_product(const std::vector<Graph>& factors);

}  // namespace geodex
