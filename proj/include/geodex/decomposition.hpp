#pragma once

#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "geodex/game.hpp"
#include "geodex/graph.hpp"

namespace geodex {

/// A piece of a position on a host graph.
///
/// `vertices` is geodesically convex in the host (built only by splitting at
/// cut vertices, trimming branches and dropping simplicial vertices), so host
/// intervals restricted to it are the piece's own intervals. `anchors` are the
/// selected vertices whose intervals can still cover something: real selected
/// vertices, or a boundary vertex standing in for selections beyond it (the
/// pendant-selected gadget). `open` is the part of the piece outside the
/// closure, i.e. the legal moves. For distinct anchors t1, t2 the interval
/// I(t1, t2) never meets `open`.
struct ComponentPosition {
    VertexSet vertices;
    VertexSet anchors;
    VertexSet open;

    /// In the closure but not an anchor.
    VertexSet covered() const { return vertices - open - anchors; }

    friend bool operator==(const ComponentPosition&, const ComponentPosition&) = default;
};

struct ComponentPositionHash {
    std::size_t operator()(const ComponentPosition& p) const {
        return p.vertices.hash() ^ (p.anchors.hash() * 31) ^ (p.open.hash() * 1009);
    }
};

enum class BoundaryKind {
    None,             // no anchor: an untouched component
    SelectedVertex,   // one anchor, not a leaf of the piece
    PendantSelected,  // one anchor hanging as a leaf off attach()
    TwoSelected,
    Many,
};

BoundaryKind boundary_kind(const Graph& host, const ComponentPosition& p);
/// Neighbour of a pendant anchor; nullopt for other kinds.
std::optional<Vertex> attach(const Graph& host, const ComponentPosition& p);

/// Components of a disjoint sum. Grundy of the sum is the XOR of the parts.
struct PositionSum {
    std::vector<ComponentPosition> parts;
};

/// Rewrites positions into disjoint sums. Every rule is exact:
///  - a branch at a cut vertex with no open vertex is trimmed, its anchors
///    replaced by the cut vertex;
///  - a covered cut vertex whose intervals add nothing becomes an anchor, and
///    the piece splits at every covered cut-vertex anchor;
///  - an anchor whose intervals are covered by the other anchors' is dropped;
///  - an open simplicial vertex whose selection covers only itself and whose
///    intervals add nothing later is a forced single move, split off as K_1.
class Decomposer {
public:
    Decomposer(const Graph& host, const IntervalTable& intervals) : g_(host), it_(intervals) {}

    const Graph& host() const { return g_; }
    const IntervalTable& intervals() const { return it_; }

    /// The position (component, selected) as a single piece.
    ComponentPosition from_selection(const VertexSet& component, const VertexSet& selected) const;
    /// Vertices that selecting v removes from `open`, v included.
    VertexSet cover(const ComponentPosition& p, Vertex v) const;
    ComponentPosition apply(const ComponentPosition& p, Vertex v) const;

    PositionSum normalize(const ComponentPosition& p) const;
    /// Split at a cut vertex c of the piece that is an anchor outside `open`.
    PositionSum split_at(const ComponentPosition& p, Vertex c) const;

    bool dominated(const ComponentPosition& p, Vertex t) const;
    bool promotable(const ComponentPosition& p, Vertex c) const;
    bool inert(const ComponentPosition& p, Vertex w) const;

private:
    bool adds_nothing(const ComponentPosition& p, Vertex x, const VertexSet& others) const;

    const Graph& g_;
    const IntervalTable& it_;
};

/// Selecting an articulation point u splits (G, {u}) into one piece per
/// branch at u, each keeping u as its selected vertex.
/// Throws std::invalid_argument when u is not an articulation point.
PositionSum split_at_selected_articulation(const Graph& g, Vertex u);

// ---------------------------------------------------------------------------
// Trees

/// Linear-recursion tree solver. hanging(x, y) is the value of the subtree at
/// y seen from x, with x acting as an already selected leaf attached at y.
class TreeSolver {
public:
    /// Throws std::invalid_argument unless `within` induces a tree.
    TreeSolver(const Graph& g, VertexSet within);
    explicit TreeSolver(const Graph& t) : TreeSolver(t, t.vertices()) {}

    GrundyValue hanging(Vertex parent, Vertex child);
    /// Value of the tree with at most one selected vertex.
    GrundyValue value(const VertexSet& selected = {});

private:
    GrundyValue hanging_impl(Vertex parent, Vertex child);

    const Graph& g_;
    VertexSet within_;
    std::vector<int> memo_;  // parent * n + child, -1 when unknown
};

/// Grundy value of a tree with at most one selected vertex.
GrundyValue solve_tree(const Graph& t, const VertexSet& selected = {});

// ---------------------------------------------------------------------------
// Block graphs and cacti

enum class CactusTypeTag { TypeI, TypeII, TypeIII, TreeBase, CycleBase, Empty };
const char* to_string(CactusTypeTag t);

/// Throws std::invalid_argument for pieces with more than two anchors or an
/// anchor the decomposition should already have split at.
CactusTypeTag classify_cactus_position(const Graph& host, const ComponentPosition& p);

struct DecompositionOptions {
    std::uint64_t max_states = 50'000'000;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    /// Evaluate one representative per class of open true twins.
    bool collapse_twin_moves = false;
    int threads = 0;
};

struct DecompositionStats {
    std::uint64_t states = 0;
    std::uint64_t base_cases = 0;
    std::array<std::uint64_t, 6> cactus_tags{};  // indexed by CactusTypeTag
    /// Pieces that fit none of the cactus types; always 0 on cacti.
    std::uint64_t unclassified = 0;
};

enum class SolverFamily { Block, Cactus, Any };

/// Memoised evaluation of component positions through the Decomposer, with
/// family-specific closed-form base cases.
class ComponentSolver {
public:
    ComponentSolver(const Graph& g, SolverFamily family, DecompositionOptions opts = {});

    GrundyValue value(const ComponentPosition& p);
    GrundyValue value(const PositionSum& sum);
    /// Grundy of (g, selected); components of g are handled independently.
    GrundyValue solve(const VertexSet& selected = {});

    const Decomposer& decomposer() const { return dec_; }
    DecompositionStats stats() const;

private:
    std::optional<GrundyValue> base_case(const ComponentPosition& p);
    GrundyValue value_impl(const ComponentPosition& p, bool parallel);
    GrundyValue expand(const ComponentPosition& p, bool parallel);
    void charge();

    Graph g_;
    Geodesics geo_;
    Decomposer dec_;
    SolverFamily family_;
    DecompositionOptions opts_;
    ConcurrentMemo<ComponentPosition, std::uint8_t, ComponentPositionHash> memo_;
    std::atomic<std::uint64_t> states_{0};
    std::atomic<std::uint64_t> base_cases_{0};
    std::array<std::atomic<std::uint64_t>, 6> tags_{};
    std::atomic<std::uint64_t> unclassified_{0};
};

/// Throws std::invalid_argument unless every block is a clique.
GrundyValue solve_block_graph(const Graph& g, const VertexSet& selected = {}, DecompositionOptions opts = {});
/// Throws std::invalid_argument unless every block is an edge or a cycle.
GrundyValue solve_cactus(const Graph& g, const VertexSet& selected = {}, DecompositionOptions opts = {});

// ---------------------------------------------------------------------------

struct SolveResult {
    std::optional<GrundyValue> grundy;  // absent for outcome-only answers (grids)
    Outcome outcome = Outcome::P;
    std::string solver;                 // closed-form, tree, block, cactus, brute
};

/// Closed form, then tree / block / cactus, then the memoised search.
SolveResult solve_auto(const Graph& g, const SearchOptions& opts = {});
/// Named solver: auto, brute, tree, block, cactus, closed-form. Throws
/// std::invalid_argument when the graph is outside the solver's class.
SolveResult solve_with(const Graph& g, const std::string& solver, const SearchOptions& opts = {});

}  // namespace geodex
