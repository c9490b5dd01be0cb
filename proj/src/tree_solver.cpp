#include <stdexcept>

#include "geodex/decomposition.hpp"

namespace geodex {

TreeSolver::TreeSolver(const Graph& g, VertexSet within)
    : g_(g), within_(within), memo_(static_cast<std::size_t>(g.order()) * g.order(), -1) {
    if (!is_tree(g, within)) throw std::invalid_argument("TreeSolver: input is not a tree");
}

GrundyValue TreeSolver::hanging(Vertex parent, Vertex child) {
    if (!within_.contains(parent) || !within_.contains(child) || !g_.adjacent(parent, child))
        throw std::invalid_argument("TreeSolver::hanging: not an edge of the tree");
    return hanging_impl(parent, child);
}

// Selecting v in the subtree covers the path child..v. What is left is one
// pendant-selected subtree per off-path neighbour of every path vertex, so
// the option value is the XOR of their hanging values.
GrundyValue TreeSolver::hanging_impl(Vertex parent, Vertex child) {
    int& slot = memo_[static_cast<std::size_t>(parent) * g_.order() + child];
    if (slot >= 0) return static_cast<GrundyValue>(slot);

    std::vector<GrundyValue> options;
    auto visit = [&](auto&& self, Vertex v, Vertex up, GrundyValue prefix) -> void {
        const VertexSet down = (g_.neighbors(v) & within_) - VertexSet::singleton(up);
        GrundyValue all = 0;
        down.for_each([&](Vertex z) { all ^= hanging_impl(v, z); });
        options.push_back(prefix ^ all);
        down.for_each([&](Vertex z) { self(self, z, v, prefix ^ all ^ hanging_impl(v, z)); });
    };
    visit(visit, child, parent, 0);

    GrundyValue m = mex(options);
    memo_[static_cast<std::size_t>(parent) * g_.order() + child] = static_cast<int>(m);
    return m;
}

GrundyValue TreeSolver::value(const VertexSet& selected) {
    if (!selected.is_subset_of(within_)) throw std::invalid_argument("TreeSolver: selected vertex outside the tree");
    auto around = [&](Vertex u) {
        GrundyValue x = 0;
        (g_.neighbors(u) & within_).for_each([&](Vertex z) { x ^= hanging_impl(u, z); });
        return x;
    };
    switch (selected.size()) {
        case 0: {
            std::vector<GrundyValue> options;
            within_.for_each([&](Vertex u) { options.push_back(around(u)); });
            return mex(options);
        }
        case 1: return around(selected.first());
        default: throw std::invalid_argument("TreeSolver: at most one selected vertex");
    }
}

GrundyValue solve_tree(const Graph& t, const VertexSet& selected) {
    TreeSolver solver(t);
    return solver.value(selected);
}

}  // namespace geodex
