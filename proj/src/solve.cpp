#include <algorithm>
#include <stdexcept>

#include "geodex/closed_forms.hpp"
#include "geodex/decomposition.hpp"

namespace geodex {

namespace {

DecompositionOptions decomposition_options(const SearchOptions& opts) {
    DecompositionOptions d;
    d.max_states = opts.max_states;
    d.deadline = opts.deadline;
    d.threads = opts.threads;
    return d;
}

SolveResult exact(GrundyValue g, std::string solver) { return {g, outcome_of(g), std::move(solver)}; }

SolveResult brute(const Graph& g, const SearchOptions& opts) {
    GameEngine engine(g, opts);
    return exact(engine.grundy({}), "brute");
}

SolveResult solve_connected(const Graph& g, const SearchOptions& opts) {
    const GraphClassTag tag = recognize_family(g);
    if (auto cf = closed_form_lookup(g, tag)) return {cf->grundy, cf->outcome, "closed-form"};
    switch (tag.kind) {
        case GraphClassTag::Kind::Tree: return exact(solve_tree(g), "tree");
        case GraphClassTag::Kind::BlockGraph: return exact(solve_block_graph(g, {}, decomposition_options(opts)), "block");
        case GraphClassTag::Kind::Cactus: return exact(solve_cactus(g, {}, decomposition_options(opts)), "cactus");
        default: return brute(g, opts);
    }
}

// Runs `one` per component and nim-sums. A component answered by outcome only
// (a grid) is re-solved by search, since sums need Grundy values.
template <typename F>
SolveResult per_component(const Graph& g, const SearchOptions& opts, F&& one) {
    std::vector<VertexSet> comps = connected_components(g);
    if (comps.size() == 1) return one(g);
    GrundyValue x = 0;
    std::vector<std::string> used;
    for (const VertexSet& c : comps) {
        Graph h = g.induced(c);
        SolveResult r = one(h);
        if (!r.grundy) r = brute(h, opts);
        x ^= *r.grundy;
        if (std::find(used.begin(), used.end(), r.solver) == used.end()) used.push_back(r.solver);
    }
    std::string name;
    for (const std::string& s : used) name += (name.empty() ? "" : "+") + s;
    return exact(x, name);
}

}  // namespace

SolveResult solve_auto(const Graph& g, const SearchOptions& opts) {
    if (g.order() == 0) return exact(0, "closed-form");
    return per_component(g, opts, [&](const Graph& h) { return solve_connected(h, opts); });
}

SolveResult solve_with(const Graph& g, const std::string& solver, const SearchOptions& opts) {
    if (solver == "auto") return solve_auto(g, opts);
    if (solver == "brute") return brute(g, opts);
    if (solver == "tree") {
        if (!is_tree(g)) throw std::invalid_argument("graph is not a tree");
        return exact(solve_tree(g), "tree");
    }
    if (solver == "block") return exact(solve_block_graph(g, {}, decomposition_options(opts)), "block");
    if (solver == "cactus") return exact(solve_cactus(g, {}, decomposition_options(opts)), "cactus");
    if (solver == "closed-form") {
        if (g.order() == 0) return exact(0, "closed-form");
        return per_component(g, opts, [](const Graph& h) -> SolveResult {
            auto cf = closed_form_lookup(h, recognize_family(h));
            if (!cf) throw std::invalid_argument("no closed form for " + recognize_family(h).name());
            return {cf->grundy, cf->outcome, "closed-form"};
        });
    }
    throw std::invalid_argument("unknown solver '" + solver + "'");
}

}  // namespace geodex
