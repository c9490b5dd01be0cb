#include "geodex/decomposition.hpp"

#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>

#include "geodex/closed_forms.hpp"
#include "geodex/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace geodex {

BoundaryKind boundary_kind(const Graph& host, const ComponentPosition& p) {
    switch (p.anchors.size()) {
        case 0: return BoundaryKind::None;
        case 1: {
            Vertex t = p.anchors.first();
            return (host.neighbors(t) & p.vertices).size() == 1 ? BoundaryKind::PendantSelected
                                                                 : BoundaryKind::SelectedVertex;
        }
        case 2: return BoundaryKind::TwoSelected;
        default: return BoundaryKind::Many;
    }
}

std::optional<Vertex> attach(const Graph& host, const ComponentPosition& p) {
    if (boundary_kind(host, p) != BoundaryKind::PendantSelected) return std::nullopt;
    return (host.neighbors(p.anchors.first()) & p.vertices).first();
}

// ---------------------------------------------------------------------------

ComponentPosition Decomposer::from_selection(const VertexSet& component, const VertexSet& selected) const {
    ComponentPosition p;
    p.vertices = component;
    p.anchors = selected & component;
    p.open = component - closure(it_, p.anchors);
    return p;
}

VertexSet Decomposer::cover(const ComponentPosition& p, Vertex v) const {
    VertexSet c = VertexSet::singleton(v);
    p.anchors.for_each([&](Vertex t) { c |= it_(t, v); });
    return c & p.open;
}

ComponentPosition Decomposer::apply(const ComponentPosition& p, Vertex v) const {
    if (!p.open.contains(v)) throw IllegalMove("vertex " + std::to_string(v) + " is not open in this piece");
    ComponentPosition q = p;
    q.open -= cover(p, v);
    q.anchors.insert(v);
    return q;
}

// Would x, held as an anchor, ever cover an open vertex that the anchors in
// `others` plus the move itself do not? Once true it stays true: anchors only
// grow and open only shrinks.
bool Decomposer::adds_nothing(const ComponentPosition& p, Vertex x, const VertexSet& others) const {
    bool ok = true;
    p.open.for_each([&](Vertex v) {
        if (!ok || v == x) return;
        VertexSet extra = (it_(x, v) & p.open) - VertexSet::singleton(x) - VertexSet::singleton(v);
        if (extra.empty()) return;
        others.for_each([&](Vertex t) { extra -= it_(t, v); });
        if (!extra.empty()) ok = false;
    });
    return ok;
}

bool Decomposer::dominated(const ComponentPosition& p, Vertex t) const {
    return p.anchors.contains(t) && !p.open.contains(t) &&
           adds_nothing(p, t, p.anchors - VertexSet::singleton(t));
}

// Splitting at c later relies on I(t, c) being covered for every anchor t:
// a move beyond c then covers, on t's side, only what I(t, c) does.
bool Decomposer::promotable(const ComponentPosition& p, Vertex c) const {
    if (!p.vertices.contains(c) || p.open.contains(c) || p.anchors.contains(c)) return false;
    bool apart = true;
    p.anchors.for_each([&](Vertex t) { apart = apart && !it_(t, c).intersects(p.open); });
    return apart && adds_nothing(p, c, p.anchors);
}

bool Decomposer::inert(const ComponentPosition& p, Vertex w) const {
    if (!p.open.contains(w) || p.anchors.contains(w)) return false;
    if (!simplicial_vertices(g_, p.vertices).contains(w)) return false;
    return cover(p, w) == VertexSet::singleton(w) && adds_nothing(p, w, p.anchors);
}

PositionSum Decomposer::split_at(const ComponentPosition& p, Vertex c) const {
    if (!p.anchors.contains(c) || p.open.contains(c))
        throw std::invalid_argument("split_at: vertex must be a covered anchor");
    PositionSum out;
    for (const VertexSet& b : branches_at(g_, p.vertices, c)) {
        ComponentPosition q;
        q.vertices = b | VertexSet::singleton(c);
        q.anchors = (p.anchors & b) | VertexSet::singleton(c);
        q.open = p.open & b;
        out.parts.push_back(q);
    }
    return out;
}

PositionSum Decomposer::normalize(const ComponentPosition& start) const {
    PositionSum out;
    std::vector<ComponentPosition> work{start};
    while (!work.empty()) {
        ComponentPosition p = work.back();
        work.pop_back();
        bool split = false;
        while (!p.open.empty()) {
            const std::vector<Vertex> cuts = block_cut_tree(g_, p.vertices).articulation_points.to_vector();

            // Trim branches holding no move. Anchors there act on the rest
            // only through c: c takes over when covered, otherwise one
            // neighbour of c in the branch stays as a pendant anchor.
            bool changed = false;
            for (Vertex c : cuts) {
                for (const VertexSet& b : branches_at(g_, p.vertices, c)) {
                    if (b.intersects(p.open)) continue;
                    if (!b.intersects(p.anchors)) {
                        p.vertices -= b;
                    } else if (!p.open.contains(c)) {
                        p.anchors -= b;
                        p.anchors.insert(c);
                        p.vertices -= b;
                    } else {
                        Vertex x = (g_.neighbors(c) & b).first();
                        if (b == VertexSet::singleton(x) && p.anchors.contains(x)) continue;
                        p.anchors -= b;
                        p.anchors.insert(x);
                        p.vertices -= b - VertexSet::singleton(x);
                    }
                    changed = true;
                    break;
                }
                if (changed) break;
            }
            if (changed) continue;

            for (Vertex c : cuts) {
                if (p.open.contains(c)) continue;
                if (!p.anchors.contains(c) && promotable(p, c)) p.anchors.insert(c);
                if (p.anchors.contains(c)) {
                    for (ComponentPosition& q : split_at(p, c).parts) work.push_back(std::move(q));
                    split = true;
                    break;
                }
            }
            if (split) break;

            for (Vertex t : p.anchors.to_vector()) {
                if (dominated(p, t)) {
                    p.anchors.erase(t);
                    changed = true;
                }
            }
            if (changed) continue;

            const VertexSet simplicial = simplicial_vertices(g_, p.vertices) & p.open;
            for (Vertex w : (simplicial - p.anchors).to_vector()) {
                if (cover(p, w) == VertexSet::singleton(w) && adds_nothing(p, w, p.anchors)) {
                    out.parts.push_back({VertexSet::singleton(w), {}, VertexSet::singleton(w)});
                    p.vertices.erase(w);
                    p.open.erase(w);
                    changed = true;
                    break;
                }
            }
            if (!changed) break;
        }
        if (!split && !p.open.empty()) out.parts.push_back(p);
    }
    return out;
}

PositionSum split_at_selected_articulation(const Graph& g, Vertex u) {
    if (!g.valid(u)) throw std::invalid_argument("split_at_selected_articulation: no such vertex");
    VertexSet component;
    for (const VertexSet& c : connected_components(g))
        if (c.contains(u)) component = c;
    std::vector<VertexSet> branches = branches_at(g, component, u);
    if (branches.size() < 2)
        throw std::invalid_argument("split_at_selected_articulation: vertex " + std::to_string(u) +
                                    " is not an articulation point");
    PositionSum out;
    for (const VertexSet& b : branches) out.parts.push_back({b | VertexSet::singleton(u), VertexSet::singleton(u), b});
    return out;
}

// ---------------------------------------------------------------------------

const char* to_string(CactusTypeTag t) {
    switch (t) {
        case CactusTypeTag::TypeI: return "TypeI";
        case CactusTypeTag::TypeII: return "TypeII";
        case CactusTypeTag::TypeIII: return "TypeIII";
        case CactusTypeTag::TreeBase: return "TreeBase";
        case CactusTypeTag::CycleBase: return "CycleBase";
        case CactusTypeTag::Empty: return "Empty";
    }
    return "?";
}

namespace {

VertexSet pair_interval(const Graph& g, const VertexSet& within, Vertex a, Vertex b) {
    // BFS inside `within`; pieces are convex, so this is the host interval.
    std::vector<Vertex> labels;
    Graph h = g.induced(within, &labels);
    DistanceMatrix dm = serial::all_pairs_distances(h);
    auto local = [&](Vertex v) {
        for (int i = 0; i < static_cast<int>(labels.size()); ++i)
            if (labels[i] == v) return i;
        return -1;
    };
    VertexSet out;
    interval(h, dm, local(a), local(b)).for_each([&](Vertex v) { out.insert(labels[v]); });
    return out;
}

bool on_common_cycle(const Graph& g, const VertexSet& within, Vertex a, Vertex b) {
    for (const VertexSet& blk : block_cut_tree(g, within).blocks)
        if (blk.size() > 2 && blk.contains(a) && blk.contains(b)) return true;
    return false;
}

bool on_cycle(const Graph& g, const VertexSet& within, Vertex a) {
    for (const VertexSet& blk : block_cut_tree(g, within).blocks)
        if (blk.size() > 2 && blk.contains(a)) return true;
    return false;
}

}  // namespace

CactusTypeTag classify_cactus_position(const Graph& host, const ComponentPosition& p) {
    if (p.open.empty()) return CactusTypeTag::Empty;
    const int k = p.anchors.size();
    if (k > 2) throw std::invalid_argument("classify_cactus_position: more than two selected vertices");
    const VertexSet free = p.vertices - p.anchors;

    if (is_tree(host, p.vertices) && k <= 1 && p.open == free) return CactusTypeTag::TreeBase;
    if (is_cycle(host, p.vertices)) {
        if (k <= 1 && p.open == free) return CactusTypeTag::CycleBase;
        if (k == 2) {
            const std::vector<Vertex> t = p.anchors.to_vector();
            if (p.open == p.vertices - pair_interval(host, p.vertices, t[0], t[1])) return CactusTypeTag::CycleBase;
        }
    }
    if (k == 0) throw std::invalid_argument("classify_cactus_position: no selected vertex");
    if (k == 1) {
        const Vertex u = p.anchors.first();
        const int deg = (host.neighbors(u) & p.vertices).size();
        if (deg == 1) return CactusTypeTag::TypeII;
        if (deg == 2 && on_cycle(host, p.vertices, u)) return CactusTypeTag::TypeI;
        throw std::invalid_argument("classify_cactus_position: selected vertex " + std::to_string(u) +
                                    " is a cut vertex that was not split");
    }
    const std::vector<Vertex> t = p.anchors.to_vector();
    if (!on_common_cycle(host, p.vertices, t[0], t[1]))
        throw std::invalid_argument("classify_cactus_position: selected vertices are not on a common cycle");
    if (pair_interval(host, p.vertices, t[0], t[1]).intersects(p.open))
        throw std::invalid_argument("classify_cactus_position: shortest path between selected vertices is open");
    return CactusTypeTag::TypeIII;
}

// ---------------------------------------------------------------------------

ComponentSolver::ComponentSolver(const Graph& g, SolverFamily family, DecompositionOptions opts)
    : g_(g), geo_(g_), dec_(g_, geo_.intervals), family_(family), opts_(opts) {}

DecompositionStats ComponentSolver::stats() const {
    DecompositionStats s;
    s.states = states_.load();
    s.base_cases = base_cases_.load();
    for (std::size_t i = 0; i < tags_.size(); ++i) s.cactus_tags[i] = tags_[i].load();
    s.unclassified = unclassified_.load();
    return s;
}

void ComponentSolver::charge() {
    const std::uint64_t n = ++states_;
    if (n > opts_.max_states)
        throw BudgetExceeded("decomposition exceeded " + std::to_string(opts_.max_states) + " states");
    if (opts_.deadline && (n & 63) == 0 && std::chrono::steady_clock::now() > *opts_.deadline)
        throw BudgetExceeded("decomposition exceeded its time budget");
}

std::optional<GrundyValue> ComponentSolver::base_case(const ComponentPosition& p) {
    const VertexSet free = p.vertices - p.anchors;
    const int k = p.anchors.size();
    if (family_ == SolverFamily::Block || family_ == SolverFamily::Any) {
        if (is_clique(g_, p.vertices) && !p.anchors.intersects(p.open))
            return static_cast<GrundyValue>(p.open.size() % 2);
    }
    if (family_ == SolverFamily::Cactus || family_ == SolverFamily::Any) {
        if (k <= 1 && p.open == free && is_tree(g_, p.vertices)) {
            TreeSolver ts(g_, p.vertices);
            return ts.value(p.anchors);
        }
        if (is_cycle(g_, p.vertices)) {
            const int n = p.vertices.size();
            if (k == 0 && p.open == free) return grundy_cycle(n);
            if (k == 1 && p.open == free) return grundy_cycle_selected(n);
            if (k == 2) {
                const std::vector<Vertex> t = p.anchors.to_vector();
                if (p.open == p.vertices - geo_.intervals(t[0], t[1]))
                    return grundy_cycle_selected(n, geo_.distances(t[0], t[1]));
            }
        }
    }
    return std::nullopt;
}

GrundyValue ComponentSolver::expand(const ComponentPosition& p, bool parallel) {
    std::vector<Vertex> moves;
    p.open.for_each([&](Vertex v) {
        if (opts_.collapse_twin_moves && !p.anchors.contains(v)) {
            const VertexSet nv = (g_.neighbors(v) | VertexSet::singleton(v)) & p.vertices;
            bool twin_seen = false;
            (p.open - p.anchors).for_each([&](Vertex u) {
                if (u < v && ((g_.neighbors(u) | VertexSet::singleton(u)) & p.vertices) == nv) twin_seen = true;
            });
            if (twin_seen) return;
        }
        moves.push_back(v);
    });

    const int count = static_cast<int>(moves.size());
    std::vector<GrundyValue> values(count, 0);
    auto one = [&](int i) { values[i] = value(dec_.normalize(dec_.apply(p, moves[i]))); };

    if (!parallel || count < 2) {
        for (int i = 0; i < count; ++i) one(i);
    } else {
        std::exception_ptr failure;
        std::mutex failure_mu;
#ifdef _OPENMP
        const int threads = opts_.threads > 0 ? opts_.threads : omp_get_max_threads();
#endif
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
        for (int i = 0; i < count; ++i) {
            try {
                one(i);
            } catch (...) {
                std::lock_guard lock(failure_mu);
                if (!failure) failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);
    }
    return mex(values);
}

GrundyValue ComponentSolver::value(const ComponentPosition& p) { return value_impl(p, false); }

GrundyValue ComponentSolver::value_impl(const ComponentPosition& p, bool parallel) {
    if (p.open.empty()) return 0;
    if (auto hit = memo_.find(p)) return *hit;

    if (family_ == SolverFamily::Cactus && !p.anchors.empty()) {
        try {
            ++tags_[static_cast<int>(classify_cactus_position(g_, p))];
        } catch (const std::invalid_argument&) {
            ++unclassified_;
        }
    }

    GrundyValue v;
    if (auto b = base_case(p)) {
        ++base_cases_;
        v = *b;
    } else {
        v = expand(p, parallel);
    }
    charge();
    memo_.insert(p, static_cast<std::uint8_t>(v));
    return v;
}

GrundyValue ComponentSolver::value(const PositionSum& sum) {
    GrundyValue x = 0;
    for (const ComponentPosition& p : sum.parts) x ^= value(p);
    return x;
}

GrundyValue ComponentSolver::solve(const VertexSet& selected) {
    if (!selected.is_subset_of(g_.vertices())) throw std::invalid_argument("selected set has ids outside the graph");
    GrundyValue x = 0;
    for (const VertexSet& comp : connected_components(g_))
        for (const ComponentPosition& p : dec_.normalize(dec_.from_selection(comp, selected)).parts)
            x ^= value_impl(p, true);
    return x;
}

GrundyValue solve_block_graph(const Graph& g, const VertexSet& selected, DecompositionOptions opts) {
    if (!is_block_graph(g)) throw std::invalid_argument("solve_block_graph: not a block graph");
    ComponentSolver solver(g, SolverFamily::Block, opts);
    return solver.solve(selected);
}

GrundyValue solve_cactus(const Graph& g, const VertexSet& selected, DecompositionOptions opts) {
    if (!is_cactus(g)) throw std::invalid_argument("solve_cactus: not a cactus");
    ComponentSolver solver(g, SolverFamily::Cactus, opts);
    return solver.solve(selected);
}

}  // namespace geodex
