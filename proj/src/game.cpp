#include "geodex/game.hpp"

#include <algorithm>
#include <bitset>
#include <exception>
#include <random>
#include <stdexcept>
#include <string>

#include "geodex/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace geodex {

GrundyValue nim_sum(std::span<const GrundyValue> values) {
    GrundyValue x = 0;
    for (GrundyValue v : values) x ^= v;
    return x;
}

GrundyValue mex(std::span<const GrundyValue> values) {
    std::vector<bool> seen(values.size() + 1, false);
    for (GrundyValue v : values)
        if (v < seen.size()) seen[v] = true;
    GrundyValue m = 0;
    while (seen[m]) ++m;
    return m;
}

namespace {

// closure(S + v) given closure(S)
VertexSet extend_closure(const IntervalTable& it, const VertexSet& s, const VertexSet& closed, Vertex v) {
    VertexSet out = closed;
    out.insert(v);
    s.for_each([&](Vertex x) { out |= it(x, v); });
    return out;
}

void check_members(const Graph& g, const VertexSet& s) {
    if (!s.is_subset_of(g.vertices())) throw std::invalid_argument("selected set has ids outside the graph");
}

}  // namespace

GameEngine::GameEngine(const Graph& g, SearchOptions opts)
    : graph_(g), geo_(std::make_shared<Geodesics>(g)), opts_(opts) {
    if (opts_.split_components)
        groups_ = connected_components(graph_);
    else if (graph_.order() > 0)
        groups_ = {graph_.vertices()};
    for (std::size_t i = 0; i < groups_.size(); ++i)
        memo_.push_back(std::make_unique<ConcurrentMemo<VertexSet, std::uint8_t>>());
}

VertexSet GameEngine::apply_move(const VertexSet& s, Vertex v) const {
    if (!graph_.valid(v)) throw IllegalMove("vertex " + std::to_string(v) + " does not exist");
    if (closure(s).contains(v))
        throw IllegalMove("vertex " + std::to_string(v) + " is already in the geodetic closure");
    VertexSet out = s;
    out.insert(v);
    return out;
}

void GameEngine::charge() {
    std::uint64_t n = ++expanded_;
    if (n > opts_.max_states)
        throw BudgetExceeded("search exceeded " + std::to_string(opts_.max_states) + " states");
    if (opts_.deadline && (n & 255) == 0 && std::chrono::steady_clock::now() > *opts_.deadline)
        throw BudgetExceeded("search exceeded its time budget");
}

GrundyValue GameEngine::eval(int group, const VertexSet& s, const VertexSet& closed) {
    const VertexSet legal = groups_[group] - closed;
    if (legal.empty()) return 0;
    auto& memo = *memo_[group];
    if (auto hit = memo.find(s)) return *hit;

    const IntervalTable& it = geo_->intervals;
    std::bitset<VertexSet::kCapacity + 2> seen;
    legal.for_each([&](Vertex v) {
        VertexSet next = s;
        next.insert(v);
        seen.set(eval(group, next, extend_closure(it, s, closed, v)));
    });
    GrundyValue m = 0;
    while (seen.test(m)) ++m;
    charge();
    memo.insert(s, static_cast<std::uint8_t>(m));
    return m;
}

GrundyValue GameEngine::eval_root(int group, const VertexSet& s) {
    const IntervalTable& it = geo_->intervals;
    const VertexSet closed = geodex::closure(it, s) & groups_[group];
    const VertexSet legal = groups_[group] - closed;
    if (legal.empty()) return 0;
    if (auto hit = memo_[group]->find(s)) return *hit;

    const std::vector<Vertex> moves = legal.to_vector();
    const int count = static_cast<int>(moves.size());
    std::vector<GrundyValue> values(count, 0);
    std::exception_ptr failure;
    std::mutex failure_mu;
#ifdef _OPENMP
    const int threads = opts_.threads > 0 ? opts_.threads : omp_get_max_threads();
#endif

#pragma omp parallel for schedule(dynamic, 1) if (count > 1) num_threads(threads)
    for (int i = 0; i < count; ++i) {
        try {
            VertexSet next = s;
            next.insert(moves[i]);
            values[i] = eval(group, next, extend_closure(it, s, closed, moves[i]));
        } catch (...) {
            std::lock_guard lock(failure_mu);
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    GrundyValue m = mex(values);
    charge();
    memo_[group]->insert(s, static_cast<std::uint8_t>(m));
    return m;
}

GrundyValue GameEngine::grundy(const VertexSet& s) {
    check_members(graph_, s);
    GrundyValue x = 0;
    for (int i = 0; i < static_cast<int>(groups_.size()); ++i) x ^= eval_root(i, s & groups_[i]);
    return x;
}

AnalysisReport GameEngine::analyze(const VertexSet& s) {
    AnalysisReport r;
    r.grundy = grundy(s);
    r.outcome = outcome_of(r.grundy);
    legal_moves(s).for_each([&](Vertex v) {
        VertexSet next = s;
        next.insert(v);
        r.options.emplace_back(v, grundy(next));
    });
    r.best_move = best_move(s);
    return r;
}

int GameEngine::optimal_length(const VertexSet& s) {
    {
        std::lock_guard lock(length_mu_);
        auto it = length_memo_.find(s);
        if (it != length_memo_.end()) return it->second;
    }
    const VertexSet legal = legal_moves(s);
    int best = 0;
    if (!legal.empty()) {
        const bool winning = grundy(s) > 0;
        best = winning ? VertexSet::kCapacity + 1 : -1;
        legal.for_each([&](Vertex v) {
            VertexSet next = s;
            next.insert(v);
            if (winning && grundy(next) != 0) return;
            int len = 1 + optimal_length(next);
            best = winning ? std::min(best, len) : std::max(best, len);
        });
    }
    std::lock_guard lock(length_mu_);
    length_memo_.emplace(s, best);
    return best;
}

std::optional<Vertex> GameEngine::best_move(const VertexSet& s, const PlayoutPolicy& policy) {
    check_members(graph_, s);
    const VertexSet legal = legal_moves(s);
    if (legal.empty()) return std::nullopt;

    if (policy.mode == PlayoutPolicy::Mode::Random) {
        std::mt19937_64 rng(policy.seed ^ s.hash());
        std::vector<Vertex> moves = legal.to_vector();
        return moves[std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng)];
    }

    const bool winning = grundy(s) > 0;
    std::optional<Vertex> choice;
    int choice_len = 0;
    legal.for_each([&](Vertex v) {
        VertexSet next = s;
        next.insert(v);
        if (winning && grundy(next) != 0) return;
        int len = optimal_length(next);
        // Strict comparison keeps the smallest id on ties.
        if (!choice || (winning ? len < choice_len : len > choice_len)) {
            choice = v;
            choice_len = len;
        }
    });
    return choice;
}

std::vector<Vertex> GameEngine::playout(const VertexSet& s, const PlayoutPolicy& policy) {
    check_members(graph_, s);
    std::vector<Vertex> moves;
    VertexSet cur = s;
    std::mt19937_64 rng(policy.seed);
    while (true) {
        VertexSet legal = legal_moves(cur);
        if (legal.empty()) break;
        Vertex v;
        if (policy.mode == PlayoutPolicy::Mode::Random) {
            std::vector<Vertex> opts = legal.to_vector();
            v = opts[std::uniform_int_distribution<std::size_t>(0, opts.size() - 1)(rng)];
        } else {
            v = *best_move(cur, policy);
        }
        moves.push_back(v);
        cur.insert(v);
    }
    return moves;
}

// ---------------------------------------------------------------------------

VertexSet legal_moves(const Position& p) {
    Geodesics geo(*p.graph);
    return p.graph->vertices() - closure(geo.intervals, p.selected);
}

bool is_terminal(const Position& p) { return legal_moves(p).empty(); }

Position apply_move(const Position& p, Vertex v) {
    if (!p.graph->valid(v)) throw IllegalMove("vertex " + std::to_string(v) + " does not exist");
    if (!legal_moves(p).contains(v))
        throw IllegalMove("vertex " + std::to_string(v) + " is already in the geodetic closure");
    Position out = p;
    out.selected.insert(v);
    return out;
}

GrundyValue grundy(const Position& p, const SearchOptions& opts) {
    GameEngine engine(*p.graph, opts);
    return engine.grundy(p.selected);
}

Outcome outcome(const Position& p, const SearchOptions& opts) { return outcome_of(grundy(p, opts)); }

std::optional<Vertex> best_move(const Position& p, const PlayoutPolicy& policy) {
    GameEngine engine(*p.graph);
    return engine.best_move(p.selected, policy);
}

std::vector<Vertex> random_playout(const Position& p, const PlayoutPolicy& policy) {
    GameEngine engine(*p.graph);
    return engine.playout(p.selected, policy);
}

namespace serial {

namespace {

struct PlainSearch {
    const Graph& g;
    const IntervalTable& it;
    std::uint64_t max_states;
    std::unordered_map<VertexSet, GrundyValue> memo;

    GrundyValue eval(const VertexSet& s, const VertexSet& closed) {
        VertexSet legal = g.vertices() - closed;
        if (legal.empty()) return 0;
        if (auto hit = memo.find(s); hit != memo.end()) return hit->second;
        std::vector<GrundyValue> values;
        legal.for_each([&](Vertex v) {
            VertexSet next = s;
            next.insert(v);
            values.push_back(eval(next, extend_closure(it, s, closed, v)));
        });
        GrundyValue m = mex(values);
        if (memo.size() >= max_states)
            throw BudgetExceeded("search exceeded " + std::to_string(max_states) + " states");
        memo.emplace(s, m);
        return m;
    }
};

}  // namespace

GrundyValue grundy(const Graph& g, const VertexSet& selected, std::uint64_t max_states) {
    check_members(g, selected);
    DistanceMatrix dm = serial::all_pairs_distances(g);
    IntervalTable it = serial::build_intervals(g, dm);
    PlainSearch search{g, it, max_states, {}};
    return search.eval(selected, closure(it, selected));
}

}  // namespace serial

}  // namespace geodex
