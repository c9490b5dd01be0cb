#pragma once

#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "geodex/graph.hpp"

namespace geodex {

using GrundyValue = unsigned;

enum class Outcome { N, P };

inline Outcome outcome_of(GrundyValue g) { return g == 0 ? Outcome::P : Outcome::N; }
inline const char* to_string(Outcome o) { return o == Outcome::N ? "N" : "P"; }

/// Bitwise XOR fold; 0 for an empty list.
GrundyValue nim_sum(std::span<const GrundyValue> values);
inline GrundyValue nim_sum(std::initializer_list<GrundyValue> values) {
    return nim_sum(std::span<const GrundyValue>(values.begin(), values.size()));
}
/// Smallest nonnegative integer absent from `values`.
GrundyValue mex(std::span<const GrundyValue> values);

/// A game state: a graph and the selected set S. The closure is derived.
struct Position {
    const Graph* graph = nullptr;
    VertexSet selected;

    Position(const Graph& g, VertexSet s = {}) : graph(&g), selected(s) {}
};

struct SearchOptions {
    /// Cap on memoised states; exceeding it throws BudgetExceeded.
    std::uint64_t max_states = 50'000'000;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    /// Evaluate connected components independently and nim-sum them.
    bool split_components = true;
    /// Threads for the root fan-out; 0 keeps the OpenMP default.
    int threads = 0;
};

struct PlayoutPolicy {
    enum class Mode {
        /// Win in as few moves as possible; when losing, last as long as possible.
        OptimalShortWinLongLoss,
        Random,
    };
    Mode mode = Mode::OptimalShortWinLongLoss;
    std::uint64_t seed = 0;

    static PlayoutPolicy optimal() { return {}; }
    static PlayoutPolicy random(std::uint64_t seed) { return {Mode::Random, seed}; }
};

struct AnalysisReport {
    GrundyValue grundy = 0;
    Outcome outcome = Outcome::P;
    std::vector<std::pair<Vertex, GrundyValue>> options;
    std::optional<Vertex> best_move;
};

/// Insert-if-absent map of write-once entries, sharded by hash. Racing
/// writers store the same value, so whichever lands first is kept.
template <typename Key, typename Value, typename Hash = std::hash<Key>>
class ConcurrentMemo {
public:
    std::optional<Value> find(const Key& k) const {
        const Shard& s = shard(k);
        std::lock_guard lock(s.mu);
        auto it = s.map.find(k);
        if (it == s.map.end()) return std::nullopt;
        return it->second;
    }
    void insert(const Key& k, Value v) {
        Shard& s = shard(k);
        std::lock_guard lock(s.mu);
        s.map.emplace(k, v);
    }
    std::size_t size() const {
        std::size_t total = 0;
        for (const Shard& s : shards_) {
            std::lock_guard lock(s.mu);
            total += s.map.size();
        }
        return total;
    }

private:
    static constexpr std::size_t kShards = 64;
    struct Shard {
        mutable std::mutex mu;
        std::unordered_map<Key, Value, Hash> map;
    };
    Shard& shard(const Key& k) { return shards_[Hash{}(k) % kShards]; }
    const Shard& shard(const Key& k) const { return shards_[Hash{}(k) % kShards]; }
    std::array<Shard, kShards> shards_;
};

/// Memoised Sprague-Grundy search over selected-set bitmasks; the reference
/// every other solver is checked against. One engine per graph; evaluation is
/// safe to call from several threads.
class GameEngine {
public:
    explicit GameEngine(const Graph& g, SearchOptions opts = {});

    const Graph& graph() const { return graph_; }
    const Geodesics& geodesics() const { return *geo_; }
    const SearchOptions& options() const { return opts_; }
    /// Deadline for later calls; the memo survives a BudgetExceeded.
    void set_deadline(std::optional<std::chrono::steady_clock::time_point> d) { opts_.deadline = d; }

    VertexSet closure(const VertexSet& s) const { return geodex::closure(geo_->intervals, s); }
    VertexSet legal_moves(const VertexSet& s) const { return graph_.vertices() - closure(s); }
    bool is_terminal(const VertexSet& s) const { return legal_moves(s).empty(); }
    /// Throws IllegalMove when v is out of range or already in the closure.
    VertexSet apply_move(const VertexSet& s, Vertex v) const;

    GrundyValue grundy(const VertexSet& s);
    Outcome outcome(const VertexSet& s) { return outcome_of(grundy(s)); }
    AnalysisReport analyze(const VertexSet& s);

    /// Remaining number of moves when both sides follow the short-win /
    /// long-loss convention.
    int optimal_length(const VertexSet& s);
    std::optional<Vertex> best_move(const VertexSet& s, const PlayoutPolicy& policy = {});
    std::vector<Vertex> playout(const VertexSet& s, const PlayoutPolicy& policy);

    std::uint64_t states_expanded() const { return expanded_.load(); }

private:
    GrundyValue eval(int group, const VertexSet& s, const VertexSet& closed);
    GrundyValue eval_root(int group, const VertexSet& s);
    void charge();

    Graph graph_;
    std::shared_ptr<const Geodesics> geo_;
    SearchOptions opts_;
    std::vector<VertexSet> groups_;  // components, or all of V when not splitting
    std::vector<std::unique_ptr<ConcurrentMemo<VertexSet, std::uint8_t>>> memo_;
    std::mutex length_mu_;
    std::unordered_map<VertexSet, int> length_memo_;
    std::atomic<std::uint64_t> expanded_{0};
};

// Free-function surface over Position. Each call builds a fresh engine.
VertexSet legal_moves(const Position& p);
bool is_terminal(const Position& p);
Position apply_move(const Position& p, Vertex v);
GrundyValue grundy(const Position& p, const SearchOptions& opts = {});
Outcome outcome(const Position& p, const SearchOptions& opts = {});
std::optional<Vertex> best_move(const Position& p, const PlayoutPolicy& policy = {});
std::vector<Vertex> random_playout(const Position& p, const PlayoutPolicy& policy);

namespace serial {
/// Plain recursive search with an unordered_map memo and no component split.
GrundyValue grundy(const Graph& g, const VertexSet& selected,
                   std::uint64_t max_states = 50'000'000);
}  // namespace serial

}  // namespace geodex
