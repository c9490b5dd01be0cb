#include "geodex/closed_forms.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace geodex {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

GrundyValue grundy_complete(int n) {
    require(n >= 1, "grundy_complete: n must be >= 1");
    return static_cast<GrundyValue>(n % 2);
}

GrundyValue grundy_star(int leaves) {
    require(leaves >= 1, "grundy_star: need at least one leaf");
    return static_cast<GrundyValue>(1 - leaves % 2);
}

GrundyValue grundy_complete_bipartite(int m, int n) {
    require(std::min(m, n) >= 2, "grundy_complete_bipartite: both parts need >= 2 vertices (use grundy_star)");
    return (m % 2 == n % 2) ? 0U : 2U;
}

GrundyValue grundy_cycle(int n) {
    require(n >= 3, "grundy_cycle: n must be >= 3");
    return static_cast<GrundyValue>(n % 2);
}

GrundyValue grundy_cycle_selected(int n, std::optional<int> d) {
    require(n >= 3, "grundy_cycle_selected: n must be >= 3");
    if (!d) return n % 2 == 0 ? static_cast<GrundyValue>(n / 2) : 0U;
    require(*d >= 1 && *d <= n / 2, "grundy_cycle_selected: distance out of range");
    return static_cast<GrundyValue>((n + 1) / 2 - *d);
}

GrundyValue grundy_path(int n) {
    require(n >= 1, "grundy_path: n must be >= 1");
    return static_cast<GrundyValue>(n % 2);
}

Outcome grid_outcome(std::span<const int> dims) {
    require(!dims.empty(), "grid_outcome: no dimensions");
    for (int d : dims) require(d >= 1, "grid_outcome: dimensions must be >= 1");
    return std::all_of(dims.begin(), dims.end(), [](int d) { return d % 2 == 1; }) ? Outcome::N : Outcome::P;
}

Outcome product_outcome(std::span<const Outcome> outcomes) {
    require(!outcomes.empty(), "product_outcome: no factors");
    return std::all_of(outcomes.begin(), outcomes.end(), [](Outcome o) { return o == Outcome::N; }) ? Outcome::N
                                                                                                      : Outcome::P;
}

std::optional<ClosedForm> closed_form_lookup(const Graph& g, const GraphClassTag& tag) {
    if (!(recognize_family(g) == tag))
        throw std::invalid_argument("closed_form_lookup: tag " + tag.name() + " does not match the graph");
    using K = GraphClassTag::Kind;
    auto value = [](GrundyValue v) { return ClosedForm{v, outcome_of(v)}; };
    switch (tag.kind) {
        case K::Complete: return value(grundy_complete(tag.n));
        case K::Star: return value(grundy_star(tag.n));
        case K::CompleteBipartite: return value(grundy_complete_bipartite(tag.m, tag.n));
        case K::Cycle: return value(grundy_cycle(tag.n));
        case K::Path: return value(grundy_path(tag.n));
        case K::Grid: return ClosedForm{std::nullopt, grid_outcome(tag.dims)};
        default: return std::nullopt;
    }
}

}  // namespace geodex
