#pragma once

#include <optional>
#include <span>
#include <vector>

#include "geodex/game.hpp"
#include "geodex/graph.hpp"

namespace geodex {

// Constant-time values for the solved families. Each throws
// std::invalid_argument outside its stated parameter range.

/// K_n, n >= 1: every vertex is simplicial, so all n moves are played.
GrundyValue grundy_complete(int n);
/// K_{1,leaves}, leaves >= 1.
GrundyValue grundy_star(int leaves);
/// K_{m,n}, m, n >= 2: 0 for equal parity, 2 otherwise.
GrundyValue grundy_complete_bipartite(int m, int n);
/// C_n, n >= 3.
GrundyValue grundy_cycle(int n);
/// C_n with one selected vertex (d empty), or with two selected vertices at
/// cyclic distance d, 1 <= d <= n/2; the latter is ceil(n/2) - d.
GrundyValue grundy_cycle_selected(int n, std::optional<int> d = std::nullopt);
/// P_n, n >= 1.
GrundyValue grundy_path(int n);

/// Grid P_{d1} x ... x P_{dk}: N exactly when every dimension is odd.
Outcome grid_outcome(std::span<const int> dims);
/// Cartesian product: N exactly when every factor is N. Holds for grids, but
/// not in general: P_3 x C_5 is P although both factors are N. Only
/// grid_outcome relies on it.
Outcome product_outcome(std::span<const Outcome> outcomes);

struct ClosedForm {
    /// Absent for grids, where only the outcome is known.
    std::optional<GrundyValue> grundy;
    Outcome outcome = Outcome::P;
};

/// Dispatch on a recognised tag; nullopt for families without a closed form.
/// Throws std::invalid_argument when `tag` does not describe `g`.
std::optional<ClosedForm> closed_form_lookup(const Graph& g, const GraphClassTag& tag);

}  // namespace geodex
