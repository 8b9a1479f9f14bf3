#pragma once

#include <cstdint>
#include <optional>

#include "sci/graph.hpp"

namespace sci {

// Witness of a broken strong coloring: two equally colored edges that share
// an endpoint or are joined by an edge.
struct Violation {
    int e = -1;
    int f = -1;
    enum class Reason { shared_endpoint, distance_one } reason = Reason::shared_endpoint;
};

struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

struct OracleResult {
    int k = 0;
    StrongColoring coloring;
};

inline constexpr std::int64_t kDefaultOracleBudget = 10'000'000;

// nullopt when the coloring is strong; throws GraphError when an edge is
// uncolored (distinct from a Violation).
std::optional<Violation> verify_strong_coloring(const Graph& g, const StrongColoring& c);

// Exact s-chi'(G) by branch and bound on the vertices of L(G)^2, intended
// for desk scale (m up to ~40). Never approximates: throws BudgetError when
// the node budget runs out. With upper_hint set, only k <= upper_hint is
// searched and an invalid hint raises GraphError.
OracleResult exact_strong_index(const Graph& g, std::optional<int> upper_hint = std::nullopt,
                                std::int64_t budget = kDefaultOracleBudget);

// Clique number of L(G)^2: a maximum set of edges pairwise within distance
// one. Exact, budgeted.
int max_clique_lg2(const Graph& g, std::int64_t budget = kDefaultOracleBudget);

// Decision variant used internally and by tests: find a strong coloring with
// at most k colors, or nullopt when none exists.
std::optional<StrongColoring> strong_coloring_with(const Graph& g, int k,
                                                   std::int64_t budget = kDefaultOracleBudget);

}  // namespace sci
