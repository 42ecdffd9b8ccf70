// network.hpp -- n-ary qualitative constraint networks: every consistent
// scenario is computed as an intersection of bounded integrations, folded
// pairwise through the join.
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "slang/delannoy.hpp"
#include "slang/error.hpp"
#include "slang/ops.hpp"
#include "slang/sword.hpp"

namespace slang {

/// One temporal item: its identity letter and how many points/bounds it
/// contributes to every scenario.
struct TemporalItem {
    Letter letter;
    std::uint32_t occurrences = 1;

    const std::string& name() const noexcept { return letter.name(); }
};

/// An s-ary constraint: the language of permitted situations among the
/// scoped items, over exactly the scope's letters.
struct Constraint {
    std::vector<Letter> scope; // ordered, distinct, nonempty
    SLanguage language;        // nonempty, uniform profile
    std::string label;         // for diagnostics and traces
};

/// A validated set of items plus constraints.
class ConstraintNetwork {
public:
    ConstraintNetwork(std::vector<TemporalItem> items, std::vector<Constraint> constraints);

    const std::vector<TemporalItem>& items() const noexcept { return items_; }
    const std::vector<Constraint>& constraints() const noexcept { return constraints_; }

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const ParikhVector& profile() const noexcept { return profile_; }

private:
    std::vector<TemporalItem> items_;
    std::vector<Constraint> constraints_;
    Alphabet alphabet_;
    ParikhVector profile_;
};

struct SolveOptions {
    std::size_t cap = kDefaultEnumerationCap;
    /// heuristic: anchor on shared letters, smallest language first.
    /// declaration: fold constraints in declaration order.
    enum class Order { heuristic, declaration } order = Order::heuristic;
};

/// All globally consistent scenarios: the intersection over every constraint
/// of its bounded integration to the full alphabet. Unconstrained items are
/// folded in as trivial one-word languages. CapExceeded reports the join
/// that blew up.
SLanguage solve(const ConstraintNetwork& net, const SolveOptions& options = {});

/// Emptiness test with a streaming depth-first witness search; stops at the
/// first scenario found.
bool satisfiable(const ConstraintNetwork& net, const SolveOptions& options = {});

/// Scenario counts after each successive join when folding the constraints
/// in the given order (a permutation of all constraint indices). Each entry
/// is the cardinality of the accumulated result integrated to the full
/// alphabet, computed symbolically.
std::vector<BigInt> intermediate_cardinalities(const ConstraintNetwork& net,
                                               std::span<const std::size_t> order,
                                               const SolveOptions& options = {});

/// One occurrence of an item: its letter and 1-based occurrence index.
struct OccurrenceId {
    Letter letter;
    std::uint32_t index = 1;

    std::string str() const; // "a#1"
    friend bool operator==(const OccurrenceId&, const OccurrenceId&) = default;
};

/// Hasse graph of the precedence order common to all scenarios: an edge
/// means "strictly precedes in every scenario" (transitively reduced);
/// fused pairs are simultaneous in every scenario.
struct PrecedenceGraph {
    std::vector<OccurrenceId> nodes;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> fused;

    bool has_edge(const OccurrenceId& from, const OccurrenceId& to) const;

    std::string to_text() const; // "a#1 -> b#1" and "a#1 = b#1" lines
    std::string to_dot() const;
};

/// Builds the precedence graph of a nonempty language whose words share one
/// Parikh vector (DomainError otherwise).
PrecedenceGraph hasse_graph(const SLanguage& language);

} // namespace slang
