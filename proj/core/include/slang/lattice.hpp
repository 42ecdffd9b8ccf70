// lattice.hpp -- Thue-rewriting lattices over Delannoy languages.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slang/delannoy.hpp"
#include "slang/sword.hpp"

namespace slang {

/// A total order a1 < ... < an on an alphabet. It induces the partial order
/// P < Q on S-letters (every member of P below every member of Q) and the
/// rewriting rules PQ -> P∪Q and P∪Q -> QP.
struct ThueSystem {
    std::vector<Letter> order;

    static ThueSystem lexicographic(const Alphabet& alphabet);

    bool covers(const SWord& w) const noexcept;
    std::optional<std::size_t> rank(Letter l) const noexcept;
};

/// All words reachable from `w` by one rewriting step.
std::vector<SWord> thue_successors(const SWord& w, const ThueSystem& sys);

/// The rewrite closure of the seed a1^p1 ... an^pn: nodes are exactly the
/// Delannoy language of the index, covers are single rewriting steps,
/// bottom is the seed and top its reversal.
class Lattice {
public:
    using NodeId = std::uint32_t;

    const SLanguage& nodes() const noexcept { return nodes_; }
    const SWord& node(NodeId id) const noexcept { return nodes_.words()[id]; }
    std::size_t node_count() const noexcept { return nodes_.size(); }

    /// Covering pairs (lower, upper), sorted.
    const std::vector<std::pair<NodeId, NodeId>>& covers() const noexcept { return covers_; }

    NodeId bottom() const noexcept { return bottom_; }
    NodeId top() const noexcept { return top_; }

    const DelannoyIndex& index() const noexcept { return index_; }
    const ThueSystem& system() const noexcept { return system_; }

    /// NodeId of a word; DomainError when absent.
    NodeId id_of(const SWord& w) const;

    std::string to_dot() const;

private:
    friend Lattice lattice_from(const DelannoyIndex&, const ThueSystem&, std::size_t);

    DelannoyIndex index_{std::vector<std::uint32_t>{}};
    ThueSystem system_;
    SLanguage nodes_;
    std::vector<std::pair<NodeId, NodeId>> covers_;
    NodeId bottom_ = 0;
    NodeId top_ = 0;
};

Lattice lattice_from(const DelannoyIndex& index, const ThueSystem& sys,
                     std::size_t cap = kDefaultEnumerationCap);

/// Reachability order of a lattice, with meets and joins computed by
/// exhaustive search. Construction cost is quadratic in the node count.
class LatticeOrder {
public:
    explicit LatticeOrder(const Lattice& lattice);

    bool leq(Lattice::NodeId a, Lattice::NodeId b) const noexcept;
    /// nullopt when the greatest lower / least upper bound does not exist.
    std::optional<Lattice::NodeId> meet(Lattice::NodeId a, Lattice::NodeId b) const;
    std::optional<Lattice::NodeId> join(Lattice::NodeId a, Lattice::NodeId b) const;

private:
    std::size_t n_;
    std::size_t stride_;
    std::vector<std::uint64_t> down_; // down_[b] bitset: a <= b
};

struct DistributivityResult {
    bool distributive = false;
    /// A triple (x,y,z) with x ∧ (y∨z) != (x∧y) ∨ (x∧z), when not.
    std::optional<std::array<Lattice::NodeId, 3>> witness;
};

struct ModularityResult {
    bool modular = false;
    /// A triple (x,y,z), x <= z, violating the modular law, when not.
    std::optional<std::array<Lattice::NodeId, 3>> witness;
    /// The induced pentagon {bottom, a, c, side, top} with bottom<a<c<top,
    /// side incomparable to a and c.
    std::optional<std::array<Lattice::NodeId, 5>> pentagon;
};

/// Exhaustive check of the distributive law. Verifies first that meets and
/// joins are total (DomainError otherwise).
DistributivityResult check_distributive(const Lattice& lattice);

/// Exhaustive check of the modular law; on failure returns an N5 witness.
ModularityResult check_modular(const Lattice& lattice);

/// Nodes with exactly one lower cover. Only defined for two-letter indices
/// (DomainError otherwise); the count is 2pq.
std::vector<SWord> union_irreducibles(const Lattice& lattice);

} // namespace slang
