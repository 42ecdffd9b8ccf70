// algebra.hpp -- bijections between the classical qualitative algebras
// (point, point-interval, Allen, chains) and S-words; composition and
// transitivity tables are derived through the join, never stored.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "slang/sword.hpp"

namespace slang {

enum class AlgebraKind : std::uint8_t {
    point,          // (1,1): <, =, >
    point_interval, // (1,2): before, starts, during, finishes, after
    interval_point, // (2,1): the converses, named with a ~ suffix
    allen,          // (2,2): the thirteen interval relations
    chain,          // (p,q): atoms named by their canonical S-word pattern
};

/// Identifies one binary qualitative algebra together with the occurrence
/// profile (p,q) of its two item slots.
class AlgebraId {
public:
    static AlgebraId point();
    static AlgebraId point_interval();
    static AlgebraId interval_point();
    static AlgebraId allen();
    static AlgebraId chain(std::uint32_t p, std::uint32_t q);

    /// The named algebra for a profile when one exists, chain(p,q) otherwise.
    static AlgebraId for_profile(std::uint32_t p, std::uint32_t q);

    /// Parses "point", "allen", "point_interval", "interval_point",
    /// "chain(p,q)"; DomainError otherwise.
    static AlgebraId parse(std::string_view name);

    AlgebraKind kind() const noexcept { return kind_; }
    std::uint32_t first_occurrences() const noexcept { return p_; }
    std::uint32_t second_occurrences() const noexcept { return q_; }

    /// Atom names in canonical order (ordered by their encoded S-words).
    const std::vector<std::string>& atoms() const;
    bool has_atom(std::string_view name) const;
    std::size_t atom_index(std::string_view name) const; // DomainError if absent

    /// The algebra of the converse relations (profile swapped).
    AlgebraId converse_algebra() const;

    std::string name() const; // "allen", "chain(2,3)", ...

    friend bool operator==(const AlgebraId&, const AlgebraId&) = default;

private:
    AlgebraId(AlgebraKind kind, std::uint32_t p, std::uint32_t q)
        : kind_(kind), p_(p), q_(q) {}

    AlgebraKind kind_;
    std::uint32_t p_;
    std::uint32_t q_;
};

/// The unique S-word over {first, second} realizing atom `r`: `first` gets
/// the algebra's first-slot occurrences, `second` the second-slot ones.
SWord atom_to_sword(const AlgebraId& algebra, std::string_view atom,
                    Letter first, Letter second);

/// Inverse of atom_to_sword; total on the algebra's Delannoy language.
std::string sword_to_atom(const AlgebraId& algebra, const SWord& w,
                          Letter first, Letter second);

/// Convenience overload: the word must use exactly two letters; the roles
/// are assigned by occurrence counts, alphabetically when p == q.
std::string sword_to_atom(const AlgebraId& algebra, const SWord& w);

/// A disjunction of atoms of one algebra. Empty encodes the impossible
/// relation, the full set the universal one.
class RelationSet {
public:
    RelationSet(AlgebraId algebra, const std::vector<std::string>& atoms);

    static RelationSet none(AlgebraId algebra); // bottom
    static RelationSet all(AlgebraId algebra);  // top

    const AlgebraId& algebra() const noexcept { return algebra_; }
    /// Atom names in canonical order.
    std::vector<std::string> atoms() const;
    const std::vector<std::uint16_t>& atom_indices() const noexcept { return indices_; }

    std::size_t size() const noexcept { return indices_.size(); }
    bool empty() const noexcept { return indices_.empty(); }
    bool full() const noexcept;
    bool contains(std::string_view atom) const;

    std::string str() const; // atoms separated by single spaces

    friend bool operator==(const RelationSet&, const RelationSet&) = default;

private:
    RelationSet(AlgebraId algebra, std::vector<std::uint16_t> indices);
    friend RelationSet converse(const RelationSet&);
    friend RelationSet compose(const RelationSet&, const RelationSet&);

    AlgebraId algebra_;
    std::vector<std::uint16_t> indices_; // sorted canonical atom indices
};

/// Atom-wise converse (swap the two items); an involution.
RelationSet converse(const RelationSet& rs);

/// Composition of r1 over (A,B) with r2 over (B,C), derived with no table:
/// encode the atoms as S-words, join under the full (A,B,C) profile,
/// project to {A,C}, decode. The middle profiles must agree (DomainError).
/// Operand algebras may differ, which yields the mixed point/interval
/// compositions.
RelationSet compose(const RelationSet& r1, const RelationSet& r2);

/// A fully derived composition matrix, rows indexed by `left` atoms and
/// columns by `right` atoms.
class TransitivityTable {
public:
    TransitivityTable(AlgebraId left, AlgebraId right);

    const AlgebraId& left() const noexcept { return left_; }
    const AlgebraId& right() const noexcept { return right_; }

    const RelationSet& entry(std::string_view row_atom, std::string_view col_atom) const;
    const RelationSet& entry(std::size_t row, std::size_t col) const;

    /// Aligned text matrix. Cells print bare atoms, braced sets, "T" for the
    /// universal relation and "0" for the impossible one.
    std::string render_text() const;
    /// Machine-readable lines "row col : atoms...".
    std::string render_rows() const;

private:
    AlgebraId left_;
    AlgebraId right_;
    std::vector<std::vector<RelationSet>> cells_;
};

/// The homogeneous table of an algebra whose two slots have equal profiles
/// (point, allen, chain(p,p)); DomainError otherwise. Cached.
const TransitivityTable& transitivity_table(const AlgebraId& algebra);

/// Mixed table for a composable pair of algebras. Cached.
const TransitivityTable& transitivity_table(const AlgebraId& left, const AlgebraId& right);

} // namespace slang
