// delannoy.hpp -- Delannoy numbers and Delannoy languages: counting and
// enumerating all n-ary situations with a fixed occurrence profile.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "slang/error.hpp"
#include "slang/sword.hpp"

namespace slang {

using BigInt = boost::multiprecision::cpp_int;

/// Occurrence profile (p1,...,pn), n >= 1, entries >= 0.
struct DelannoyIndex {
    std::vector<std::uint32_t> parts;

    DelannoyIndex(std::initializer_list<std::uint32_t> p) : parts(p) {}
    explicit DelannoyIndex(std::vector<std::uint32_t> p) : parts(std::move(p)) {}

    std::size_t dimension() const noexcept { return parts.size(); }
    std::uint64_t total() const noexcept;

    friend bool operator==(const DelannoyIndex&, const DelannoyIndex&) = default;
};

/// Classic two-dimensional Delannoy number, via the memoized recurrence
/// D(p,q) = D(p,q-1) + D(p-1,q-1) + D(p-1,q), D(0,q) = D(p,0) = 1.
BigInt delannoy_number(std::uint32_t p, std::uint32_t q);

/// n-dimensional Delannoy number: the sum of D over all proper predecessor
/// tuples (each coordinate kept or decremented, not all kept). Agrees with
/// the 2-argument form for n = 2; D of the all-zero index is 1.
BigInt delannoy_number(const DelannoyIndex& index);

/// Number of S-words with Parikh vector `index` and exactly `length`
/// S-letters. Summing over all lengths reproduces delannoy_number.
BigInt delannoy_count_of_length(const DelannoyIndex& index, std::size_t length);

/// All S-words over `alphabet` (one letter per index entry, all distinct)
/// whose Parikh vector equals `index`, generated directly in canonical
/// order. Throws CapExceeded when the count is larger than `cap`.
SLanguage delannoy_language(const DelannoyIndex& index,
                            const std::vector<Letter>& alphabet,
                            std::size_t cap = kDefaultEnumerationCap);

/// Lattice-path step alphabet for the two-letter correspondence.
enum class PathStep : std::uint8_t { north, east, northeast };

/// Encodes a word over {north_letter, east_letter}: the first letter maps to
/// a north step, the second to an east step, their fusion to a north-east
/// step. Any other S-letter is a DomainError.
std::vector<PathStep> sword_to_path(const SWord& w, Letter north_letter, Letter east_letter);

/// Inverse of sword_to_path.
SWord path_to_sword(std::span<const PathStep> steps, Letter north_letter, Letter east_letter);

} // namespace slang
