// parikh.hpp -- per-letter occurrence counts over a declared alphabet.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slang/letter.hpp"

namespace slang {

/// Occurrence counts of every letter of a declared alphabet (entries may be
/// zero). The alphabet ties constraint words to the items they describe.
class ParikhVector {
public:
    ParikhVector() = default;
    ParikhVector(Alphabet alphabet, std::vector<std::uint32_t> counts);

    static ParikhVector zero(Alphabet alphabet);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const std::vector<std::uint32_t>& counts() const noexcept { return counts_; }

    bool has(Letter l) const noexcept { return alphabet_.contains(l); }
    /// Count of `l`; DomainError when `l` is not in the alphabet.
    std::uint32_t count(Letter l) const;

    std::uint64_t total() const noexcept;

    /// Restriction to a sub-alphabet; DomainError when `sub` is not contained.
    ParikhVector restricted_to(const Alphabet& sub) const;

    /// Componentwise sum; both operands must share one alphabet.
    friend ParikhVector operator+(const ParikhVector& a, const ParikhVector& b);

    friend bool operator==(const ParikhVector&, const ParikhVector&) = default;

    std::string str() const; // "(a:10,b:4,c:4)"

private:
    Alphabet alphabet_;
    std::vector<std::uint32_t> counts_;
};

} // namespace slang
