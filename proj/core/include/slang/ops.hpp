// ops.hpp -- the operator algebra on S-words and S-languages: concatenation,
// shuffles, projection, bounded integration and the join.
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "slang/delannoy.hpp"
#include "slang/error.hpp"
#include "slang/sword.hpp"

namespace slang {

/// Sequence concatenation; |uv| = |u| + |v|.
SWord concat(const SWord& u, const SWord& v);

/// Plain word shuffle: every interleaving that preserves each operand's
/// order. No S-letter is created or merged; duplicates (possible when the
/// operands share letters) are removed.
SLanguage word_shuffle(const SWord& u, const SWord& v);

/// S-shuffle of two S-words over disjoint letter sets: interleavings in
/// which one S-letter of `f` may additionally fuse with one S-letter of `g`.
/// Result lengths r satisfy max(|f|,|g|) <= r <= |f|+|g|.
SLanguage s_shuffle(const SWord& f, const SWord& g);

/// S-shuffle extended to languages over disjoint alphabets.
SLanguage s_shuffle(const SLanguage& l1, const SLanguage& l2);

/// n-ary S-shuffle, folded by associativity. Empty input gives {epsilon}.
SLanguage s_shuffle_many(std::span<const SWord> words);

/// S-projection: each S-letter is intersected with `y`; emptied letters
/// vanish. A monoid morphism.
SWord project(const SWord& f, const Alphabet& y);

/// Maps project over the language and deduplicates. The result alphabet is
/// the intersection of the language alphabet with `y`.
SLanguage project_language(const SLanguage& l, const Alphabet& y);

/// Symbolic bounded integration: the language of all words over `target`
/// whose projection onto the base letters is `base` and whose Parikh vector
/// is `bound`. Kept symbolic; joins consume it without enumeration.
struct IntegrationSpec {
    SWord base;
    Alphabet target;    // must contain every letter of base
    ParikhVector bound; // over target; restriction to base letters = parikh(base)

    /// DomainError when the invariants above fail.
    void validate() const;
};

/// Cardinality of the integration, computed without enumeration.
BigInt integration_count(const IntegrationSpec& spec);

/// Explicit enumeration, for tests and small bounds. Throws CapExceeded
/// when the symbolic count is larger than `cap`.
SLanguage integrate_bounded(const IntegrationSpec& spec,
                            std::size_t cap = kDefaultEnumerationCap);

/// Aligned decomposition of two words on their shared letters: the fused
/// anchor S-letters, and the private runs between consecutive anchors
/// (segments.size() == anchors.size() + 1).
struct JoinPlan {
    std::vector<SLetter> anchors;
    std::vector<std::pair<std::vector<SLetter>, std::vector<SLetter>>> segments;
};

/// Steps (i) and (ii) of the join for one pair of words: both words must
/// list the same sequence of common-letter contents (fusion patterns
/// included); nullopt when the occurrence orders disagree.
std::optional<JoinPlan> plan_join(const SWord& w1, const SWord& w2, const Alphabet& common);

/// Joins one pair of words on their common letters: anchors fuse, private
/// segments shuffle. Empty when the pair is incompatible.
std::vector<SWord> join_words(const SWord& w1, const SWord& w2, const Alphabet& common,
                              std::size_t cap = kDefaultEnumerationCap);

/// The join of two languages under `bound`: equals the intersection of the
/// two bounded integrations onto the union alphabet, computed pairwise by
/// anchoring on the common letters and S-shuffling the private segments.
/// Both languages must consist of words whose Parikh vectors equal the
/// bound restricted to their alphabets.
SLanguage join(const SLanguage& l1, const SLanguage& l2, const ParikhVector& bound,
               std::size_t cap = kDefaultEnumerationCap);

} // namespace slang
