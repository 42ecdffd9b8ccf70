// sword.hpp -- S-words, S-languages and their canonical text syntax.
#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slang/letter.hpp"
#include "slang/parikh.hpp"

namespace slang {

/// A finite sequence of S-letters; the description of one temporal
/// situation. The empty word stands for the vacuous situation.
class SWord {
public:
    SWord() = default; // epsilon
    explicit SWord(std::vector<SLetter> sletters);

    /// |f|: number of S-letters.
    std::size_t size() const noexcept { return sletters_.size(); }
    /// ||f||: total letter occurrences across all S-letters.
    std::size_t weight() const noexcept;
    /// ||f||_x: occurrences of one letter.
    std::size_t count(Letter x) const noexcept;

    bool empty() const noexcept { return sletters_.empty(); }
    const SLetter& operator[](std::size_t i) const noexcept { return sletters_[i]; }
    const std::vector<SLetter>& sletters() const noexcept { return sletters_; }
    auto begin() const noexcept { return sletters_.begin(); }
    auto end() const noexcept { return sletters_.end(); }

    /// The set of letters occurring in the word.
    Alphabet letters() const;

    /// Canonical text form; empty string for epsilon.
    std::string str() const;

    friend bool operator==(const SWord&, const SWord&) = default;
    /// Canonical order: lexicographic on the S-letter sequence under the
    /// structural S-letter order (shorter prefix first).
    friend std::strong_ordering operator<=>(const SWord& a, const SWord& b);

private:
    std::vector<SLetter> sletters_;
};

/// Parses the canonical grammar:
///   sword   := (sletter WS?)*
///   sletter := ident | '{' ident (',' ident)* '}'
/// Singleton braces normalize away; members of a braced set are reordered
/// into canonical form. Throws ParseError with the offending byte offset.
SWord parse_sword(std::string_view text);

/// Canonical rendering; parse_sword(format_sword(w)) == w.
std::string format_sword(const SWord& w);

/// The Parikh vector of `w` over `alphabet`. Every letter of `w` must be in
/// the alphabet (DomainError otherwise); absent alphabet letters count 0.
ParikhVector parikh(const SWord& w, const Alphabet& alphabet);

/// Reverses the reading direction (the S-letters themselves are unchanged).
SWord mirror(const SWord& w);

using LetterMap = std::map<Letter, Letter>;

/// Replaces every occurrence through `map`, re-canonicalizing each S-letter.
/// The map must cover all letters of `w` and be injective (DomainError).
SWord rename(const SWord& w, const LetterMap& map);

/// A finite, canonically ordered, deduplicated set of S-words over one
/// alphabet. The empty language signals an unsatisfiable description.
class SLanguage {
public:
    SLanguage() = default;
    explicit SLanguage(Alphabet alphabet);
    SLanguage(Alphabet alphabet, std::vector<SWord> words);

    /// Builds a language whose alphabet is the union of the words' letters.
    static SLanguage infer(std::vector<SWord> words);

    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const std::vector<SWord>& words() const noexcept { return words_; }
    std::size_t size() const noexcept { return words_.size(); }
    bool empty() const noexcept { return words_.empty(); }
    bool contains(const SWord& w) const noexcept;
    auto begin() const noexcept { return words_.begin(); }
    auto end() const noexcept { return words_.end(); }

    /// The common Parikh vector when every word has the same one; nullopt
    /// for the empty language or mixed-profile languages.
    std::optional<ParikhVector> uniform_parikh() const;

    /// One word per line, canonical order.
    std::string str() const;

    friend bool operator==(const SLanguage&, const SLanguage&) = default;

private:
    Alphabet alphabet_;
    std::vector<SWord> words_;
};

/// Parses a language file body: one S-word per line, '#' starts a comment,
/// blank lines are skipped. The alphabet is inferred from the words.
SLanguage parse_language(std::string_view text);

} // namespace slang
