// letter.hpp -- interned letters, S-letters and alphabets.
//
// Letters and S-letters are interned: copies are pointer-sized, equality is
// a pointer comparison, and ordering dereferences into the pool. The pools
// live for the whole process and are internally synchronized, so values can
// be shared freely between threads.
#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace slang {

class Alphabet;

/// True iff `text` is a valid letter name: a letter followed by letters,
/// digits or underscores.
bool is_letter_name(std::string_view text) noexcept;

/// A named temporal identity. Total order is lexicographic on the name.
class Letter {
public:
    explicit Letter(std::string_view name);

    const std::string& name() const noexcept { return *name_; }

    friend bool operator==(Letter a, Letter b) noexcept { return a.name_ == b.name_; }
    friend bool operator!=(Letter a, Letter b) noexcept { return a.name_ != b.name_; }
    friend std::strong_ordering operator<=>(Letter a, Letter b) noexcept {
        if (a.name_ == b.name_) return std::strong_ordering::equal;
        return *a.name_ <=> *b.name_;
    }

private:
    const std::string* name_;
};

namespace detail {
struct SLetterData {
    std::vector<Letter> letters; // sorted, unique, nonempty
    std::string text;            // canonical rendering: "a" or "{a,b}"
};
const SLetterData* intern_sletter(std::vector<Letter> letters);
} // namespace detail

/// A nonempty set of letters read at one instant. Canonical form stores the
/// members in lexicographic order; a singleton prints as its bare letter.
class SLetter {
public:
    SLetter(std::initializer_list<Letter> letters);
    explicit SLetter(std::vector<Letter> letters); // canonicalizes, dedups

    const std::vector<Letter>& letters() const noexcept { return data_->letters; }
    std::size_t size() const noexcept { return data_->letters.size(); }
    bool singleton() const noexcept { return size() == 1; }
    bool contains(Letter l) const noexcept;

    /// Canonical text: "a" for singletons, "{a,b}" otherwise.
    const std::string& text() const noexcept { return data_->text; }

    /// Set union of the two member sets.
    static SLetter merged(SLetter a, SLetter b);

    /// Intersection with `y`; nullopt when it vanishes.
    std::optional<SLetter> restricted(const Alphabet& y) const;

    bool within(const Alphabet& y) const noexcept; // all letters in y
    bool meets(const Alphabet& y) const noexcept;  // some letter in y

    friend bool operator==(SLetter a, SLetter b) noexcept { return a.data_ == b.data_; }
    friend bool operator!=(SLetter a, SLetter b) noexcept { return a.data_ != b.data_; }
    /// Structural order: lexicographic on the sorted letter sequences, so
    /// a < {a,b} < b. This is the order behind every canonical word listing.
    friend std::strong_ordering operator<=>(SLetter a, SLetter b) noexcept;

private:
    explicit SLetter(const detail::SLetterData* data) : data_(data) {}

    const detail::SLetterData* data_;
};

/// A finite set of letters, stored sorted.
class Alphabet {
public:
    Alphabet() = default;
    Alphabet(std::initializer_list<Letter> letters);
    explicit Alphabet(std::vector<Letter> letters); // sorts, dedups

    bool empty() const noexcept { return letters_.empty(); }
    std::size_t size() const noexcept { return letters_.size(); }
    bool contains(Letter l) const noexcept;
    bool contains_all(const Alphabet& other) const noexcept;
    bool disjoint_with(const Alphabet& other) const noexcept;

    Alphabet unite(const Alphabet& other) const;
    Alphabet intersect(const Alphabet& other) const;
    Alphabet subtract(const Alphabet& other) const;

    const std::vector<Letter>& letters() const noexcept { return letters_; }
    auto begin() const noexcept { return letters_.begin(); }
    auto end() const noexcept { return letters_.end(); }

    /// Position of `l` in the sorted letter list, if present.
    std::optional<std::size_t> index_of(Letter l) const noexcept;

    std::string str() const; // "{a,b,c}"

    friend bool operator==(const Alphabet&, const Alphabet&) = default;
    friend std::strong_ordering operator<=>(const Alphabet& a, const Alphabet& b) = default;

private:
    std::vector<Letter> letters_;
};

} // namespace slang
