#include "slang/letter.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <set>

#include "slang/error.hpp"

namespace slang {

namespace {

std::mutex& letter_pool_mutex() {
    static std::mutex m;
    return m;
}

const std::string* intern_name(std::string_view name) {
    static std::set<std::string, std::less<>> pool;
    std::lock_guard<std::mutex> lock(letter_pool_mutex());
    auto it = pool.find(name);
    if (it == pool.end()) it = pool.emplace(name).first;
    return &*it;
}

} // namespace

bool is_letter_name(std::string_view text) noexcept {
    if (text.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(text.front()))) return false;
    return std::all_of(text.begin(), text.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

Letter::Letter(std::string_view name) {
    if (!is_letter_name(name))
        throw DomainError("invalid letter name '" + std::string(name) +
                          "': expected a letter followed by letters, digits or '_'");
    name_ = intern_name(name);
}

namespace detail {

namespace {

struct SLetterLess {
    using is_transparent = void;
    bool operator()(const SLetterData& a, const SLetterData& b) const {
        return a.letters < b.letters;
    }
    bool operator()(const SLetterData& a, const std::vector<Letter>& b) const {
        return a.letters < b;
    }
    bool operator()(const std::vector<Letter>& a, const SLetterData& b) const {
        return a < b.letters;
    }
};

std::string render(const std::vector<Letter>& letters) {
    if (letters.size() == 1) return letters.front().name();
    std::string out = "{";
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) out += ',';
        out += letters[i].name();
    }
    out += '}';
    return out;
}

} // namespace

const SLetterData* intern_sletter(std::vector<Letter> letters) {
    static std::set<SLetterData, SLetterLess> pool;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = pool.find(letters);
    if (it == pool.end()) {
        SLetterData data;
        data.text = render(letters);
        data.letters = std::move(letters);
        it = pool.insert(std::move(data)).first;
    }
    return &*it;
}

} // namespace detail

namespace {

std::vector<Letter> canonical_letters(std::vector<Letter> letters) {
    if (letters.empty()) throw DomainError("an S-letter must contain at least one letter");
    std::sort(letters.begin(), letters.end());
    letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
    return letters;
}

} // namespace

SLetter::SLetter(std::initializer_list<Letter> letters)
    : SLetter(std::vector<Letter>(letters)) {}

SLetter::SLetter(std::vector<Letter> letters)
    : data_(detail::intern_sletter(canonical_letters(std::move(letters)))) {}

bool SLetter::contains(Letter l) const noexcept {
    return std::binary_search(letters().begin(), letters().end(), l);
}

SLetter SLetter::merged(SLetter a, SLetter b) {
    if (a == b) return a;
    std::vector<Letter> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.letters().begin(), a.letters().end(), b.letters().begin(),
                   b.letters().end(), std::back_inserter(out));
    return SLetter(detail::intern_sletter(std::move(out)));
}

std::optional<SLetter> SLetter::restricted(const Alphabet& y) const {
    std::vector<Letter> out;
    for (Letter l : letters())
        if (y.contains(l)) out.push_back(l);
    if (out.empty()) return std::nullopt;
    if (out.size() == size()) return *this;
    return SLetter(detail::intern_sletter(std::move(out)));
}

bool SLetter::within(const Alphabet& y) const noexcept {
    return std::all_of(letters().begin(), letters().end(),
                       [&](Letter l) { return y.contains(l); });
}

bool SLetter::meets(const Alphabet& y) const noexcept {
    return std::any_of(letters().begin(), letters().end(),
                       [&](Letter l) { return y.contains(l); });
}

std::strong_ordering operator<=>(SLetter a, SLetter b) noexcept {
    if (a.data_ == b.data_) return std::strong_ordering::equal;
    return std::lexicographical_compare_three_way(
        a.letters().begin(), a.letters().end(), b.letters().begin(), b.letters().end());
}

Alphabet::Alphabet(std::initializer_list<Letter> letters)
    : Alphabet(std::vector<Letter>(letters)) {}

Alphabet::Alphabet(std::vector<Letter> letters) : letters_(std::move(letters)) {
    std::sort(letters_.begin(), letters_.end());
    letters_.erase(std::unique(letters_.begin(), letters_.end()), letters_.end());
}

bool Alphabet::contains(Letter l) const noexcept {
    return std::binary_search(letters_.begin(), letters_.end(), l);
}

bool Alphabet::contains_all(const Alphabet& other) const noexcept {
    return std::includes(letters_.begin(), letters_.end(), other.letters_.begin(),
                         other.letters_.end());
}

bool Alphabet::disjoint_with(const Alphabet& other) const noexcept {
    auto i = letters_.begin();
    auto j = other.letters_.begin();
    while (i != letters_.end() && j != other.letters_.end()) {
        auto c = *i <=> *j;
        if (c == 0) return false;
        if (c < 0)
            ++i;
        else
            ++j;
    }
    return true;
}

Alphabet Alphabet::unite(const Alphabet& other) const {
    std::vector<Letter> out;
    out.reserve(size() + other.size());
    std::set_union(letters_.begin(), letters_.end(), other.letters_.begin(),
                   other.letters_.end(), std::back_inserter(out));
    Alphabet result;
    result.letters_ = std::move(out);
    return result;
}

Alphabet Alphabet::intersect(const Alphabet& other) const {
    std::vector<Letter> out;
    std::set_intersection(letters_.begin(), letters_.end(), other.letters_.begin(),
                          other.letters_.end(), std::back_inserter(out));
    Alphabet result;
    result.letters_ = std::move(out);
    return result;
}

Alphabet Alphabet::subtract(const Alphabet& other) const {
    std::vector<Letter> out;
    std::set_difference(letters_.begin(), letters_.end(), other.letters_.begin(),
                        other.letters_.end(), std::back_inserter(out));
    Alphabet result;
    result.letters_ = std::move(out);
    return result;
}

std::optional<std::size_t> Alphabet::index_of(Letter l) const noexcept {
    auto it = std::lower_bound(letters_.begin(), letters_.end(), l);
    if (it == letters_.end() || *it != l) return std::nullopt;
    return static_cast<std::size_t>(it - letters_.begin());
}

std::string Alphabet::str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out += ',';
        out += letters_[i].name();
    }
    out += '}';
    return out;
}

} // namespace slang
