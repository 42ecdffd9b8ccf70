#include "slang/delannoy.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "slang/error.hpp"

namespace slang {

std::uint64_t DelannoyIndex::total() const noexcept {
    return std::accumulate(parts.begin(), parts.end(), std::uint64_t{0});
}

namespace {

void validate_index(const DelannoyIndex& index) {
    if (index.parts.empty())
        throw DomainError("a Delannoy index needs at least one entry");
}

std::mutex& memo_mutex() {
    static std::mutex m;
    return m;
}

} // namespace

BigInt delannoy_number(std::uint32_t p, std::uint32_t q) {
    static std::vector<std::vector<BigInt>> table; // table[p][q]
    std::lock_guard<std::mutex> lock(memo_mutex());
    if (table.size() <= p || (!table.empty() && table.front().size() <= q)) {
        std::size_t rows = std::max<std::size_t>(table.size(), p + 1);
        std::size_t cols = table.empty() ? q + 1 : std::max(table.front().size(),
                                                            std::size_t{q} + 1);
        std::vector<std::vector<BigInt>> next(rows, std::vector<BigInt>(cols));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                if (i == 0 || j == 0)
                    next[i][j] = 1;
                else
                    next[i][j] = next[i][j - 1] + next[i - 1][j - 1] + next[i - 1][j];
            }
        table = std::move(next);
    }
    return table[p][q];
}

namespace {

// Functional-equation recursion: sum of D over all proper predecessors.
BigInt delannoy_rec(std::vector<std::uint32_t>& parts,
                    std::map<std::vector<std::uint32_t>, BigInt>& memo) {
    if (std::all_of(parts.begin(), parts.end(), [](std::uint32_t p) { return p == 0; }))
        return 1;
    if (auto it = memo.find(parts); it != memo.end()) return it->second;

    std::vector<std::uint32_t> key = parts;
    BigInt sum = 0;
    // Enumerate every way of decrementing a nonempty subset of the positive
    // coordinates.
    std::vector<std::size_t> positive;
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i] > 0) positive.push_back(i);
    const std::size_t k = positive.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
        for (std::size_t b = 0; b < k; ++b)
            if (mask & (std::uint64_t{1} << b)) --parts[positive[b]];
        sum += delannoy_rec(parts, memo);
        for (std::size_t b = 0; b < k; ++b)
            if (mask & (std::uint64_t{1} << b)) ++parts[positive[b]];
    }
    memo.emplace(std::move(key), sum);
    return sum;
}

} // namespace

BigInt delannoy_number(const DelannoyIndex& index) {
    validate_index(index);
    if (index.parts.size() > 63)
        throw DomainError("Delannoy index dimension above 63 is not supported");
    static std::map<std::vector<std::uint32_t>, BigInt> memo;
    std::lock_guard<std::mutex> lock(memo_mutex());
    std::vector<std::uint32_t> parts = index.parts;
    return delannoy_rec(parts, memo);
}

namespace {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt out = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        out *= BigInt(n - i);
        out /= BigInt(i + 1);
    }
    return out;
}

} // namespace

BigInt delannoy_count_of_length(const DelannoyIndex& index, std::size_t length) {
    validate_index(index);
    // Words of length r with the given counts: choose the position set of
    // each letter inside [r] and require every position covered, by
    // inclusion-exclusion over the covered position count j.
    const std::uint64_t r = length;
    BigInt sum = 0;
    for (std::uint64_t j = 0; j <= r; ++j) {
        BigInt prod = binomial(r, j);
        for (std::uint32_t p : index.parts) {
            if (prod == 0) break;
            prod *= binomial(j, p);
        }
        if ((r - j) % 2 == 0)
            sum += prod;
        else
            sum -= prod;
    }
    return sum;
}

namespace {

struct Enumerator {
    std::vector<Letter> letters;          // sorted
    std::vector<std::uint32_t> remaining; // parallel to letters
    std::vector<SLetter> current;
    std::vector<SWord>* out = nullptr;

    bool done() const {
        return std::all_of(remaining.begin(), remaining.end(),
                           [](std::uint32_t r) { return r == 0; });
    }

    void place_next() {
        if (done()) {
            out->emplace_back(current);
            return;
        }
        std::vector<Letter> subset;
        extend(0, subset);
    }

    // Visits the nonempty subsets of the currently available letters in
    // structural order ({a} < {a,b} < {a,b,c} < {a,c} < {b} < ...), placing
    // each as the next S-letter. This emits the words already sorted.
    void extend(std::size_t from, std::vector<Letter>& subset) {
        for (std::size_t i = from; i < letters.size(); ++i) {
            if (remaining[i] == 0) continue;
            subset.push_back(letters[i]);
            --remaining[i];
            current.emplace_back(subset); // subset is sorted already
            place_next();
            current.pop_back();
            extend(i + 1, subset);
            ++remaining[i];
            subset.pop_back();
        }
    }
};

} // namespace

SLanguage delannoy_language(const DelannoyIndex& index,
                            const std::vector<Letter>& alphabet, std::size_t cap) {
    validate_index(index);
    if (alphabet.size() != index.parts.size())
        throw DomainError("Delannoy language needs one letter per index entry");
    {
        std::vector<Letter> check = alphabet;
        std::sort(check.begin(), check.end());
        if (std::adjacent_find(check.begin(), check.end()) != check.end())
            throw DomainError("Delannoy language letters must be distinct");
    }
    BigInt count = delannoy_number(index);
    if (count > BigInt(cap))
        throw CapExceeded("Delannoy language of " + count.str() +
                          " words exceeds the enumeration cap of " + std::to_string(cap));

    // Re-pair the counts with the letters in sorted order.
    std::vector<std::pair<Letter, std::uint32_t>> pairs;
    pairs.reserve(alphabet.size());
    for (std::size_t i = 0; i < alphabet.size(); ++i)
        pairs.emplace_back(alphabet[i], index.parts[i]);
    std::sort(pairs.begin(), pairs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<SWord> words;
    words.reserve(static_cast<std::size_t>(count));
    Enumerator e;
    for (auto& [l, c] : pairs) {
        e.letters.push_back(l);
        e.remaining.push_back(c);
    }
    e.out = &words;
    e.place_next();
    return SLanguage(Alphabet(std::vector<Letter>(alphabet.begin(), alphabet.end())),
                     std::move(words));
}

std::vector<PathStep> sword_to_path(const SWord& w, Letter north_letter,
                                    Letter east_letter) {
    if (north_letter == east_letter)
        throw DomainError("the two path letters must be distinct");
    const SLetter north{north_letter};
    const SLetter east{east_letter};
    const SLetter diagonal = SLetter::merged(north, east);
    std::vector<PathStep> steps;
    steps.reserve(w.size());
    for (const SLetter& s : w) {
        if (s == north)
            steps.push_back(PathStep::north);
        else if (s == east)
            steps.push_back(PathStep::east);
        else if (s == diagonal)
            steps.push_back(PathStep::northeast);
        else
            throw DomainError("S-letter '" + s.text() +
                              "' is outside the two-letter path alphabet");
    }
    return steps;
}

SWord path_to_sword(std::span<const PathStep> steps, Letter north_letter,
                    Letter east_letter) {
    if (north_letter == east_letter)
        throw DomainError("the two path letters must be distinct");
    const SLetter north{north_letter};
    const SLetter east{east_letter};
    const SLetter diagonal = SLetter::merged(north, east);
    std::vector<SLetter> out;
    out.reserve(steps.size());
    for (PathStep s : steps) {
        switch (s) {
        case PathStep::north: out.push_back(north); break;
        case PathStep::east: out.push_back(east); break;
        case PathStep::northeast: out.push_back(diagonal); break;
        }
    }
    return SWord(std::move(out));
}

} // namespace slang
