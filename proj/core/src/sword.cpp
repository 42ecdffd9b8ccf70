#include "slang/sword.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "slang/error.hpp"

namespace slang {

SWord::SWord(std::vector<SLetter> sletters) : sletters_(std::move(sletters)) {}

std::size_t SWord::weight() const noexcept {
    std::size_t total = 0;
    for (const SLetter& s : sletters_) total += s.size();
    return total;
}

std::size_t SWord::count(Letter x) const noexcept {
    std::size_t total = 0;
    for (const SLetter& s : sletters_)
        if (s.contains(x)) ++total;
    return total;
}

Alphabet SWord::letters() const {
    std::vector<Letter> all;
    all.reserve(weight());
    for (const SLetter& s : sletters_)
        all.insert(all.end(), s.letters().begin(), s.letters().end());
    return Alphabet(std::move(all));
}

std::string SWord::str() const { return format_sword(*this); }

std::strong_ordering operator<=>(const SWord& a, const SWord& b) {
    return std::lexicographical_compare_three_way(
        a.sletters_.begin(), a.sletters_.end(), b.sletters_.begin(), b.sletters_.end());
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::size_t skip_ws(std::string_view text, std::size_t i) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    return i;
}

// Scans an identifier at `i` (caller checked ident_start).
std::string_view scan_ident(std::string_view text, std::size_t& i) {
    std::size_t start = i;
    while (i < text.size() && ident_char(text[i])) ++i;
    return text.substr(start, i - start);
}

} // namespace

SWord parse_sword(std::string_view text) {
    std::vector<SLetter> out;
    std::size_t i = 0;
    while (true) {
        i = skip_ws(text, i);
        if (i == text.size()) break;
        char c = text[i];
        if (c == '{') {
            std::size_t open = i++;
            i = skip_ws(text, i);
            if (i < text.size() && text[i] == '}')
                throw ParseError("empty S-letter", open);
            std::vector<Letter> members;
            while (true) {
                i = skip_ws(text, i);
                if (i == text.size()) throw ParseError("unterminated '{'", open);
                if (!ident_start(text[i]))
                    throw ParseError("expected letter name inside '{...}'", i);
                std::size_t at = i;
                Letter l{scan_ident(text, i)};
                if (std::find(members.begin(), members.end(), l) != members.end())
                    throw ParseError("duplicate letter '" + l.name() + "' in S-letter", at);
                members.push_back(l);
                i = skip_ws(text, i);
                if (i == text.size()) throw ParseError("unterminated '{'", open);
                if (text[i] == ',') {
                    ++i;
                    continue;
                }
                if (text[i] == '}') {
                    ++i;
                    break;
                }
                throw ParseError("expected ',' or '}' in S-letter", i);
            }
            out.emplace_back(std::move(members));
        } else if (ident_start(c)) {
            out.push_back(SLetter{Letter{scan_ident(text, i)}});
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
    }
    return SWord(std::move(out));
}

std::string format_sword(const SWord& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += w[i].text();
    }
    return out;
}

ParikhVector parikh(const SWord& w, const Alphabet& alphabet) {
    std::vector<std::uint32_t> counts(alphabet.size(), 0);
    for (const SLetter& s : w)
        for (Letter l : s.letters()) {
            auto idx = alphabet.index_of(l);
            if (!idx)
                throw DomainError("letter '" + l.name() + "' outside alphabet " +
                                  alphabet.str());
            ++counts[*idx];
        }
    return ParikhVector(alphabet, std::move(counts));
}

SWord mirror(const SWord& w) {
    std::vector<SLetter> out(w.sletters().rbegin(), w.sletters().rend());
    return SWord(std::move(out));
}

SWord rename(const SWord& w, const LetterMap& map) {
    std::set<Letter> images;
    for (const auto& [from, to] : map) {
        (void)from;
        if (!images.insert(to).second)
            throw DomainError("renaming is not injective: letter '" + to.name() +
                              "' has two preimages");
    }
    std::vector<SLetter> out;
    out.reserve(w.size());
    for (const SLetter& s : w) {
        std::vector<Letter> members;
        members.reserve(s.size());
        for (Letter l : s.letters()) {
            auto it = map.find(l);
            if (it == map.end())
                throw DomainError("renaming does not cover letter '" + l.name() + "'");
            members.push_back(it->second);
        }
        out.emplace_back(std::move(members));
    }
    return SWord(std::move(out));
}

SLanguage::SLanguage(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

SLanguage::SLanguage(Alphabet alphabet, std::vector<SWord> words)
    : alphabet_(std::move(alphabet)), words_(std::move(words)) {
    for (const SWord& w : words_)
        for (const SLetter& s : w)
            if (!s.within(alphabet_))
                throw DomainError("word '" + w.str() + "' uses letters outside alphabet " +
                                  alphabet_.str());
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

SLanguage SLanguage::infer(std::vector<SWord> words) {
    std::vector<Letter> all;
    for (const SWord& w : words)
        for (const SLetter& s : w)
            all.insert(all.end(), s.letters().begin(), s.letters().end());
    return SLanguage(Alphabet(std::move(all)), std::move(words));
}

bool SLanguage::contains(const SWord& w) const noexcept {
    return std::binary_search(words_.begin(), words_.end(), w);
}

std::optional<ParikhVector> SLanguage::uniform_parikh() const {
    if (words_.empty()) return std::nullopt;
    ParikhVector first = parikh(words_.front(), alphabet_);
    for (std::size_t i = 1; i < words_.size(); ++i)
        if (parikh(words_[i], alphabet_) != first) return std::nullopt;
    return first;
}

std::string SLanguage::str() const {
    std::string out;
    for (const SWord& w : words_) {
        out += w.str();
        out += '\n';
    }
    return out;
}

SLanguage parse_language(std::string_view text) {
    std::vector<SWord> words;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                           : eol - pos);
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        bool blank = line.find_first_not_of(" \t\r") == std::string_view::npos;
        if (!blank) {
            try {
                words.push_back(parse_sword(line));
            } catch (const ParseError& e) {
                throw ParseError("line " + std::to_string(line_no) + ": " + e.what(),
                                 line_no);
            }
        }
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    return SLanguage::infer(std::move(words));
}

} // namespace slang
