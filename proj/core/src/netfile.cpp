#include "slang/netfile.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "slang/algebra.hpp"

namespace slang {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t start = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i > start) out.push_back(s.substr(start, i - start));
    }
    return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what, line);
}

std::uint32_t parse_occurrences(std::string_view token, std::size_t line) {
    if (token == "point") return 1;
    if (token == "interval") return 2;
    std::uint32_t value = 0;
    for (char c : token) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            fail(line, "expected 'point', 'interval' or a count, got '" +
                           std::string(token) + "'");
        value = value * 10 + static_cast<std::uint32_t>(c - '0');
        if (value > 1'000'000) fail(line, "occurrence count out of range");
    }
    if (value == 0) fail(line, "occurrence count must be positive");
    return value;
}

} // namespace

ConstraintNetwork parse_network(std::string_view text) {
    enum class Section { none, items, constraints } section = Section::none;
    std::vector<TemporalItem> items;
    std::map<Letter, std::uint32_t> occurrences;
    std::vector<Constraint> constraints;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view raw =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                           : eol - pos);
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        std::string_view line = trim(raw);
        if (!line.empty()) {
            if (line == "items:") {
                section = Section::items;
            } else if (line == "constraints:") {
                section = Section::constraints;
            } else if (section == Section::items) {
                auto tokens = split_ws(line);
                if (tokens.size() != 2)
                    fail(line_no, "expected 'name point|interval|<count>'");
                if (!is_letter_name(tokens[0]))
                    fail(line_no, "invalid item name '" + std::string(tokens[0]) + "'");
                Letter l{tokens[0]};
                if (occurrences.count(l))
                    fail(line_no, "item '" + l.name() + "' declared twice");
                std::uint32_t occ = parse_occurrences(tokens[1], line_no);
                occurrences.emplace(l, occ);
                items.push_back({l, occ});
            } else if (section == Section::constraints) {
                // Scope letters up to the spec token: either `name(...)` or
                // the `words` keyword introducing ';'-separated S-words.
                auto tokens = split_ws(line);
                std::vector<Letter> scope;
                std::size_t k = 0;
                for (; k < tokens.size(); ++k) {
                    if (tokens[k] == "words" ||
                        tokens[k].find('(') != std::string_view::npos)
                        break;
                    if (!is_letter_name(tokens[k]))
                        fail(line_no, "invalid item name '" + std::string(tokens[k]) + "'");
                    scope.emplace_back(tokens[k]);
                }
                if (k == tokens.size())
                    fail(line_no, "constraint needs an atom list or a 'words' list");
                if (scope.empty()) fail(line_no, "constraint needs scope items");
                for (Letter l : scope)
                    if (!occurrences.count(l))
                        fail(line_no, "unknown item '" + l.name() + "' in scope");

                std::vector<SWord> words;
                if (tokens[k] == "words") {
                    std::size_t at = line.find("words");
                    std::string_view rest = line.substr(at + 5);
                    std::size_t cursor = 0;
                    while (cursor <= rest.size()) {
                        std::size_t semi = rest.find(';', cursor);
                        std::string_view piece =
                            rest.substr(cursor, semi == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : semi - cursor);
                        try {
                            words.push_back(parse_sword(piece));
                        } catch (const ParseError& e) {
                            fail(line_no, e.what());
                        }
                        if (semi == std::string_view::npos) break;
                        cursor = semi + 1;
                    }
                } else {
                    // Re-join the remaining tokens so "allen(s, m)" works.
                    std::string spec;
                    for (std::size_t t = k; t < tokens.size(); ++t)
                        spec += std::string(tokens[t]);
                    auto open = spec.find('(');
                    if (open == std::string::npos || spec.back() != ')')
                        fail(line_no, "malformed atom list '" + spec + "'");
                    if (scope.size() != 2)
                        fail(line_no, "algebra constraints take exactly two items");
                    AlgebraId algebra = AlgebraId::point(); // overwritten below
                    try {
                        algebra = AlgebraId::parse(spec.substr(0, open));
                    } catch (const DomainError& e) {
                        fail(line_no, e.what());
                    }
                    if (occurrences.at(scope[0]) != algebra.first_occurrences() ||
                        occurrences.at(scope[1]) != algebra.second_occurrences())
                        fail(line_no, "items '" + scope[0].name() + "','" +
                                          scope[1].name() + "' do not fit the " +
                                          algebra.name() + " profile");
                    std::string body = spec.substr(open + 1, spec.size() - open - 2);
                    std::size_t cursor = 0;
                    while (cursor <= body.size()) {
                        std::size_t comma = body.find(',', cursor);
                        std::string atom = body.substr(
                            cursor, comma == std::string::npos ? std::string::npos
                                                               : comma - cursor);
                        if (atom.empty()) fail(line_no, "empty atom name");
                        try {
                            words.push_back(
                                atom_to_sword(algebra, atom, scope[0], scope[1]));
                        } catch (const DomainError& e) {
                            fail(line_no, e.what());
                        }
                        if (comma == std::string::npos) break;
                        cursor = comma + 1;
                    }
                }
                Constraint c;
                c.scope = std::move(scope);
                try {
                    c.language = SLanguage(Alphabet{c.scope}, std::move(words));
                } catch (const DomainError& e) {
                    fail(line_no, e.what());
                }
                constraints.push_back(std::move(c));
            } else {
                fail(line_no, "content before the 'items:' section");
            }
        }
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    try {
        return ConstraintNetwork(std::move(items), std::move(constraints));
    } catch (const DomainError& e) {
        throw ParseError(std::string("network validation: ") + e.what(), 0);
    }
}

ConstraintNetwork load_network(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read network file '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_network(buffer.str());
}

std::string render_network(const ConstraintNetwork& net) {
    std::string out = "items:\n";
    for (const TemporalItem& item : net.items()) {
        out += item.name();
        out += ' ';
        out += std::to_string(item.occurrences);
        out += '\n';
    }
    out += "constraints:\n";
    for (const Constraint& c : net.constraints()) {
        for (Letter l : c.scope) {
            out += l.name();
            out += ' ';
        }
        out += "words ";
        const auto& words = c.language.words();
        for (std::size_t i = 0; i < words.size(); ++i) {
            if (i) out += " ; ";
            out += words[i].str();
        }
        out += '\n';
    }
    return out;
}

bool equivalent_networks(const ConstraintNetwork& a, const ConstraintNetwork& b) {
    if (a.items().size() != b.items().size() ||
        a.constraints().size() != b.constraints().size())
        return false;
    for (std::size_t i = 0; i < a.items().size(); ++i)
        if (a.items()[i].letter != b.items()[i].letter ||
            a.items()[i].occurrences != b.items()[i].occurrences)
            return false;
    for (std::size_t i = 0; i < a.constraints().size(); ++i) {
        const Constraint& ca = a.constraints()[i];
        const Constraint& cb = b.constraints()[i];
        if (ca.scope != cb.scope || ca.language != cb.language) return false;
    }
    return true;
}

} // namespace slang
