#include "slang/algebra.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "slang/error.hpp"
#include "slang/ops.hpp"

namespace slang {

namespace {

// An atom's shape over its two item slots: 1 = first letter alone,
// 2 = second alone, 3 = both fused. Ordering follows the structural
// S-letter order a < {a,b} < b, i.e. 1 < 3 < 2.
using Pattern = std::vector<std::uint8_t>;

int code_rank(std::uint8_t c) { return c == 1 ? 0 : (c == 3 ? 1 : 2); }

bool pattern_less(const Pattern& a, const Pattern& b) {
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        int ra = code_rank(a[i]);
        int rb = code_rank(b[i]);
        if (ra != rb) return ra < rb;
    }
    return a.size() < b.size();
}

struct AtomInfo {
    std::string name;
    Pattern pattern;
};

struct AlgebraData {
    std::vector<AtomInfo> atoms; // canonical (pattern) order
    std::vector<std::string> names;
    std::map<Pattern, std::uint16_t> by_pattern;
    std::map<std::string, std::uint16_t, std::less<>> by_name;
};

std::vector<AtomInfo> named_atoms(AlgebraKind kind) {
    switch (kind) {
    case AlgebraKind::point:
        return {{"<", {1, 2}}, {"=", {3}}, {">", {2, 1}}};
    case AlgebraKind::point_interval:
        return {{"before", {1, 2, 2}},
                {"starts", {3, 2}},
                {"during", {2, 1, 2}},
                {"finishes", {2, 3}},
                {"after", {2, 2, 1}}};
    case AlgebraKind::interval_point:
        return {{"before~", {2, 1, 1}},
                {"starts~", {3, 1}},
                {"during~", {1, 2, 1}},
                {"finishes~", {1, 3}},
                {"after~", {1, 1, 2}}};
    case AlgebraKind::allen:
        return {{"=", {3, 3}},      {"<", {1, 1, 2, 2}}, {">", {2, 2, 1, 1}},
                {"d", {2, 1, 1, 2}}, {"d~", {1, 2, 2, 1}}, {"o", {1, 2, 1, 2}},
                {"o~", {2, 1, 2, 1}}, {"m", {1, 3, 2}},    {"m~", {2, 3, 1}},
                {"s", {3, 1, 2}},    {"s~", {3, 2, 1}},    {"f", {2, 1, 3}},
                {"f~", {1, 2, 3}}};
    case AlgebraKind::chain:
        break;
    }
    return {};
}

void chain_patterns(std::uint32_t p, std::uint32_t q, Pattern& current,
                    std::vector<Pattern>& out) {
    if (p == 0 && q == 0) {
        out.push_back(current);
        return;
    }
    if (p > 0) {
        current.push_back(1);
        chain_patterns(p - 1, q, current, out);
        current.pop_back();
    }
    if (p > 0 && q > 0) {
        current.push_back(3);
        chain_patterns(p - 1, q - 1, current, out);
        current.pop_back();
    }
    if (q > 0) {
        current.push_back(2);
        chain_patterns(p, q - 1, current, out);
        current.pop_back();
    }
}

std::string pattern_name(const Pattern& pattern) {
    // Chain atoms are named by their S-word shape over placeholder letters.
    std::string out;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        if (i) out += ' ';
        out += pattern[i] == 1 ? "a" : (pattern[i] == 2 ? "b" : "{a,b}");
    }
    return out;
}

const AlgebraData& algebra_data(const AlgebraId& id) {
    using Key = std::tuple<AlgebraKind, std::uint32_t, std::uint32_t>;
    static std::map<Key, AlgebraData> registry;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    Key key{id.kind(), id.first_occurrences(), id.second_occurrences()};
    auto it = registry.find(key);
    if (it != registry.end()) return it->second;

    AlgebraData data;
    std::vector<AtomInfo> atoms;
    if (id.kind() == AlgebraKind::chain) {
        std::vector<Pattern> patterns;
        Pattern current;
        chain_patterns(id.first_occurrences(), id.second_occurrences(), current, patterns);
        for (auto& p : patterns) atoms.push_back({pattern_name(p), std::move(p)});
    } else {
        atoms = named_atoms(id.kind());
    }
    std::sort(atoms.begin(), atoms.end(),
              [](const AtomInfo& a, const AtomInfo& b) { return pattern_less(a.pattern, b.pattern); });
    for (std::uint16_t i = 0; i < atoms.size(); ++i) {
        data.by_pattern.emplace(atoms[i].pattern, i);
        data.by_name.emplace(atoms[i].name, i);
        data.names.push_back(atoms[i].name);
    }
    data.atoms = std::move(atoms);
    return registry.emplace(key, std::move(data)).first->second;
}

SWord pattern_to_word(const Pattern& pattern, Letter first, Letter second) {
    std::vector<SLetter> out;
    out.reserve(pattern.size());
    for (std::uint8_t c : pattern) {
        switch (c) {
        case 1: out.push_back(SLetter{first}); break;
        case 2: out.push_back(SLetter{second}); break;
        default: out.push_back(SLetter{first, second}); break;
        }
    }
    return SWord(std::move(out));
}

Pattern word_to_pattern(const SWord& w, Letter first, Letter second) {
    Pattern out;
    out.reserve(w.size());
    for (const SLetter& s : w) {
        bool has_first = s.contains(first);
        bool has_second = s.contains(second);
        if (s.size() != std::size_t(has_first) + std::size_t(has_second))
            throw DomainError("word '" + w.str() + "' uses letters other than '" +
                              first.name() + "' and '" + second.name() + "'");
        out.push_back(has_first ? (has_second ? 3 : 1) : 2);
    }
    return out;
}

} // namespace

AlgebraId AlgebraId::point() { return {AlgebraKind::point, 1, 1}; }
AlgebraId AlgebraId::point_interval() { return {AlgebraKind::point_interval, 1, 2}; }
AlgebraId AlgebraId::interval_point() { return {AlgebraKind::interval_point, 2, 1}; }
AlgebraId AlgebraId::allen() { return {AlgebraKind::allen, 2, 2}; }

AlgebraId AlgebraId::chain(std::uint32_t p, std::uint32_t q) {
    if (p < 1 || q < 1) throw DomainError("chain algebra indices must be at least 1");
    return {AlgebraKind::chain, p, q};
}

AlgebraId AlgebraId::for_profile(std::uint32_t p, std::uint32_t q) {
    if (p == 1 && q == 1) return point();
    if (p == 1 && q == 2) return point_interval();
    if (p == 2 && q == 1) return interval_point();
    if (p == 2 && q == 2) return allen();
    return chain(p, q);
}

AlgebraId AlgebraId::parse(std::string_view name) {
    if (name == "point") return point();
    if (name == "point_interval") return point_interval();
    if (name == "interval_point") return interval_point();
    if (name == "allen") return allen();
    if (name.starts_with("chain(") && name.ends_with(")")) {
        std::string_view args = name.substr(6, name.size() - 7);
        auto comma = args.find(',');
        if (comma != std::string_view::npos) {
            try {
                std::uint32_t p = static_cast<std::uint32_t>(
                    std::stoul(std::string(args.substr(0, comma))));
                std::uint32_t q = static_cast<std::uint32_t>(
                    std::stoul(std::string(args.substr(comma + 1))));
                return chain(p, q);
            } catch (const std::exception&) {
                // fall through to the error below
            }
        }
    }
    throw DomainError("unknown algebra '" + std::string(name) + "'");
}

const std::vector<std::string>& AlgebraId::atoms() const {
    return algebra_data(*this).names;
}

bool AlgebraId::has_atom(std::string_view name) const {
    const auto& data = algebra_data(*this);
    return data.by_name.find(name) != data.by_name.end();
}

std::size_t AlgebraId::atom_index(std::string_view name) const {
    const auto& data = algebra_data(*this);
    auto it = data.by_name.find(name);
    if (it == data.by_name.end())
        throw DomainError("no atom '" + std::string(name) + "' in the " + this->name() +
                          " algebra");
    return it->second;
}

AlgebraId AlgebraId::converse_algebra() const {
    switch (kind_) {
    case AlgebraKind::point: return point();
    case AlgebraKind::allen: return allen();
    case AlgebraKind::point_interval: return interval_point();
    case AlgebraKind::interval_point: return point_interval();
    case AlgebraKind::chain: return chain(q_, p_);
    }
    throw DomainError("unreachable algebra kind");
}

std::string AlgebraId::name() const {
    switch (kind_) {
    case AlgebraKind::point: return "point";
    case AlgebraKind::point_interval: return "point_interval";
    case AlgebraKind::interval_point: return "interval_point";
    case AlgebraKind::allen: return "allen";
    case AlgebraKind::chain:
        return "chain(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
    }
    return "?";
}

SWord atom_to_sword(const AlgebraId& algebra, std::string_view atom, Letter first,
                    Letter second) {
    if (first == second)
        throw DomainError("the two item letters must be distinct");
    const auto& data = algebra_data(algebra);
    auto it = data.by_name.find(atom);
    if (it == data.by_name.end())
        throw DomainError("no atom '" + std::string(atom) + "' in the " + algebra.name() +
                          " algebra");
    return pattern_to_word(data.atoms[it->second].pattern, first, second);
}

std::string sword_to_atom(const AlgebraId& algebra, const SWord& w, Letter first,
                          Letter second) {
    if (first == second)
        throw DomainError("the two item letters must be distinct");
    if (w.count(first) != algebra.first_occurrences() ||
        w.count(second) != algebra.second_occurrences())
        throw DomainError("word '" + w.str() + "' does not carry the " + algebra.name() +
                          " profile (" + std::to_string(algebra.first_occurrences()) +
                          "," + std::to_string(algebra.second_occurrences()) + ")");
    const auto& data = algebra_data(algebra);
    auto it = data.by_pattern.find(word_to_pattern(w, first, second));
    if (it == data.by_pattern.end())
        throw DomainError("word '" + w.str() + "' is not an atom of " + algebra.name());
    return data.atoms[it->second].name;
}

std::string sword_to_atom(const AlgebraId& algebra, const SWord& w) {
    Alphabet letters = w.letters();
    if (letters.size() != 2)
        throw DomainError("word '" + w.str() + "' must use exactly two letters");
    Letter x = letters.letters()[0];
    Letter y = letters.letters()[1];
    if (algebra.first_occurrences() != algebra.second_occurrences() &&
        w.count(x) != algebra.first_occurrences())
        std::swap(x, y);
    return sword_to_atom(algebra, w, x, y);
}

RelationSet::RelationSet(AlgebraId algebra, std::vector<std::uint16_t> indices)
    : algebra_(algebra), indices_(std::move(indices)) {
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
}

RelationSet::RelationSet(AlgebraId algebra, const std::vector<std::string>& atoms)
    : algebra_(algebra) {
    indices_.reserve(atoms.size());
    for (const auto& a : atoms)
        indices_.push_back(static_cast<std::uint16_t>(algebra_.atom_index(a)));
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
}

RelationSet RelationSet::none(AlgebraId algebra) {
    return RelationSet(algebra, std::vector<std::uint16_t>{});
}

RelationSet RelationSet::all(AlgebraId algebra) {
    std::vector<std::uint16_t> all(algebra.atoms().size());
    for (std::uint16_t i = 0; i < all.size(); ++i) all[i] = i;
    return RelationSet(algebra, std::move(all));
}

std::vector<std::string> RelationSet::atoms() const {
    std::vector<std::string> out;
    out.reserve(indices_.size());
    for (auto i : indices_) out.push_back(algebra_.atoms()[i]);
    return out;
}

bool RelationSet::full() const noexcept {
    return indices_.size() == algebra_.atoms().size();
}

bool RelationSet::contains(std::string_view atom) const {
    if (!algebra_.has_atom(atom)) return false;
    auto idx = static_cast<std::uint16_t>(algebra_.atom_index(atom));
    return std::binary_search(indices_.begin(), indices_.end(), idx);
}

std::string RelationSet::str() const {
    std::string out;
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (i) out += ' ';
        out += algebra_.atoms()[indices_[i]];
    }
    return out;
}

RelationSet converse(const RelationSet& rs) {
    const auto& data = algebra_data(rs.algebra());
    AlgebraId conv = rs.algebra().converse_algebra();
    const auto& conv_data = algebra_data(conv);
    std::vector<std::uint16_t> out;
    out.reserve(rs.size());
    for (auto i : rs.atom_indices()) {
        Pattern swapped = data.atoms[i].pattern;
        for (auto& c : swapped)
            c = c == 1 ? 2 : (c == 2 ? 1 : 3);
        out.push_back(conv_data.by_pattern.at(swapped));
    }
    return RelationSet(conv, std::move(out));
}

RelationSet compose(const RelationSet& r1, const RelationSet& r2) {
    if (r1.algebra().second_occurrences() != r2.algebra().first_occurrences())
        throw DomainError("cannot compose " + r1.algebra().name() + " with " +
                          r2.algebra().name() + ": the middle item profiles differ");
    const Letter a{"a"}, b{"b"}, c{"c"};
    const std::uint32_t pa = r1.algebra().first_occurrences();
    const std::uint32_t pb = r1.algebra().second_occurrences();
    const std::uint32_t pc = r2.algebra().second_occurrences();
    const Alphabet abc{a, b, c};
    const ParikhVector bound(abc, {pa, pb, pc});
    const Alphabet ac{a, c};
    AlgebraId result_algebra = AlgebraId::for_profile(pa, pc);
    const auto& result_data = algebra_data(result_algebra);

    const auto& d1 = algebra_data(r1.algebra());
    const auto& d2 = algebra_data(r2.algebra());
    std::vector<std::uint16_t> out;
    for (auto i : r1.atom_indices()) {
        SLanguage left(Alphabet{a, b}, {pattern_to_word(d1.atoms[i].pattern, a, b)});
        for (auto j : r2.atom_indices()) {
            SLanguage right(Alphabet{b, c}, {pattern_to_word(d2.atoms[j].pattern, b, c)});
            SLanguage joined = join(left, right, bound);
            for (const SWord& w : joined)
                out.push_back(result_data.by_pattern.at(
                    word_to_pattern(project(w, ac), a, c)));
        }
    }
    return RelationSet(result_algebra, std::move(out));
}

TransitivityTable::TransitivityTable(AlgebraId left, AlgebraId right)
    : left_(left), right_(right) {
    if (left_.second_occurrences() != right_.first_occurrences())
        throw DomainError("tables need composable algebras; " + left_.name() + " and " +
                          right_.name() + " are not");
    const auto& rows = left_.atoms();
    const auto& cols = right_.atoms();
    cells_.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<RelationSet> row;
        row.reserve(cols.size());
        for (const auto& col : cols)
            row.push_back(compose(RelationSet(left_, {r}), RelationSet(right_, {col})));
        cells_.push_back(std::move(row));
    }
}

const RelationSet& TransitivityTable::entry(std::string_view row_atom,
                                            std::string_view col_atom) const {
    return cells_[left_.atom_index(row_atom)][right_.atom_index(col_atom)];
}

const RelationSet& TransitivityTable::entry(std::size_t row, std::size_t col) const {
    return cells_.at(row).at(col);
}

namespace {

std::string cell_text(const RelationSet& rs) {
    if (rs.empty()) return "0";
    if (rs.full()) return "T";
    if (rs.size() == 1) return rs.str();
    std::string out = "{";
    const auto atoms = rs.atoms();
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (i) out += ',';
        out += atoms[i];
    }
    out += '}';
    return out;
}

} // namespace

std::string TransitivityTable::render_text() const {
    const auto& rows = left_.atoms();
    const auto& cols = right_.atoms();
    std::vector<std::vector<std::string>> text(rows.size());
    std::vector<std::size_t> width(cols.size() + 1, 0);
    for (const auto& r : rows) width[0] = std::max(width[0], r.size());
    for (std::size_t j = 0; j < cols.size(); ++j) width[j + 1] = cols[j].size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        text[i].reserve(cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            text[i].push_back(cell_text(cells_[i][j]));
            width[j + 1] = std::max(width[j + 1], text[i][j].size());
        }
    }
    auto pad = [](const std::string& s, std::size_t w) {
        return s + std::string(w - s.size(), ' ');
    };
    std::string out = pad("", width[0]);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        out += " | ";
        out += pad(cols[j], width[j + 1]);
    }
    out += '\n';
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out += pad(rows[i], width[0]);
        for (std::size_t j = 0; j < cols.size(); ++j) {
            out += " | ";
            out += pad(text[i][j], width[j + 1]);
        }
        out += '\n';
    }
    return out;
}

std::string TransitivityTable::render_rows() const {
    const auto& rows = left_.atoms();
    const auto& cols = right_.atoms();
    std::string out;
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            out += rows[i];
            out += ' ';
            out += cols[j];
            out += " : ";
            out += cells_[i][j].str();
            out += '\n';
        }
    return out;
}

namespace {

std::mutex table_mutex;

} // namespace

const TransitivityTable& transitivity_table(const AlgebraId& left, const AlgebraId& right) {
    using Key = std::tuple<AlgebraKind, std::uint32_t, std::uint32_t, AlgebraKind,
                           std::uint32_t, std::uint32_t>;
    static std::map<Key, TransitivityTable> cache;
    Key key{left.kind(), left.first_occurrences(), left.second_occurrences(),
            right.kind(), right.first_occurrences(), right.second_occurrences()};
    std::lock_guard<std::mutex> lock(table_mutex);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, TransitivityTable(left, right)).first;
    return it->second;
}

const TransitivityTable& transitivity_table(const AlgebraId& algebra) {
    if (algebra.first_occurrences() != algebra.second_occurrences())
        throw DomainError("the " + algebra.name() +
                          " algebra has no homogeneous table; compose it with " +
                          algebra.converse_algebra().name() + " instead");
    return transitivity_table(algebra, algebra);
}

} // namespace slang
