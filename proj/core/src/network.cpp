#include "slang/network.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace slang {

ConstraintNetwork::ConstraintNetwork(std::vector<TemporalItem> items,
                                     std::vector<Constraint> constraints)
    : items_(std::move(items)), constraints_(std::move(constraints)) {
    std::vector<Letter> letters;
    letters.reserve(items_.size());
    std::vector<std::uint32_t> counts;
    for (const TemporalItem& item : items_) {
        if (item.occurrences < 1)
            throw DomainError("item '" + item.name() + "' needs at least one occurrence");
        letters.push_back(item.letter);
    }
    {
        std::vector<Letter> dup = letters;
        std::sort(dup.begin(), dup.end());
        if (std::adjacent_find(dup.begin(), dup.end()) != dup.end())
            throw DomainError("item letters must be unique within a network");
    }
    alphabet_ = Alphabet(letters);
    counts.resize(alphabet_.size());
    for (const TemporalItem& item : items_)
        counts[*alphabet_.index_of(item.letter)] = item.occurrences;
    profile_ = ParikhVector(alphabet_, std::move(counts));

    std::size_t n = 0;
    for (Constraint& c : constraints_) {
        ++n;
        if (c.label.empty()) c.label = "L" + std::to_string(n);
        if (c.scope.empty())
            throw DomainError("constraint " + c.label + " has an empty scope");
        std::set<Letter> seen;
        for (Letter l : c.scope) {
            if (!alphabet_.contains(l))
                throw DomainError("constraint " + c.label + " scopes unknown item '" +
                                  l.name() + "'");
            if (!seen.insert(l).second)
                throw DomainError("constraint " + c.label + " repeats item '" +
                                  l.name() + "'");
        }
        Alphabet scope_alpha{c.scope};
        if (c.language.alphabet() != scope_alpha)
            c.language = SLanguage(scope_alpha,
                                   {c.language.words().begin(), c.language.words().end()});
        if (c.language.empty())
            throw DomainError("constraint " + c.label + " has an empty language");
        ParikhVector expected = profile_.restricted_to(scope_alpha);
        auto uniform = c.language.uniform_parikh();
        if (!uniform || *uniform != expected)
            throw DomainError("constraint " + c.label +
                              " contains words off the items' profile " + expected.str());
    }
}

namespace {

struct FoldEntry {
    const SLanguage* language;
    Alphabet alphabet;
    std::size_t declaration;
    std::string label;
};

// Trivial one-word languages x^p for items no constraint covers.
std::vector<SLanguage> trivial_languages(const ConstraintNetwork& net) {
    Alphabet covered;
    for (const Constraint& c : net.constraints())
        covered = covered.unite(Alphabet{c.scope});
    std::vector<SLanguage> out;
    for (const TemporalItem& item : net.items()) {
        if (covered.contains(item.letter)) continue;
        std::vector<SLetter> run(item.occurrences, SLetter{item.letter});
        out.emplace_back(Alphabet{item.letter}, std::vector<SWord>{SWord(std::move(run))});
    }
    return out;
}

std::vector<FoldEntry> make_entries(const ConstraintNetwork& net,
                                    const std::vector<SLanguage>& trivials) {
    std::vector<FoldEntry> entries;
    std::size_t decl = 0;
    for (const Constraint& c : net.constraints())
        entries.push_back({&c.language, c.language.alphabet(), decl++, c.label});
    for (const SLanguage& l : trivials)
        entries.push_back({&l, l.alphabet(), decl++,
                           "item " + l.alphabet().letters().front().name()});
    return entries;
}

// Anchor on shared letters, smallest language first.
std::vector<std::size_t> heuristic_order(const std::vector<FoldEntry>& entries) {
    std::vector<std::size_t> order;
    std::vector<bool> used(entries.size(), false);
    Alphabet acc;
    for (std::size_t round = 0; round < entries.size(); ++round) {
        std::size_t best = entries.size();
        std::size_t best_shared = 0;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (used[i]) continue;
            std::size_t shared = acc.intersect(entries[i].alphabet).size();
            if (best == entries.size()) {
                best = i;
                best_shared = shared;
                continue;
            }
            const auto& e = entries[i];
            const auto& b = entries[best];
            if (shared != best_shared) {
                if (shared > best_shared) {
                    best = i;
                    best_shared = shared;
                }
                continue;
            }
            if (e.language->size() != b.language->size()) {
                if (e.language->size() < b.language->size()) best = i;
                continue;
            }
            if (e.declaration < b.declaration) best = i;
        }
        used[best] = true;
        order.push_back(best);
        acc = acc.unite(entries[best].alphabet);
    }
    return order;
}

SLanguage fold_join(const std::vector<FoldEntry>& entries,
                    const std::vector<std::size_t>& order, const ParikhVector& profile,
                    std::size_t cap, std::vector<BigInt>* trace,
                    const Alphabet& full_alphabet) {
    SLanguage acc;
    bool first = true;
    for (std::size_t idx : order) {
        const FoldEntry& e = entries[idx];
        if (first) {
            acc = *e.language;
            first = false;
        } else {
            try {
                acc = join(acc, *e.language, profile, cap);
            } catch (const CapExceeded& ex) {
                throw CapExceeded("joining " + e.label + ": " + ex.what());
            }
        }
        if (trace) {
            // Cardinality of the accumulated result integrated to the full
            // alphabet, grouped by word length: a length-p word admits
            // D(p,r) placements of each length-r word over the missing
            // letters.
            Alphabet missing = full_alphabet.subtract(acc.alphabet());
            if (acc.empty()) {
                trace->push_back(0);
            } else if (missing.empty()) {
                trace->push_back(BigInt(acc.size()));
            } else {
                std::vector<std::uint32_t> parts;
                parts.reserve(missing.size());
                for (Letter l : missing) parts.push_back(profile.count(l));
                DelannoyIndex rest(std::move(parts));
                std::map<std::size_t, std::size_t> by_length;
                for (const SWord& w : acc) ++by_length[w.size()];
                const std::uint64_t hi = rest.total();
                std::vector<BigInt> rest_lengths(hi + 1);
                for (std::uint64_t r = 0; r <= hi; ++r)
                    rest_lengths[r] = delannoy_count_of_length(rest, r);
                BigInt total = 0;
                for (auto [len, many] : by_length) {
                    BigInt factor = 0;
                    for (std::uint64_t r = 0; r <= hi; ++r) {
                        if (rest_lengths[r] == 0) continue;
                        factor += rest_lengths[r] *
                                  delannoy_number(static_cast<std::uint32_t>(len),
                                                  static_cast<std::uint32_t>(r));
                    }
                    total += factor * BigInt(many);
                }
                trace->push_back(total);
            }
        }
    }
    return acc;
}

} // namespace

SLanguage solve(const ConstraintNetwork& net, const SolveOptions& options) {
    std::vector<SLanguage> trivials = trivial_languages(net);
    std::vector<FoldEntry> entries = make_entries(net, trivials);
    if (entries.empty())
        return SLanguage(net.alphabet(), {SWord{}});
    std::vector<std::size_t> order;
    if (options.order == SolveOptions::Order::declaration) {
        order.resize(entries.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    } else {
        order = heuristic_order(entries);
    }
    return fold_join(entries, order, net.profile(), options.cap, nullptr, net.alphabet());
}

std::vector<BigInt> intermediate_cardinalities(const ConstraintNetwork& net,
                                               std::span<const std::size_t> order,
                                               const SolveOptions& options) {
    const std::size_t m = net.constraints().size();
    if (order.size() != m)
        throw DomainError("join order must list every constraint exactly once");
    std::vector<bool> seen(m, false);
    for (std::size_t idx : order) {
        if (idx >= m || seen[idx])
            throw DomainError("join order must be a permutation of the constraint indices");
        seen[idx] = true;
    }
    std::vector<SLanguage> trivials; // not folded: counting integrates them
    std::vector<FoldEntry> entries = make_entries(net, trivials);
    std::vector<BigInt> trace;
    fold_join(entries, {order.begin(), order.end()}, net.profile(), options.cap, &trace,
              net.alphabet());
    return trace;
}

bool satisfiable(const ConstraintNetwork& net, const SolveOptions& options) {
    std::vector<SLanguage> trivials = trivial_languages(net);
    std::vector<FoldEntry> entries = make_entries(net, trivials);
    if (entries.empty()) return true;
    std::vector<std::size_t> order = options.order == SolveOptions::Order::declaration
                                         ? [&] {
                                               std::vector<std::size_t> o(entries.size());
                                               for (std::size_t i = 0; i < o.size(); ++i)
                                                   o[i] = i;
                                               return o;
                                           }()
                                         : heuristic_order(entries);
    // Common alphabets along the fold, fixed up front.
    std::vector<Alphabet> commons(order.size());
    Alphabet acc = entries[order[0]].alphabet;
    for (std::size_t k = 1; k < order.size(); ++k) {
        commons[k] = acc.intersect(entries[order[k]].alphabet);
        acc = acc.unite(entries[order[k]].alphabet);
    }

    std::size_t budget = options.cap;
    // Depth-first witness search: one candidate word at a time.
    auto dfs = [&](auto&& self, const SWord& word, std::size_t k) -> bool {
        if (k == order.size()) return true;
        for (const SWord& next : *entries[order[k]].language) {
            std::vector<SWord> joined = join_words(word, next, commons[k], options.cap);
            if (joined.size() > budget)
                throw CapExceeded("witness search exceeded the cap of " +
                                  std::to_string(options.cap));
            budget -= joined.size();
            for (const SWord& h : joined)
                if (self(self, h, k + 1)) return true;
        }
        return false;
    };
    for (const SWord& w : *entries[order[0]].language)
        if (dfs(dfs, w, 1)) return true;
    return false;
}

std::string OccurrenceId::str() const {
    return letter.name() + "#" + std::to_string(index);
}

bool PrecedenceGraph::has_edge(const OccurrenceId& from, const OccurrenceId& to) const {
    for (auto [u, v] : edges)
        if (nodes[u] == from && nodes[v] == to) return true;
    return false;
}

std::string PrecedenceGraph::to_text() const {
    std::string out;
    for (auto [u, v] : edges) {
        out += nodes[u].str();
        out += " -> ";
        out += nodes[v].str();
        out += '\n';
    }
    for (auto [u, v] : fused) {
        out += nodes[u].str();
        out += " = ";
        out += nodes[v].str();
        out += '\n';
    }
    return out;
}

std::string PrecedenceGraph::to_dot() const {
    std::string out = "digraph precedence {\n  rankdir=LR;\n";
    for (const OccurrenceId& n : nodes) {
        out += "  \"";
        out += n.str();
        out += "\";\n";
    }
    for (auto [u, v] : edges) {
        out += "  \"";
        out += nodes[u].str();
        out += "\" -> \"";
        out += nodes[v].str();
        out += "\";\n";
    }
    for (auto [u, v] : fused) {
        out += "  \"";
        out += nodes[u].str();
        out += "\" -> \"";
        out += nodes[v].str();
        out += "\" [dir=none, style=dashed];\n";
    }
    out += "}\n";
    return out;
}

PrecedenceGraph hasse_graph(const SLanguage& language) {
    if (language.empty())
        throw DomainError("cannot build a precedence graph from an empty language");
    auto profile = language.uniform_parikh();
    if (!profile)
        throw DomainError("precedence graphs need words sharing one Parikh vector");

    PrecedenceGraph g;
    std::map<std::pair<Letter, std::uint32_t>, std::uint32_t> node_ids;
    for (std::size_t i = 0; i < profile->alphabet().size(); ++i) {
        Letter l = profile->alphabet().letters()[i];
        for (std::uint32_t k = 1; k <= profile->counts()[i]; ++k) {
            node_ids.emplace(std::make_pair(l, k),
                             static_cast<std::uint32_t>(g.nodes.size()));
            g.nodes.push_back({l, k});
        }
    }

    const std::size_t n = g.nodes.size();
    std::vector<char> before(n * n, 1); // strictly precedes in every word
    std::vector<char> equal(n * n, 1);  // simultaneous in every word
    std::vector<std::uint32_t> position(n);
    std::map<Letter, std::uint32_t> seen;
    for (const SWord& w : language) {
        seen.clear();
        for (std::uint32_t pos = 0; pos < w.size(); ++pos)
            for (Letter l : w[pos].letters()) {
                std::uint32_t k = ++seen[l];
                position[node_ids.at({l, k})] = pos;
            }
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v) {
                if (position[u] >= position[v]) before[u * n + v] = 0;
                if (position[u] != position[v]) equal[u * n + v] = 0;
            }
    }

    // `before` is transitive, so an edge is redundant exactly when a
    // two-hop path exists.
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
            if (!before[u * n + v]) continue;
            bool redundant = false;
            for (std::size_t w = 0; w < n && !redundant; ++w)
                if (before[u * n + w] && before[w * n + v]) redundant = true;
            if (!redundant)
                g.edges.emplace_back(static_cast<std::uint32_t>(u),
                                     static_cast<std::uint32_t>(v));
        }
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (equal[u * n + v])
                g.fused.emplace_back(static_cast<std::uint32_t>(u),
                                     static_cast<std::uint32_t>(v));
    return g;
}

} // namespace slang
