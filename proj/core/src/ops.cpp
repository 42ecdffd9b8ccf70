#include "slang/ops.hpp"

#include <algorithm>
#include <map>

#include "slang/error.hpp"

namespace slang {

SWord concat(const SWord& u, const SWord& v) {
    std::vector<SLetter> out;
    out.reserve(u.size() + v.size());
    out.insert(out.end(), u.begin(), u.end());
    out.insert(out.end(), v.begin(), v.end());
    return SWord(std::move(out));
}

namespace {

void word_shuffle_rec(const SWord& u, const SWord& v, std::size_t i, std::size_t j,
                      std::vector<SLetter>& current, std::vector<SWord>& out) {
    if (i == u.size() && j == v.size()) {
        out.emplace_back(current);
        return;
    }
    if (i < u.size()) {
        current.push_back(u[i]);
        word_shuffle_rec(u, v, i + 1, j, current, out);
        current.pop_back();
    }
    if (j < v.size()) {
        current.push_back(v[j]);
        word_shuffle_rec(u, v, i, j + 1, current, out);
        current.pop_back();
    }
}

// Interleavings of two S-letter runs with optional pairwise fusion. The
// operands' letter sets must be disjoint (callers guarantee it).
void s_shuffle_rec(std::span<const SLetter> f, std::span<const SLetter> g,
                   std::size_t i, std::size_t j, std::vector<SLetter>& current,
                   std::vector<std::vector<SLetter>>& out) {
    if (i == f.size() && j == g.size()) {
        out.push_back(current);
        return;
    }
    if (i < f.size()) {
        current.push_back(f[i]);
        s_shuffle_rec(f, g, i + 1, j, current, out);
        current.pop_back();
    }
    if (j < g.size()) {
        current.push_back(g[j]);
        s_shuffle_rec(f, g, i, j + 1, current, out);
        current.pop_back();
    }
    if (i < f.size() && j < g.size()) {
        current.push_back(SLetter::merged(f[i], g[j]));
        s_shuffle_rec(f, g, i + 1, j + 1, current, out);
        current.pop_back();
    }
}

std::vector<std::vector<SLetter>> s_shuffle_runs(std::span<const SLetter> f,
                                                 std::span<const SLetter> g) {
    std::vector<std::vector<SLetter>> out;
    std::vector<SLetter> current;
    current.reserve(f.size() + g.size());
    s_shuffle_rec(f, g, 0, 0, current, out);
    return out;
}

} // namespace

SLanguage word_shuffle(const SWord& u, const SWord& v) {
    std::vector<SWord> out;
    std::vector<SLetter> current;
    current.reserve(u.size() + v.size());
    word_shuffle_rec(u, v, 0, 0, current, out);
    return SLanguage(u.letters().unite(v.letters()), std::move(out));
}

SLanguage s_shuffle(const SWord& f, const SWord& g) {
    Alphabet fa = f.letters();
    Alphabet ga = g.letters();
    if (!fa.disjoint_with(ga))
        throw DomainError("S-shuffle operands must use disjoint letters; both use " +
                          fa.intersect(ga).str());
    std::vector<SWord> out;
    for (auto& ls : s_shuffle_runs(f.sletters(), g.sletters()))
        out.emplace_back(std::move(ls));
    return SLanguage(fa.unite(ga), std::move(out));
}

SLanguage s_shuffle(const SLanguage& l1, const SLanguage& l2) {
    if (!l1.alphabet().disjoint_with(l2.alphabet()))
        throw DomainError("S-shuffle operands must be over disjoint alphabets");
    std::vector<SWord> out;
    for (const SWord& f : l1)
        for (const SWord& g : l2)
            for (auto& ls : s_shuffle_runs(f.sletters(), g.sletters()))
                out.emplace_back(std::move(ls));
    return SLanguage(l1.alphabet().unite(l2.alphabet()), std::move(out));
}

SLanguage s_shuffle_many(std::span<const SWord> words) {
    SLanguage acc = SLanguage::infer({SWord{}});
    for (const SWord& w : words)
        acc = s_shuffle(acc, SLanguage::infer({w}));
    return acc;
}

SWord project(const SWord& f, const Alphabet& y) {
    std::vector<SLetter> out;
    out.reserve(f.size());
    for (const SLetter& s : f)
        if (auto r = s.restricted(y)) out.push_back(*r);
    return SWord(std::move(out));
}

SLanguage project_language(const SLanguage& l, const Alphabet& y) {
    std::vector<SWord> out;
    out.reserve(l.size());
    for (const SWord& w : l) out.push_back(project(w, y));
    return SLanguage(l.alphabet().intersect(y), std::move(out));
}

void IntegrationSpec::validate() const {
    Alphabet base_letters = base.letters();
    if (!target.contains_all(base_letters))
        throw DomainError("integration target " + target.str() +
                          " does not contain the base letters " + base_letters.str());
    if (bound.alphabet() != target)
        throw DomainError("integration bound must be declared over the target alphabet");
    if (bound.restricted_to(base_letters) != parikh(base, base_letters))
        throw DomainError("integration bound " + bound.str() +
                          " is inconsistent with the base word '" + base.str() + "'");
}

namespace {

DelannoyIndex missing_index(const IntegrationSpec& spec, Alphabet& missing_out) {
    missing_out = spec.target.subtract(spec.base.letters());
    std::vector<std::uint32_t> parts;
    parts.reserve(missing_out.size());
    for (Letter l : missing_out) parts.push_back(spec.bound.count(l));
    if (parts.empty()) parts.push_back(0); // degenerate: nothing to add
    return DelannoyIndex(std::move(parts));
}

} // namespace

BigInt integration_count(const IntegrationSpec& spec) {
    spec.validate();
    Alphabet missing;
    DelannoyIndex rest = missing_index(spec, missing);
    // Words of the integration decompose uniquely as an S-shuffle of the
    // base with one word over the missing letters; a (p,q) interleaving
    // with fusions contributes D(p,q) words.
    BigInt total = 0;
    const std::uint64_t hi = rest.total();
    for (std::uint64_t r = 0; r <= hi; ++r) {
        BigInt n = delannoy_count_of_length(rest, r);
        if (n == 0) continue;
        total += n * delannoy_number(static_cast<std::uint32_t>(spec.base.size()),
                                     static_cast<std::uint32_t>(r));
    }
    return total;
}

SLanguage integrate_bounded(const IntegrationSpec& spec, std::size_t cap) {
    BigInt count = integration_count(spec);
    if (count > BigInt(cap))
        throw CapExceeded("explicit integration of " + count.str() +
                          " words refused (cap " + std::to_string(cap) + ")");
    Alphabet missing;
    DelannoyIndex rest = missing_index(spec, missing);
    if (missing.empty())
        return SLanguage(spec.target, {spec.base});
    SLanguage additions = delannoy_language(
        rest, std::vector<Letter>(missing.begin(), missing.end()), cap);
    std::vector<SWord> out;
    for (const SWord& m : additions)
        for (auto& ls : s_shuffle_runs(spec.base.sletters(), m.sletters()))
            out.emplace_back(std::move(ls));
    return SLanguage(spec.target, std::move(out));
}

namespace {

// The common-letter trace of a word: for every S-letter meeting `common`,
// its restriction. Also records the private runs between those anchors.
struct TraceView {
    std::vector<SLetter> trace;              // restrictions to common letters
    std::vector<SLetter> anchors;            // the full anchor S-letters
    std::vector<std::vector<SLetter>> runs;  // runs.size() == anchors.size() + 1

    static TraceView of(const SWord& w, const Alphabet& common) {
        TraceView v;
        v.runs.emplace_back();
        for (const SLetter& s : w) {
            if (auto r = s.restricted(common)) {
                v.trace.push_back(*r);
                v.anchors.push_back(s);
                v.runs.emplace_back();
            } else {
                v.runs.back().push_back(s);
            }
        }
        return v;
    }
};

} // namespace

std::optional<JoinPlan> plan_join(const SWord& w1, const SWord& w2,
                                  const Alphabet& common) {
    TraceView a = TraceView::of(w1, common);
    TraceView b = TraceView::of(w2, common);
    // Step (ii): all common occurrences must be ordered the same way, with
    // matching fusion patterns. Both facts are captured by trace equality.
    if (a.trace != b.trace) return std::nullopt;
    JoinPlan plan;
    plan.anchors.reserve(a.anchors.size());
    for (std::size_t i = 0; i < a.anchors.size(); ++i)
        plan.anchors.push_back(SLetter::merged(a.anchors[i], b.anchors[i]));
    plan.segments.reserve(a.runs.size());
    for (std::size_t i = 0; i < a.runs.size(); ++i)
        plan.segments.emplace_back(std::move(a.runs[i]), std::move(b.runs[i]));
    return plan;
}

namespace {

struct JoinEmitter {
    const JoinPlan* plan = nullptr;
    std::vector<std::vector<std::vector<SLetter>>> segment_choices;
    std::vector<SLetter> current;
    std::vector<SWord>* out = nullptr;
    std::size_t cap = 0;

    void assemble(std::size_t seg) {
        for (const auto& choice : segment_choices[seg]) {
            std::size_t mark = current.size();
            current.insert(current.end(), choice.begin(), choice.end());
            if (seg == plan->anchors.size()) {
                if (out->size() >= cap)
                    throw CapExceeded("join result exceeds the enumeration cap of " +
                                      std::to_string(cap));
                out->emplace_back(current);
            } else {
                current.push_back(plan->anchors[seg]);
                assemble(seg + 1);
                current.pop_back();
            }
            current.resize(mark);
        }
    }
};

// Appends every join of the pair to `out`; `cap` bounds the total size of
// `out` across calls.
void join_pair_into(const SWord& w1, const SWord& w2, const Alphabet& common,
                    std::vector<SWord>& out, std::size_t cap) {
    auto plan = plan_join(w1, w2, common);
    if (!plan) return;
    JoinEmitter emitter;
    emitter.plan = &*plan;
    emitter.segment_choices.reserve(plan->segments.size());
    for (const auto& [run1, run2] : plan->segments)
        emitter.segment_choices.push_back(s_shuffle_runs(run1, run2));
    emitter.current.reserve(w1.size() + w2.size());
    emitter.out = &out;
    emitter.cap = cap;
    emitter.assemble(0);
}

void check_join_operand(const SLanguage& l, const ParikhVector& bound, const char* side) {
    if (!bound.alphabet().contains_all(l.alphabet()))
        throw DomainError(std::string("join bound does not cover the ") + side +
                          " operand's alphabet " + l.alphabet().str());
    if (l.empty()) return;
    auto uniform = l.uniform_parikh();
    if (!uniform || *uniform != bound.restricted_to(l.alphabet()))
        throw DomainError(std::string("join ") + side +
                          " operand words do not all carry the bound's profile " +
                          bound.restricted_to(l.alphabet()).str());
}

} // namespace

std::vector<SWord> join_words(const SWord& w1, const SWord& w2, const Alphabet& common,
                              std::size_t cap) {
    std::vector<SWord> out;
    join_pair_into(w1, w2, common, out, cap);
    return out;
}

SLanguage join(const SLanguage& l1, const SLanguage& l2, const ParikhVector& bound,
               std::size_t cap) {
    check_join_operand(l1, bound, "left");
    check_join_operand(l2, bound, "right");
    Alphabet common = l1.alphabet().intersect(l2.alphabet());
    Alphabet united = l1.alphabet().unite(l2.alphabet());

    // Bucket the right operand by trace so only compatible pairs meet.
    std::map<std::vector<SLetter>, std::vector<const SWord*>> buckets;
    for (const SWord& w : l2)
        buckets[TraceView::of(w, common).trace].push_back(&w);

    std::vector<SWord> out;
    for (const SWord& w1 : l1) {
        auto it = buckets.find(TraceView::of(w1, common).trace);
        if (it == buckets.end()) continue;
        for (const SWord* w2 : it->second) join_pair_into(w1, *w2, common, out, cap);
    }
    return SLanguage(united, std::move(out));
}

} // namespace slang
