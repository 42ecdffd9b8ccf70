#include "slang/lattice.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "slang/error.hpp"

namespace slang {

ThueSystem ThueSystem::lexicographic(const Alphabet& alphabet) {
    return ThueSystem{alphabet.letters()};
}

bool ThueSystem::covers(const SWord& w) const noexcept {
    for (const SLetter& s : w)
        for (Letter l : s.letters())
            if (!rank(l)) return false;
    return true;
}

std::optional<std::size_t> ThueSystem::rank(Letter l) const noexcept {
    auto it = std::find(order.begin(), order.end(), l);
    if (it == order.end()) return std::nullopt;
    return static_cast<std::size_t>(it - order.begin());
}

namespace {

// P < Q iff every member of P is below every member of Q.
bool sletter_below(const SLetter& p, const SLetter& q, const ThueSystem& sys) {
    std::size_t pmax = 0;
    bool first = true;
    for (Letter l : p.letters()) {
        std::size_t r = *sys.rank(l);
        pmax = first ? r : std::max(pmax, r);
        first = false;
    }
    std::size_t qmin = 0;
    first = true;
    for (Letter l : q.letters()) {
        std::size_t r = *sys.rank(l);
        qmin = first ? r : std::min(qmin, r);
        first = false;
    }
    return pmax < qmin;
}

} // namespace

std::vector<SWord> thue_successors(const SWord& w, const ThueSystem& sys) {
    if (!sys.covers(w))
        throw DomainError("word '" + w.str() + "' uses letters outside the Thue order");
    std::set<SWord> out;
    // PQ -> P∪Q at every adjacent ascending pair.
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (!sletter_below(w[i], w[i + 1], sys)) continue;
        std::vector<SLetter> next(w.begin(), w.end());
        next[i] = SLetter::merged(w[i], w[i + 1]);
        next.erase(next.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        out.insert(SWord(std::move(next)));
    }
    // R -> QP for every ascending bipartition R = P ⊎ Q. Splitting the
    // rank-sorted members at position k is the only way to get P < Q.
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i].size() < 2) continue;
        std::vector<Letter> members = w[i].letters();
        std::sort(members.begin(), members.end(), [&](Letter a, Letter b) {
            return *sys.rank(a) < *sys.rank(b);
        });
        for (std::size_t k = 1; k < members.size(); ++k) {
            std::vector<Letter> p(members.begin(), members.begin() + static_cast<std::ptrdiff_t>(k));
            std::vector<Letter> q(members.begin() + static_cast<std::ptrdiff_t>(k), members.end());
            std::vector<SLetter> next(w.begin(), w.end());
            next[i] = SLetter(std::move(q));
            next.insert(next.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                        SLetter(std::move(p)));
            out.insert(SWord(std::move(next)));
        }
    }
    return std::vector<SWord>(out.begin(), out.end());
}

Lattice lattice_from(const DelannoyIndex& index, const ThueSystem& sys, std::size_t cap) {
    if (index.parts.size() != sys.order.size())
        throw DomainError("Thue order must name one letter per index entry");
    BigInt count = delannoy_number(index);
    if (count > BigInt(cap))
        throw CapExceeded("lattice of " + count.str() + " nodes exceeds the cap of " +
                          std::to_string(cap));

    std::vector<SLetter> seed;
    for (std::size_t i = 0; i < index.parts.size(); ++i)
        for (std::uint32_t k = 0; k < index.parts[i]; ++k)
            seed.push_back(SLetter{sys.order[i]});
    SWord bottom(std::move(seed));

    std::map<SWord, Lattice::NodeId> ids;
    std::vector<SWord> nodes;
    std::deque<SWord> queue;
    std::vector<std::pair<Lattice::NodeId, Lattice::NodeId>> edges;
    auto id_for = [&](const SWord& w) {
        auto [it, inserted] = ids.emplace(w, static_cast<Lattice::NodeId>(nodes.size()));
        if (inserted) {
            nodes.push_back(w);
            queue.push_back(w);
        }
        return it->second;
    };
    id_for(bottom);
    while (!queue.empty()) {
        SWord w = std::move(queue.front());
        queue.pop_front();
        Lattice::NodeId from = ids.at(w);
        for (const SWord& next : thue_successors(w, sys))
            edges.emplace_back(from, id_for(next));
    }

    // Renumber the nodes canonically so output is deterministic.
    std::vector<SWord> sorted = nodes;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Lattice::NodeId> remap(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), nodes[i]);
        remap[i] = static_cast<Lattice::NodeId>(it - sorted.begin());
    }
    for (auto& [from, to] : edges) {
        from = remap[from];
        to = remap[to];
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Lattice lat;
    lat.index_ = index;
    lat.system_ = sys;
    lat.nodes_ = SLanguage(Alphabet(sys.order), std::move(sorted));
    lat.covers_ = std::move(edges);
    lat.bottom_ = remap[0];
    lat.top_ = lat.id_of(mirror(bottom));
    return lat;
}

Lattice::NodeId Lattice::id_of(const SWord& w) const {
    const auto& ws = nodes_.words();
    auto it = std::lower_bound(ws.begin(), ws.end(), w);
    if (it == ws.end() || *it != w)
        throw DomainError("word '" + w.str() + "' is not a lattice node");
    return static_cast<NodeId>(it - ws.begin());
}

std::string Lattice::to_dot() const {
    std::string out = "digraph lattice {\n  rankdir=BT;\n";
    for (const SWord& w : nodes_) {
        out += "  \"";
        out += w.str();
        out += "\";\n";
    }
    for (auto [from, to] : covers_) {
        out += "  \"";
        out += node(from).str();
        out += "\" -> \"";
        out += node(to).str();
        out += "\";\n";
    }
    out += "}\n";
    return out;
}

LatticeOrder::LatticeOrder(const Lattice& lattice)
    : n_(lattice.node_count()), stride_((n_ + 63) / 64), down_(2 * n_ * stride_, 0) {
    // down_[b] collects everything below-or-equal b (covers point upward);
    // the second half of the buffer holds the mirrored up-sets.
    std::vector<std::uint32_t> indegree(n_, 0);
    std::vector<std::vector<std::uint32_t>> succs(n_);
    std::vector<std::vector<std::uint32_t>> preds(n_);
    for (auto [from, to] : lattice.covers()) {
        succs[from].push_back(to);
        preds[to].push_back(from);
        ++indegree[to];
    }
    auto down = [&](std::uint32_t v) { return down_.data() + v * stride_; };
    auto up = [&](std::uint32_t v) { return down_.data() + (n_ + v) * stride_; };
    std::deque<std::uint32_t> ready;
    for (std::uint32_t v = 0; v < n_; ++v) {
        down(v)[v / 64] |= std::uint64_t{1} << (v % 64);
        up(v)[v / 64] |= std::uint64_t{1} << (v % 64);
        if (indegree[v] == 0) ready.push_back(v);
    }
    std::size_t seen = 0;
    std::vector<std::uint32_t> topo;
    topo.reserve(n_);
    while (!ready.empty()) {
        std::uint32_t v = ready.front();
        ready.pop_front();
        topo.push_back(v);
        ++seen;
        for (std::uint32_t s : succs[v]) {
            for (std::size_t i = 0; i < stride_; ++i) down(s)[i] |= down(v)[i];
            if (--indegree[s] == 0) ready.push_back(s);
        }
    }
    if (seen != n_) throw DomainError("cover relation is cyclic");
    for (auto it = topo.rbegin(); it != topo.rend(); ++it)
        for (std::uint32_t p : preds[*it])
            for (std::size_t i = 0; i < stride_; ++i) up(p)[i] |= up(*it)[i];
}

bool LatticeOrder::leq(Lattice::NodeId a, Lattice::NodeId b) const noexcept {
    return (down_[b * stride_ + a / 64] >> (a % 64)) & 1;
}

namespace {

// The member of `bounds` dominating (under `cone`) every other member, if
// any: c qualifies iff bounds ⊆ cone(c).
std::optional<Lattice::NodeId> extremum(const std::vector<std::uint64_t>& bounds,
                                        std::size_t n, std::size_t stride,
                                        const std::uint64_t* cones) {
    for (std::uint32_t c = 0; c < n; ++c) {
        if (!((bounds[c / 64] >> (c % 64)) & 1)) continue;
        const std::uint64_t* cone = cones + c * stride;
        bool extreme = true;
        for (std::size_t i = 0; i < stride && extreme; ++i)
            if ((bounds[i] & ~cone[i]) != 0) extreme = false;
        if (extreme) return c;
    }
    return std::nullopt;
}

} // namespace

std::optional<Lattice::NodeId> LatticeOrder::meet(Lattice::NodeId a,
                                                  Lattice::NodeId b) const {
    std::vector<std::uint64_t> lower(stride_);
    for (std::size_t i = 0; i < stride_; ++i)
        lower[i] = down_[a * stride_ + i] & down_[b * stride_ + i];
    return extremum(lower, n_, stride_, down_.data());
}

std::optional<Lattice::NodeId> LatticeOrder::join(Lattice::NodeId a,
                                                  Lattice::NodeId b) const {
    std::vector<std::uint64_t> upper(stride_);
    const std::uint64_t* ups = down_.data() + n_ * stride_;
    for (std::size_t i = 0; i < stride_; ++i)
        upper[i] = ups[a * stride_ + i] & ups[b * stride_ + i];
    return extremum(upper, n_, stride_, ups);
}

namespace {

struct Tables {
    std::size_t n;
    std::vector<std::uint32_t> meet;
    std::vector<std::uint32_t> join;

    std::uint32_t m(std::size_t a, std::size_t b) const { return meet[a * n + b]; }
    std::uint32_t j(std::size_t a, std::size_t b) const { return join[a * n + b]; }
};

// Fails with DomainError when some pair lacks a meet or join.
Tables build_tables(const Lattice& lattice) {
    LatticeOrder ord(lattice);
    const std::size_t n = lattice.node_count();
    Tables t{n, std::vector<std::uint32_t>(n * n), std::vector<std::uint32_t>(n * n)};
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = a; b < n; ++b) {
            auto m = ord.meet(a, b);
            auto j = ord.join(a, b);
            if (!m || !j)
                throw DomainError("not a lattice: '" + lattice.node(a).str() +
                                  "' and '" + lattice.node(b).str() + "' lack a " +
                                  (m ? "join" : "meet"));
            t.meet[a * n + b] = t.meet[b * n + a] = *m;
            t.join[a * n + b] = t.join[b * n + a] = *j;
        }
    return t;
}

} // namespace

DistributivityResult check_distributive(const Lattice& lattice) {
    Tables t = build_tables(lattice);
    const std::size_t n = t.n;
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y)
            for (std::uint32_t z = 0; z < n; ++z)
                if (t.m(x, t.j(y, z)) != t.j(t.m(x, y), t.m(x, z)))
                    return {false, std::array<Lattice::NodeId, 3>{x, y, z}};
    return {true, std::nullopt};
}

ModularityResult check_modular(const Lattice& lattice) {
    Tables t = build_tables(lattice);
    LatticeOrder ord(lattice);
    const std::size_t n = t.n;
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t z = 0; z < n; ++z) {
            if (!ord.leq(x, z)) continue;
            for (std::uint32_t y = 0; y < n; ++y) {
                std::uint32_t lhs = t.j(x, t.m(y, z)); // x ∨ (y ∧ z)
                std::uint32_t rhs = t.m(t.j(x, y), z); // (x ∨ y) ∧ z
                if (lhs == rhs) continue;
                // The violation induces a pentagon.
                std::array<Lattice::NodeId, 5> n5 = {
                    t.m(y, z),  // bottom
                    lhs,        // a
                    rhs,        // c
                    y,          // side
                    t.j(x, y),  // top
                };
                return {false, std::array<Lattice::NodeId, 3>{x, y, z}, n5};
            }
        }
    return {true, std::nullopt, std::nullopt};
}

std::vector<SWord> union_irreducibles(const Lattice& lattice) {
    if (lattice.index().parts.size() != 2)
        throw DomainError("union-irreducibles are characterized for two-letter indices only");
    std::vector<std::uint32_t> lower_covers(lattice.node_count(), 0);
    for (auto [from, to] : lattice.covers()) {
        (void)from;
        ++lower_covers[to];
    }
    std::vector<SWord> out;
    for (std::uint32_t v = 0; v < lattice.node_count(); ++v)
        if (lower_covers[v] == 1) out.push_back(lattice.node(v));
    return out;
}

} // namespace slang
