#include "slang/alloc.hpp"

#include <algorithm>

#include "slang/error.hpp"

namespace slang {

void AllocationInstance::validate() const {
    if (requesters < 1) throw DomainError("allocation needs at least one requester");
    if (requests.empty()) throw DomainError("the request sequence must be nonempty");
    for (std::uint32_t r : requests)
        if (r < 1 || r > requesters)
            throw DomainError("request id " + std::to_string(r) + " outside 1.." +
                              std::to_string(requesters));
}

namespace {

struct RequesterLetters {
    Letter request, request_bar, grant, grant_bar;
};

RequesterLetters letters_for(std::uint32_t i) {
    const std::string n = std::to_string(i);
    return {Letter("r" + n), Letter("r" + n + "_bar"), Letter("g" + n),
            Letter("g" + n + "_bar")};
}

} // namespace

ConstraintNetwork allocation_network(const AllocationInstance& instance) {
    instance.validate();
    const std::uint32_t k = instance.requesters;
    std::vector<std::uint32_t> cycles(k, 0);
    for (std::uint32_t r : instance.requests) ++cycles[r - 1];

    std::vector<TemporalItem> items;
    items.reserve(4 * k);
    for (std::uint32_t i = 1; i <= k; ++i) {
        RequesterLetters rl = letters_for(i);
        std::uint32_t n = std::max<std::uint32_t>(cycles[i - 1], 0);
        if (n == 0) continue; // a requester that never requests has no letters
        items.push_back({rl.request, n});
        items.push_back({rl.request_bar, n});
        items.push_back({rl.grant, n});
        items.push_back({rl.grant_bar, n});
    }

    std::vector<Constraint> constraints;

    // Grant exclusion, unrolled along the request order: the resource is
    // granted and given back before the next grant starts.
    {
        std::vector<SLetter> word;
        std::vector<Letter> scope;
        for (std::uint32_t r : instance.requests) {
            RequesterLetters rl = letters_for(r);
            word.push_back(SLetter{rl.grant});
            word.push_back(SLetter{rl.grant_bar});
            if (std::find(scope.begin(), scope.end(), rl.grant) == scope.end()) {
                scope.push_back(rl.grant);
                scope.push_back(rl.grant_bar);
            }
        }
        Constraint c;
        c.scope = std::move(scope);
        c.language = SLanguage(Alphabet{c.scope}, {SWord(std::move(word))});
        c.label = "exclusion";
        constraints.push_back(std::move(c));
    }

    // One request/grant/release/deallocate cycle word per requester.
    for (std::uint32_t i = 1; i <= k; ++i) {
        if (cycles[i - 1] == 0) continue;
        RequesterLetters rl = letters_for(i);
        std::vector<SLetter> word;
        for (std::uint32_t n = 0; n < cycles[i - 1]; ++n) {
            word.push_back(SLetter{rl.request});
            word.push_back(SLetter{rl.grant});
            word.push_back(SLetter{rl.request_bar});
            word.push_back(SLetter{rl.grant_bar});
        }
        Constraint c;
        c.scope = {rl.request, rl.grant, rl.request_bar, rl.grant_bar};
        c.language = SLanguage(Alphabet{c.scope}, {SWord(std::move(word))});
        c.label = "cycle r" + std::to_string(i);
        constraints.push_back(std::move(c));
    }

    // FIFO grants: the grant starts follow the request order.
    {
        std::vector<SLetter> word;
        std::vector<Letter> scope;
        for (std::uint32_t r : instance.requests) {
            Letter g = letters_for(r).grant;
            word.push_back(SLetter{g});
            if (std::find(scope.begin(), scope.end(), g) == scope.end())
                scope.push_back(g);
        }
        Constraint c;
        c.scope = std::move(scope);
        c.language = SLanguage(Alphabet{c.scope}, {SWord(std::move(word))});
        c.label = "grant order";
        constraints.push_back(std::move(c));
    }

    return ConstraintNetwork(std::move(items), std::move(constraints));
}

AllocationSolution allocation_solve(const AllocationInstance& instance,
                                    const SolveOptions& options,
                                    bool forbid_simultaneity) {
    ConstraintNetwork net = allocation_network(instance);
    SLanguage scenarios = solve(net, options);
    if (forbid_simultaneity) {
        std::vector<SWord> kept;
        for (const SWord& w : scenarios) {
            bool flat = std::all_of(w.begin(), w.end(),
                                    [](const SLetter& s) { return s.singleton(); });
            if (flat) kept.push_back(w);
        }
        scenarios = SLanguage(scenarios.alphabet(), std::move(kept));
    }
    AllocationSolution solution;
    solution.graph = hasse_graph(scenarios);
    solution.scenarios = std::move(scenarios);
    return solution;
}

} // namespace slang
