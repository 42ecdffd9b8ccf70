#include "slang/parikh.hpp"

#include <numeric>

#include "slang/error.hpp"

namespace slang {

ParikhVector::ParikhVector(Alphabet alphabet, std::vector<std::uint32_t> counts)
    : alphabet_(std::move(alphabet)), counts_(std::move(counts)) {
    if (alphabet_.size() != counts_.size())
        throw DomainError("Parikh vector needs one count per alphabet letter");
}

ParikhVector ParikhVector::zero(Alphabet alphabet) {
    std::vector<std::uint32_t> counts(alphabet.size(), 0);
    return ParikhVector(std::move(alphabet), std::move(counts));
}

std::uint32_t ParikhVector::count(Letter l) const {
    auto idx = alphabet_.index_of(l);
    if (!idx) throw DomainError("letter '" + l.name() + "' outside the Parikh alphabet");
    return counts_[*idx];
}

std::uint64_t ParikhVector::total() const noexcept {
    return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

ParikhVector ParikhVector::restricted_to(const Alphabet& sub) const {
    if (!alphabet_.contains_all(sub))
        throw DomainError("restriction alphabet " + sub.str() +
                          " is not contained in " + alphabet_.str());
    std::vector<std::uint32_t> counts;
    counts.reserve(sub.size());
    for (Letter l : sub) counts.push_back(counts_[*alphabet_.index_of(l)]);
    return ParikhVector(sub, std::move(counts));
}

ParikhVector operator+(const ParikhVector& a, const ParikhVector& b) {
    if (a.alphabet() != b.alphabet())
        throw DomainError("cannot add Parikh vectors over different alphabets");
    std::vector<std::uint32_t> counts(a.counts());
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += b.counts()[i];
    return ParikhVector(a.alphabet(), std::move(counts));
}

std::string ParikhVector::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (i) out += ',';
        out += alphabet_.letters()[i].name();
        out += ':';
        out += std::to_string(counts_[i]);
    }
    out += ')';
    return out;
}

} // namespace slang
