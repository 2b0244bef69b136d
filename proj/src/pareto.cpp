#include "vrpstw/pareto.hpp"

#include <utility>

#include "vrpstw/errors.hpp"

namespace vrpstw {

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    bool strict = false;
    for (int j = 0; j < kNumObjectives; ++j) {
        if (a.g[j] > b.g[j]) {
            return false;
        }
        if (a.g[j] < b.g[j]) {
            strict = true;
        }
    }
    return strict;
}

std::vector<int> xi_counts(const std::vector<ObjectiveVector>& vectors) {
    if (vectors.empty()) {
        throw InputError("xi_counts needs a nonempty list");
    }
    std::vector<int> counts(vectors.size(), 0);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        for (std::size_t j = 0; j < vectors.size(); ++j) {
            if (j != i && dominates(vectors[j], vectors[i])) {
                ++counts[i];
            }
        }
    }
    return counts;
}

double fitness(int xi, int xi_max, double f_min, double f_max) {
    if (xi < 0 || xi > xi_max) {
        throw InputError("xi out of range");
    }
    if (f_max <= f_min) {
        throw InputError("fitness bounds must satisfy f_max > f_min");
    }
    if (xi_max == 0) {
        return f_max;
    }
    return f_max - static_cast<double>(xi) * (f_max - f_min) / static_cast<double>(xi_max);
}

Archive::InsertResult Archive::insert(ArchiveEntry entry) {
    const std::string key = canonical_key(entry.solution);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (dominates(entries_[i].objectives(), entry.objectives())) {
            return {Outcome::kDominated, i};
        }
        if (canonical_keys_[i] == key) {
            return {Outcome::kDuplicate, kNone};
        }
    }
    std::size_t kept = 0;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (!dominates(entry.objectives(), entries_[i].objectives())) {
            if (kept != i) {
                entries_[kept] = std::move(entries_[i]);
                canonical_keys_[kept] = std::move(canonical_keys_[i]);
            }
            ++kept;
        }
    }
    entries_.resize(kept);
    canonical_keys_.resize(kept);
    entries_.push_back(std::move(entry));
    canonical_keys_.push_back(key);
    return {Outcome::kAccepted, kNone};
}

}  // namespace vrpstw
