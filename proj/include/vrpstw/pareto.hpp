#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "vrpstw/encoding.hpp"
#include "vrpstw/model.hpp"

namespace vrpstw {

// True iff a is no worse than b in every objective and strictly better in at
// least one. Equal vectors do not dominate each other.
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b);

// For each vector, the number of vectors in the list dominating it.
// Nondominated members receive 0.
std::vector<int> xi_counts(const std::vector<ObjectiveVector>& vectors);

// Linear transformation of a domination count into a selection fitness:
// f_max at xi = 0, f_min at xi = xi_max. A fully nondominated population
// (xi_max = 0) gets f_max uniformly.
double fitness(int xi, int xi_max, double f_min, double f_max);

struct ArchiveEntry {
    Chromosome chromosome;
    Solution solution;  // objectives cached in solution.objectives

    const ObjectiveVector& objectives() const { return solution.objectives; }
};

// Unbounded store of mutually nondominated solutions. Entries with equal
// canonical routes are duplicates regardless of their chromosomes.
class Archive {
  public:
    enum class Outcome { kAccepted, kDominated, kDuplicate };

    struct InsertResult {
        Outcome outcome;
        std::size_t dominating_index = kNone;  // set when outcome == kDominated
    };

    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    // Rejects the entry when a member dominates it or duplicates it; on
    // acceptance every member the entry dominates is removed.
    InsertResult insert(ArchiveEntry entry);

    const std::vector<ArchiveEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

  private:
    std::vector<ArchiveEntry> entries_;
    std::vector<std::string> canonical_keys_;  // parallel to entries_
};

}  // namespace vrpstw
