#pragma once

#include <cstdint>
#include <vector>

#include "vrpstw/encoding.hpp"
#include "vrpstw/model.hpp"
#include "vrpstw/run_record.hpp"

namespace vrpstw {

// All chromosomes reachable by reversing one contiguous substring, in
// lexicographic (i, j) order of the reversed range: exactly N(N-1)/2
// neighbors, none equal to the input. Empty for N < 2.
std::vector<Chromosome> reversal_neighborhood(const Chromosome& genes);

// Multiple-objective local search descent: start from one random chromosome,
// then repeatedly expand the full reversal neighborhood of a randomly chosen
// not-yet-investigated archive member, keeping the archive nondominated,
// until every member has been investigated. Eviction cancels a pending
// expansion; investigated flags are keyed by chromosome.
RunRecord molsd_run(const Instance& instance, std::uint64_t seed);

}  // namespace vrpstw
