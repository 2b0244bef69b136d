#pragma once

#include <string>
#include <vector>

#include "vrpstw/model.hpp"
#include "vrpstw/rng.hpp"

namespace vrpstw {

// Giant-tour representation: a permutation of the customer ids 1..N. The
// visiting order is the gene order; routes come out of the decoder.
using Chromosome = std::vector<int>;

bool is_valid_permutation(const Chromosome& genes);

// Greedy left-to-right split: each gene joins the current route while the
// extended route (including its return leg) stays within the depot horizon
// and the vehicle capacity; otherwise the route is closed and a new one is
// opened with that gene. Throws InputError if the chromosome is not a
// permutation or a customer is infeasible even as a singleton route.
Solution decode(const Instance& instance, const Chromosome& genes);

// Uniform random permutation of 1..n.
Chromosome random_chromosome(Rng& rng, int n);

// Space-separated ids on one line, e.g. "5 2 1 3".
std::string format_chromosome(const Chromosome& genes);
Chromosome parse_chromosome(const std::string& line);

}  // namespace vrpstw
