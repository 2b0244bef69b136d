#pragma once

#include <random>

namespace vrpstw {

// Every stochastic component draws from one of these, seeded per run.
using Rng = std::mt19937_64;

}  // namespace vrpstw
