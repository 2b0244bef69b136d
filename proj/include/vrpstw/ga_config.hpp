#pragma once

#include <cstdint>
#include <string>

namespace vrpstw {

enum class CrossoverKind { kPmx, kObx, kUobx };

std::string crossover_name(CrossoverKind kind);

struct GaConfig {
    int pop_size = 500;
    double p_cross = 1.0;
    double p_mut = 0.0;  // per whole individual; 0.1 for the UOBX+2EX variant
    CrossoverKind crossover = CrossoverKind::kUobx;
    int stagnation_limit = 10000;
    double f_min = 1.0;
    double f_max = 100.0;
    std::uint64_t seed = 0;

    bool operator==(const GaConfig&) const = default;
};

// Throws InputError when probabilities, sizes or fitness bounds are off.
void validate(const GaConfig& config);

}  // namespace vrpstw
