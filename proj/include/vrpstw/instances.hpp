#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "vrpstw/instance_spec.hpp"
#include "vrpstw/model.hpp"
#include "vrpstw/rng.hpp"

namespace vrpstw {

// Knobs of the instance generator. The defaults give Solomon-like geometry:
// a 100 x 100 plane with the depot at its center and a wide horizon.
struct GenParams {
    double plane_size = 100.0;
    int demand_min = 1;
    int demand_max = 25;
    double unload_time = 10.0;
    double capacity = 100.0;
    double horizon = 1000.0;     // depot window [0, horizon]
    double cluster_spread = 5.0; // Gaussian sigma around cluster centers
};

// Builds an instance matching the classification: random or clustered
// coordinates, exactly round(gamma * beta) customers with windows of width
// exactly delta placed uniformly inside the horizon. Deterministic given the
// rng state. Throws InputError when delta exceeds the horizon or the
// parameters are inconsistent.
Instance generate(const InstanceSpec& spec, const GenParams& params, Rng& rng);

// Line-oriented text format, byte-exact across write/read/write:
//   NAME <string>
//   CLASS <alpha>;<beta>;<gamma>;<delta>
//   CAPACITY <number>
//   DEPOT <x> <y> <a0> <b0>
//   CUSTOMERS <N>
//   <id> <x> <y> <demand> <unload> <a> <b> <has_window>
void write_instance(const Instance& instance, std::ostream& out);
void write_instance_file(const Instance& instance, const std::filesystem::path& path);

// Throws ParseError with the line number on malformed input and names the
// missing section on truncated files.
Instance read_instance(std::istream& in);
Instance read_instance_file(const std::filesystem::path& path);

}  // namespace vrpstw
