#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vrpstw/encoding.hpp"
#include "vrpstw/ga_config.hpp"
#include "vrpstw/model.hpp"

namespace vrpstw {

struct ArchivePoint {
    ObjectiveVector objectives;
    Chromosome chromosome;

    bool operator==(const ArchivePoint&) const = default;
};

// Everything one solver execution produced. Identical seeds give identical
// records except for wall_time_seconds.
struct RunRecord {
    std::string instance;
    std::string algorithm;
    std::uint64_t seed = 0;
    std::int64_t evaluations = 0;  // decode+evaluate calls
    std::int64_t iterations = 0;   // GA iterations / MOLSD neighborhood expansions
    double wall_time_seconds = 0.0;
    std::vector<ArchivePoint> archive;

    // Echo of the GA configuration; empty for MOLSD runs.
    std::optional<GaConfig> ga_config;
};

std::string to_json(const RunRecord& record);
RunRecord run_record_from_json(const std::string& text);

void write_run_record(const RunRecord& record, const std::string& path);
RunRecord read_run_record(const std::string& path);

}  // namespace vrpstw
