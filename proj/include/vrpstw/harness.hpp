#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vrpstw/genetic.hpp"
#include "vrpstw/instances.hpp"
#include "vrpstw/metrics.hpp"
#include "vrpstw/run_record.hpp"

namespace vrpstw {

enum class Algorithm { kMolsd, kPmx, kObx, kUobx, kUobx2Ex };

inline constexpr Algorithm kAllAlgorithms[] = {Algorithm::kMolsd, Algorithm::kPmx,
                                               Algorithm::kObx, Algorithm::kUobx,
                                               Algorithm::kUobx2Ex};

std::string algorithm_name(Algorithm algorithm);
Algorithm parse_algorithm(const std::string& name);  // case-insensitive

// Stable 64-bit FNV-1a over "<base_seed>|<instance>|<algorithm>|<index>",
// so individual runs can be reproduced without replaying the campaign.
std::uint64_t run_seed(std::uint64_t base_seed, const std::string& instance_name,
                       const std::string& algorithm, int run_index);

struct Campaign {
    std::vector<std::filesystem::path> instance_files;
    std::vector<Algorithm> algorithms;
    int runs_per_config = 100;
    std::uint64_t base_seed = 0;
    std::filesystem::path out_dir;  // one RunRecord file per run; empty = keep in memory only
    int jobs = 1;

    // Solver configuration applied to the GA variants.
    int pop_size = 500;
    int stagnation_limit = 10000;
    std::optional<double> p_mut_override;  // default: 0.1 for UOBX2EX, 0 otherwise
};

// The GA configuration a campaign uses for one algorithm and seed.
GaConfig campaign_ga_config(const Campaign& campaign, Algorithm algorithm, std::uint64_t seed);

// Executes every (instance, algorithm, run index) combination, in parallel
// when jobs > 1. Results are ordered by combination, independent of
// scheduling. A failing run is recorded in the returned report, not fatal.
struct CampaignResult {
    std::vector<RunRecord> records;
    std::vector<std::string> errors;  // one message per failed run
};

CampaignResult run_campaign(const Campaign& campaign);

struct ScoreRow {
    std::string instance;
    std::string algorithm;
    int runs = 0;
    double mean_d1 = 0.0;
    double mean_d2 = 0.0;
    double mean_evaluations = 0.0;
    bool best_d1 = false;  // best mean d1 among this instance's algorithms
    bool best_d2 = false;
};

// Builds the per-instance reference front from all archives, scores every
// run against it and aggregates per (instance, algorithm). Missing
// combinations appear as rows with runs = 0 and empty means.
std::vector<ScoreRow> score_records(const std::vector<RunRecord>& records);

// CSV: instance,algorithm,mean_d1,mean_d2,mean_evaluations,best_d1_flag,best_d2_flag
void write_score_csv(const std::vector<ScoreRow>& rows, std::ostream& out);

std::vector<RunRecord> load_run_records(const std::filesystem::path& dir);

// Archive of a run as a Front tagged with "<instance>/<algorithm>/<seed>".
Front record_front(const RunRecord& record);

}  // namespace vrpstw
