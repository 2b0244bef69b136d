#include "vrpstw/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <limits>
#include <ostream>
#include <thread>
#include <utility>

#include "vrpstw/errors.hpp"
#include "vrpstw/molsd.hpp"
#include "vrpstw/numeric_io.hpp"

namespace vrpstw {

std::string algorithm_name(Algorithm algorithm) {
    switch (algorithm) {
        case Algorithm::kMolsd:
            return "MOLSD";
        case Algorithm::kPmx:
            return "PMX";
        case Algorithm::kObx:
            return "OBX";
        case Algorithm::kUobx:
            return "UOBX";
        case Algorithm::kUobx2Ex:
            return "UOBX2EX";
    }
    throw InputError("unknown algorithm");
}

Algorithm parse_algorithm(const std::string& name) {
    std::string upper = name;
    for (char& c : upper) {
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    for (Algorithm a : kAllAlgorithms) {
        if (upper == algorithm_name(a)) {
            return a;
        }
    }
    throw InputError("unknown algorithm: " + name +
                     " (expected MOLSD, PMX, OBX, UOBX or UOBX2EX)");
}

std::uint64_t run_seed(std::uint64_t base_seed, const std::string& instance_name,
                       const std::string& algorithm, int run_index) {
    const std::string key = std::to_string(base_seed) + "|" + instance_name + "|" + algorithm +
                            "|" + std::to_string(run_index);
    std::uint64_t hash = 14695981039346656037ull;
    for (const unsigned char c : key) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    return hash;
}

GaConfig campaign_ga_config(const Campaign& campaign, Algorithm algorithm, std::uint64_t seed) {
    GaConfig config;
    config.pop_size = campaign.pop_size;
    config.stagnation_limit = campaign.stagnation_limit;
    config.p_cross = 1.0;
    config.seed = seed;
    switch (algorithm) {
        case Algorithm::kMolsd:
            throw InputError("MOLSD runs without a GA configuration");
        case Algorithm::kPmx:
            config.crossover = CrossoverKind::kPmx;
            config.p_mut = 0.0;
            break;
        case Algorithm::kObx:
            config.crossover = CrossoverKind::kObx;
            config.p_mut = 0.0;
            break;
        case Algorithm::kUobx:
            config.crossover = CrossoverKind::kUobx;
            config.p_mut = 0.0;
            break;
        case Algorithm::kUobx2Ex:
            config.crossover = CrossoverKind::kUobx;
            config.p_mut = 0.1;
            break;
    }
    if (campaign.p_mut_override) {
        config.p_mut = *campaign.p_mut_override;
    }
    return config;
}

namespace {

std::string filesystem_safe(const std::string& name) {
    std::string out = name;
    for (char& c : out) {
        const bool ok = std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '.' || c == '-' ||
                        c == '_';
        if (!ok) {
            c = '-';
        }
    }
    return out;
}

}  // namespace

CampaignResult run_campaign(const Campaign& campaign) {
    if (campaign.instance_files.empty()) {
        throw InputError("campaign needs at least one instance file");
    }
    if (campaign.algorithms.empty()) {
        throw InputError("campaign needs at least one algorithm");
    }
    if (campaign.runs_per_config < 1) {
        throw InputError("runs per configuration must be positive");
    }
    if (campaign.jobs < 1) {
        throw InputError("jobs must be positive");
    }

    CampaignResult result;

    std::vector<Instance> instances;
    instances.reserve(campaign.instance_files.size());
    for (const std::filesystem::path& path : campaign.instance_files) {
        try {
            instances.push_back(read_instance_file(path));
        } catch (const std::exception& e) {
            result.errors.emplace_back(e.what());
        }
    }

    if (!campaign.out_dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(campaign.out_dir, ec);
        if (ec) {
            throw InputError("cannot create " + campaign.out_dir.string() + ": " + ec.message());
        }
    }

    struct Task {
        const Instance* instance;
        Algorithm algorithm;
        int index;
        std::uint64_t seed;
    };
    std::vector<Task> tasks;
    tasks.reserve(instances.size() * campaign.algorithms.size() *
                  static_cast<std::size_t>(campaign.runs_per_config));
    for (const Instance& instance : instances) {
        for (Algorithm algorithm : campaign.algorithms) {
            const std::string label = algorithm_name(algorithm);
            for (int r = 0; r < campaign.runs_per_config; ++r) {
                tasks.push_back(
                    {&instance, algorithm, r, run_seed(campaign.base_seed, instance.name(), label, r)});
            }
        }
    }

    std::vector<RunRecord> slots(tasks.size());
    std::vector<char> done(tasks.size(), 0);
    std::vector<std::string> task_errors(tasks.size());
    std::atomic<std::size_t> cursor{0};

    auto worker = [&]() {
        for (;;) {
            const std::size_t k = cursor.fetch_add(1);
            if (k >= tasks.size()) {
                return;
            }
            const Task& task = tasks[k];
            const std::string label = algorithm_name(task.algorithm);
            try {
                RunRecord record =
                    task.algorithm == Algorithm::kMolsd
                        ? molsd_run(*task.instance, task.seed)
                        : ga_run(*task.instance,
                                 campaign_ga_config(campaign, task.algorithm, task.seed), label);
                if (!campaign.out_dir.empty()) {
                    const std::string file = filesystem_safe(record.instance) + "_" + label + "_" +
                                             std::to_string(task.index) + ".json";
                    write_run_record(record, (campaign.out_dir / file).string());
                }
                slots[k] = std::move(record);
                done[k] = 1;
            } catch (const std::exception& e) {
                task_errors[k] = task.instance->name() + "/" + label + "/run" +
                                 std::to_string(task.index) + ": " + e.what();
            }
        }
    };

    const int jobs = static_cast<int>(
        std::min<std::size_t>(static_cast<std::size_t>(campaign.jobs), std::max<std::size_t>(tasks.size(), 1)));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int i = 0; i < jobs; ++i) {
            pool.emplace_back(worker);
        }
        for (std::thread& t : pool) {
            t.join();
        }
    }

    for (std::size_t k = 0; k < tasks.size(); ++k) {
        if (done[k]) {
            result.records.push_back(std::move(slots[k]));
        } else if (!task_errors[k].empty()) {
            result.errors.push_back(std::move(task_errors[k]));
        }
    }
    return result;
}

Front record_front(const RunRecord& record) {
    Front front;
    front.points.reserve(record.archive.size());
    front.labels.reserve(record.archive.size());
    const std::string label =
        record.instance + "/" + record.algorithm + "/" + std::to_string(record.seed);
    for (const ArchivePoint& point : record.archive) {
        front.points.push_back(point.objectives);
        front.labels.push_back(label);
    }
    return front;
}

std::vector<ScoreRow> score_records(const std::vector<RunRecord>& records) {
    std::vector<std::string> instance_order;
    std::vector<std::string> algorithm_order;
    for (const RunRecord& r : records) {
        if (std::find(instance_order.begin(), instance_order.end(), r.instance) ==
            instance_order.end()) {
            instance_order.push_back(r.instance);
        }
        if (std::find(algorithm_order.begin(), algorithm_order.end(), r.algorithm) ==
            algorithm_order.end()) {
            algorithm_order.push_back(r.algorithm);
        }
    }

    std::vector<ScoreRow> rows;
    for (const std::string& instance : instance_order) {
        // One shared reference front per instance, pooled over every
        // algorithm's runs; each run is then scored against it.
        std::vector<Front> fronts;
        for (const RunRecord& r : records) {
            if (r.instance == instance && !r.archive.empty()) {
                fronts.push_back(record_front(r));
            }
        }
        const Front reference = build_reference(fronts);
        std::array<double, kNumObjectives> weights{};
        if (!reference.empty()) {
            weights = spread_weights(reference);
        }

        const std::size_t first_row = rows.size();
        for (const std::string& algorithm : algorithm_order) {
            ScoreRow row;
            row.instance = instance;
            row.algorithm = algorithm;
            double sum_d1 = 0.0;
            double sum_d2 = 0.0;
            double sum_evaluations = 0.0;
            for (const RunRecord& r : records) {
                if (r.instance != instance || r.algorithm != algorithm || r.archive.empty()) {
                    continue;
                }
                const Front front = record_front(r);
                sum_d1 += d1(front, reference, weights);
                sum_d2 += d2(front, reference, weights);
                sum_evaluations += static_cast<double>(r.evaluations);
                ++row.runs;
            }
            if (row.runs > 0) {
                row.mean_d1 = sum_d1 / row.runs;
                row.mean_d2 = sum_d2 / row.runs;
                row.mean_evaluations = sum_evaluations / row.runs;
            }
            rows.push_back(std::move(row));
        }

        double best_d1 = std::numeric_limits<double>::infinity();
        double best_d2 = std::numeric_limits<double>::infinity();
        for (std::size_t i = first_row; i < rows.size(); ++i) {
            if (rows[i].runs > 0) {
                best_d1 = std::min(best_d1, rows[i].mean_d1);
                best_d2 = std::min(best_d2, rows[i].mean_d2);
            }
        }
        for (std::size_t i = first_row; i < rows.size(); ++i) {
            if (rows[i].runs > 0) {
                rows[i].best_d1 = rows[i].mean_d1 == best_d1;
                rows[i].best_d2 = rows[i].mean_d2 == best_d2;
            }
        }
    }
    return rows;
}

void write_score_csv(const std::vector<ScoreRow>& rows, std::ostream& out) {
    out << "instance,algorithm,mean_d1,mean_d2,mean_evaluations,best_d1_flag,best_d2_flag\n";
    for (const ScoreRow& row : rows) {
        out << row.instance << ',' << row.algorithm << ',';
        if (row.runs > 0) {
            out << format_number(row.mean_d1) << ',' << format_number(row.mean_d2) << ','
                << format_number(row.mean_evaluations) << ',' << (row.best_d1 ? '1' : '0') << ','
                << (row.best_d2 ? '1' : '0') << '\n';
        } else {
            out << ",,,0,0\n";
        }
    }
}

std::vector<RunRecord> load_run_records(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) {
        throw InputError(dir.string() + " is not a directory");
    }
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    std::vector<RunRecord> records;
    records.reserve(files.size());
    for (const std::filesystem::path& file : files) {
        records.push_back(read_run_record(file.string()));
    }
    return records;
}

}  // namespace vrpstw
