#include "vrpstw/run_record.hpp"

#include <fstream>
#include <utility>

#include <json.hpp>

#include "vrpstw/errors.hpp"
#include "vrpstw/genetic.hpp"

namespace vrpstw {

namespace {

using nlohmann::json;

CrossoverKind crossover_from_name(const std::string& name) {
    if (name == "PMX") {
        return CrossoverKind::kPmx;
    }
    if (name == "OBX") {
        return CrossoverKind::kObx;
    }
    if (name == "UOBX") {
        return CrossoverKind::kUobx;
    }
    throw ParseError("unknown crossover name: " + name);
}

json config_to_json(const GaConfig& config) {
    return json{{"pop_size", config.pop_size},
                {"p_cross", config.p_cross},
                {"p_mut", config.p_mut},
                {"crossover", crossover_name(config.crossover)},
                {"stagnation_limit", config.stagnation_limit},
                {"f_min", config.f_min},
                {"f_max", config.f_max},
                {"seed", config.seed}};
}

GaConfig config_from_json(const json& j) {
    GaConfig config;
    config.pop_size = j.at("pop_size").get<int>();
    config.p_cross = j.at("p_cross").get<double>();
    config.p_mut = j.at("p_mut").get<double>();
    config.crossover = crossover_from_name(j.at("crossover").get<std::string>());
    config.stagnation_limit = j.at("stagnation_limit").get<int>();
    config.f_min = j.at("f_min").get<double>();
    config.f_max = j.at("f_max").get<double>();
    config.seed = j.at("seed").get<std::uint64_t>();
    return config;
}

}  // namespace

std::string to_json(const RunRecord& record) {
    json archive = json::array();
    for (const ArchivePoint& point : record.archive) {
        archive.push_back(json{{"objectives", point.objectives.g}, {"chromosome", point.chromosome}});
    }
    json j{{"instance", record.instance},
           {"algorithm", record.algorithm},
           {"seed", record.seed},
           {"evaluations", record.evaluations},
           {"iterations", record.iterations},
           {"wall_time_seconds", record.wall_time_seconds},
           {"archive", std::move(archive)}};
    if (record.ga_config) {
        j["ga_config"] = config_to_json(*record.ga_config);
    }
    return j.dump(2);
}

RunRecord run_record_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("run record is not valid JSON: ") + e.what());
    }
    try {
        RunRecord record;
        record.instance = j.at("instance").get<std::string>();
        record.algorithm = j.at("algorithm").get<std::string>();
        record.seed = j.at("seed").get<std::uint64_t>();
        record.evaluations = j.at("evaluations").get<std::int64_t>();
        record.iterations = j.at("iterations").get<std::int64_t>();
        record.wall_time_seconds = j.at("wall_time_seconds").get<double>();
        for (const json& point : j.at("archive")) {
            ArchivePoint p;
            const json& objectives = point.at("objectives");
            if (!objectives.is_array() || objectives.size() != kNumObjectives) {
                throw ParseError("archive point needs 4 objective values");
            }
            for (int k = 0; k < kNumObjectives; ++k) {
                p.objectives.g[k] = objectives[k].get<double>();
            }
            p.chromosome = point.at("chromosome").get<Chromosome>();
            record.archive.push_back(std::move(p));
        }
        if (j.contains("ga_config")) {
            record.ga_config = config_from_json(j.at("ga_config"));
        }
        return record;
    } catch (const json::exception& e) {
        throw ParseError(std::string("run record is missing or mistypes a field: ") + e.what());
    }
}

void write_run_record(const RunRecord& record, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw InputError("cannot open " + path + " for writing");
    }
    out << to_json(record) << '\n';
    out.flush();
    if (!out) {
        throw InputError("failed while writing " + path);
    }
}

RunRecord read_run_record(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open " + path);
    }
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    try {
        return run_record_from_json(text);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

}  // namespace vrpstw
