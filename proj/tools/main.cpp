// Command line front end: generate instances, run solver campaigns, score
// run records against the pooled reference front, and export that front.
//
// Exit codes: 0 success, 2 bad input, 3 malformed file, 4 other failures.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vrpstw/encoding.hpp"
#include "vrpstw/errors.hpp"
#include "vrpstw/harness.hpp"

namespace {

// Runs `emit` against the file at `path`, or stdout when the path is empty.
template <typename Emit>
void with_output(const std::string& path, Emit&& emit) {
    if (path.empty()) {
        emit(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw vrpstw::InputError("cannot open " + path + " for writing");
    }
    emit(out);
    out.flush();
    if (!out) {
        throw vrpstw::InputError("failed while writing " + path);
    }
}

struct GenerateArgs {
    std::vector<std::string> specs;
    std::uint64_t seed = 0;
    std::string out = ".";
    double capacity = 100.0;
    double horizon = 1000.0;
};

std::string safe_name(const std::string& name) {
    std::string out = name;
    for (char& c : out) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                        (c >= '0' && c <= '9') || c == '.' || c == '-' || c == '_';
        if (!ok) {
            c = '-';
        }
    }
    return out;
}

int do_generate(const GenerateArgs& args) {
    const std::filesystem::path out_dir(args.out);
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        throw vrpstw::InputError("cannot create " + out_dir.string() + ": " + ec.message());
    }

    std::vector<std::string> names;
    for (const std::string& text : args.specs) {
        const vrpstw::InstanceSpec spec = vrpstw::parse_spec(text);
        vrpstw::GenParams params;
        params.capacity = args.capacity;
        params.horizon = args.horizon;
        // Seed per spec, not per position: the same spec and seed give the
        // same bytes no matter what else is on the command line.
        const std::string canonical = vrpstw::format_spec(spec);
        vrpstw::Rng rng(vrpstw::run_seed(args.seed, canonical, "generate", 0));
        const vrpstw::Instance instance = vrpstw::generate(spec, params, rng);
        const std::string filename = safe_name(canonical) + ".txt";
        vrpstw::write_instance_file(instance, out_dir / filename);
        names.push_back(filename);
    }

    with_output((out_dir / "manifest.txt").string(), [&](std::ostream& out) {
        for (const std::string& name : names) {
            out << name << '\n';
        }
    });
    std::cout << "wrote " << names.size() << " instance file" << (names.size() == 1 ? "" : "s")
              << " and manifest.txt to " << out_dir.string() << '\n';
    return 0;
}

struct RunArgs {
    std::vector<std::string> instances;
    std::vector<std::string> algorithms;
    int runs = 100;
    std::uint64_t seed = 0;
    std::string out;
    int pop_size = 500;
    std::optional<double> p_mut;
    int stagnation = 10000;
    int jobs = 1;
};

int do_run(const RunArgs& args) {
    vrpstw::Campaign campaign;
    campaign.instance_files.assign(args.instances.begin(), args.instances.end());
    if (args.algorithms.empty()) {
        campaign.algorithms.assign(std::begin(vrpstw::kAllAlgorithms),
                                   std::end(vrpstw::kAllAlgorithms));
    } else {
        for (const std::string& name : args.algorithms) {
            campaign.algorithms.push_back(vrpstw::parse_algorithm(name));
        }
    }
    campaign.runs_per_config = args.runs;
    campaign.base_seed = args.seed;
    campaign.out_dir = args.out;
    campaign.jobs = args.jobs;
    campaign.pop_size = args.pop_size;
    campaign.stagnation_limit = args.stagnation;
    campaign.p_mut_override = args.p_mut;

    const vrpstw::CampaignResult result = vrpstw::run_campaign(campaign);
    for (const std::string& error : result.errors) {
        std::cerr << "error: " << error << '\n';
    }
    std::cout << "wrote " << result.records.size() << " run records to " << args.out;
    if (!result.errors.empty()) {
        std::cout << " (" << result.errors.size() << " failed)";
    }
    std::cout << '\n';
    return result.errors.empty() ? 0 : 2;
}

struct ScoreArgs {
    std::string in;
    std::string out;
};

int do_score(const ScoreArgs& args) {
    const std::vector<vrpstw::RunRecord> records = vrpstw::load_run_records(args.in);
    if (records.empty()) {
        throw vrpstw::InputError("no run records found in " + args.in);
    }
    const std::vector<vrpstw::ScoreRow> rows = vrpstw::score_records(records);
    with_output(args.out, [&](std::ostream& out) { vrpstw::write_score_csv(rows, out); });
    return 0;
}

struct ParetoArgs {
    std::string in;
    std::string instance;
    std::string out;
};

int do_pareto(const ParetoArgs& args) {
    std::vector<vrpstw::RunRecord> records = vrpstw::load_run_records(args.in);
    if (!args.instance.empty()) {
        std::erase_if(records,
                      [&](const vrpstw::RunRecord& r) { return r.instance != args.instance; });
    }
    if (records.empty()) {
        throw vrpstw::InputError("no run records" +
                                 (args.instance.empty() ? "" : " for instance " + args.instance) +
                                 " found in " + args.in);
    }
    for (const vrpstw::RunRecord& r : records) {
        if (r.instance != records.front().instance) {
            throw vrpstw::InputError("run records mix instances (" + records.front().instance +
                                     ", " + r.instance + "); pick one with --instance");
        }
    }

    // Points carry their chromosome as the label, so the exported front can
    // be traced back to concrete solutions.
    std::vector<vrpstw::Front> fronts;
    fronts.reserve(records.size());
    for (const vrpstw::RunRecord& record : records) {
        vrpstw::Front front;
        for (const vrpstw::ArchivePoint& point : record.archive) {
            front.points.push_back(point.objectives);
            front.labels.push_back(vrpstw::format_chromosome(point.chromosome));
        }
        fronts.push_back(std::move(front));
    }
    const vrpstw::Front reference = vrpstw::build_reference(fronts);
    with_output(args.out, [&](std::ostream& out) { vrpstw::write_front(reference, out); });
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multi-objective vehicle routing with soft time windows"};
    app.require_subcommand(1);

    GenerateArgs generate_args;
    CLI::App* generate = app.add_subcommand("generate", "generate classified instances");
    generate->add_option("--spec", generate_args.specs, "instance class(es), e.g. C;20;0.70;60")
        ->required();
    generate->add_option("--seed", generate_args.seed, "generator seed (default 0)");
    generate->add_option("--out", generate_args.out,
                         "output directory for instance files and manifest.txt (default .)");
    generate->add_option("--capacity", generate_args.capacity, "vehicle capacity (default 100)");
    generate->add_option("--horizon", generate_args.horizon, "depot horizon (default 1000)");

    RunArgs run_args;
    CLI::App* run = app.add_subcommand("run", "run solver campaigns and write run records");
    run->add_option("--instance", run_args.instances, "instance file(s)")->required();
    run->add_option("--algo", run_args.algorithms,
                    "algorithms: MOLSD, PMX, OBX, UOBX, UOBX2EX (default all)");
    run->add_option("--runs", run_args.runs, "runs per instance and algorithm (default 100)");
    run->add_option("--seed", run_args.seed, "campaign base seed (default 0)");
    run->add_option("--out", run_args.out, "directory for run records")->required();
    run->add_option("--pop-size", run_args.pop_size, "GA population size (default 500)");
    run->add_option("--p-mut", run_args.p_mut,
                    "mutation probability override (default: 0.1 for UOBX2EX, else 0)");
    run->add_option("--stagnation", run_args.stagnation,
                    "iterations without improvement before a GA run stops (default 10000)");
    run->add_option("--jobs", run_args.jobs, "parallel runs (default 1)");

    ScoreArgs score_args;
    CLI::App* score = app.add_subcommand("score", "aggregate run records into a score table");
    score->add_option("--in", score_args.in, "directory of run records")->required();
    score->add_option("--out", score_args.out, "CSV output file (default stdout)");

    ParetoArgs pareto_args;
    CLI::App* pareto =
        app.add_subcommand("pareto", "export the pooled nondominated front of run records");
    pareto->add_option("--in", pareto_args.in, "directory of run records")->required();
    pareto->add_option("--instance", pareto_args.instance, "restrict to one instance name");
    pareto->add_option("--out", pareto_args.out, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (generate->parsed()) {
            return do_generate(generate_args);
        }
        if (run->parsed()) {
            return do_run(run_args);
        }
        if (score->parsed()) {
            return do_score(score_args);
        }
        return do_pareto(pareto_args);
    } catch (const vrpstw::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const vrpstw::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    }
}
