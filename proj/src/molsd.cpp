#include "vrpstw/molsd.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <string>
#include <unordered_set>
#include <utility>

#include "vrpstw/pareto.hpp"
#include "vrpstw/rng.hpp"

namespace vrpstw {

std::vector<Chromosome> reversal_neighborhood(const Chromosome& genes) {
    const int n = static_cast<int>(genes.size());
    std::vector<Chromosome> neighbors;
    if (n < 2) {
        return neighbors;
    }
    neighbors.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n - 1; ++i) {
        for (int j = i + 1; j < n; ++j) {
            Chromosome neighbor = genes;
            std::reverse(neighbor.begin() + i, neighbor.begin() + j + 1);
            neighbors.push_back(std::move(neighbor));
        }
    }
    return neighbors;
}

RunRecord molsd_run(const Instance& instance, std::uint64_t seed) {
    const auto start_time = std::chrono::steady_clock::now();
    Rng rng(seed);
    Archive archive;
    std::unordered_set<std::string> investigated;
    std::int64_t evaluations = 0;
    std::int64_t iterations = 0;

    auto offer = [&](Chromosome genes) {
        Solution solution = decode(instance, genes);
        solution.objectives = evaluate(instance, solution);
        ++evaluations;
        archive.insert(ArchiveEntry{std::move(genes), std::move(solution)});
    };

    offer(random_chromosome(rng, instance.customer_count()));

    // Investigated status sticks to the chromosome, not the archive slot:
    // an evicted member stays investigated even if an equal chromosome would
    // resurface.
    std::vector<std::size_t> open;
    for (;;) {
        open.clear();
        const auto& entries = archive.entries();
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (investigated.count(format_chromosome(entries[i].chromosome)) == 0) {
                open.push_back(i);
            }
        }
        if (open.empty()) {
            break;
        }
        std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
        // Copy: the expansion below may evict the member being expanded.
        const Chromosome genes = entries[open[pick(rng)]].chromosome;
        investigated.insert(format_chromosome(genes));
        ++iterations;
        for (Chromosome& neighbor : reversal_neighborhood(genes)) {
            offer(std::move(neighbor));
        }
    }

    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_time;

    RunRecord record;
    record.instance = instance.name();
    record.algorithm = "MOLSD";
    record.seed = seed;
    record.evaluations = evaluations;
    record.iterations = iterations;
    record.wall_time_seconds = elapsed.count();
    record.archive.reserve(archive.size());
    for (const ArchiveEntry& entry : archive.entries()) {
        record.archive.push_back(ArchivePoint{entry.objectives(), entry.chromosome});
    }
    return record;
}

}  // namespace vrpstw
