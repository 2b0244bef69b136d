#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "vrpstw/encoding.hpp"
#include "vrpstw/ga_config.hpp"
#include "vrpstw/model.hpp"
#include "vrpstw/pareto.hpp"
#include "vrpstw/rng.hpp"
#include "vrpstw/run_record.hpp"

namespace vrpstw {

// Partially mapped crossover with explicit gap cut points 1 <= cut1 < cut2
// <= N-1: child1 takes p2's segment [cut1, cut2) and keeps p1 elsewhere,
// resolving conflicts through the segment's positional mapping; child2
// symmetric.
std::pair<Chromosome, Chromosome> pmx_at(const Chromosome& p1, const Chromosome& p2, int cut1,
                                         int cut2);
std::pair<Chromosome, Chromosome> pmx(Rng& rng, const Chromosome& p1, const Chromosome& p2);

// Order-based crossover over an explicit position subset: the genes of p1 at
// selected positions are rearranged into their relative order in p2; child2
// symmetric with the parent roles swapped.
std::pair<Chromosome, Chromosome> obx_at(const Chromosome& p1, const Chromosome& p2,
                                         const std::vector<bool>& selected);
std::pair<Chromosome, Chromosome> obx(Rng& rng, const Chromosome& p1, const Chromosome& p2);

// Uniform order-based crossover: child1 keeps p1's genes at mask-1 positions
// and fills the rest with its missing genes in p2 order; child2 symmetric.
std::pair<Chromosome, Chromosome> uobx_at(const Chromosome& p1, const Chromosome& p2,
                                          const std::vector<bool>& keep);
std::pair<Chromosome, Chromosome> uobx(Rng& rng, const Chromosome& p1, const Chromosome& p2);

std::pair<Chromosome, Chromosome> crossover(CrossoverKind kind, Rng& rng, const Chromosome& p1,
                                            const Chromosome& p2);

// With probability p_mut exchanges two distinct uniformly chosen positions;
// the per-gene exchange probability works out to 2 p_mut / N.
Chromosome swap_mutation(Rng& rng, Chromosome genes, double p_mut);

struct PopulationMember {
    Chromosome chromosome;
    Solution solution;
    int xi = 0;
    double fitness = 0.0;
};

// Roulette wheel over member fitness values; all fitness must be positive.
std::size_t select_parent(Rng& rng, const std::vector<PopulationMember>& members);

struct OfferResult {
    bool accepted = false;
    bool evaluated = false;       // false for genotype duplicates
    int xi = 0;                   // child's count against the pre-insert population
};

// Steady-state GA state: a duplicate-free population of constant size plus
// the global nondominated archive. One step selects two parents by roulette,
// recombines, mutates, and offers both children; a child replaces the
// current highest-xi member only when its own xi is strictly lower.
class GaState {
  public:
    GaState(const Instance& instance, GaConfig config);

    // Starts from the given chromosomes instead of random ones. They must
    // form a duplicate-free population of exactly pop_size.
    GaState(const Instance& instance, GaConfig config, std::vector<Chromosome> initial);

    void step();

    // Offers one candidate to the population and the archive.
    OfferResult offer(const Chromosome& child);

    bool stagnated() const { return stagnation_ >= config_.stagnation_limit; }
    int stagnation() const { return stagnation_; }

    const std::vector<PopulationMember>& population() const { return members_; }
    const Archive& archive() const { return archive_; }
    std::int64_t evaluations() const { return evaluations_; }
    std::int64_t iterations() const { return iterations_; }
    const GaConfig& config() const { return config_; }

    // Test hook: observes every evaluated objective vector.
    void set_evaluation_listener(std::function<void(const ObjectiveVector&)> listener);

  private:
    void insert_initial(std::vector<Chromosome> initial);
    void init_random();
    bool add_founder(Chromosome genes);
    void finish_init();
    void assign_fitness();
    OfferResult offer_internal(const Chromosome& child);

    const Instance& instance_;
    GaConfig config_;
    Rng rng_;
    std::vector<PopulationMember> members_;
    std::vector<ObjectiveVector> member_objectives_;  // mirror of members_ for tight scans
    Archive archive_;
    std::unordered_set<std::string> genotype_keys_;
    std::unordered_set<std::string> phenotype_keys_;
    std::int64_t evaluations_ = 0;
    std::int64_t iterations_ = 0;
    int stagnation_ = 0;
    std::function<void(const ObjectiveVector&)> listener_;
};

// Runs the GA until stagnation_limit consecutive iterations accept no new
// nondominated individual. The algorithm label lands in the record.
RunRecord ga_run(const Instance& instance, const GaConfig& config, std::string algorithm_label);

}  // namespace vrpstw
