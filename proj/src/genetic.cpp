#include "vrpstw/genetic.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <tuple>

#include "vrpstw/errors.hpp"

namespace vrpstw {

std::string crossover_name(CrossoverKind kind) {
    switch (kind) {
        case CrossoverKind::kPmx:
            return "PMX";
        case CrossoverKind::kObx:
            return "OBX";
        case CrossoverKind::kUobx:
            return "UOBX";
    }
    throw InputError("unknown crossover kind");
}

void validate(const GaConfig& config) {
    if (config.pop_size < 2) {
        throw InputError("population size must be at least 2");
    }
    if (config.p_cross < 0.0 || config.p_cross > 1.0) {
        throw InputError("crossover probability must lie in [0, 1]");
    }
    if (config.p_mut < 0.0 || config.p_mut > 1.0) {
        throw InputError("mutation probability must lie in [0, 1]");
    }
    if (config.stagnation_limit < 1) {
        throw InputError("stagnation limit must be positive");
    }
    if (!(config.f_min > 0.0) || !(config.f_max > config.f_min)) {
        throw InputError("fitness bounds must satisfy 0 < f_min < f_max");
    }
}

namespace {

void require_parents(const Chromosome& p1, const Chromosome& p2) {
    if (p1.size() != p2.size() || !is_valid_permutation(p1) || !is_valid_permutation(p2)) {
        throw InputError("crossover needs two permutations over the same ids");
    }
}

}  // namespace

std::pair<Chromosome, Chromosome> pmx_at(const Chromosome& p1, const Chromosome& p2, int cut1,
                                         int cut2) {
    require_parents(p1, p2);
    const int n = static_cast<int>(p1.size());
    if (cut1 < 1 || cut1 >= cut2 || cut2 > n - 1) {
        throw InputError("PMX cut points must satisfy 1 <= cut1 < cut2 <= N-1");
    }
    // child = `keep` outside [cut1, cut2), `seg` inside; conflicts outside
    // walk the positional mapping seg[i] -> keep[i] until they leave the
    // segment.
    auto cross_one = [&](const Chromosome& keep, const Chromosome& seg) {
        Chromosome child = keep;
        std::vector<int> seg_pos(static_cast<std::size_t>(n) + 1, -1);
        for (int i = cut1; i < cut2; ++i) {
            child[i] = seg[i];
            seg_pos[seg[i]] = i;
        }
        for (int i = 0; i < n; ++i) {
            if (i >= cut1 && i < cut2) {
                continue;
            }
            int v = keep[i];
            while (seg_pos[v] != -1) {
                v = keep[seg_pos[v]];
            }
            child[i] = v;
        }
        return child;
    };
    return {cross_one(p1, p2), cross_one(p2, p1)};
}

std::pair<Chromosome, Chromosome> pmx(Rng& rng, const Chromosome& p1, const Chromosome& p2) {
    const int n = static_cast<int>(p1.size());
    if (n < 3) {
        throw InputError("PMX needs at least 3 genes");
    }
    // Uniform over distinct interior gap pairs, exactly two draws.
    std::uniform_int_distribution<int> first(1, n - 1);
    std::uniform_int_distribution<int> second(1, n - 2);
    const int a = first(rng);
    int b = second(rng);
    if (b >= a) {
        ++b;
    }
    return pmx_at(p1, p2, std::min(a, b), std::max(a, b));
}

std::pair<Chromosome, Chromosome> obx_at(const Chromosome& p1, const Chromosome& p2,
                                         const std::vector<bool>& selected) {
    require_parents(p1, p2);
    const int n = static_cast<int>(p1.size());
    if (static_cast<int>(selected.size()) != n) {
        throw InputError("OBX needs one mask bit per position");
    }
    // The genes of `base` at selected positions reappear there in their
    // relative order within `order`.
    auto cross_one = [&](const Chromosome& base, const Chromosome& order) {
        Chromosome child = base;
        std::vector<char> chosen(static_cast<std::size_t>(n) + 1, 0);
        for (int i = 0; i < n; ++i) {
            if (selected[i]) {
                chosen[base[i]] = 1;
            }
        }
        std::vector<int> reordered;
        reordered.reserve(static_cast<std::size_t>(n));
        for (int v : order) {
            if (chosen[v]) {
                reordered.push_back(v);
            }
        }
        std::size_t k = 0;
        for (int i = 0; i < n; ++i) {
            if (selected[i]) {
                child[i] = reordered[k++];
            }
        }
        return child;
    };
    return {cross_one(p1, p2), cross_one(p2, p1)};
}

std::pair<Chromosome, Chromosome> obx(Rng& rng, const Chromosome& p1, const Chromosome& p2) {
    std::bernoulli_distribution coin(0.5);
    std::vector<bool> selected(p1.size());
    for (std::size_t i = 0; i < selected.size(); ++i) {
        selected[i] = coin(rng);
    }
    return obx_at(p1, p2, selected);
}

std::pair<Chromosome, Chromosome> uobx_at(const Chromosome& p1, const Chromosome& p2,
                                          const std::vector<bool>& keep) {
    require_parents(p1, p2);
    const int n = static_cast<int>(p1.size());
    if (static_cast<int>(keep.size()) != n) {
        throw InputError("UOBX needs one mask bit per position");
    }
    auto cross_one = [&](const Chromosome& keeper, const Chromosome& filler) {
        Chromosome child(static_cast<std::size_t>(n));
        std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
        for (int i = 0; i < n; ++i) {
            if (keep[i]) {
                child[i] = keeper[i];
                used[keeper[i]] = 1;
            }
        }
        std::size_t k = 0;
        for (int i = 0; i < n; ++i) {
            if (keep[i]) {
                continue;
            }
            while (used[filler[k]]) {
                ++k;
            }
            child[i] = filler[k];
            used[filler[k]] = 1;
        }
        return child;
    };
    return {cross_one(p1, p2), cross_one(p2, p1)};
}

std::pair<Chromosome, Chromosome> uobx(Rng& rng, const Chromosome& p1, const Chromosome& p2) {
    std::bernoulli_distribution coin(0.5);
    std::vector<bool> keep(p1.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        keep[i] = coin(rng);
    }
    return uobx_at(p1, p2, keep);
}

std::pair<Chromosome, Chromosome> crossover(CrossoverKind kind, Rng& rng, const Chromosome& p1,
                                            const Chromosome& p2) {
    switch (kind) {
        case CrossoverKind::kPmx:
            return pmx(rng, p1, p2);
        case CrossoverKind::kObx:
            return obx(rng, p1, p2);
        case CrossoverKind::kUobx:
            return uobx(rng, p1, p2);
    }
    throw InputError("unknown crossover kind");
}

Chromosome swap_mutation(Rng& rng, Chromosome genes, double p_mut) {
    if (p_mut < 0.0 || p_mut > 1.0) {
        throw InputError("mutation probability must lie in [0, 1]");
    }
    const int n = static_cast<int>(genes.size());
    if (n < 2) {
        return genes;
    }
    std::bernoulli_distribution fire(p_mut);
    if (!fire(rng)) {
        return genes;
    }
    std::uniform_int_distribution<int> first(0, n - 1);
    std::uniform_int_distribution<int> second(0, n - 2);
    const int i = first(rng);
    int j = second(rng);
    if (j >= i) {
        ++j;
    }
    std::swap(genes[i], genes[j]);
    return genes;
}

std::size_t select_parent(Rng& rng, const std::vector<PopulationMember>& members) {
    if (members.empty()) {
        throw InputError("selection needs a nonempty population");
    }
    double total = 0.0;
    for (const PopulationMember& m : members) {
        if (!(m.fitness > 0.0)) {
            throw InputError("roulette selection needs positive fitness");
        }
        total += m.fitness;
    }
    std::uniform_real_distribution<double> wheel(0.0, total);
    double ticket = wheel(rng);
    for (std::size_t i = 0; i < members.size(); ++i) {
        ticket -= members[i].fitness;
        if (ticket <= 0.0) {
            return i;
        }
    }
    return members.size() - 1;  // floating-point slack lands on the last slot
}

GaState::GaState(const Instance& instance, GaConfig config)
    : instance_(instance), config_(config), rng_(config.seed) {
    validate(config_);
    init_random();
}

GaState::GaState(const Instance& instance, GaConfig config, std::vector<Chromosome> initial)
    : instance_(instance), config_(config), rng_(config.seed) {
    validate(config_);
    insert_initial(std::move(initial));
}

void GaState::init_random() {
    const int n = instance_.customer_count();
    // Refuse setups where a duplicate-free population cannot exist.
    double permutations = 1.0;
    for (int i = 2; i <= n && permutations < 1e9; ++i) {
        permutations *= i;
    }
    if (permutations < config_.pop_size) {
        throw InputError("population size exceeds the number of distinct chromosomes");
    }
    const long attempt_cap = 100L * config_.pop_size;
    long attempts = 0;
    while (static_cast<int>(members_.size()) < config_.pop_size) {
        if (++attempts > attempt_cap) {
            throw InputError("could not seed a duplicate-free population; too few distinct solutions");
        }
        add_founder(random_chromosome(rng_, n));
    }
    finish_init();
}

void GaState::insert_initial(std::vector<Chromosome> initial) {
    if (static_cast<int>(initial.size()) != config_.pop_size) {
        throw InputError("initial population must hold exactly pop_size chromosomes");
    }
    for (Chromosome& genes : initial) {
        if (!add_founder(std::move(genes))) {
            throw InputError("initial population contains duplicates");
        }
    }
    finish_init();
}

bool GaState::add_founder(Chromosome genes) {
    std::string genotype = format_chromosome(genes);
    if (genotype_keys_.count(genotype) != 0) {
        return false;
    }
    Solution solution = decode(instance_, genes);
    solution.objectives = evaluate(instance_, solution);
    ++evaluations_;
    if (listener_) {
        listener_(solution.objectives);
    }
    archive_.insert(ArchiveEntry{genes, solution});
    std::string phenotype = canonical_key(solution);
    if (phenotype_keys_.count(phenotype) != 0) {
        return false;
    }
    member_objectives_.push_back(solution.objectives);
    members_.push_back(PopulationMember{std::move(genes), std::move(solution), 0, 0.0});
    genotype_keys_.insert(std::move(genotype));
    phenotype_keys_.insert(std::move(phenotype));
    return true;
}

void GaState::finish_init() {
    const std::vector<int> counts = xi_counts(member_objectives_);
    for (std::size_t i = 0; i < members_.size(); ++i) {
        members_[i].xi = counts[i];
    }
    assign_fitness();
}

void GaState::assign_fitness() {
    int xi_max = 0;
    for (const PopulationMember& m : members_) {
        xi_max = std::max(xi_max, m.xi);
    }
    for (PopulationMember& m : members_) {
        m.fitness = fitness(m.xi, xi_max, config_.f_min, config_.f_max);
    }
}

void GaState::step() {
    ++iterations_;
    const std::size_t i1 = select_parent(rng_, members_);
    const std::size_t i2 = select_parent(rng_, members_);
    Chromosome child1;
    Chromosome child2;
    std::bernoulli_distribution recombine(config_.p_cross);
    if (recombine(rng_)) {
        std::tie(child1, child2) =
            crossover(config_.crossover, rng_, members_[i1].chromosome, members_[i2].chromosome);
    } else {
        child1 = members_[i1].chromosome;
        child2 = members_[i2].chromosome;
    }
    child1 = swap_mutation(rng_, std::move(child1), config_.p_mut);
    child2 = swap_mutation(rng_, std::move(child2), config_.p_mut);
    // The second child is measured against the population as the first one
    // left it.
    const OfferResult r1 = offer_internal(child1);
    const OfferResult r2 = offer_internal(child2);
    const bool improved = (r1.accepted && r1.xi == 0) || (r2.accepted && r2.xi == 0);
    if (improved) {
        stagnation_ = 0;
    } else {
        ++stagnation_;
    }
}

OfferResult GaState::offer(const Chromosome& child) { return offer_internal(child); }

OfferResult GaState::offer_internal(const Chromosome& child) {
    OfferResult result;
    const std::string genotype = format_chromosome(child);
    if (genotype_keys_.count(genotype) != 0) {
        return result;  // rejected before evaluation
    }
    Solution solution = decode(instance_, child);
    solution.objectives = evaluate(instance_, solution);
    ++evaluations_;
    result.evaluated = true;
    if (listener_) {
        listener_(solution.objectives);
    }
    // The archive sees every evaluated candidate, even ones the population
    // rejects; that keeps it nondominated against everything ever evaluated.
    archive_.insert(ArchiveEntry{child, solution});

    const std::string phenotype = canonical_key(solution);
    if (phenotype_keys_.count(phenotype) != 0) {
        return result;
    }
    const ObjectiveVector child_obj = solution.objectives;
    int xi = 0;
    for (const ObjectiveVector& v : member_objectives_) {
        if (dominates(v, child_obj)) {
            ++xi;
        }
    }
    result.xi = xi;

    int worst_xi = -1;
    std::size_t worst = 0;
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (members_[i].xi > worst_xi) {
            worst_xi = members_[i].xi;
            worst = i;
        }
    }
    if (xi >= worst_xi) {
        return result;  // ties keep the incumbent
    }

    // Splice the child into the worst slot, patching the xi counts of the
    // survivors instead of recounting the whole population. The evicted
    // member cannot have dominated the child: everything dominating the
    // evictee would dominate the child too, contradicting xi < worst_xi.
    genotype_keys_.erase(format_chromosome(members_[worst].chromosome));
    phenotype_keys_.erase(canonical_key(members_[worst].solution));
    const ObjectiveVector worst_obj = member_objectives_[worst];
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i == worst) {
            continue;
        }
        if (dominates(worst_obj, member_objectives_[i])) {
            --members_[i].xi;
        }
        if (dominates(child_obj, member_objectives_[i])) {
            ++members_[i].xi;
        }
    }
    members_[worst] = PopulationMember{child, std::move(solution), xi, 0.0};
    member_objectives_[worst] = child_obj;
    genotype_keys_.insert(genotype);
    phenotype_keys_.insert(phenotype);
    assign_fitness();
    result.accepted = true;
    return result;
}

void GaState::set_evaluation_listener(std::function<void(const ObjectiveVector&)> listener) {
    listener_ = std::move(listener);
}

RunRecord ga_run(const Instance& instance, const GaConfig& config, std::string algorithm_label) {
    const auto start = std::chrono::steady_clock::now();
    GaState state(instance, config);
    while (!state.stagnated()) {
        state.step();
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

    RunRecord record;
    record.instance = instance.name();
    record.algorithm = std::move(algorithm_label);
    record.seed = config.seed;
    record.evaluations = state.evaluations();
    record.iterations = state.iterations();
    record.wall_time_seconds = elapsed.count();
    record.ga_config = config;
    record.archive.reserve(state.archive().size());
    for (const ArchiveEntry& entry : state.archive().entries()) {
        record.archive.push_back(ArchivePoint{entry.objectives(), entry.chromosome});
    }
    return record;
}

}  // namespace vrpstw
