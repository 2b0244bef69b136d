#include <doctest.h>

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <vector>

#include "vrpstw/errors.hpp"
#include "vrpstw/genetic.hpp"
#include "test_support.hpp"

using namespace vrpstw;

namespace {

// Distinct-phenotype chromosomes for an explicit initial population: random
// permutations screened through the decoder so no two share a route set.
std::vector<Chromosome> distinct_founders(const Instance& instance, int count,
                                          std::uint64_t seed) {
    Rng rng(seed);
    std::set<std::string> keys;
    std::vector<Chromosome> founders;
    while (static_cast<int>(founders.size()) < count) {
        Chromosome genes = random_chromosome(rng, instance.customer_count());
        if (keys.insert(canonical_key(decode(instance, genes))).second) {
            founders.push_back(std::move(genes));
        }
    }
    return founders;
}

std::vector<ObjectiveVector> population_objectives(const GaState& state) {
    std::vector<ObjectiveVector> vectors;
    for (const PopulationMember& m : state.population()) {
        vectors.push_back(m.solution.objectives);
    }
    return vectors;
}

// The population invariants that every mutation of the state must preserve.
void check_population_invariants(const Instance& instance, const GaState& state) {
    const auto& members = state.population();
    REQUIRE(static_cast<int>(members.size()) == state.config().pop_size);

    std::set<std::string> genotypes;
    std::set<std::string> phenotypes;
    for (const PopulationMember& m : members) {
        genotypes.insert(format_chromosome(m.chromosome));
        phenotypes.insert(canonical_key(m.solution));
        // Cached objectives belong to the cached solution.
        CHECK(m.solution.objectives == evaluate(instance, m.solution));
    }
    CHECK(genotypes.size() == members.size());
    CHECK(phenotypes.size() == members.size());

    const std::vector<int> counts = xi_counts(population_objectives(state));
    int xi_max = 0;
    for (int c : counts) {
        xi_max = std::max(xi_max, c);
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
        CHECK(members[i].xi == counts[i]);
        const double expected =
            xi_max == 0 ? state.config().f_max
                        : state.config().f_max - static_cast<double>(counts[i]) *
                              (state.config().f_max - state.config().f_min) / xi_max;
        CHECK(members[i].fitness == expected);
    }
}

}  // namespace

TEST_SUITE_BEGIN("genetic");

TEST_CASE("configuration validation") {
    GaConfig config;
    CHECK_NOTHROW(validate(config));

    GaConfig bad = config;
    bad.pop_size = 1;
    CHECK_THROWS_AS(validate(bad), InputError);
    bad = config;
    bad.p_cross = 1.5;
    CHECK_THROWS_AS(validate(bad), InputError);
    bad = config;
    bad.p_mut = -0.1;
    CHECK_THROWS_AS(validate(bad), InputError);
    bad = config;
    bad.stagnation_limit = 0;
    CHECK_THROWS_AS(validate(bad), InputError);
    bad = config;
    bad.f_min = 0.0;
    CHECK_THROWS_AS(validate(bad), InputError);
    bad = config;
    bad.f_max = bad.f_min;
    CHECK_THROWS_AS(validate(bad), InputError);

    CHECK(crossover_name(CrossoverKind::kPmx) == "PMX");
    CHECK(crossover_name(CrossoverKind::kObx) == "OBX");
    CHECK(crossover_name(CrossoverKind::kUobx) == "UOBX");
}

TEST_CASE("PMX resolves segment conflicts through the positional mapping") {
    const Chromosome p1{1, 2, 3, 4, 5, 6, 7, 8, 9};
    const Chromosome p2{9, 3, 7, 8, 2, 6, 5, 1, 4};
    const auto [c1, c2] = pmx_at(p1, p2, 3, 6);
    CHECK(c1 == Chromosome{1, 5, 3, 8, 2, 6, 7, 4, 9});
    CHECK(c2 == Chromosome{9, 3, 7, 4, 5, 6, 2, 1, 8});
}

TEST_CASE("PMX validates parents and cut points") {
    const Chromosome p1{1, 2, 3, 4, 5};
    const Chromosome p2{5, 4, 3, 2, 1};
    CHECK_THROWS_AS(pmx_at(p1, {1, 2, 3}, 1, 2), InputError);
    CHECK_THROWS_AS(pmx_at(p1, {1, 2, 3, 4, 4}, 1, 2), InputError);
    CHECK_THROWS_AS(pmx_at(p1, p2, 0, 2), InputError);   // cut through the left edge
    CHECK_THROWS_AS(pmx_at(p1, p2, 2, 2), InputError);   // empty segment
    CHECK_THROWS_AS(pmx_at(p1, p2, 3, 2), InputError);   // reversed
    CHECK_THROWS_AS(pmx_at(p1, p2, 1, 5), InputError);   // cut through the right edge
    CHECK_NOTHROW(pmx_at(p1, p2, 1, 4));

    Rng rng(41);
    CHECK_THROWS_AS(pmx(rng, {1, 2}, {2, 1}), InputError);  // no interior gap pair exists
}

TEST_CASE("OBX rewrites the selected genes into the other parent's order") {
    const Chromosome p1{1, 2, 3, 4, 5, 6, 7, 8};
    const Chromosome p2{2, 4, 6, 8, 7, 5, 3, 1};
    const std::vector<bool> selected{false, true, false, true, true, false, true, false};
    const auto [c1, c2] = obx_at(p1, p2, selected);
    CHECK(c1 == Chromosome{1, 2, 3, 4, 7, 6, 5, 8});
    CHECK(c2 == Chromosome{2, 3, 6, 4, 7, 5, 8, 1});
}

TEST_CASE("OBX edge masks degenerate as expected") {
    const Chromosome p1{3, 1, 4, 2};
    const Chromosome p2{2, 4, 1, 3};
    SUBCASE("empty selection copies the parents") {
        const auto [c1, c2] = obx_at(p1, p2, {false, false, false, false});
        CHECK(c1 == p1);
        CHECK(c2 == p2);
    }
    SUBCASE("full selection swaps the parents") {
        const auto [c1, c2] = obx_at(p1, p2, {true, true, true, true});
        CHECK(c1 == p2);
        CHECK(c2 == p1);
    }
    SUBCASE("mask length must match") {
        CHECK_THROWS_AS(obx_at(p1, p2, {true, false}), InputError);
    }
}

TEST_CASE("UOBX keeps masked genes and fills the gaps in the other parent's order") {
    const Chromosome p1{1, 2, 3, 4, 5, 6, 7, 8};
    const Chromosome p2{3, 1, 4, 2, 8, 6, 5, 7};
    const std::vector<bool> keep{true, false, true, false, false, true, false, true};
    const auto [c1, c2] = uobx_at(p1, p2, keep);
    CHECK(c1 == Chromosome{1, 4, 3, 2, 5, 6, 7, 8});
    CHECK(c2 == Chromosome{3, 1, 4, 2, 5, 6, 8, 7});
}

TEST_CASE("UOBX edge masks degenerate as expected") {
    const Chromosome p1{3, 1, 4, 2};
    const Chromosome p2{2, 4, 1, 3};
    SUBCASE("keep-all copies the parents") {
        const auto [c1, c2] = uobx_at(p1, p2, {true, true, true, true});
        CHECK(c1 == p1);
        CHECK(c2 == p2);
    }
    SUBCASE("keep-none swaps the parents") {
        const auto [c1, c2] = uobx_at(p1, p2, {false, false, false, false});
        CHECK(c1 == p2);
        CHECK(c2 == p1);
    }
    SUBCASE("mask length must match") {
        CHECK_THROWS_AS(uobx_at(p1, p2, {true}), InputError);
    }
}

TEST_CASE("all operators produce permutations and map identical parents to themselves") {
    Rng rng(42);
    const CrossoverKind kinds[] = {CrossoverKind::kPmx, CrossoverKind::kObx,
                                   CrossoverKind::kUobx};
    for (CrossoverKind kind : kinds) {
        for (int trial = 0; trial < 300; ++trial) {
            const int n = 5 + static_cast<int>(rng() % 26);
            const Chromosome p1 = random_chromosome(rng, n);
            const Chromosome p2 = random_chromosome(rng, n);
            const auto [c1, c2] = crossover(kind, rng, p1, p2);
            CHECK(c1.size() == p1.size());
            CHECK(c2.size() == p2.size());
            CHECK(is_valid_permutation(c1));
            CHECK(is_valid_permutation(c2));

            const auto [s1, s2] = crossover(kind, rng, p1, p1);
            CHECK(s1 == p1);
            CHECK(s2 == p1);
        }
    }
}

TEST_CASE("swap mutation fires as a whole-individual event") {
    Rng rng(43);
    const Chromosome genes{4, 1, 5, 2, 3};
    SUBCASE("probability zero never changes anything") {
        for (int i = 0; i < 100; ++i) {
            CHECK(swap_mutation(rng, genes, 0.0) == genes);
        }
    }
    SUBCASE("probability one always exchanges exactly two genes") {
        for (int i = 0; i < 200; ++i) {
            const Chromosome mutated = swap_mutation(rng, genes, 1.0);
            int changed = 0;
            for (std::size_t k = 0; k < genes.size(); ++k) {
                changed += mutated[k] != genes[k] ? 1 : 0;
            }
            CHECK(changed == 2);
            CHECK(is_valid_permutation(mutated));
        }
    }
    SUBCASE("single-gene chromosomes have nothing to exchange") {
        CHECK(swap_mutation(rng, {1}, 1.0) == Chromosome{1});
    }
    SUBCASE("the probability is validated") {
        CHECK_THROWS_AS(swap_mutation(rng, genes, -0.01), InputError);
        CHECK_THROWS_AS(swap_mutation(rng, genes, 1.01), InputError);
    }
}

TEST_CASE("each gene position moves with probability 2 p_mut / N") {
    Rng rng(44);
    const int n = 100;
    const int trials = 100000;
    const double p_mut = 0.5;
    Chromosome base(n);
    for (int i = 0; i < n; ++i) {
        base[i] = i + 1;
    }
    std::vector<int> changed(n, 0);
    long total_changed = 0;
    for (int t = 0; t < trials; ++t) {
        const Chromosome mutated = swap_mutation(rng, base, p_mut);
        for (int i = 0; i < n; ++i) {
            if (mutated[i] != base[i]) {
                ++changed[i];
                ++total_changed;
            }
        }
    }
    // Expected per-position rate 2 * 0.5 / 100 = 0.01. The overall average
    // over 10^7 position observations sits within +-5 sigma of it, and each
    // single position (10^5 observations, sigma ~ 31.5 on a mean of 1000)
    // stays inside a generous +-5 sigma band. A sampler that can never pick
    // the last position, or that fires per gene, lands far outside.
    const double overall = static_cast<double>(total_changed) / (static_cast<double>(trials) * n);
    CHECK(overall > 0.0095);
    CHECK(overall < 0.0105);
    for (int i = 0; i < n; ++i) {
        CAPTURE(i);
        CHECK(changed[i] >= 843);
        CHECK(changed[i] <= 1158);
    }
}

TEST_CASE("roulette selection is proportional to fitness") {
    Rng rng(45);
    std::vector<PopulationMember> members(2);
    members[0].fitness = 100.0;
    members[1].fitness = 9.0;

    const int trials = 100000;
    int first = 0;
    for (int t = 0; t < trials; ++t) {
        const std::size_t pick = select_parent(rng, members);
        REQUIRE(pick < members.size());
        first += pick == 0 ? 1 : 0;
    }
    // Expected share 100/109 = 0.91743, +-5 sigma = 0.0044.
    const double share = static_cast<double>(first) / trials;
    CHECK(share > 0.9130);
    CHECK(share < 0.9218);
}

TEST_CASE("roulette selection validates its input") {
    Rng rng(46);
    CHECK_THROWS_AS(select_parent(rng, {}), InputError);
    std::vector<PopulationMember> members(2);
    members[0].fitness = 10.0;
    members[1].fitness = 0.0;
    CHECK_THROWS_AS(select_parent(rng, members), InputError);
    members[1].fitness = -1.0;
    CHECK_THROWS_AS(select_parent(rng, members), InputError);

    std::vector<PopulationMember> single(1);
    single[0].fitness = 5.0;
    CHECK(select_parent(rng, single) == 0);
}

TEST_CASE("random initialization produces a duplicate-free evaluated population") {
    const Instance instance = testsup::generous_instance(9);
    GaConfig config;
    config.pop_size = 20;
    config.stagnation_limit = 5;
    config.seed = 47;
    GaState state(instance, config);

    check_population_invariants(instance, state);
    // On an instance where chromosome and route set are in bijection, the
    // genotype screen already blocks every duplicate, so each founder costs
    // exactly one evaluation.
    CHECK(state.evaluations() == 20);
    CHECK(state.iterations() == 0);
    CHECK(state.stagnation() == 0);
    CHECK_FALSE(state.archive().empty());
}

TEST_CASE("initialization refuses populations larger than the chromosome space") {
    const Instance instance = testsup::pythagorean_instance();  // 3! = 6 chromosomes
    GaConfig config;
    config.pop_size = 10;
    CHECK_THROWS_AS(GaState(instance, config), InputError);
}

TEST_CASE("explicit initial populations are validated and preserved in order") {
    const Instance instance = testsup::forcing_instance();
    GaConfig config;
    config.pop_size = 4;
    config.seed = 48;

    std::vector<Chromosome> initial = distinct_founders(instance, 4, 49);
    GaState state(instance, config, initial);
    for (std::size_t i = 0; i < initial.size(); ++i) {
        CHECK(state.population()[i].chromosome == initial[i]);
    }
    check_population_invariants(instance, state);

    SUBCASE("wrong size") {
        initial.pop_back();
        CHECK_THROWS_AS(GaState(instance, config, initial), InputError);
    }
    SUBCASE("genotype duplicate") {
        initial[3] = initial[0];
        CHECK_THROWS_AS(GaState(instance, config, initial), InputError);
    }
    SUBCASE("phenotype duplicate under different genotypes") {
        // Both tours split into the same three routes against capacity 10.
        initial[0] = {5, 2, 1, 3, 7, 9, 8, 4, 6, 10};
        initial[3] = {3, 7, 9, 8, 5, 2, 1, 4, 6, 10};
        REQUIRE(initial[0] != initial[3]);
        CHECK_THROWS_AS(GaState(instance, config, initial), InputError);
    }
}

TEST_CASE("offers reject duplicates at the right stage") {
    const Instance instance = testsup::forcing_instance();
    GaConfig config;
    config.pop_size = 4;
    config.seed = 50;
    std::vector<Chromosome> initial = distinct_founders(instance, 3, 51);
    initial.push_back({5, 2, 1, 3, 7, 9, 8, 4, 6, 10});
    // distinct_founders may have produced that phenotype already; rebuild if so.
    {
        std::set<std::string> keys;
        for (const Chromosome& genes : initial) {
            keys.insert(canonical_key(decode(instance, genes)));
        }
        REQUIRE(keys.size() == 4);  // fixture seeds are chosen to avoid the clash
    }
    GaState state(instance, config, initial);
    const auto before = state.population();
    const std::int64_t evals_before = state.evaluations();

    SUBCASE("genotype duplicates are rejected before evaluation") {
        const OfferResult result = state.offer(initial[1]);
        CHECK_FALSE(result.accepted);
        CHECK_FALSE(result.evaluated);
        CHECK(state.evaluations() == evals_before);
        CHECK(state.population().size() == before.size());
    }
    SUBCASE("phenotype duplicates cost an evaluation but never enter") {
        const OfferResult result = state.offer({3, 7, 9, 8, 5, 2, 1, 4, 6, 10});
        CHECK_FALSE(result.accepted);
        CHECK(result.evaluated);
        CHECK(state.evaluations() == evals_before + 1);
        // Population is untouched.
        for (std::size_t i = 0; i < before.size(); ++i) {
            CHECK(state.population()[i].chromosome == before[i].chromosome);
        }
    }
}

TEST_CASE("offers replace the first worst member exactly when the child ranks better") {
    const Instance instance = testsup::generous_instance(8);
    GaConfig config;
    config.pop_size = 15;
    config.seed = 52;
    GaState state(instance, config);

    Rng rng(53);
    int accepted = 0;
    int rejected_on_rank = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const Chromosome candidate = random_chromosome(rng, 8);
        const auto before = state.population();
        const std::vector<ObjectiveVector> before_objs = population_objectives(state);

        const OfferResult result = state.offer(candidate);
        if (!result.evaluated) {
            continue;  // genotype duplicate: a no-op by design
        }

        // Recompute the child's rank against the pre-offer population.
        const Solution child_solution = decode(instance, candidate);
        const ObjectiveVector child_obj = evaluate(instance, child_solution);
        int child_xi = 0;
        for (const ObjectiveVector& v : before_objs) {
            if (dominates(v, child_obj)) {
                ++child_xi;
            }
        }
        int worst_xi = -1;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < before.size(); ++i) {
            if (before[i].xi > worst_xi) {
                worst_xi = before[i].xi;
                worst = i;
            }
        }

        if (result.accepted) {
            ++accepted;
            CHECK(result.xi == child_xi);
            CHECK(child_xi < worst_xi);
            // The first highest-ranked member gave up its slot.
            CHECK(state.population()[worst].chromosome == candidate);
            for (const PopulationMember& m : state.population()) {
                CHECK(format_chromosome(m.chromosome) !=
                      format_chromosome(before[worst].chromosome));
            }
            check_population_invariants(instance, state);
        } else {
            ++rejected_on_rank;
            CHECK(child_xi >= worst_xi);  // ties keep the incumbent
            for (std::size_t i = 0; i < before.size(); ++i) {
                CHECK(state.population()[i].chromosome == before[i].chromosome);
            }
        }
    }
    // The stream must exercise both branches to prove anything.
    CHECK(accepted > 0);
    CHECK(rejected_on_rank > 0);
}

TEST_CASE("the archive tracks the nondominated set of everything evaluated") {
    const Instance instance = testsup::forcing_instance();
    GaConfig config;
    config.pop_size = 8;
    config.crossover = CrossoverKind::kUobx;
    config.p_mut = 0.1;
    config.stagnation_limit = 1000;
    config.seed = 54;

    const std::vector<Chromosome> initial = distinct_founders(instance, 8, 55);
    GaState state(instance, config, initial);

    std::vector<ObjectiveVector> observed = population_objectives(state);
    state.set_evaluation_listener(
        [&observed](const ObjectiveVector& v) { observed.push_back(v); });

    for (int s = 0; s < 300; ++s) {
        state.step();
        if (s % 60 == 0) {
            check_population_invariants(instance, state);
        }
    }
    CHECK(state.iterations() == 300);

    std::set<std::array<double, 4>> expected;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < observed.size() && !dominated; ++j) {
            dominated = j != i && dominates(observed[j], observed[i]);
        }
        if (!dominated) {
            expected.insert(observed[i].g);
        }
    }
    std::set<std::array<double, 4>> actual;
    for (const ArchiveEntry& entry : state.archive().entries()) {
        actual.insert(entry.objectives().g);
        CHECK(entry.objectives() == evaluate(instance, entry.solution));
    }
    CHECK(actual == expected);
}

TEST_CASE("stagnation counts every iteration that adds no fresh nondominated member") {
    // With all 3! = 6 chromosomes already in the population, every child is a
    // genotype duplicate: no accept can ever happen, so the counter must march
    // straight to the limit, one step at a time.
    const Instance instance = testsup::pythagorean_instance();
    GaConfig config;
    config.pop_size = 6;
    config.stagnation_limit = 25;
    config.seed = 56;

    std::vector<Chromosome> all_perms;
    Chromosome perm{1, 2, 3};
    do {
        all_perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    REQUIRE(all_perms.size() == 6);

    GaState state(instance, config, all_perms);
    const std::int64_t evals = state.evaluations();
    for (int s = 1; s <= 25; ++s) {
        CHECK_FALSE(state.stagnated());
        state.step();
        CHECK(state.stagnation() == s);
    }
    CHECK(state.stagnated());
    CHECK(state.iterations() == 25);
    CHECK(state.evaluations() == evals);  // duplicates never reach the evaluator
}

TEST_CASE("a full run is deterministic in everything but wall time") {
    const Instance instance = testsup::forcing_instance();
    GaConfig config;
    config.pop_size = 12;
    config.crossover = CrossoverKind::kObx;
    config.p_mut = 0.1;
    config.stagnation_limit = 60;
    config.seed = 57;

    const RunRecord a = ga_run(instance, config, "OBX");
    const RunRecord b = ga_run(instance, config, "OBX");

    CHECK(a.instance == "forcing");
    CHECK(a.algorithm == "OBX");
    CHECK(a.seed == 57);
    CHECK(a.evaluations >= config.pop_size);
    CHECK(a.iterations >= config.stagnation_limit);
    CHECK(a.wall_time_seconds >= 0.0);
    REQUIRE(a.ga_config.has_value());
    CHECK(*a.ga_config == config);
    CHECK_FALSE(a.archive.empty());

    CHECK(a.archive == b.archive);
    CHECK(a.evaluations == b.evaluations);
    CHECK(a.iterations == b.iterations);

    // Archived chromosomes reproduce their recorded objectives.
    for (const ArchivePoint& point : a.archive) {
        const Solution solution = decode(instance, point.chromosome);
        CHECK(evaluate(instance, solution) == point.objectives);
    }

    // A different seed explores differently.
    GaConfig other = config;
    other.seed = 58;
    const RunRecord c = ga_run(instance, other, "OBX");
    CHECK((c.evaluations != a.evaluations || c.archive != a.archive));
}

TEST_SUITE_END();
