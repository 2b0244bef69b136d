#include "vrpstw/encoding.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "vrpstw/errors.hpp"
#include "vrpstw/numeric_io.hpp"

namespace vrpstw {

bool is_valid_permutation(const Chromosome& genes) {
    const int n = static_cast<int>(genes.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int gene : genes) {
        if (gene < 1 || gene > n || seen[gene]) {
            return false;
        }
        seen[gene] = true;
    }
    return true;
}

Solution decode(const Instance& instance, const Chromosome& genes) {
    if (static_cast<int>(genes.size()) != instance.customer_count() ||
        !is_valid_permutation(genes)) {
        throw InputError("chromosome is not a permutation of 1.." +
                         std::to_string(instance.customer_count()));
    }

    const double horizon = instance.depot().close;
    const double capacity = instance.capacity();

    Solution solution;
    Route current;
    // Completion time of the open route so far, i.e. route time minus the
    // return leg. Built with the same operation order as route_time().
    double elapsed = 0.0;
    double load = 0.0;

    auto open_route = [&](int gene) {
        const Customer& c = instance.customer(gene);
        elapsed = instance.depot().open + instance.travel(0, gene);
        elapsed += c.unload;
        load = c.demand;
        if (elapsed + instance.travel(gene, 0) > horizon) {
            throw InputError("customer " + std::to_string(gene) +
                             " cannot be served within the depot horizon even alone");
        }
        current.assign(1, gene);
    };

    for (int gene : genes) {
        if (current.empty()) {
            open_route(gene);
            continue;
        }
        const Customer& c = instance.customer(gene);
        double extended = elapsed + instance.travel(current.back(), gene);
        extended += c.unload;
        const double extended_load = load + c.demand;
        if (extended + instance.travel(gene, 0) <= horizon && extended_load <= capacity) {
            current.push_back(gene);
            elapsed = extended;
            load = extended_load;
        } else {
            solution.routes.push_back(std::move(current));
            open_route(gene);
        }
    }
    solution.routes.push_back(std::move(current));
    return solution;
}

Chromosome random_chromosome(Rng& rng, int n) {
    if (n < 1) {
        throw InputError("chromosome length must be positive");
    }
    Chromosome genes(static_cast<std::size_t>(n));
    std::iota(genes.begin(), genes.end(), 1);
    std::shuffle(genes.begin(), genes.end(), rng);
    return genes;
}

std::string format_chromosome(const Chromosome& genes) {
    std::string line;
    for (std::size_t i = 0; i < genes.size(); ++i) {
        if (i > 0) {
            line += ' ';
        }
        line += std::to_string(genes[i]);
    }
    return line;
}

Chromosome parse_chromosome(const std::string& line) {
    Chromosome genes;
    std::istringstream in(line);
    std::string token;
    while (in >> token) {
        genes.push_back(parse_int(token));
    }
    return genes;
}

}  // namespace vrpstw
