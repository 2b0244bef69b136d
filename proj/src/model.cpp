#include "vrpstw/model.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "vrpstw/errors.hpp"

namespace vrpstw {

namespace {

double euclidean(double ax, double ay, double bx, double by) {
    const double dx = ax - bx;
    const double dy = ay - by;
    return std::sqrt(dx * dx + dy * dy);
}

void check_route_ids(const Instance& instance, const Route& route) {
    if (route.empty()) {
        throw InputError("route is empty");
    }
    for (int id : route) {
        if (!instance.valid_customer_id(id)) {
            throw InputError("invalid customer id " + std::to_string(id));
        }
    }
}

}  // namespace

Instance::Instance(std::string name, InstanceSpec classification, double capacity, Depot depot,
                   std::vector<Customer> customers)
    : name_(std::move(name)),
      classification_(classification),
      capacity_(capacity),
      depot_(depot),
      customers_(std::move(customers)) {
    if (customers_.empty()) {
        throw InputError("instance needs at least one customer");
    }
    if (depot_.close < depot_.open) {
        throw InputError("depot horizon is reversed");
    }
    for (std::size_t i = 0; i < customers_.size(); ++i) {
        const Customer& c = customers_[i];
        if (c.id != static_cast<int>(i) + 1) {
            throw InputError("customer ids must run 1..N in order, got " + std::to_string(c.id) +
                             " at position " + std::to_string(i));
        }
        if (c.demand < 0.0) {
            throw InputError("customer " + std::to_string(c.id) + " has negative demand");
        }
        if (c.demand > capacity_) {
            throw InputError("customer " + std::to_string(c.id) + " exceeds the vehicle capacity");
        }
        if (c.unload < 0.0) {
            throw InputError("customer " + std::to_string(c.id) + " has negative unloading time");
        }
        if (c.window_hi < c.window_lo) {
            throw InputError("customer " + std::to_string(c.id) + " has a reversed time window");
        }
        if (!c.has_window && (c.window_lo != depot_.open || c.window_hi != depot_.close)) {
            throw InputError("customer " + std::to_string(c.id) +
                             " without window must carry the depot horizon");
        }
    }

    stride_ = customers_.size() + 1;
    travel_.assign(stride_ * stride_, 0.0);
    auto coord = [&](std::size_t vertex) {
        if (vertex == 0) {
            return std::pair<double, double>{depot_.x, depot_.y};
        }
        const Customer& c = customers_[vertex - 1];
        return std::pair<double, double>{c.x, c.y};
    };
    for (std::size_t i = 0; i < stride_; ++i) {
        const auto [xi, yi] = coord(i);
        for (std::size_t j = 0; j < stride_; ++j) {
            const auto [xj, yj] = coord(j);
            travel_[i * stride_ + j] = euclidean(xi, yi, xj, yj);
        }
    }
}

const Customer& Instance::customer(int id) const {
    if (!valid_customer_id(id)) {
        throw InputError("invalid customer id " + std::to_string(id));
    }
    return customers_[static_cast<std::size_t>(id) - 1];
}

// The accumulation below mirrors arrival_times() and the decoder's
// incremental check operation for operation, so all three agree bit-exactly.
double route_time(const Instance& instance, const Route& route) {
    check_route_ids(instance, route);
    double acc = instance.depot().open + instance.travel(0, route.front());
    for (std::size_t i = 0; i + 1 < route.size(); ++i) {
        acc += instance.customer(route[i]).unload;
        acc += instance.travel(route[i], route[i + 1]);
    }
    acc += instance.customer(route.back()).unload;
    acc += instance.travel(route.back(), 0);
    return acc;
}

double route_load(const Instance& instance, const Route& route) {
    check_route_ids(instance, route);
    double load = 0.0;
    for (int id : route) {
        load += instance.customer(id).demand;
    }
    return load;
}

std::vector<double> arrival_times(const Instance& instance, const Route& route) {
    check_route_ids(instance, route);
    std::vector<double> arrivals;
    arrivals.reserve(route.size());
    double acc = instance.depot().open + instance.travel(0, route.front());
    arrivals.push_back(acc);
    for (std::size_t i = 0; i + 1 < route.size(); ++i) {
        acc += instance.customer(route[i]).unload;
        acc += instance.travel(route[i], route[i + 1]);
        arrivals.push_back(acc);
    }
    return arrivals;
}

WindowCheck window_violation(const Instance& instance, int customer_id, double arrival) {
    const Customer& c = instance.customer(customer_id);
    const double early = std::max(0.0, c.window_lo - arrival);
    const double late = std::max(0.0, arrival - c.window_hi);
    const double w = std::max(early, late);
    return WindowCheck{w, w > 0.0};
}

bool is_feasible(const Instance& instance, const Route& route) {
    return route_time(instance, route) <= instance.depot().close &&
           route_load(instance, route) <= instance.capacity();
}

ObjectiveVector evaluate(const Instance& instance, const Solution& solution) {
    const int n = instance.customer_count();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    int covered = 0;
    for (const Route& route : solution.routes) {
        check_route_ids(instance, route);
        for (int id : route) {
            if (seen[id]) {
                throw InputError("customer " + std::to_string(id) + " served more than once");
            }
            seen[id] = true;
            ++covered;
        }
    }
    if (covered != n) {
        throw InputError("solution serves " + std::to_string(covered) + " of " +
                         std::to_string(n) + " customers");
    }

    ObjectiveVector result;
    result.g[1] = static_cast<double>(solution.routes.size());
    for (const Route& route : solution.routes) {
        double acc = instance.depot().open + instance.travel(0, route.front());
        for (std::size_t i = 0; i < route.size(); ++i) {
            const Customer& c = instance.customer(route[i]);
            const WindowCheck check = window_violation(instance, route[i], acc);
            result.g[2] += check.violation;
            result.g[3] += check.violated ? 1.0 : 0.0;
            acc += c.unload;
            acc += instance.travel(route[i], i + 1 < route.size() ? route[i + 1] : 0);
        }
        result.g[0] += acc;
    }
    return result;
}

std::vector<Route> canonical_routes(const Solution& solution) {
    std::vector<Route> routes = solution.routes;
    for (const Route& route : routes) {
        if (route.empty()) {
            throw InputError("solution contains an empty route");
        }
    }
    std::sort(routes.begin(), routes.end(),
              [](const Route& a, const Route& b) { return a.front() < b.front(); });
    return routes;
}

std::string canonical_key(const Solution& solution) {
    const std::vector<Route> routes = canonical_routes(solution);
    std::string key;
    for (const Route& route : routes) {
        if (!key.empty()) {
            key += '|';
        }
        for (std::size_t i = 0; i < route.size(); ++i) {
            if (i > 0) {
                key += ',';
            }
            key += std::to_string(route[i]);
        }
    }
    return key;
}

}  // namespace vrpstw
