#pragma once

#include <array>
#include <string>
#include <vector>

#include "vrpstw/instance_spec.hpp"

namespace vrpstw {

inline constexpr int kNumObjectives = 4;

// Objective vector of a solution, all components minimized:
//   g[0] total route time, g[1] number of routes,
//   g[2] summed time-window violation, g[3] number of violated windows.
struct ObjectiveVector {
    std::array<double, kNumObjectives> g{};

    double total_time() const { return g[0]; }
    double route_count() const { return g[1]; }
    double violation_time() const { return g[2]; }
    double violated_windows() const { return g[3]; }

    bool operator==(const ObjectiveVector&) const = default;
};

struct Depot {
    double x = 0.0;
    double y = 0.0;
    double open = 0.0;   // a0: vehicles depart at exactly this time
    double close = 0.0;  // b0: latest admissible route completion
};

struct Customer {
    int id = 0;  // 1..N
    double x = 0.0;
    double y = 0.0;
    double demand = 0.0;
    double unload = 0.0;
    double window_lo = 0.0;
    double window_hi = 0.0;
    bool has_window = false;  // when false, [window_lo, window_hi] equals the depot horizon
};

// Customer visiting sequence of one vehicle; the depot legs are implicit.
using Route = std::vector<int>;

struct Solution {
    std::vector<Route> routes;
    ObjectiveVector objectives;  // cached by the caller after evaluate()
};

// Immutable problem instance over the complete Euclidean graph: travel time,
// distance and cost of an arc are all the Euclidean distance, in full double
// precision. Safe for concurrent reads once constructed.
class Instance {
  public:
    // Validates the instance invariants (ids 1..N in order, demands within
    // capacity, ordered windows, full-horizon windows for has_window = false)
    // and precomputes the travel matrix. Throws InputError on violation.
    Instance(std::string name, InstanceSpec classification, double capacity, Depot depot,
             std::vector<Customer> customers);

    const std::string& name() const { return name_; }
    const InstanceSpec& classification() const { return classification_; }
    double capacity() const { return capacity_; }
    const Depot& depot() const { return depot_; }
    const std::vector<Customer>& customers() const { return customers_; }
    int customer_count() const { return static_cast<int>(customers_.size()); }

    // id in 1..N; throws InputError otherwise.
    const Customer& customer(int id) const;

    // Travel time between vertices, 0 being the depot. No bounds check.
    double travel(int from, int to) const { return travel_[static_cast<std::size_t>(from) * stride_ + to]; }

    bool valid_customer_id(int id) const { return id >= 1 && id <= customer_count(); }

  private:
    std::string name_;
    InstanceSpec classification_;
    double capacity_ = 0.0;
    Depot depot_;
    std::vector<Customer> customers_;
    std::vector<double> travel_;  // (N+1) x (N+1), row-major
    std::size_t stride_ = 0;
};

// Time to travel a route: departure at the depot opening, all travel legs,
// all unloading times, and the return leg. Throws InputError on an empty
// route or invalid id.
double route_time(const Instance& instance, const Route& route);

// Total demand carried on the route.
double route_load(const Instance& instance, const Route& route);

// Arrival time at each visited customer, in route order. Service starts
// immediately on arrival; no waiting is inserted for early arrivals.
std::vector<double> arrival_times(const Instance& instance, const Route& route);

struct WindowCheck {
    double violation = 0.0;  // time units outside [window_lo, window_hi]
    bool violated = false;
};

WindowCheck window_violation(const Instance& instance, int customer_id, double arrival);

// True iff the route both completes within the depot horizon and respects
// the vehicle capacity (both checks inclusive).
bool is_feasible(const Instance& instance, const Route& route);

// Computes the four objectives. The solution's routes must partition
// {1..N}; throws InputError otherwise.
ObjectiveVector evaluate(const Instance& instance, const Solution& solution);

// Routes sorted by their first customer id: two solutions are the same
// decision exactly when their canonical routes are equal.
std::vector<Route> canonical_routes(const Solution& solution);

// Compact text key of canonical_routes, suitable for duplicate hashing.
std::string canonical_key(const Solution& solution);

}  // namespace vrpstw
