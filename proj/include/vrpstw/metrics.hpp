#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "vrpstw/model.hpp"

namespace vrpstw {

// A set of objective vectors, optionally tagged with their origin (run id,
// algorithm). labels is either empty or parallel to points.
struct Front {
    std::vector<ObjectiveVector> points;
    std::vector<std::string> labels;

    bool empty() const { return points.empty(); }
    std::size_t size() const { return points.size(); }
};

// Weight 1/spread per objective over the reference set; objectives constant
// on the reference get weight 0 and stop discriminating.
std::array<double, kNumObjectives> spread_weights(const Front& ref);

// Weighted achievement distance of x to y: max(0, max_j w_j (g_j(x) - g_j(y))).
// Zero whenever x dominates or equals y.
double c_dist(const ObjectiveVector& x, const ObjectiveVector& y,
              const std::array<double, kNumObjectives>& weights);

// Average over the reference of the distance to the closest approximation
// point, with weights taken from the reference.
double d1(const Front& approx, const Front& ref);
double d1(const Front& approx, const Front& ref, const std::array<double, kNumObjectives>& weights);

// Worst case instead of the average; always >= d1 on the same inputs.
double d2(const Front& approx, const Front& ref);
double d2(const Front& approx, const Front& ref, const std::array<double, kNumObjectives>& weights);

// Nondominated filter over the union of the inputs with exact-duplicate
// vectors collapsed; labels of surviving points are kept. Idempotent.
Front build_reference(const std::vector<Front>& fronts);

// One objective vector per line (4 numbers), optionally followed by a label.
void write_front(const Front& front, std::ostream& out);
Front read_front(std::istream& in);

}  // namespace vrpstw
