#include "vrpstw/metrics.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "vrpstw/errors.hpp"
#include "vrpstw/numeric_io.hpp"
#include "vrpstw/pareto.hpp"

namespace vrpstw {

std::array<double, kNumObjectives> spread_weights(const Front& ref) {
    if (ref.empty()) {
        throw InputError("weights need a nonempty reference front");
    }
    std::array<double, kNumObjectives> weights{};
    for (int j = 0; j < kNumObjectives; ++j) {
        double lo = ref.points.front().g[j];
        double hi = lo;
        for (const ObjectiveVector& p : ref.points) {
            lo = std::min(lo, p.g[j]);
            hi = std::max(hi, p.g[j]);
        }
        weights[j] = hi > lo ? 1.0 / (hi - lo) : 0.0;
    }
    return weights;
}

double c_dist(const ObjectiveVector& x, const ObjectiveVector& y,
              const std::array<double, kNumObjectives>& weights) {
    double worst = 0.0;
    for (int j = 0; j < kNumObjectives; ++j) {
        worst = std::max(worst, weights[j] * (x.g[j] - y.g[j]));
    }
    return worst;
}

namespace {

// mean = true gives d1, false gives d2.
double coverage_distance(const Front& approx, const Front& ref,
                         const std::array<double, kNumObjectives>& weights, bool mean) {
    if (approx.empty() || ref.empty()) {
        throw InputError("distance needs nonempty fronts");
    }
    double sum = 0.0;
    double worst = 0.0;
    for (const ObjectiveVector& r : ref.points) {
        double closest = c_dist(approx.points.front(), r, weights);
        for (std::size_t i = 1; i < approx.points.size() && closest > 0.0; ++i) {
            closest = std::min(closest, c_dist(approx.points[i], r, weights));
        }
        sum += closest;
        worst = std::max(worst, closest);
    }
    return mean ? sum / static_cast<double>(ref.points.size()) : worst;
}

}  // namespace

double d1(const Front& approx, const Front& ref,
          const std::array<double, kNumObjectives>& weights) {
    return coverage_distance(approx, ref, weights, true);
}

double d1(const Front& approx, const Front& ref) {
    return coverage_distance(approx, ref, spread_weights(ref), true);
}

double d2(const Front& approx, const Front& ref,
          const std::array<double, kNumObjectives>& weights) {
    return coverage_distance(approx, ref, weights, false);
}

double d2(const Front& approx, const Front& ref) {
    return coverage_distance(approx, ref, spread_weights(ref), false);
}

Front build_reference(const std::vector<Front>& fronts) {
    bool labeled = false;
    for (const Front& f : fronts) {
        if (!f.labels.empty() && f.labels.size() != f.points.size()) {
            throw InputError("front labels must be parallel to its points");
        }
        labeled = labeled || !f.labels.empty();
    }

    // Incremental nondominated filter; quadratic only in the size of the
    // surviving front, not of the union.
    std::vector<ObjectiveVector> kept;
    std::vector<std::string> kept_labels;
    auto insert_point = [&](const ObjectiveVector& p, const std::string& label) {
        for (const ObjectiveVector& q : kept) {
            if (q == p || dominates(q, p)) {
                return;
            }
        }
        std::size_t w = 0;
        for (std::size_t i = 0; i < kept.size(); ++i) {
            if (!dominates(p, kept[i])) {
                if (w != i) {
                    kept[w] = kept[i];
                    kept_labels[w] = std::move(kept_labels[i]);
                }
                ++w;
            }
        }
        kept.resize(w);
        kept_labels.resize(w);
        kept.push_back(p);
        kept_labels.push_back(label);
    };

    for (const Front& f : fronts) {
        for (std::size_t i = 0; i < f.points.size(); ++i) {
            insert_point(f.points[i], f.labels.empty() ? std::string() : f.labels[i]);
        }
    }

    Front result;
    result.points = std::move(kept);
    if (labeled) {
        result.labels = std::move(kept_labels);
    }
    return result;
}

void write_front(const Front& front, std::ostream& out) {
    if (!front.labels.empty() && front.labels.size() != front.points.size()) {
        throw InputError("front labels must be parallel to its points");
    }
    for (std::size_t i = 0; i < front.points.size(); ++i) {
        const auto& g = front.points[i].g;
        out << format_number(g[0]) << ' ' << format_number(g[1]) << ' ' << format_number(g[2])
            << ' ' << format_number(g[3]);
        if (!front.labels.empty() && !front.labels[i].empty()) {
            out << ' ' << front.labels[i];
        }
        out << '\n';
    }
}

Front read_front(std::istream& in) {
    Front front;
    std::string line;
    int line_no = 0;
    bool labeled = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.find_first_not_of(" \t") == std::string::npos) {
            continue;
        }
        std::istringstream tokens(line);
        std::string t0, t1, t2, t3;
        if (!(tokens >> t0 >> t1 >> t2 >> t3)) {
            throw ParseError("front line needs 4 objective values", line_no);
        }
        ObjectiveVector v;
        try {
            v.g = {parse_number(t0), parse_number(t1), parse_number(t2), parse_number(t3)};
        } catch (const ParseError& e) {
            throw ParseError(e.what(), line_no);
        }
        std::string label;
        std::getline(tokens, label);
        const std::size_t pos = label.find_first_not_of(' ');
        label = pos == std::string::npos ? std::string() : label.substr(pos);
        front.points.push_back(v);
        front.labels.push_back(label);
        labeled = labeled || !label.empty();
    }
    if (!labeled) {
        front.labels.clear();
    }
    return front;
}

}  // namespace vrpstw
