#include "vrpstw/instances.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <utility>

#include "vrpstw/errors.hpp"
#include "vrpstw/numeric_io.hpp"

namespace vrpstw {

InstanceSpec parse_spec(const std::string& text) {
    std::array<std::string, 4> field;
    std::size_t start = 0;
    for (int i = 0; i < 4; ++i) {
        const std::size_t end = i < 3 ? text.find(';', start) : std::string::npos;
        if (i < 3 && end == std::string::npos) {
            throw ParseError("classification needs four ';'-separated fields: " + text);
        }
        field[i] = text.substr(start, end - start);
        start = end + 1;
    }
    if (field[3].find(';') != std::string::npos) {
        throw ParseError("classification has more than four fields: " + text);
    }

    InstanceSpec spec;
    if (field[0] != "C" && field[0] != "R") {
        throw ParseError("layout must be C or R, got: " + field[0]);
    }
    spec.alpha = field[0][0];
    spec.beta = parse_int(field[1]);
    if (spec.beta < 1) {
        throw ParseError("customer count must be positive, got: " + field[1]);
    }
    spec.gamma = parse_number(field[2]);
    if (spec.gamma < 0.0 || spec.gamma > 1.0) {
        throw ParseError("window fraction must lie in [0, 1], got: " + field[2]);
    }
    spec.delta = parse_number(field[3]);
    if (spec.delta < 0.0) {
        throw ParseError("window width must be nonnegative, got: " + field[3]);
    }
    return spec;
}

std::string format_spec(const InstanceSpec& spec) {
    char gamma[32];
    std::snprintf(gamma, sizeof gamma, "%.2f", spec.gamma);
    return std::string(1, spec.alpha) + ";" + std::to_string(spec.beta) + ";" + gamma + ";" +
           format_number(spec.delta);
}

Instance generate(const InstanceSpec& spec, const GenParams& params, Rng& rng) {
    if (spec.alpha != 'C' && spec.alpha != 'R') {
        throw InputError("layout must be C or R");
    }
    if (spec.beta < 1) {
        throw InputError("instance needs at least one customer");
    }
    if (spec.gamma < 0.0 || spec.gamma > 1.0) {
        throw InputError("window fraction must lie in [0, 1]");
    }
    if (spec.delta < 0.0) {
        throw InputError("window width must be nonnegative");
    }
    if (params.plane_size <= 0.0 || params.horizon <= 0.0) {
        throw InputError("plane size and horizon must be positive");
    }
    if (params.demand_min < 0 || params.demand_max < params.demand_min) {
        throw InputError("demand range is inverted or negative");
    }
    if (static_cast<double>(params.demand_max) > params.capacity) {
        throw InputError("largest demand would exceed the vehicle capacity");
    }
    if (params.unload_time < 0.0 || params.cluster_spread < 0.0) {
        throw InputError("unload time and cluster spread must be nonnegative");
    }
    if (spec.delta > params.horizon) {
        throw InputError("window width exceeds the scheduling horizon");
    }
    const int n = spec.beta;
    const int windowed = static_cast<int>(std::lround(spec.gamma * n));

    // Draw order is part of the format: coordinates, demands, windowed
    // subset, window starts. Changing it would silently change every
    // seeded instance.
    std::uniform_real_distribution<double> coord(0.0, params.plane_size);
    std::vector<double> xs(n), ys(n);
    if (spec.alpha == 'R') {
        for (int i = 0; i < n; ++i) {
            xs[i] = coord(rng);
            ys[i] = coord(rng);
        }
    } else {
        const int clusters = std::max(2, n / 10);
        std::vector<double> cx(clusters), cy(clusters);
        for (int c = 0; c < clusters; ++c) {
            cx[c] = coord(rng);
            cy[c] = coord(rng);
        }
        std::uniform_int_distribution<int> pick(0, clusters - 1);
        std::normal_distribution<double> spread(0.0, params.cluster_spread);
        for (int i = 0; i < n; ++i) {
            const int c = pick(rng);
            xs[i] = std::clamp(cx[c] + spread(rng), 0.0, params.plane_size);
            ys[i] = std::clamp(cy[c] + spread(rng), 0.0, params.plane_size);
        }
    }

    std::uniform_int_distribution<int> demand(params.demand_min, params.demand_max);
    std::vector<double> demands(n);
    for (int i = 0; i < n; ++i) {
        demands[i] = demand(rng);
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<char> windowed_flag(n, 0);
    for (int i = 0; i < windowed; ++i) {
        windowed_flag[order[i]] = 1;
    }

    std::uniform_real_distribution<double> window_start(0.0, params.horizon - spec.delta);
    std::vector<Customer> customers(n);
    for (int i = 0; i < n; ++i) {
        Customer c;
        c.id = i + 1;
        c.x = xs[i];
        c.y = ys[i];
        c.demand = demands[i];
        c.unload = params.unload_time;
        if (windowed_flag[i]) {
            c.window_lo = window_start(rng);
            c.window_hi = c.window_lo + spec.delta;
            c.has_window = true;
        } else {
            c.window_lo = 0.0;
            c.window_hi = params.horizon;
            c.has_window = false;
        }
        customers[i] = c;
    }

    Depot depot{params.plane_size / 2.0, params.plane_size / 2.0, 0.0, params.horizon};
    return Instance(format_spec(spec), spec, params.capacity, depot, std::move(customers));
}

// ---------------------------------------------------------------------------
// text format
// ---------------------------------------------------------------------------

namespace {

struct LineReader {
    std::istream& in;
    int line_no = 0;

    // Next nonblank line, without a trailing '\r'. Names the missing
    // section when the stream ends early.
    std::string need(const char* expected) {
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') {
                line.pop_back();
            }
            if (line.find_first_not_of(" \t") != std::string::npos) {
                return line;
            }
        }
        throw ParseError(std::string("unexpected end of file, expected ") + expected, line_no);
    }
};

std::vector<std::string> split_tokens(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string token;
    while (in >> token) {
        tokens.push_back(token);
    }
    return tokens;
}

// "KEY rest-of-line" -> "rest-of-line", insisting on the keyword.
std::string keyed(const std::string& line, const std::string& key, int line_no) {
    if (line.compare(0, key.size(), key) != 0 ||
        (line.size() > key.size() && line[key.size()] != ' ')) {
        throw ParseError("expected '" + key + " ...', got: " + line, line_no);
    }
    const std::size_t pos = line.find_first_not_of(' ', key.size());
    if (pos == std::string::npos) {
        throw ParseError(key + " needs a value", line_no);
    }
    return line.substr(pos);
}

double number_at(const std::string& token, int line_no) {
    try {
        return parse_number(token);
    } catch (const ParseError& e) {
        throw ParseError(e.what(), line_no);
    }
}

int int_at(const std::string& token, int line_no) {
    try {
        return parse_int(token);
    } catch (const ParseError& e) {
        throw ParseError(e.what(), line_no);
    }
}

}  // namespace

void write_instance(const Instance& instance, std::ostream& out) {
    out << "NAME " << instance.name() << '\n';
    out << "CLASS " << format_spec(instance.classification()) << '\n';
    out << "CAPACITY " << format_number(instance.capacity()) << '\n';
    const Depot& d = instance.depot();
    out << "DEPOT " << format_number(d.x) << ' ' << format_number(d.y) << ' '
        << format_number(d.open) << ' ' << format_number(d.close) << '\n';
    out << "CUSTOMERS " << instance.customer_count() << '\n';
    for (const Customer& c : instance.customers()) {
        out << c.id << ' ' << format_number(c.x) << ' ' << format_number(c.y) << ' '
            << format_number(c.demand) << ' ' << format_number(c.unload) << ' '
            << format_number(c.window_lo) << ' ' << format_number(c.window_hi) << ' '
            << (c.has_window ? '1' : '0') << '\n';
    }
}

void write_instance_file(const Instance& instance, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw InputError("cannot open " + path.string() + " for writing");
    }
    write_instance(instance, out);
    out.flush();
    if (!out) {
        throw InputError("failed while writing " + path.string());
    }
}

Instance read_instance(std::istream& in) {
    LineReader reader{in};

    // need() advances line_no, so grab the line before using the counter.
    const std::string name_line = reader.need("NAME");
    const std::string name = keyed(name_line, "NAME", reader.line_no);

    InstanceSpec spec;
    {
        const std::string class_line = reader.need("CLASS");
        const std::string text = keyed(class_line, "CLASS", reader.line_no);
        try {
            spec = parse_spec(text);
        } catch (const ParseError& e) {
            throw ParseError(e.what(), reader.line_no);
        }
    }

    const std::string capacity_line = reader.need("CAPACITY");
    const double capacity = number_at(keyed(capacity_line, "CAPACITY", reader.line_no),
                                      reader.line_no);

    Depot depot;
    {
        const std::string depot_line = reader.need("DEPOT");
        const auto tokens = split_tokens(keyed(depot_line, "DEPOT", reader.line_no));
        if (tokens.size() != 4) {
            throw ParseError("DEPOT needs 4 numbers (x y open close)", reader.line_no);
        }
        depot.x = number_at(tokens[0], reader.line_no);
        depot.y = number_at(tokens[1], reader.line_no);
        depot.open = number_at(tokens[2], reader.line_no);
        depot.close = number_at(tokens[3], reader.line_no);
    }

    const std::string count_line = reader.need("CUSTOMERS");
    const int n = int_at(keyed(count_line, "CUSTOMERS", reader.line_no), reader.line_no);
    if (n < 1) {
        throw ParseError("CUSTOMERS must be positive", reader.line_no);
    }

    std::vector<Customer> customers;
    customers.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto tokens = split_tokens(reader.need("a customer row"));
        if (tokens.size() != 8) {
            throw ParseError("customer row needs 8 fields, got " + std::to_string(tokens.size()),
                             reader.line_no);
        }
        Customer c;
        c.id = int_at(tokens[0], reader.line_no);
        c.x = number_at(tokens[1], reader.line_no);
        c.y = number_at(tokens[2], reader.line_no);
        c.demand = number_at(tokens[3], reader.line_no);
        c.unload = number_at(tokens[4], reader.line_no);
        c.window_lo = number_at(tokens[5], reader.line_no);
        c.window_hi = number_at(tokens[6], reader.line_no);
        if (tokens[7] == "0") {
            c.has_window = false;
        } else if (tokens[7] == "1") {
            c.has_window = true;
        } else {
            throw ParseError("window flag must be 0 or 1, got: " + tokens[7], reader.line_no);
        }
        customers.push_back(c);
    }

    return Instance(name, spec, capacity, depot, std::move(customers));
}

Instance read_instance_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open " + path.string());
    }
    try {
        return read_instance(in);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

}  // namespace vrpstw
