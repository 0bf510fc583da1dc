#include "hausmorph/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hausmorph/wkt.hpp"

namespace hausmorph {

std::vector<double> alpha_grid(double step) {
    if (!(step > 0.0 && step <= 1.0)) throw GeometryError("alpha step must lie in (0, 1]");
    const double n = std::round(1.0 / step);
    if (std::abs(n * step - 1.0) > 1e-9) throw GeometryError("alpha step must divide 1 evenly");
    const int count = static_cast<int>(n);
    std::vector<double> grid;
    for (int i = 0; i <= count; ++i) grid.push_back(static_cast<double>(i) / count);
    return grid;
}

std::vector<MeasurementRecord> run_grid(const std::string& pair_id, const NormalizedPair& pair,
                                        const GridOptions& options) {
    if (options.methods.empty()) throw GeometryError("no morph methods requested");
    const std::vector<double> grid = alpha_grid(options.alpha_step);
    const Measurements ma = measure(pair.a, options.filter);
    const Measurements mb = measure(pair.b, options.filter);

    std::vector<Method> methods = options.methods;
    std::sort(methods.begin(), methods.end(),
              [](Method x, Method y) { return std::string_view(to_string(x)) < std::string_view(to_string(y)); });
    methods.erase(std::unique(methods.begin(), methods.end()), methods.end());

    PairMorpher morpher(pair, options.disk_segments, options.arc_tolerance);
    std::vector<MeasurementRecord> records;
    for (Method method : methods) {
        for (double alpha : grid) {
            Shape shape;
            try {
                shape = morpher.evaluate(method, alpha, options.phi);
            } catch (const std::exception& e) {
                std::ostringstream msg;
                msg << pair_id << ": " << to_string(method) << " morph at alpha=" << alpha << " failed: " << e.what();
                throw GeometryError(msg.str());
            }
            const Measurements m = measure(shape, options.filter);
            MeasurementRecord r;
            r.pair = pair_id;
            r.method = method;
            r.alpha = alpha;
            r.area = m.area;
            r.perimeter = m.perimeter;
            r.components = m.components;
            r.holes = m.holes;
            const double ideal_area = (1.0 - alpha) * ma.area + alpha * mb.area;
            const double ideal_perimeter = (1.0 - alpha) * ma.perimeter + alpha * mb.perimeter;
            r.area_ratio = ideal_area > 0 ? m.area / ideal_area : 0.0;
            r.perimeter_ratio = ideal_perimeter > 0 ? m.perimeter / ideal_perimeter : 0.0;
            records.push_back(std::move(r));
        }
    }
    return records;
}

std::vector<SummaryRow> aggregate(const std::vector<MeasurementRecord>& records,
                                  const std::map<std::string, std::string>& category_of) {
    if (records.empty()) throw GeometryError("nothing to aggregate");
    struct Key {
        std::string category;
        std::string method;
        std::string quantity;
        auto operator<=>(const Key&) const = default;
    };
    std::map<Key, std::pair<Method, std::vector<double>>> groups;
    for (const auto& r : records) {
        const auto it = category_of.find(r.pair);
        const std::string category = it == category_of.end() ? "all" : it->second;
        const std::string method = to_string(r.method);
        auto add = [&](const char* quantity, double value) {
            auto& g = groups[{category, method, quantity}];
            g.first = r.method;
            g.second.push_back(value);
        };
        add("area_ratio", r.area_ratio);
        add("perimeter_ratio", r.perimeter_ratio);
        if (r.alpha > 0.0 && r.alpha < 1.0) {
            add("components", r.components);
            add("holes", r.holes);
        }
    }
    std::vector<SummaryRow> rows;
    for (const auto& [key, group] : groups) {
        const auto& values = group.second;
        double mean = 0.0;
        for (double v : values) mean += v;
        mean /= static_cast<double>(values.size());
        double var = 0.0;
        for (double v : values) var += (v - mean) * (v - mean);
        var /= static_cast<double>(values.size());
        rows.push_back({key.category, group.first, key.quantity, mean, std::sqrt(var)});
    }
    return rows;
}

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::vector<ManifestEntry> parse_manifest(std::string_view text, const std::string& base_dir) {
    std::vector<ManifestEntry> entries;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto end = std::min(text.find('\n', pos), text.size());
        const std::string line = trim(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (line.empty() || line[0] == '#') continue;

        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            const auto comma = line.find(',', start);
            fields.push_back(trim(std::string_view(line).substr(start, comma - start)));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (fields.size() != 4 || fields[0].empty() || fields[1].empty() || fields[2].empty())
            throw std::invalid_argument("manifest line " + std::to_string(line_no) +
                                        ": expected 'pair_id, path_a, path_b, category'");
        auto resolve = [&](const std::string& p) {
            const std::filesystem::path path(p);
            if (path.is_absolute() || base_dir.empty()) return p;
            return (std::filesystem::path(base_dir) / path).string();
        };
        entries.push_back({fields[0], resolve(fields[1]), resolve(fields[2]), fields[3]});
    }
    return entries;
}

std::string format_manifest_line(const ManifestEntry& entry) {
    return entry.pair_id + ", " + entry.path_a + ", " + entry.path_b + ", " + entry.category;
}

BatchResult run_batch(const std::vector<ManifestEntry>& manifest, const BatchOptions& options) {
    const std::size_t n = manifest.size();
    std::vector<std::vector<MeasurementRecord>> per_pair(n);
    std::vector<std::optional<std::string>> errors(n);

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            const ManifestEntry& e = manifest[i];
            try {
                const Shape a = read_wkt_file(e.path_a);
                const Shape b = read_wkt_file(e.path_b);
                const NormalizedPair pair = normalize_pair(a, b, options.align, options.scale);
                per_pair[i] = run_grid(e.pair_id, pair, options.grid);
            } catch (const std::exception& ex) {
                errors[i] = e.pair_id + ": " + ex.what();
            }
        }
    };
    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    BatchResult result;
    std::map<std::string, std::string> category_of;
    for (std::size_t i = 0; i < n; ++i) {
        if (errors[i]) {
            result.failures.push_back(*errors[i]);
            continue;
        }
        category_of[manifest[i].pair_id] = manifest[i].category.empty() ? "all" : manifest[i].category;
        result.records.insert(result.records.end(), per_pair[i].begin(), per_pair[i].end());
    }
    if (!result.records.empty()) result.summary = aggregate(result.records, category_of);
    return result;
}

}  // namespace hausmorph
