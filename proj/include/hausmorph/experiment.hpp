#pragma once

// Measurement protocol: morph a pair over an alpha grid, record area,
// perimeter and topology against the linear ideal, and summarize per
// category.

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hausmorph/morph.hpp"

namespace hausmorph {

inline constexpr double kDefaultAlphaStep = 0.125;
inline constexpr double kDefaultPhi = 0.02;

struct MeasurementRecord {
    std::string pair;
    Method method = Method::voronoi;
    double alpha = 0.0;
    double area = 0.0;
    double perimeter = 0.0;
    int components = 0;
    int holes = 0;
    double area_ratio = 1.0;       ///< area / ((1-alpha) area(a) + alpha area(b))
    double perimeter_ratio = 1.0;  ///< same for perimeter
};

struct SummaryRow {
    std::string category;
    Method method = Method::voronoi;
    std::string quantity;  ///< area_ratio, perimeter_ratio, components or holes
    double mean = 0.0;
    double stddev = 0.0;  ///< population standard deviation
};

struct GridOptions {
    std::vector<Method> methods{Method::dilation, Method::voronoi, Method::mixed};
    double alpha_step = kDefaultAlphaStep;
    double phi = kDefaultPhi;
    double filter = kDefaultFeatureFilter;
    int disk_segments = kDefaultDiskSegments;
    double arc_tolerance = kDefaultArcTolerance;
};

/// 0, step, 2 step, ..., 1. Throws GeometryError unless step evenly
/// divides 1.
std::vector<double> alpha_grid(double step);

/// One record per (method, alpha), sorted by method name then alpha. A
/// failing morph is rethrown as GeometryError naming the method and alpha.
std::vector<MeasurementRecord> run_grid(const std::string& pair_id, const NormalizedPair& pair,
                                        const GridOptions& options);

/// Mean and population standard deviation per (category, method, quantity).
/// Ratios use every alpha; component and hole counts skip alpha = 0 and 1.
/// Pairs missing from `category_of` fall into "all". Throws GeometryError on
/// empty input.
std::vector<SummaryRow> aggregate(const std::vector<MeasurementRecord>& records,
                                  const std::map<std::string, std::string>& category_of = {});

inline constexpr std::string_view kRecordsHeader =
    "pair,method,alpha,area,perimeter,components,holes,area_ratio,perimeter_ratio";
inline constexpr std::string_view kSummaryHeader = "category,method,quantity,mean,stddev";

/// CSV with a header line, rows sorted by key, reals printed with 6 decimals.
std::string emit_csv(std::vector<MeasurementRecord> records);
std::string emit_csv(std::vector<SummaryRow> rows);

/// Inverse of emit_csv. Throws std::invalid_argument on malformed input.
std::vector<MeasurementRecord> parse_records_csv(std::string_view text);
std::vector<SummaryRow> parse_summary_csv(std::string_view text);

struct ManifestEntry {
    std::string pair_id;
    std::string path_a;
    std::string path_b;
    std::string category;
};

/// Lines of `pair_id, path_a, path_b, category`; blank lines and lines
/// starting with '#' are skipped. Relative paths are resolved against
/// `base_dir`. Throws std::invalid_argument naming the bad line.
std::vector<ManifestEntry> parse_manifest(std::string_view text, const std::string& base_dir = "");
std::string format_manifest_line(const ManifestEntry& entry);

struct BatchOptions {
    GridOptions grid;
    Alignment align = Alignment::centroid;
    Scaling scale = Scaling::unit_area;
    unsigned threads = 0;  ///< 0 picks the hardware concurrency
};

struct BatchResult {
    std::vector<MeasurementRecord> records;
    std::vector<SummaryRow> summary;
    std::vector<std::string> failures;  ///< one message per skipped pair
};

/// Runs every manifest pair, skipping (and reporting) pairs that fail.
BatchResult run_batch(const std::vector<ManifestEntry>& manifest, const BatchOptions& options);

}  // namespace hausmorph
