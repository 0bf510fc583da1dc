// hausmorph command-line driver.
//
// Exit status: 0 on success, 1 for bad flags or unreadable/invalid input,
// 2 when a geometric computation fails.

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hausmorph/experiment.hpp"
#include "hausmorph/generators.hpp"
#include "hausmorph/hausdorff.hpp"
#include "hausmorph/io.hpp"
#include "hausmorph/morph.hpp"
#include "hausmorph/partition.hpp"
#include "hausmorph/svg.hpp"
#include "hausmorph/wkt.hpp"

namespace fs = std::filesystem;
using namespace hausmorph;

namespace {

/// Bad user input; maps to exit status 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string shortest(double v) {
    if (v == 0.0) v = 0.0;
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string fixed(double v, int digits = 9) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

Shape load(const std::string& path) {
    try {
        return read_wkt_file(path);
    } catch (const std::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
}

std::vector<double> parse_list(const std::string& text, const char* flag) {
    std::vector<double> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
            throw UsageError(std::string(flag) + ": '" + item + "' is not a number");
        if (!(v >= 0.0 && v <= 1.0)) throw UsageError(std::string(flag) + ": " + item + " is outside [0, 1]");
        out.push_back(v);
    }
    if (out.empty()) throw UsageError(std::string(flag) + ": empty list");
    return out;
}

std::vector<Method> parse_methods(const std::string& text) {
    std::vector<Method> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            out.push_back(parse_method(item));
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--methods: ") + e.what());
        }
    }
    if (out.empty()) throw UsageError("--methods: empty list");
    return out;
}

struct PairFlags {
    std::string path_a, path_b;
    std::string align = "centroid";
    std::string scale = "equal-area";
    double phi = kDefaultPhi;
    int segments = kDefaultDiskSegments;
    double arc_tol = kDefaultArcTolerance;
    std::string out = ".";

    void attach(CLI::App* cmd) {
        cmd->add_option("a", path_a, "First shape (WKT file)")->required();
        cmd->add_option("b", path_b, "Second shape (WKT file)")->required();
        cmd->add_option("--align", align, "Alignment")->check(CLI::IsMember({"centroid", "none"}))->capture_default_str();
        cmd->add_option("--scale", scale, "Area normalization")
            ->check(CLI::IsMember({"equal-area", "unit-area", "none"}))
            ->capture_default_str();
        cmd->add_option("--phi", phi, "Closing radius of the mixed morph")->capture_default_str();
        cmd->add_option("--segments", segments, "Vertices of the polygonal disk")->capture_default_str();
        cmd->add_option("--arc-tol", arc_tol, "Maximum deviation of discretized Voronoi arcs")->capture_default_str();
        cmd->add_option("--out", out, "Output directory")->capture_default_str();
    }

    NormalizedPair pair() const {
        const Shape a = load(path_a), b = load(path_b);
        return normalize_pair(a, b, parse_alignment(align), parse_scaling(scale));
    }

    void check_params() const {
        try {
            check(MorphParams{0.0, phi, segments, arc_tol});
        } catch (const GeometryError& e) {
            throw UsageError(e.what());
        }
    }
};

void ensure_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw UsageError("--out: cannot create " + dir + ": " + ec.message());
}

int cmd_morph(PairFlags& flags, const std::string& method_name, const std::string& alphas) {
    flags.check_params();
    const Method method = parse_method(method_name);
    const std::vector<double> grid = parse_list(alphas, "--alpha");
    const NormalizedPair pair = flags.pair();
    ensure_dir(flags.out);

    PairMorpher morpher(pair, flags.segments, flags.arc_tol);
    std::cout << "h=" << fixed(pair.h) << '\n';
    for (double alpha : grid) {
        const Shape shape = morpher.evaluate(method, alpha, flags.phi);
        const std::string name = std::string(to_string(method)) + "-" + shortest(alpha) + ".wkt";
        write_wkt_file((fs::path(flags.out) / name).string(), shape);
        const Measurements m = measure(shape);
        std::cout << "alpha=" << shortest(alpha) << " area=" << fixed(m.area) << " perimeter=" << fixed(m.perimeter)
                  << " components=" << m.components << " holes=" << m.holes;
        if (!shape.empty())
            std::cout << " dH_a=" << fixed(hausdorff(shape, pair.a).distance)
                      << " dH_b=" << fixed(hausdorff(shape, pair.b).distance);
        std::cout << " file=" << name << '\n';
    }
    return 0;
}

int cmd_render(PairFlags& flags, const std::string& frames, const std::string& methods, const std::string& canvas) {
    flags.check_params();
    RenderOptions options;
    options.frames = parse_list(frames, "--frames");
    double w = 0, h = 0;
    char x = 0, extra = 0;
    if (std::sscanf(canvas.c_str(), "%lf%c%lf%c", &w, &x, &h, &extra) != 3 || (x != 'x' && x != 'X'))
        throw UsageError("--canvas: expected WxH, got '" + canvas + "'");
    options.width = w;
    options.height = h;
    try {
        check(options);
    } catch (const GeometryError& e) {
        throw UsageError(e.what());
    }
    const std::vector<Method> list = parse_methods(methods);
    const NormalizedPair pair = flags.pair();
    ensure_dir(flags.out);

    PairMorpher morpher(pair, flags.segments, flags.arc_tol);
    struct Frame {
        Method method;
        double alpha;
        Shape shape;
    };
    std::vector<Frame> all;
    for (Method m : list)
        for (double alpha : options.frames) all.push_back({m, alpha, morpher.evaluate(m, alpha, flags.phi)});

    std::vector<const Shape*> shapes;
    for (const auto& f : all) shapes.push_back(&f.shape);
    const Box view = shared_view(shapes, options.margin);
    for (const auto& f : all) {
        const std::string name = std::string(to_string(f.method)) + "-" + shortest(f.alpha) + ".svg";
        write_file_atomic((fs::path(flags.out) / name).string(),
                          render_svg(f.shape, view, options, options.fill(f.method)));
        std::cout << name << '\n';
    }
    return 0;
}

unsigned thread_cap() {
    const char* env = std::getenv("HAUSMORPH_THREADS");
    if (!env || !*env) return 0;
    unsigned v = 0;
    const std::string s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw UsageError("HAUSMORPH_THREADS: not a count: " + s);
    return v;
}

int cmd_batch(const std::string& manifest_path, BatchOptions options, const std::string& align,
              const std::string& scale, const std::string& out) {
    try {
        check(MorphParams{0.0, options.grid.phi, options.grid.disk_segments, options.grid.arc_tolerance});
        alpha_grid(options.grid.alpha_step);
    } catch (const GeometryError& e) {
        throw UsageError(e.what());
    }
    if (!(options.grid.filter >= 0.0)) throw UsageError("--filter must be >= 0");
    options.align = parse_alignment(align);
    options.scale = parse_scaling(scale);
    options.threads = thread_cap();

    std::vector<ManifestEntry> manifest;
    try {
        manifest = parse_manifest(read_text_file(manifest_path), fs::path(manifest_path).parent_path().string());
    } catch (const std::exception& e) {
        throw UsageError(manifest_path + ": " + e.what());
    }
    if (manifest.empty()) throw UsageError(manifest_path + ": no pairs listed");
    ensure_dir(out);

    std::cout << "step=" << shortest(options.grid.alpha_step) << " phi=" << shortest(options.grid.phi)
              << " filter=" << shortest(options.grid.filter) << " pairs=" << manifest.size() << '\n';
    const BatchResult result = run_batch(manifest, options);
    for (const auto& f : result.failures) std::cerr << "skipped " << f << '\n';
    if (result.records.empty()) {
        std::cerr << "error: every pair failed\n";
        return 2;
    }
    write_file_atomic((fs::path(out) / "records.csv").string(), emit_csv(result.records));
    write_file_atomic((fs::path(out) / "summary.csv").string(), emit_csv(result.summary));
    std::cout << "records=" << result.records.size() << " failed=" << result.failures.size() << '\n';
    return 0;
}

void write_pair(const ShapePair& pair, const std::string& id, const std::string& category, const std::string& out) {
    ensure_dir(out);
    write_wkt_file((fs::path(out) / "a.wkt").string(), pair.first);
    write_wkt_file((fs::path(out) / "b.wkt").string(), pair.second);
    write_file_atomic((fs::path(out) / "manifest.txt").string(),
                      format_manifest_line({id, "a.wkt", "b.wkt", category}) + "\n");
}

int cmd_hausdorff(const std::string& path_a, const std::string& path_b) {
    const Shape a = load(path_a), b = load(path_b);
    if (a.empty() || b.empty()) throw UsageError("Hausdorff distance needs two non-empty shapes");
    const HausdorffResult ab = directed_hausdorff(a, b);
    const HausdorffResult ba = directed_hausdorff(b, a);
    const HausdorffResult& w = ba.distance > ab.distance ? ba : ab;
    std::cout << shortest(w.distance) << ' ' << shortest(ab.distance) << ' ' << shortest(ba.distance) << ' '
              << shortest(w.witness_source.x) << ' ' << shortest(w.witness_source.y) << ' '
              << shortest(w.witness_target.x) << ' ' << shortest(w.witness_target.y) << '\n';
    return 0;
}

int cmd_partition(const std::string& path_a, const std::string& path_b, double arc_tol, const std::string& prefix) {
    if (!(arc_tol > 0.0)) throw UsageError("--arc-tol must be positive");
    const Shape a = load(path_a), b = load(path_b);
    if (a.empty() || b.empty()) throw UsageError("partition needs two non-empty shapes");
    const Partition p = build_partition(a, b, arc_tol);
    write_partition_dump(p, prefix + ".wkt", prefix + ".sites");
    std::cout << "pieces=" << p.pieces.size() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hausdorff morphs between polygonal shapes"};
    app.require_subcommand(1);

    PairFlags morph_flags;
    std::string method = "voronoi", alphas = "0,0.25,0.5,0.75,1";
    auto* morph_cmd = app.add_subcommand("morph", "Compute intermediate shapes");
    morph_cmd->add_option("--method", method, "dilation, voronoi or mixed")
        ->check(CLI::IsMember({"dilation", "voronoi", "mixed"}))
        ->capture_default_str();
    morph_cmd->add_option("--alpha", alphas, "Comma-separated alpha values")->capture_default_str();
    morph_flags.attach(morph_cmd);

    PairFlags render_flags;
    std::string frames = "0,0.25,0.5,0.75,1", methods = "dilation,voronoi,mixed", canvas = "400x400";
    auto* render_cmd = app.add_subcommand("render", "Write one SVG frame per method and alpha");
    render_cmd->add_option("--frames", frames, "Comma-separated alpha values")->capture_default_str();
    render_cmd->add_option("--methods", methods, "Comma-separated methods")->capture_default_str();
    render_cmd->add_option("--canvas", canvas, "Canvas size WxH")->capture_default_str();
    render_flags.attach(render_cmd);

    BatchOptions batch;
    std::string manifest, batch_align = "centroid", batch_scale = "unit-area", batch_out = ".";
    auto* batch_cmd = app.add_subcommand("batch", "Measure every pair of a manifest over the alpha grid");
    batch_cmd->add_option("--manifest", manifest, "Lines of 'pair_id, a.wkt, b.wkt, category'")->required();
    batch_cmd->add_option("--step", batch.grid.alpha_step, "Alpha step")->capture_default_str();
    batch_cmd->add_option("--phi", batch.grid.phi, "Closing radius of the mixed morph")->capture_default_str();
    batch_cmd->add_option("--filter", batch.grid.filter, "Minimum area of counted components and holes")
        ->capture_default_str();
    batch_cmd->add_option("--segments", batch.grid.disk_segments, "Vertices of the polygonal disk")
        ->capture_default_str();
    batch_cmd->add_option("--arc-tol", batch.grid.arc_tolerance, "Maximum deviation of discretized Voronoi arcs")
        ->capture_default_str();
    batch_cmd->add_option("--align", batch_align, "Alignment")
        ->check(CLI::IsMember({"centroid", "none"}))
        ->capture_default_str();
    batch_cmd->add_option("--scale", batch_scale, "Area normalization")
        ->check(CLI::IsMember({"equal-area", "unit-area", "none"}))
        ->capture_default_str();
    batch_cmd->add_option("--out", batch_out, "Output directory")->capture_default_str();

    auto* gen_cmd = app.add_subcommand("gen", "Write a synthetic pair (a.wkt, b.wkt, manifest.txt)");
    gen_cmd->require_subcommand(1);
    std::string gen_out = ".";
    gen_cmd->add_option("--out", gen_out, "Output directory")->capture_default_str();
    int prongs = 4;
    auto* comb_cmd = gen_cmd->add_subcommand("comb", "Interlocking combs");
    comb_cmd->add_option("--prongs", prongs, "Prongs per comb")->capture_default_str()->check(CLI::Range(2, 1000));
    std::uint64_t seed = 1;
    int vertices = 16;
    auto* random_cmd = gen_cmd->add_subcommand("random", "Random star polygons");
    random_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
    random_cmd->add_option("--vertices", vertices, "Vertices per polygon")
        ->capture_default_str()
        ->check(CLI::Range(3, 100000));
    double gap = 1.0;
    auto* squares_cmd = gen_cmd->add_subcommand("squares", "Two unit squares side by side");
    squares_cmd->add_option("--gap", gap, "Gap between the squares")->capture_default_str()->check(CLI::Range(0.0, 1e9));
    for (auto* sub : {comb_cmd, random_cmd, squares_cmd})
        sub->add_option("--out", gen_out, "Output directory")->capture_default_str();

    std::string hd_a, hd_b;
    auto* hd_cmd = app.add_subcommand("hausdorff", "Print 'd directed_ab directed_ba wx wy tx ty'");
    hd_cmd->add_option("a", hd_a, "First shape (WKT file)")->required();
    hd_cmd->add_option("b", hd_b, "Second shape (WKT file)")->required();

    std::string part_a, part_b, part_prefix = "partition";
    double part_tol = kDefaultArcTolerance;
    auto* part_cmd = app.add_subcommand("partition", "Dump the partition of a by b's Voronoi cells");
    part_cmd->add_option("a", part_a, "Shape to partition (WKT file)")->required();
    part_cmd->add_option("b", part_b, "Shape whose features define the cells (WKT file)")->required();
    part_cmd->add_option("--arc-tol", part_tol, "Maximum deviation of discretized Voronoi arcs")->capture_default_str();
    part_cmd->add_option("--prefix", part_prefix, "Writes <prefix>.wkt and <prefix>.sites")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*morph_cmd) return cmd_morph(morph_flags, method, alphas);
        if (*render_cmd) return cmd_render(render_flags, frames, methods, canvas);
        if (*batch_cmd) return cmd_batch(manifest, batch, batch_align, batch_scale, batch_out);
        if (*comb_cmd) write_pair(generate_comb_pair(prongs), "comb-" + std::to_string(prongs), "comb", gen_out);
        if (*random_cmd)
            write_pair(generate_random_pair(seed, vertices),
                       "random-" + std::to_string(seed) + "-" + std::to_string(vertices), "random", gen_out);
        if (*squares_cmd) write_pair(generate_squares_pair(gap), "squares-" + shortest(gap), "squares", gen_out);
        if (*hd_cmd) return cmd_hausdorff(hd_a, hd_b);
        if (*part_cmd) return cmd_partition(part_a, part_b, part_tol, part_prefix);
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "geometry failure: " << e.what() << '\n';
        return 2;
    }
}
