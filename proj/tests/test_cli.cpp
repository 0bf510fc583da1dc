#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>
#include <sys/wait.h>

#include "corpus.hpp"
#include "hausmorph/experiment.hpp"
#include "hausmorph/io.hpp"
#include "hausmorph/wkt.hpp"

#ifndef HAUSMORPH_CLI
#error "HAUSMORPH_CLI must name the command-line binary"
#endif

namespace fs = std::filesystem;
using namespace hausmorph;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(HAUSMORPH_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    REQUIRE(pipe);
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
    const int raw = ::pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

fs::path scratch(const char* name) {
    auto dir = fs::temp_directory_path() / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string q(const fs::path& p) { return "'" + p.string() + "'"; }

/// Value of `key=` in the first line that contains `prefix`.
double field(const std::string& text, const std::string& prefix, const std::string& key) {
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        if (line.find(prefix) == std::string::npos) continue;
        const auto at = line.find(" " + key + "=");
        REQUIRE(at != std::string::npos);
        return std::stod(line.substr(at + key.size() + 2));
    }
    FAIL("no line with " << prefix);
    return 0;
}

}  // namespace

TEST_CASE("gen squares and morph endpoints") {
    const auto dir = scratch("hausmorph-cli-squares");
    REQUIRE(run("gen squares --gap 1 --out " + q(dir)).status == 0);
    CHECK(read_wkt_file((dir / "a.wkt").string()) == testing::box(0, 0, 1, 1));
    CHECK(read_wkt_file((dir / "b.wkt").string()) == testing::box(2, 0, 3, 1));
    CHECK(read_text_file((dir / "manifest.txt").string()).find("a.wkt") != std::string::npos);

    const std::string pair = q(dir / "a.wkt") + " " + q(dir / "b.wkt");
    auto r = run("morph --method voronoi --alpha 0,1 --align none --scale none --out " + q(dir / "v") + " " + pair);
    REQUIRE(r.status == 0);
    CHECK(r.out.starts_with("h=2.000000000"));
    CHECK(symmetric_difference_area(read_wkt_file((dir / "v" / "voronoi-0.wkt").string()),
                                    read_wkt_file((dir / "a.wkt").string())) <= 1e-12);
    CHECK(symmetric_difference_area(read_wkt_file((dir / "v" / "voronoi-1.wkt").string()),
                                    read_wkt_file((dir / "b.wkt").string())) <= 1e-12);

    r = run("morph --method mixed --phi 0 --alpha 0.5 --out " + q(dir / "m") + " " + pair);
    REQUIRE(r.status == 0);
    REQUIRE(run("morph --method voronoi --alpha 0.5 --out " + q(dir / "m") + " " + pair).status == 0);
    CHECK(read_wkt_file((dir / "m" / "mixed-0.5.wkt").string()) ==
          read_wkt_file((dir / "m" / "voronoi-0.5.wkt").string()));

    r = run("morph --method dilation --alpha 0.5 --align none --scale none --out " + q(dir / "d") + " " + pair);
    REQUIRE(r.status == 0);
    const double tau = testing::tau(2.0);
    CHECK(std::abs(field(r.out, "alpha=0.5", "dH_a") - 1.0) <= tau);
    CHECK(std::abs(field(r.out, "alpha=0.5", "dH_b") - 1.0) <= tau);

    r = run("hausdorff " + pair);
    REQUIRE(r.status == 0);
    CHECK(r.out == "2 2 2 0 0 2 0\n");
    fs::remove_all(dir);
}

TEST_CASE("render") {
    const auto dir = scratch("hausmorph-cli-render");
    REQUIRE(run("gen comb --prongs 2 --out " + q(dir)).status == 0);
    const std::string pair = q(dir / "a.wkt") + " " + q(dir / "b.wkt");
    REQUIRE(run("render --out " + q(dir / "svg") + " " + pair).status == 0);
    int svgs = 0;
    for (const auto& e : fs::directory_iterator(dir / "svg")) svgs += e.path().extension() == ".svg";
    CHECK(svgs == 15);

    write_file_atomic((dir / "ring.wkt").string(), "POLYGON((0 0,4 0,4 4,0 4,0 0),(1 1,1 3,3 3,3 1,1 1))\n");
    REQUIRE(run("render --frames 0 --methods voronoi --canvas 200x100 --out " + q(dir / "ring") + " " +
                q(dir / "ring.wkt") + " " + q(dir / "ring.wkt"))
                .status == 0);
    const std::string svg = read_text_file((dir / "ring" / "voronoi-0.svg").string());
    CHECK(svg.find("fill-rule=\"evenodd\"") != std::string::npos);
    CHECK(std::count(svg.begin(), svg.end(), 'M') == 2);
    CHECK(svg.find("width=\"200\"") != std::string::npos);

    CHECK(run("render --canvas 200 --out " + q(dir / "x") + " " + pair).status == 1);
    CHECK(run("render --frames 0.5,0.25 --out " + q(dir / "x") + " " + pair).status == 1);
    fs::remove_all(dir);
}

TEST_CASE("batch") {
    const auto dir = scratch("hausmorph-cli-batch");
    REQUIRE(run("gen random --seed 3 --vertices 12 --out " + q(dir)).status == 0);
    write_file_atomic((dir / "same.txt").string(), "same, a.wkt, a.wkt, self\n");
    auto r = run("batch --manifest " + q(dir / "same.txt") + " --out " + q(dir / "out"));
    REQUIRE(r.status == 0);
    CHECK(r.out.starts_with("step=0.125 phi=0.02 "));
    const auto summary = parse_summary_csv(read_text_file((dir / "out" / "summary.csv").string()));
    for (const auto& row : summary)
        if (row.quantity.ends_with("ratio")) CHECK(row.mean == doctest::Approx(1.0));
    CHECK(parse_records_csv(read_text_file((dir / "out" / "records.csv").string())).size() == 27);

    REQUIRE(run("gen comb --prongs 4 --out " + q(dir / "comb")).status == 0);
    r = run("batch --manifest " + q(dir / "comb" / "manifest.txt") + " --step 0.5 --out " + q(dir / "comb"));
    REQUIRE(r.status == 0);
    const auto records = parse_records_csv(read_text_file((dir / "comb" / "records.csv").string()));
    for (const auto& rec : records)
        if (rec.method == Method::dilation && rec.alpha == 0.5) CHECK(rec.components >= 10);

    write_file_atomic((dir / "bad.txt").string(), "bad, missing.wkt, a.wkt, x\n");
    CHECK(run("batch --manifest " + q(dir / "bad.txt") + " --out " + q(dir / "bad")).status == 2);
    CHECK(run("batch --out " + q(dir)).status == 1);
    fs::remove_all(dir);
}

TEST_CASE("gen is deterministic") {
    const auto d1 = scratch("hausmorph-cli-gen1"), d2 = scratch("hausmorph-cli-gen2");
    REQUIRE(run("gen random --seed 7 --vertices 16 --out " + q(d1)).status == 0);
    REQUIRE(run("gen random --seed 7 --vertices 16 --out " + q(d2)).status == 0);
    CHECK(read_text_file((d1 / "a.wkt").string()) == read_text_file((d2 / "a.wkt").string()));
    CHECK(read_text_file((d1 / "b.wkt").string()) == read_text_file((d2 / "b.wkt").string()));
    CHECK(run("gen comb --prongs 1 --out " + q(d1)).status == 1);
    CHECK(run("gen squares --gap -1 --out " + q(d1)).status == 1);
    fs::remove_all(d1);
    fs::remove_all(d2);
}

TEST_CASE("errors and help") {
    const auto dir = scratch("hausmorph-cli-errors");
    write_file_atomic((dir / "sq.wkt").string(), "POLYGON((0 0,1 0,1 1,0 1,0 0))\n");
    write_file_atomic((dir / "empty.wkt").string(), "MULTIPOLYGON EMPTY\n");
    write_file_atomic((dir / "junk.wkt").string(), "POLYGON((0 0,1 0\n");
    const std::string sq = q(dir / "sq.wkt");
    CHECK(run("morph --alpha 2 " + sq + " " + sq).status == 1);
    CHECK(run("morph --method linear " + sq + " " + sq).status == 1);
    CHECK(run("morph " + q(dir / "junk.wkt") + " " + sq).status == 1);
    CHECK(run("morph " + q(dir / "nope.wkt") + " " + sq).status == 1);
    CHECK(run("morph --out " + q(dir) + " " + q(dir / "empty.wkt") + " " + sq).status == 2);
    CHECK(run("frobnicate").status == 1);

    const Run help = run("morph --help");
    CHECK(help.status == 0);
    CHECK(help.out.find("0.02") != std::string::npos);
    CHECK(help.out.find("equal-area") != std::string::npos);
    const Run batch_help = run("batch --help");
    CHECK(batch_help.out.find("0.125") != std::string::npos);
    fs::remove_all(dir);
}
