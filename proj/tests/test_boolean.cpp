#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "hausmorph/hausdorff.hpp"
#include "oracles.hpp"

using namespace hausmorph;
using hausmorph::testing::box;

namespace {

Shape multi(std::initializer_list<Shape> parts) {
    Shape out;
    for (const auto& p : parts) out.polygons.insert(out.polygons.end(), p.polygons.begin(), p.polygons.end());
    return out;
}

bool contains_shape(const Shape& outer, const Shape& inner, double tol = 1e-9) {
    return area(difference(inner, outer)) <= tol;
}

}  // namespace

TEST_CASE("intersection") {
    const Shape r = intersect(box(0, 0, 2, 2), box(1, 1, 3, 3));
    CHECK(area(r) == doctest::Approx(1.0));
    CHECK(intersect(box(0, 0, 1, 1), box(2, 0, 3, 1)).empty());
    auto [a, b] = generate_random_pair(3, 20);
    CHECK(area(intersect(a, a)) == doctest::Approx(area(a)).epsilon(1e-9));
    CHECK(intersect(a, Shape{}).empty());
}

TEST_CASE("union and difference") {
    const Shape u = unite(box(0, 0, 1, 1), box(2, 0, 3, 1));
    CHECK(measure(u, 0).components == 2);
    CHECK(area(u) == doctest::Approx(2.0));
    const Shape v = unite(box(0, 0, 2, 2), box(1, 1, 3, 3));
    CHECK(measure(v, 0).components == 1);
    CHECK(area(v) == doctest::Approx(7.0));
    const Shape d = difference(box(0, 0, 4, 4), box(1, 1, 3, 3));
    const Measurements md = measure(d, 0);
    CHECK(md.components == 1);
    CHECK(md.holes == 1);
    CHECK(md.area == doctest::Approx(12.0));
    CHECK_NOTHROW(validate(d));
}

TEST_CASE("inclusion-exclusion on random polygons") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        auto [a, b] = generate_random_pair(seed, 18);
        const Shape bb = translate(b, {0.3, 0.1});
        const double lhs = area(unite(a, bb));
        const double rhs = area(a) + area(bb) - area(intersect(a, bb));
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
        CHECK_NOTHROW(validate(unite(a, bb)));
        CHECK_NOTHROW(validate(intersect(a, bb)));
        CHECK_NOTHROW(validate(difference(a, bb)));
    }
}

TEST_CASE("De Morgan on square arrangements") {
    std::mt19937_64 rng(11);
    auto coord = [&] { return static_cast<double>(rng() % 100) / 10.0; };
    const Shape universe = box(-1, -1, 12, 12);
    for (int trial = 0; trial < 20; ++trial) {
        Shape s = {}, t = {};
        for (int i = 0; i < 3; ++i) {
            const double x = coord(), y = coord();
            s = unite(s, box(x, y, x + 1 + coord() / 5, y + 1 + coord() / 5));
            const double u = coord(), v = coord();
            t = unite(t, box(u, v, u + 1 + coord() / 5, v + 1 + coord() / 5));
        }
        // complement(s u t) == complement(s) n complement(t)
        const Shape lhs = difference(universe, unite(s, t));
        const Shape rhs = intersect(difference(universe, s), difference(universe, t));
        CHECK(symmetric_difference_area(lhs, rhs) <= 1e-9);
    }
}

TEST_CASE("unite_all matches pairwise union") {
    std::vector<Shape> parts;
    Shape seq;
    for (int i = 0; i < 9; ++i) {
        parts.push_back(box(i * 0.7, (i % 3) * 0.4, i * 0.7 + 1, (i % 3) * 0.4 + 1));
        seq = unite(seq, parts.back());
    }
    const Shape all = unite_all(parts);
    CHECK(symmetric_difference_area(all, seq) <= 1e-7);
    CHECK(unite_all({}).empty());
}

TEST_CASE("disk approximation parameters") {
    CHECK_THROWS_AS(check(DiskApprox{-1.0, 64}), GeometryError);
    CHECK_THROWS_AS(check(DiskApprox{1.0, 7}), GeometryError);
    CHECK_THROWS_AS(check(DiskApprox{1.0, 10 + 1}), GeometryError);
    CHECK_NOTHROW(check(DiskApprox{0.0, 8}));
    const DiskApprox d{2.0, 64};
    CHECK(d.error_bound() == doctest::Approx(2.0 * (1 - std::cos(std::numbers::pi / 64))));
    CHECK(d.vertices()[0].x == 2.0);
    CHECK(d.vertices()[0].y == 0.0);
}

TEST_CASE("dilation of the unit square") {
    const double r = 0.5;
    const DiskApprox disk{r, 64};
    const Shape d = dilate(box(0, 0, 1, 1), disk);
    // Oracle value: square + edge slabs + 64-gon area, frozen.
    constexpr double kRoundedSquare = 3.784137122636;
    CHECK(oracle::rounded_square_area(1.0, r, 64) == doctest::Approx(kRoundedSquare).epsilon(1e-12));
    CHECK(area(d) == doctest::Approx(kRoundedSquare).epsilon(1e-8));
    const double err = disk.error_bound();
    CHECK(area(d) >= 1 + 4 * r + std::numbers::pi * (r - err) * (r - err));
    CHECK(area(d) <= 1 + 4 * r + std::numbers::pi * r * r);
    CHECK(std::abs(area(d) - (1 + 4 * r + std::numbers::pi * r * r)) / area(d) < 1e-3);

    CHECK(dilate(Shape{}, disk).empty());
    auto [a, b] = generate_random_pair(2, 14);
    CHECK(dilate(a, DiskApprox{0.0, 64}).polygons[0].outer.vertices == a.polygons[0].outer.vertices);
}

TEST_CASE("dilation stays within the polygon error of the true disk sum") {
    // Every point of the exact offset lies within err of the polygonal one.
    auto [a, b] = generate_random_pair(9, 16);
    const DiskApprox disk{0.2, 64};
    const Shape d = dilate(a, disk);
    CHECK(contains_shape(d, a));
    const double err = disk.error_bound();
    // Points at exact distance r from a, in many directions from vertices.
    for (const Point v : a.polygons[0].outer.vertices)
        for (int k = 0; k < 32; ++k) {
            const double ang = 2 * std::numbers::pi * k / 32;
            const Point p{v.x + 0.2 * std::cos(ang), v.y + 0.2 * std::sin(ang)};
            if (oracle::region_distance(a, p) < 0.2 - 1e-12) continue;
            CHECK(oracle::region_distance(d, p) <= err + 1e-9);
        }
}

TEST_CASE("erosion") {
    const Shape e = erode(box(0, 0, 4, 4), {1.0, 64});
    CHECK(area(e) == doctest::Approx(4.0).epsilon(1e-6));
    CHECK(erode(box(0, 0, 1, 1), {1.0, 64}).empty());

    // Two squares touching corner to corner erode separately.
    const Shape two = multi({box(0, 0, 4, 4), box(4, 4, 8, 8)});
    const Shape eroded = erode(two, {0.5, 64});
    const auto raster = oracle::erosion_raster(two, 0.5, Box{{-0.5, -0.5}, {8.5, 8.5}}, 0.02);
    constexpr double kRasterArea = 18.0;
    constexpr int kRasterComponents = 2;
    CHECK(raster.area() == doctest::Approx(kRasterArea).epsilon(1e-9));
    CHECK(raster.components() == kRasterComponents);
    CHECK(measure(eroded, 0).components == kRasterComponents);
    CHECK(area(eroded) == doctest::Approx(kRasterArea).epsilon(1e-6));
    CHECK(symmetric_difference_area(eroded, multi({box(0.5, 0.5, 3.5, 3.5), box(4.5, 4.5, 7.5, 7.5)})) < 1e-6);
}

TEST_CASE("closing bridges gaps narrower than the diameter") {
    const Shape pair = multi({box(0, 0, 1, 1), box(1.1, 0, 2.1, 1)});
    const Box view{{-0.3, -0.3}, {2.4, 1.3}};
    constexpr int kClosedAt006 = 1, kOpenAt004 = 2;
    CHECK(oracle::closing_raster(pair, 0.06, view, 0.004).components() == kClosedAt006);
    CHECK(oracle::closing_raster(pair, 0.04, view, 0.004).components() == kOpenAt004);
    CHECK(measure(closing(pair, {0.06, 64}), 0).components == kClosedAt006);
    CHECK(measure(closing(pair, {0.04, 64}), 0).components == kOpenAt004);
}

TEST_CASE("closing fixes convex shapes and is idempotent") {
    const Shape s = box(0, 0, 2, 1);
    const DiskApprox disk{0.3, 64};
    const Shape c = closing(s, disk);
    CHECK(symmetric_difference_area(c, s) <= perimeter(s) * disk.error_bound());
    auto [a, b] = generate_random_pair(4, 20);
    const Shape ca = closing(a, disk);
    const Shape cca = closing(ca, disk);
    CHECK(contains_shape(ca, a, 1e-7));
    CHECK(symmetric_difference_area(ca, cca) <= 3 * perimeter(ca) * disk.error_bound());
}

TEST_CASE("monotonicity and (anti-)extensivity") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        auto [a, b] = generate_random_pair(seed, 14);
        const Shape s = intersect(a, b);
        const DiskApprox disk{0.1, 64};
        CHECK(area(difference(dilate(s, disk), dilate(a, disk))) <= 1e-7);
        CHECK(area(difference(erode(s, disk), erode(a, disk))) <= 1e-7);
        CHECK(contains_shape(dilate(a, disk), a));
        CHECK(contains_shape(a, erode(a, disk)));
        CHECK(contains_shape(a, dilate(erode(a, disk), disk), 1e-8));
        CHECK(contains_shape(closing(a, disk), a, 1e-7));
    }
}

TEST_CASE("dilation composition") {
    auto [a, b] = generate_random_pair(6, 16);
    const int k = 64;
    const double r1 = 0.1, r2 = 0.15;
    const Shape twice = dilate(dilate(a, {r1, k}), {r2, k});
    const Shape once = dilate(a, {r1 + r2, k});
    const double slack =
        perimeter(once) * (error_bound(r1, k) + error_bound(r2, k) + error_bound(r1 + r2, k));
    CHECK(area(difference(once, twice)) <= slack);
    CHECK(std::abs(area(once) - area(twice)) <= slack);
}
