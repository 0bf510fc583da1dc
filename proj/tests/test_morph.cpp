#include <doctest.h>

#include "corpus.hpp"
#include "hausmorph/hausdorff.hpp"
#include "hausmorph/morph.hpp"
#include "oracles.hpp"

using namespace hausmorph;
using hausmorph::testing::box;

namespace {

NormalizedPair squares() { return as_pair(box(0, 0, 1, 1), box(2, 0, 3, 1)); }

MorphParams at(double alpha, double phi = 0.0) {
    MorphParams p;
    p.alpha = alpha;
    p.phi = phi;
    return p;
}

/// A two-pronged comb inside its bounding box, plus a far square on each side
/// so h = 2 and the dilation morph fills the comb's slot.
NormalizedPair slit_pair() {
    Shape a = generate_comb_pair(2).first;
    a.polygons.push_back(box(5, 0, 5.25, 0.25).polygons[0]);
    Shape b = box(0, 0, 1.25, 1.25);
    b.polygons.push_back(box(7, 0, 7.25, 0.25).polygons[0]);
    return as_pair(a, b);
}

}  // namespace

TEST_CASE("names") {
    CHECK(parse_method("voronoi") == Method::voronoi);
    CHECK(std::string(to_string(Method::mixed)) == "mixed");
    CHECK(parse_scaling("equal-area") == Scaling::equal_area);
    CHECK(parse_scaling("unit-area") == Scaling::unit_area);
    CHECK(parse_alignment("none") == Alignment::none);
    CHECK_THROWS_AS(parse_method("linear"), std::invalid_argument);
    CHECK_THROWS_AS(parse_alignment("left"), std::invalid_argument);
}

TEST_CASE("parameter checks") {
    CHECK_NOTHROW(check(at(0.5, 0.1)));
    CHECK_THROWS_AS(check(at(1.5)), GeometryError);
    CHECK_THROWS_AS(check(at(-0.1)), GeometryError);
    CHECK_THROWS_AS(check(at(0.5, -1)), GeometryError);
    MorphParams p = at(0.5);
    p.disk_segments = 7;
    CHECK_THROWS_AS(check(p), GeometryError);
    p = at(0.5);
    p.arc_tolerance = 0;
    CHECK_THROWS_AS(check(p), GeometryError);
    CHECK_THROWS_AS(voronoi_morph(squares(), at(2.0)), GeometryError);
    PairMorpher m(squares());
    CHECK_THROWS_AS(m.dilation(-0.5), GeometryError);
}

TEST_CASE("normalization") {
    SUBCASE("congruent squares collapse onto each other") {
        const auto p = normalize_pair(box(0, 0, 1, 1), box(5, 3, 6, 4), Alignment::centroid, Scaling::equal_area);
        CHECK(p.scale_a == doctest::Approx(1.0));
        CHECK(p.scale_b == doctest::Approx(1.0));
        CHECK(p.h <= 1e-12);
        CHECK(p.translation_b.x == doctest::Approx(-5.5));
        CHECK(distance(centroid(p.a), centroid(p.b)) <= 1e-9);
    }
    SUBCASE("areas 1 and 4 meet at 2") {
        const auto p = normalize_pair(box(0, 0, 1, 1), box(0, 0, 2, 2), Alignment::centroid, Scaling::equal_area);
        CHECK(area(p.a) == doctest::Approx(2.0));
        CHECK(area(p.b) == doctest::Approx(2.0));
        CHECK(p.scale_a == doctest::Approx(std::sqrt(2.0)));
        CHECK(p.scale_b == doctest::Approx(1.0 / std::sqrt(2.0)));
        CHECK(std::abs(area(p.a) - area(p.b)) <= 1e-6 * area(p.a));
    }
    SUBCASE("pass-through") {
        const auto p = normalize_pair(box(0, 0, 1, 1), box(2, 0, 3, 1), Alignment::none, Scaling::none);
        CHECK(p.a == box(0, 0, 1, 1));
        CHECK(p.b == box(2, 0, 3, 1));
        CHECK(p.h == doctest::Approx(2.0));
    }
    SUBCASE("unit area") {
        auto [a, b] = generate_random_pair(4, 17);
        const auto p = normalize_pair(a, b, Alignment::centroid, Scaling::unit_area);
        CHECK(area(p.a) == doctest::Approx(1.0));
        CHECK(area(p.b) == doctest::Approx(1.0));
        CHECK(std::abs(p.h - hausdorff(p.a, p.b).distance) <= 1e-9);
    }
    CHECK_THROWS_AS(normalize_pair(Shape{}, box(0, 0, 1, 1), Alignment::none, Scaling::none), GeometryError);
}

TEST_CASE("dilation morph") {
    const auto pair = squares();
    CHECK(dilation_morph(pair, at(0)).shape == pair.a);
    CHECK(dilation_morph(pair, at(1)).shape == pair.b);
    const Shape half = dilation_morph(pair, at(0.5)).shape;
    CHECK(area(difference(box(1, 0, 2, 1), half)) <= 1e-12);
    CHECK(std::abs(hausdorff(half, pair.a).distance - 1.0) <= 3e-3);
    CHECK(std::abs(hausdorff(half, pair.b).distance - 1.0) <= 3e-3);
    // Frozen from the sampling oracle at spacing 0.005.
    CHECK(std::abs(oracle::hausdorff(half, pair.a, 0.005) - 1.0) <= 3e-3);

    const auto same = as_pair(pair.a, pair.a);
    CHECK(dilation_morph(same, at(0.4)).shape == pair.a);
}

TEST_CASE("Voronoi morph on the squares") {
    const auto pair = squares();
    CHECK(voronoi_morph(pair, at(0)).shape == pair.a);
    CHECK(voronoi_morph(pair, at(1)).shape == pair.b);
    const Shape half = voronoi_morph(pair, at(0.5)).shape;
    CHECK(area(half) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(symmetric_difference_area(half, box(1, 0, 2, 1)) <= 1e-8);
    CHECK(hausdorff(half, pair.a).distance == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(hausdorff(half, pair.b).distance == doctest::Approx(1.0).epsilon(1e-8));

    const auto same = as_pair(pair.b, pair.b);
    CHECK(symmetric_difference_area(voronoi_morph(same, at(0.3)).shape, pair.b) <= 1e-9);
}

TEST_CASE("mixed morph") {
    const auto pair = squares();
    for (double alpha : {0.25, 0.5}) {
        const Shape t = voronoi_morph(pair, at(alpha)).shape;
        CHECK(mixed_morph(pair, at(alpha, 0.0)).shape == t);
        // A rectangle is convex, so the closing leaves it alone.
        CHECK(symmetric_difference_area(mixed_morph(pair, at(alpha, 0.05)).shape, t) <= 1e-7);
    }
}

TEST_CASE("mixed morph closes a narrow slit") {
    const auto pair = slit_pair();
    REQUIRE(pair.h == doctest::Approx(2.0));
    const double alpha = 0.75;
    PairMorpher m(pair);
    const Shape& t = m.voronoi(alpha);
    const Shape& s = m.dilation(alpha);
    // The slot of width 0.75 is squeezed to (1 - alpha) 0.75 = 0.1875.
    const Point mid{1.0, 0.625};
    CHECK_FALSE(oracle::inside(t, mid));
    CHECK(oracle::inside(t, {1.0, 0.625 - 0.1}));
    CHECK(oracle::inside(t, {1.0, 0.625 + 0.1}));
    CHECK(oracle::inside(s, mid));

    const Shape closed = m.mixed(alpha, 0.1);
    CHECK(oracle::inside(closed, mid));
    const double tol = testing::tau(pair.h) * (perimeter(t) + perimeter(s));
    CHECK(area(difference(closed, s)) <= tol);
    CHECK(area(difference(t, closed)) <= tol);

    // Too small a disk leaves the slit open.
    CHECK_FALSE(oracle::inside(m.mixed(alpha, 0.05), mid));
}

TEST_CASE("morph of a translated target") {
    const Shape a = box(0, 0, 1, 1), b = box(2, 0, 3, 1);
    for (Method method : {Method::dilation, Method::voronoi, Method::mixed}) {
        CHECK(morph_translated(a, b, {0, 0}, method, at(0.5, 0.02)).shape ==
              morph(as_pair(a, b), method, at(0.5, 0.02)).shape);
        CHECK(morph_translated(a, b, {4, 0}, method, at(1)).shape == box(6, 0, 7, 1));
    }
    const Shape shifted = morph_translated(a, b, {4, 0}, Method::voronoi, at(0.5)).shape;
    CHECK(symmetric_difference_area(shifted, box(3, 0, 4, 1)) <= 1e-8);
}

TEST_CASE("pair morpher matches the free functions") {
    auto [a, b] = generate_random_pair(9, 14);
    const auto pair = normalize_pair(a, b, Alignment::centroid, Scaling::unit_area);
    PairMorpher m(pair);
    for (double alpha : {0.0, 0.375, 1.0}) {
        CHECK(m.dilation(alpha) == dilation_morph(pair, at(alpha)).shape);
        CHECK(m.voronoi(alpha) == voronoi_morph(pair, at(alpha)).shape);
        CHECK(m.mixed(alpha, 0.02) == mixed_morph(pair, at(alpha, 0.02)).shape);
        CHECK(m.evaluate(Method::mixed, alpha, 0.0) == m.voronoi(alpha));
    }
    const Shape* first = &m.voronoi(0.5);
    CHECK(first == &m.voronoi(0.5));
    CHECK(m.forward().pieces.size() > 1);
    CHECK(m.backward().pieces.size() > 1);
}

TEST_CASE("morphs keep the Hausdorff interpolation") {
    for (const auto& [id, pair] : testing::random_corpus(4)) {
        INFO(id);
        PairMorpher m(pair);
        const double tau = testing::tau(pair.h);
        for (double alpha : {0.25, 0.5, 0.75}) {
            for (const Shape* s : {&m.voronoi(alpha), &m.dilation(alpha)}) {
                CHECK(std::abs(hausdorff(pair.a, *s).distance - alpha * pair.h) <= tau);
                CHECK(std::abs(hausdorff(pair.b, *s).distance - (1 - alpha) * pair.h) <= tau);
                CHECK_NOTHROW(validate(*s));
            }
        }
    }
}
