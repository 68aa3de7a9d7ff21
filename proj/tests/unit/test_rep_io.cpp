#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <numbers>
#include <random>
#include <sstream>

#include "hypsurf/polygon.hpp"
#include "hypsurf/rep_io.hpp"
#include "hypsurf/rep_solver.hpp"
#include "test_support.hpp"

using namespace hypsurf;

namespace {

Representation round_trip(const Representation& r, const std::string& meta = {}) {
    std::ostringstream os;
    write_representation(os, r, meta);
    std::istringstream is(os.str());
    return read_representation(is).rep;
}

RepFile parse(const std::string& text) {
    std::istringstream is(text);
    return read_representation(is);
}

}  // namespace

TEST_CASE("write/read is bit identical") {
    for (int g = 2; g <= 4; ++g) {
        const Representation r = side_pairings(regular_polygon(g));
        const Representation back = round_trip(r);
        CHECK(back.same_generators(r));
        CHECK(relation_residual(back) == relation_residual(r));
        CHECK(back.validate().validated());
    }
    for (std::uint64_t s = 1; s <= 20; ++s) {
        const Representation r = solve(3, s).rep;
        CHECK(round_trip(r).same_generators(r));
    }
    // arbitrary doubles, including subnormal-adjacent and huge entries
    std::mt19937_64 rng(4);
    for (int k = 0; k < 200; ++k) {
        const Mat2 a = testing::random_sl2(rng);
        const Mat2 b = testing::random_sl2(rng);
        const Representation r({a, scaling(1e150)}, {b, unipotent(1e-300)});
        CHECK(round_trip(r).same_generators(r));
    }
}

TEST_CASE("meta lines") {
    const Representation r = Representation::trivial(1);
    std::ostringstream os;
    write_representation(os, r, "first line\nsecond line");
    CHECK(os.str().find("meta first line\nmeta second line\n") != std::string::npos);
    std::istringstream is(os.str());
    CHECK(read_representation(is).meta == "first line\nsecond line");

    std::ostringstream none;
    write_representation(none, r);
    CHECK(none.str().find("meta") == std::string::npos);
}

TEST_CASE("comments, blank lines and field order") {
    const RepFile f = parse(
        "# header\n"
        "\n"
        "meta before everything\n"
        "B 1 0 0 1\n"
        "genus 1\n"
        "   # indented comment\n"
        "A 2 0 0 0.5\n");
    CHECK(f.rep.genus() == 1);
    CHECK(f.rep.a()[0] == scaling(2.0));
    CHECK(f.rep.b()[0] == Mat2::identity());
    CHECK(f.meta == "before everything");
    CHECK_FALSE(f.rep.validated());
}

TEST_CASE("fixture file") {
    const RepFile f = load_representation(std::string(HYPSURF_TEST_DATA) + "/trivial_g2.txt");
    CHECK(f.rep.genus() == 2);
    CHECK(f.rep.same_generators(Representation::trivial(2)));
    CHECK(f.meta == "all generators map to the identity");
}

TEST_CASE("malformed input") {
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("A 1 0 0 1\nB 1 0 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse("genus\nA 1 0 0 1\nB 1 0 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse("genus 0\n"), ParseError);
    CHECK_THROWS_AS(parse("genus 1.5\nA 1 0 0 1\nB 1 0 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse("genus 1\nA 1 0 0\nB 1 0 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse("genus 1\nA 1 0 0 1 5\nB 1 0 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse("genus 1\nA 1 0 0 x\nB 1 0 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse("genus 1\nA 1 0 0 1,\nB 1 0 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse("genus 1\nA 1 0 0 1\nB 1 0 0 1\nC 1 0 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse("genus 2\nA 1 0 0 1\nB 1 0 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse("genus 1\nA 1e999 0 0 1\nB 1 0 0 1\n"), ParseError);
    // parses, but is not in SL(2,R)
    CHECK_THROWS_AS(parse("genus 1\nA 1 1 1 1\nB 1 0 0 1\n"), InvalidMatrix);
    CHECK_THROWS_AS(parse("genus 1\nA nan 0 0 1\nB 1 0 0 1\n"), InvalidMatrix);
}

TEST_CASE("save and load through the filesystem") {
    const auto path = std::filesystem::temp_directory_path() / "hypsurf_rep_io_test.txt";
    const Representation r = side_pairings(regular_polygon(3));
    save_representation(path.string(), r, "genus three");
    const RepFile f = load_representation(path.string());
    CHECK(f.rep.same_generators(r));
    CHECK(f.meta == "genus three");
    std::filesystem::remove(path);
    CHECK_THROWS_AS(load_representation(path.string()), Error);
    CHECK_THROWS_AS(save_representation("/nonexistent-dir/x.txt", r), Error);
}

TEST_CASE("polygon export") {
    const HyperbolicPolygon p = regular_polygon(2);
    std::ostringstream os;
    write_polygon(os, p);
    std::istringstream is(os.str());
    int vertices = 0, angles = 0, areas = 0;
    std::string key;
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        ls >> key;
        if (key == "vertex") {
            double x = 0, y = 0;
            ls >> x >> y;
            CHECK(HPoint(x, y) == p.vertex(vertices));
            ++vertices;
        } else if (key == "angle") {
            double a = 0;
            ls >> a;
            CHECK(a == doctest::Approx(std::numbers::pi / 4).epsilon(1e-9));
            ++angles;
        } else if (key == "area") {
            double a = 0;
            ls >> a;
            CHECK(a == doctest::Approx(4 * std::numbers::pi).epsilon(1e-9));
            ++areas;
        }
    }
    CHECK(vertices == 8);
    CHECK(angles == 8);
    CHECK(areas == 1);
}
