#pragma once

#include <iosfwd>
#include <string>

#include "hypsurf/polygon.hpp"
#include "hypsurf/surface_rep.hpp"

namespace hypsurf {

// Line-oriented text file for a representation:
//
//   # comment
//   genus 2
//   A a b c d        (g lines, row-major, in order A_1 .. A_g)
//   B a b c d        (g lines)
//   meta free text   (optional, repeatable)
//
// Numbers are written with 17 significant digits, so a write/read round trip
// reproduces every entry bit for bit.
struct RepFile {
    Representation rep;
    std::string meta;
};

void write_representation(std::ostream& os, const Representation& r, const std::string& meta = {});
// Throws ParseError on malformed input and InvalidMatrix for entries off SL(2,R).
RepFile read_representation(std::istream& is);

void save_representation(const std::string& path, const Representation& r, const std::string& meta = {});
RepFile load_representation(const std::string& path);

// `vertex x y` lines, then `angle` lines and the Gauss-Bonnet `area`.
void write_polygon(std::ostream& os, const HyperbolicPolygon& p);

}  // namespace hypsurf
