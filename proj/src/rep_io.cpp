#include "hypsurf/rep_io.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <vector>

namespace hypsurf {

namespace {

double parse_number(const std::string& token, int line_no) {
    double v = 0.0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) {
        throw ParseError("line " + std::to_string(line_no) + ": bad number '" + token + "'");
    }
    return v;
}

}  // namespace

void write_representation(std::ostream& os, const Representation& r, const std::string& meta) {
    const auto old_precision = os.precision(std::numeric_limits<double>::max_digits10);
    os << "genus " << r.genus() << '\n';
    auto emit = [&](char key, std::span<const Mat2> mats) {
        for (const Mat2& m : mats) os << key << ' ' << m.a() << ' ' << m.b() << ' ' << m.c() << ' ' << m.d() << '\n';
    };
    emit('A', r.a());
    emit('B', r.b());
    std::istringstream lines(meta);
    for (std::string line; std::getline(lines, line);) os << "meta " << line << '\n';
    os.precision(old_precision);
}

RepFile read_representation(std::istream& is) {
    int genus = -1;
    std::vector<Mat2> a;
    std::vector<Mat2> b;
    std::string meta;
    std::string line;
    for (int line_no = 1; std::getline(is, line); ++line_no) {
        std::istringstream fields(line);
        std::string key;
        if (!(fields >> key) || key.front() == '#') continue;
        if (key == "meta") {
            std::string rest;
            std::getline(fields >> std::ws, rest);
            if (!meta.empty()) meta += '\n';
            meta += rest;
        } else if (key == "genus") {
            std::string tok;
            fields >> tok;
            genus = static_cast<int>(parse_number(tok, line_no));
            if (genus < 1 || static_cast<double>(genus) != parse_number(tok, line_no)) {
                throw ParseError("line " + std::to_string(line_no) + ": genus must be a positive integer");
            }
        } else if (key == "A" || key == "B") {
            std::vector<double> e;
            for (std::string tok; fields >> tok;) e.push_back(parse_number(tok, line_no));
            if (e.size() != 4) {
                throw ParseError("line " + std::to_string(line_no) + ": a matrix needs 4 entries");
            }
            (key == "A" ? a : b).emplace_back(e[0], e[1], e[2], e[3]);
        } else {
            throw ParseError("line " + std::to_string(line_no) + ": unknown field '" + key + "'");
        }
    }
    if (genus < 1) throw ParseError("missing genus");
    if (a.size() != static_cast<std::size_t>(genus) || b.size() != static_cast<std::size_t>(genus)) {
        throw ParseError("expected " + std::to_string(genus) + " A and B matrices each");
    }
    return {Representation(std::move(a), std::move(b)), std::move(meta)};
}

void save_representation(const std::string& path, const Representation& r, const std::string& meta) {
    std::ofstream os(path);
    if (!os) throw Error("cannot open " + path + " for writing");
    write_representation(os, r, meta);
    if (!os) throw Error("failed writing " + path);
}

RepFile load_representation(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw Error("cannot open " + path);
    return read_representation(is);
}

void write_polygon(std::ostream& os, const HyperbolicPolygon& p) {
    const auto old_precision = os.precision(std::numeric_limits<double>::max_digits10);
    os << "genus " << p.genus() << '\n';
    for (const HPoint& v : p.vertices()) os << "vertex " << v.x() << ' ' << v.y() << '\n';
    for (double a : interior_angles(p.vertices())) os << "angle " << a << '\n';
    os << "area " << polygon_area(p) << '\n';
    os.precision(old_precision);
}

}  // namespace hypsurf
