#include "hypsurf/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "hypsurf/euclid.hpp"
#include "hypsurf/polygon.hpp"
#include "hypsurf/rep_io.hpp"
#include "hypsurf/rep_solver.hpp"
#include "hypsurf/surface_rep.hpp"
#include "hypsurf/tiling.hpp"

namespace hypsurf::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoFailure : std::runtime_error {
    IoFailure(const std::string& what, int code) : std::runtime_error(what), code(code) {}
    int code;
};

std::vector<double> parse_list(const std::string& text, std::size_t expected, const std::string& flag) {
    std::vector<double> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        double v = 0.0;
        const char* first = text.data() + start;
        const char* last = text.data() + comma;
        const auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc{} || ptr != last) throw UsageError(flag + ": bad number in '" + text + "'");
        values.push_back(v);
        start = comma + 1;
    }
    if (values.size() != expected) {
        throw UsageError(flag + " expects " + std::to_string(expected) + " comma-separated numbers");
    }
    return values;
}

euclid::Vec2 parse_vec(const std::string& text, const std::string& flag) {
    const auto v = parse_list(text, 2, flag);
    return {v[0], v[1]};
}

RepFile load(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoFailure("cannot open " + path, kNoInput);
    return read_representation(is);
}

void save(const std::string& path, const std::string& contents) {
    std::ofstream os(path);
    if (!os || !(os << contents)) throw IoFailure("cannot write " + path, kCannotCreate);
}

const char* flag(bool b) { return b ? "true" : "false"; }

struct Options {
    std::string in;
    std::string out;
    std::string matrix;
    std::string a, b, p;
    int genus = 2;
    int depth = 2;
    int branches = 0;
    std::uint64_t seed = 1;
    int max_iter = 500;
    double tol = 1e-6;
    double solve_tol = 1e-14;
    bool trace = false;
};

int cmd_toledo(const Options& o, std::ostream& out) {
    const RepFile f = load(o.in);
    const ToledoResult t = toledo(f.rep);
    out << "value " << t.value << '\n'
        << "raw " << t.raw << '\n'
        << "residual " << t.residual << '\n'
        << "kernel_matrix_residual " << t.kernel_matrix_residual << '\n'
        << "psl_only " << flag(t.psl_only) << '\n'
        << "marginal " << flag(t.marginal) << '\n';
    if (o.branches > 0) {
        const bool same = branch_independence_check(f.rep, o.seed, o.branches);
        out << "branch_trials " << o.branches << '\n' << "branch_independent " << flag(same) << '\n';
        if (!same) return kBranchMismatch;
    }
    return kOk;
}

int cmd_check_relation(const Options& o, std::ostream& out) {
    const RepFile f = load(o.in);
    const double res = relation_residual(f.rep);
    const bool ok = res <= o.tol;
    out << "residual " << res << '\n' << "tolerance " << o.tol << '\n' << "within " << flag(ok) << '\n';
    return ok ? kOk : kCheckFailed;
}

int cmd_classify(const Options& o, std::ostream& out) {
    const auto e = parse_list(o.matrix, 4, "--matrix");
    Mat2 m;
    try {
        m = Mat2(e[0], e[1], e[2], e[3]);
    } catch (const InvalidMatrix& ex) {
        throw UsageError(std::string("--matrix: ") + ex.what());
    }
    const Classification c = classify(m);
    out << "class " << to_string(c.kind) << '\n' << "trace " << c.trace << '\n' << "confident " << flag(c.confident) << '\n';
    return kOk;
}

int cmd_fuchsian_gen(const Options& o, std::ostream& out) {
    const Representation rep = side_pairings(regular_polygon(o.genus));
    std::ostringstream text;
    write_representation(text, rep, "side pairings of the regular " + std::to_string(4 * o.genus) + "-gon");
    save(o.out, text.str());
    out << "genus " << o.genus << '\n'
        << "relation_residual " << relation_residual(rep) << '\n'
        << "toledo " << toledo(rep).value << '\n'
        << "out " << o.out << '\n';
    return kOk;
}

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err) {
    SolverOptions so;
    so.max_iter = o.max_iter;
    so.tol = o.solve_tol;
    if (o.trace) so.trace = &err;
    try {
        const SolveResult r = solve(o.genus, o.seed, so);
        std::ostringstream text;
        write_representation(text, r.rep, "solver seed " + std::to_string(o.seed));
        save(o.out, text.str());
        out << "genus " << o.genus << '\n'
            << "seed " << o.seed << '\n'
            << "iterations " << r.iterations << '\n'
            << "residual " << r.residual << '\n'
            << "toledo " << toledo(r.rep).value << '\n'
            << "out " << o.out << '\n';
        return kOk;
    } catch (const DidNotConverge& e) {
        err << "error: " << e.what() << '\n';
        out << "converged false\n" << "residual " << e.last_residual() << '\n';
        return kCheckFailed;
    }
}

int cmd_dim_check(const Options& o, std::ostream& out) {
    const RepFile f = load(o.in);
    const Representation rep = f.rep.validate();
    const RankReport r = jacobian_rank(rep);
    const int g = rep.genus();
    out << "genus " << g << '\n'
        << "rank " << r.rank << '\n'
        << "variety_dim " << r.variety_dim << '\n'
        << "moduli_dim " << r.moduli_dim << '\n'
        << "expected_variety_dim " << 6 * g - 3 << '\n'
        << "expected_moduli_dim " << 6 * g - 6 << '\n'
        << "singular_values";
    for (double s : r.singular_values) out << ' ' << s;
    out << '\n';
    return kOk;
}

int cmd_polygon(const Options& o, std::ostream& out) {
    const HyperbolicPolygon poly = regular_polygon(o.genus);
    if (!o.out.empty()) {
        std::ostringstream text;
        write_polygon(text, poly);
        save(o.out, text.str());
    } else {
        write_polygon(out, poly);
    }
    const double area = polygon_area(poly);
    out << "sides " << 4 * o.genus << '\n'
        << "interior_angle " << interior_angles(poly.vertices()).front() << '\n'
        << "area_gauss_bonnet " << area << '\n'
        << "area_over_pi " << area / std::numbers::pi << '\n';
    if (!o.out.empty()) out << "out " << o.out << '\n';
    return kOk;
}

int cmd_tile(const Options& o, std::ostream& out) {
    const HyperbolicPolygon poly = regular_polygon(o.genus);
    std::vector<Mat2> gens;
    for (const SidePairing& sp : side_pairing_maps(poly)) gens.push_back(sp.map);
    TilingOptions to;
    to.depth = o.depth;
    const Tiling t = tile_svg(poly, gens, to);
    save(o.out, t.svg);
    out << "elements " << t.elements << '\n' << "tiles " << t.tiles_drawn << '\n' << "out " << o.out << '\n';
    return kOk;
}

int cmd_euclid_reduce(const Options& o, std::ostream& out) {
    euclid::LatticeGroup lattice(parse_vec(o.a, "--a"), parse_vec(o.b, "--b"));
    const euclid::Reduced r = euclid::reduce(lattice, parse_vec(o.p, "--p"));
    out << "point " << r.point.x << ' ' << r.point.y << '\n' << "n " << r.n << '\n' << "m " << r.m << '\n';
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hyperbolic surfaces, surface-group representations and the Toledo invariant", "hypsurf"};
    app.require_subcommand(1, 1);
    Options o;

    auto* toledo_cmd = app.add_subcommand("toledo", "Toledo invariant of a representation file");
    toledo_cmd->add_option("--in", o.in, "representation file")->required();
    toledo_cmd->add_option("--branches", o.branches, "also recompute with N random lift branches")->check(CLI::NonNegativeNumber);
    toledo_cmd->add_option("--seed", o.seed, "seed for --branches");

    auto* check_cmd = app.add_subcommand("check-relation", "residual of prod [A_i, B_i] = +-I");
    check_cmd->add_option("--in", o.in, "representation file")->required();
    check_cmd->add_option("--tol", o.tol, "tolerance")->capture_default_str();

    auto* classify_cmd = app.add_subcommand("classify", "elliptic / parabolic / hyperbolic");
    classify_cmd->add_option("--matrix", o.matrix, "a,b,c,d")->required();

    auto* gen_cmd = app.add_subcommand("fuchsian-gen", "side pairings of the regular 4g-gon");
    gen_cmd->add_option("--genus", o.genus)->check(CLI::Range(2, 64))->capture_default_str();
    gen_cmd->add_option("--out", o.out, "representation file to write")->required();

    auto* solve_cmd = app.add_subcommand("solve", "random representation by damped Gauss-Newton");
    solve_cmd->add_option("--genus", o.genus)->check(CLI::Range(1, 64))->capture_default_str();
    solve_cmd->add_option("--seed", o.seed)->capture_default_str();
    solve_cmd->add_option("--max-iter", o.max_iter)->check(CLI::PositiveNumber)->capture_default_str();
    solve_cmd->add_option("--tol", o.solve_tol, "on |P - I|_F^2")->capture_default_str();
    solve_cmd->add_option("--out", o.out, "representation file to write")->required();
    solve_cmd->add_flag("--trace", o.trace, "solver trace on stderr");

    auto* dim_cmd = app.add_subcommand("dim-check", "numerical rank of the relation map");
    dim_cmd->add_option("--in", o.in, "representation file")->required();

    auto* poly_cmd = app.add_subcommand("polygon", "regular 4g-gon with angle sum 2 pi");
    poly_cmd->add_option("--genus", o.genus)->check(CLI::Range(2, 64))->capture_default_str();
    poly_cmd->add_option("--out", o.out, "vertex file to write");

    auto* tile_cmd = app.add_subcommand("tile", "SVG of the tiling by the 4g-gon");
    tile_cmd->add_option("--genus", o.genus)->check(CLI::Range(2, 16))->capture_default_str();
    tile_cmd->add_option("--depth", o.depth)->check(CLI::Range(0, 6))->capture_default_str();
    tile_cmd->add_option("--out", o.out, "SVG file to write")->required();

    auto* euclid_cmd = app.add_subcommand("euclid-reduce", "reduce a point into the lattice parallelogram");
    euclid_cmd->add_option("--a", o.a, "ax,ay")->required();
    euclid_cmd->add_option("--b", o.b, "bx,by")->required();
    euclid_cmd->add_option("--p", o.p, "px,py")->required();

    std::vector<std::string> storage{"hypsurf"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (std::string& s : storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    }

    out.precision(std::numeric_limits<double>::max_digits10);
    try {
        if (*toledo_cmd) return cmd_toledo(o, out);
        if (*check_cmd) return cmd_check_relation(o, out);
        if (*classify_cmd) return cmd_classify(o, out);
        if (*gen_cmd) return cmd_fuchsian_gen(o, out);
        if (*solve_cmd) return cmd_solve(o, out, err);
        if (*dim_cmd) return cmd_dim_check(o, out);
        if (*poly_cmd) return cmd_polygon(o, out);
        if (*tile_cmd) return cmd_tile(o, out);
        if (*euclid_cmd) return cmd_euclid_reduce(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    } catch (const IoFailure& e) {
        err << "error: " << e.what() << '\n';
        return e.code;
    } catch (const NonIntegral& e) {
        err << "error: " << e.what() << '\n';
        return kNonIntegral;
    } catch (const RelationViolated& e) {
        err << "error: " << e.what() << '\n';
        return kRelationViolated;
    } catch (const InvalidLattice& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kDataError;
    } catch (const InvalidMatrix& e) {
        err << "error: " << e.what() << '\n';
        return kDataError;
    }
    return kUsage;
}

}  // namespace hypsurf::cli
