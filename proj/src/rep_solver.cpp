#include "hypsurf/rep_solver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace hypsurf {

RepCoords::RepCoords(int genus) : values_(static_cast<std::size_t>(6 * genus), 0.0) {
    if (genus < 1) throw std::invalid_argument("genus must be at least 1");
}

RepCoords::RepCoords(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty() || values_.size() % 6 != 0) {
        throw std::invalid_argument("coordinate vector length must be a positive multiple of 6");
    }
}

Mat2 coords_to_matrix(double theta, double s, double u) {
    return rotation(theta) * scaling(std::exp(s)) * unipotent(u);
}

std::array<double, 3> matrix_to_coords(const Mat2& m) {
    const double theta = std::atan2(m.c(), m.a());
    const double s = std::log(std::hypot(m.a(), m.c()));
    const Mat2 an = rotation(-theta) * m;
    return {theta, s, an.b() * std::exp(-s)};
}

Representation to_representation(const RepCoords& c) {
    const auto v = c.values();
    std::vector<Mat2> a;
    std::vector<Mat2> b;
    for (int i = 0; i < c.genus(); ++i) {
        const std::size_t o = static_cast<std::size_t>(6 * i);
        a.push_back(coords_to_matrix(v[o], v[o + 1], v[o + 2]));
        b.push_back(coords_to_matrix(v[o + 3], v[o + 4], v[o + 5]));
    }
    return {std::move(a), std::move(b)};
}

RepCoords to_coords(const Representation& r) {
    std::vector<double> v;
    for (int i = 0; i < r.genus(); ++i) {
        for (const Mat2& m : {r.a()[i], r.b()[i]}) {
            const auto t = matrix_to_coords(m);
            v.insert(v.end(), t.begin(), t.end());
        }
    }
    return RepCoords(std::move(v));
}

namespace {

Eigen::Vector4d relation_entries(const RepCoords& c) {
    const Mat2 p = to_representation(c).relation_product();
    return {p.a() - 1.0, p.b(), p.c(), p.d() - 1.0};
}

template <class F>
Eigen::MatrixXd central_jacobian(const RepCoords& c, double step, int rows, F&& f) {
    const auto n = static_cast<Eigen::Index>(c.values().size());
    Eigen::MatrixXd jac(rows, n);
    RepCoords probe = c;
    for (Eigen::Index k = 0; k < n; ++k) {
        double& x = probe.values()[static_cast<std::size_t>(k)];
        const double saved = x;
        x = saved + step;
        const Eigen::VectorXd plus = f(probe);
        x = saved - step;
        const Eigen::VectorXd minus = f(probe);
        x = saved;
        jac.col(k) = (plus - minus) / (2.0 * step);
    }
    return jac;
}

}  // namespace

Eigen::Vector3d relation_map(const RepCoords& c) { return relation_entries(c).head<3>(); }

double residual(const RepCoords& c) { return relation_entries(c).squaredNorm(); }

Eigen::MatrixXd relation_jacobian(const RepCoords& c, double step) {
    return central_jacobian(c, step, 3, [](const RepCoords& x) -> Eigen::VectorXd { return relation_map(x); });
}

Eigen::VectorXd residual_gradient(const RepCoords& c, double step) {
    const Eigen::MatrixXd jac =
        central_jacobian(c, step, 4, [](const RepCoords& x) -> Eigen::VectorXd { return relation_entries(x); });
    return 2.0 * jac.transpose() * relation_entries(c);
}

SolveResult solve_from(RepCoords start, const SolverOptions& options) {
    RepCoords x = std::move(start);
    double res = residual(x);
    double damping = options.initial_damping;
    int iter = 0;
    for (; iter < options.max_iter && !(res <= options.tol); ++iter) {
        const Eigen::MatrixXd jac = relation_jacobian(x, options.fd_step);
        const Eigen::Vector3d f = relation_map(x);
        // Underdetermined: solve in the 3x3 row space, (J^T J + l I)^-1 J^T = J^T (J J^T + l I)^-1.
        bool improved = false;
        while (damping < 1e16) {
            const Eigen::Matrix3d lhs = jac * jac.transpose() + damping * Eigen::Matrix3d::Identity();
            const Eigen::VectorXd delta = -jac.transpose() * lhs.ldlt().solve(f);
            RepCoords trial = x;
            for (std::size_t k = 0; k < trial.values().size(); ++k) {
                trial.values()[k] += delta[static_cast<Eigen::Index>(k)];
            }
            const double trial_res = residual(trial);
            if (trial_res < res) {
                x = std::move(trial);
                res = trial_res;
                damping = std::max(damping / 10.0, 1e-15);
                improved = true;
                break;
            }
            damping *= 10.0;
        }
        if (options.trace) {
            *options.trace << "iteration " << iter + 1 << " residual " << res << " damping " << damping << '\n';
        }
        if (!improved) break;
    }
    if (!(res <= options.tol)) {
        std::ostringstream msg;
        msg << "solver stopped after " << iter << " iterations at residual " << res;
        throw DidNotConverge(msg.str(), res);
    }
    Representation rep = to_representation(x).validate();
    return {std::move(rep), std::move(x), iter, res};
}

SolveResult solve(int genus, std::uint64_t seed, const SolverOptions& options) {
    RepCoords start(genus);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    for (double& v : start.values()) v = coord(rng);
    return solve_from(std::move(start), options);
}

std::vector<std::optional<SolveResult>> solve_many(int genus, std::span<const std::uint64_t> seeds,
                                                   const SolverOptions& options) {
    std::vector<std::optional<SolveResult>> out(seeds.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        SolverOptions local = options;
        local.trace = nullptr;
        for (std::size_t k = next++; k < seeds.size(); k = next++) {
            try {
                out[k] = solve(genus, seeds[k], local);
            } catch (const DidNotConverge&) {
            }
        }
    };
    const unsigned threads = std::max(1u, std::min(std::thread::hardware_concurrency(), 16u));
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    return out;
}

RankReport jacobian_rank(const Representation& r, double step, double rel_tol) {
    const Eigen::MatrixXd jac = relation_jacobian(to_coords(r), step);
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
    const Eigen::VectorXd sv = svd.singularValues();
    RankReport out{};
    out.singular_values.assign(sv.data(), sv.data() + sv.size());
    const double top = sv.size() > 0 ? sv[0] : 0.0;
    for (Eigen::Index k = 0; k < sv.size(); ++k) {
        if (top > 0.0 && sv[k] > rel_tol * top) ++out.rank;
    }
    out.variety_dim = 6 * r.genus() - out.rank;
    out.moduli_dim = out.variety_dim - 3;
    return out;
}

RepCoords tangent_step(const RepCoords& c, double size, std::uint64_t seed, double rel_tol) {
    const Eigen::MatrixXd jac = relation_jacobian(c);
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac, Eigen::ComputeFullV);
    const Eigen::VectorXd sv = svd.singularValues();
    Eigen::Index rank = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k) {
        if (sv[0] > 0.0 && sv[k] > rel_tol * sv[0]) ++rank;
    }
    const Eigen::MatrixXd kernel = svd.matrixV().rightCols(jac.cols() - rank);

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    Eigen::VectorXd mix(kernel.cols());
    for (Eigen::Index k = 0; k < mix.size(); ++k) mix[k] = gauss(rng);
    Eigen::VectorXd dir = kernel * mix;
    dir *= size / dir.norm();

    RepCoords out = c;
    for (std::size_t k = 0; k < out.values().size(); ++k) out.values()[k] += dir[static_cast<Eigen::Index>(k)];
    return out;
}

}  // namespace hypsurf
