#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "hypsurf/surface_rep.hpp"

namespace hypsurf {

// Coordinates on SL(2,R)^{2g}: each generator is
//   rotation(theta) * diag(e^s, e^-s) * [[1, u], [0, 1]]
// stored as (theta, s, u), generators ordered A_1, B_1, ..., A_g, B_g.
class RepCoords {
public:
    explicit RepCoords(int genus);
    explicit RepCoords(std::vector<double> values);

    int genus() const noexcept { return static_cast<int>(values_.size() / 6); }
    std::span<const double> values() const noexcept { return values_; }
    std::span<double> values() noexcept { return values_; }
    Eigen::Map<const Eigen::VectorXd> vector() const {
        return {values_.data(), static_cast<Eigen::Index>(values_.size())};
    }

private:
    std::vector<double> values_;
};

Mat2 coords_to_matrix(double theta, double s, double u);
// Iwasawa decomposition; theta in (-pi, pi].
std::array<double, 3> matrix_to_coords(const Mat2& m);

Representation to_representation(const RepCoords& c);
RepCoords to_coords(const Representation& r);

// (P_00 - 1, P_01, P_10) for P = prod [A_i, B_i]; det P = 1 makes P_11 dependent.
Eigen::Vector3d relation_map(const RepCoords& c);

// |P - I|_F^2
double residual(const RepCoords& c);

// Central-difference Jacobian of relation_map, 3 x 6g.
Eigen::MatrixXd relation_jacobian(const RepCoords& c, double step = 1e-6);

// Gradient of residual by the chain rule through a central-difference
// Jacobian of all four entries of P - I.
Eigen::VectorXd residual_gradient(const RepCoords& c, double step = 1e-6);

struct SolverOptions {
    int max_iter = 500;
    // on residual, i.e. |P - I|_F <= 1e-7
    double tol = 1e-14;
    double fd_step = 1e-6;
    double initial_damping = 1e-3;
    // iteration / residual / damping lines go here when set
    std::ostream* trace = nullptr;
};

struct SolveResult {
    Representation rep;  // validated
    RepCoords coords;
    int iterations;
    double residual;
};

// Damped Gauss-Newton (Levenberg) on the three relation equations from a
// seeded start with coordinates uniform in [-1, 1]. Throws DidNotConverge.
SolveResult solve(int genus, std::uint64_t seed, const SolverOptions& options = {});
SolveResult solve_from(RepCoords start, const SolverOptions& options = {});

// One solve per seed across hardware threads; failures come back empty.
std::vector<std::optional<SolveResult>> solve_many(int genus, std::span<const std::uint64_t> seeds,
                                                   const SolverOptions& options = {});

struct RankReport {
    int rank;
    std::vector<double> singular_values;
    // 6g - rank: dimension of the representation variety near the point
    int variety_dim;
    // variety_dim - 3, after quotienting by conjugation
    int moduli_dim;
};

// Numerical rank (singular values above rel_tol * sigma_max) of the relation
// Jacobian at r.
RankReport jacobian_rank(const Representation& r, double step = 1e-6, double rel_tol = 1e-6);

// Random direction in the numerical kernel of the relation Jacobian at c,
// scaled to Euclidean length `size`.
RepCoords tangent_step(const RepCoords& c, double size, std::uint64_t seed, double rel_tol = 1e-6);

}  // namespace hypsurf
