#include "hypsurf/surface_rep.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace hypsurf {

Representation::Representation(std::vector<Mat2> a, std::vector<Mat2> b)
    : a_(std::move(a)), b_(std::move(b)) {
    if (a_.size() != b_.size()) throw std::invalid_argument("need as many A generators as B generators");
    if (a_.empty()) throw std::invalid_argument("genus must be at least 1");
}

Representation Representation::trivial(int genus) {
    if (genus < 1) throw std::invalid_argument("genus must be at least 1");
    const auto n = static_cast<std::size_t>(genus);
    return Representation(std::vector<Mat2>(n), std::vector<Mat2>(n)).validate();
}

Mat2 Representation::relation_product() const noexcept {
    Mat2 p;
    for (std::size_t i = 0; i < a_.size(); ++i) p = p * commutator(a_[i], b_[i]);
    return p;
}

Representation Representation::validate(double tol) const {
    const double res = relation_residual(*this);
    if (!(res <= tol)) {
        std::ostringstream msg;
        msg << "surface relation residual " << res << " exceeds " << tol;
        throw RelationViolated(msg.str());
    }
    Representation out = *this;
    out.validated_ = true;
    return out;
}

bool Representation::same_generators(const Representation& other) const noexcept {
    return a_ == other.a_ && b_ == other.b_;
}

double relation_residual(const Representation& r) noexcept {
    const Mat2 p = r.relation_product();
    return std::min(frobenius_distance(p, Mat2::identity()), frobenius_distance(p, -Mat2::identity()));
}

ToledoResult toledo(const Representation& r, std::span<const long> branches) {
    const int g = r.genus();
    if (!branches.empty() && branches.size() != static_cast<std::size_t>(2 * g)) {
        throw std::invalid_argument("branch list must hold 2g integers");
    }
    const double rel = relation_residual(r);
    if (!(rel <= kRelationTolerance)) {
        std::ostringstream msg;
        msg << "surface relation residual " << rel << " exceeds " << kRelationTolerance;
        throw RelationViolated(msg.str());
    }

    CoverElement product;
    for (int i = 0; i < g; ++i) {
        const long ka = branches.empty() ? 0 : branches[2 * i];
        const long kb = branches.empty() ? 0 : branches[2 * i + 1];
        product = product * cover_commutator(lift(r.a()[i], ka), lift(r.b()[i], kb));
    }

    const double to_plus = frobenius_distance(product.matrix(), Mat2::identity());
    const double to_minus = frobenius_distance(product.matrix(), -Mat2::identity());

    ToledoResult out{};
    out.psl_only = to_minus < to_plus;
    out.kernel_matrix_residual = out.psl_only ? to_minus : to_plus;
    out.raw = product.phi_i().imag() / std::numbers::pi;
    // Over +I the kernel lattice is 2 pi Z, over -I it is pi + 2 pi Z.
    out.value = out.psl_only ? std::lround(out.raw) : 2 * std::lround(out.raw / 2.0);
    out.residual = std::abs(out.raw - static_cast<double>(out.value));
    if (out.residual > kIntegralityTolerance) {
        std::ostringstream msg;
        msg << "Toledo invariant " << out.raw << " is not within " << kIntegralityTolerance << " of "
            << (out.psl_only ? "an integer" : "an even integer");
        throw NonIntegral(msg.str());
    }
    out.marginal = out.residual >= kIntegralityWarning;
    return out;
}

bool milnor_check(const Representation& r) {
    return std::abs(toledo(r).value) <= 2L * r.genus() - 2;
}

bool goldman_fuchsian_test(const Representation& r) {
    return std::abs(toledo(r).value) == 2L * r.genus() - 2;
}

namespace {

Mat2 reflect(const Mat2& m) { return {m.a(), -m.b(), -m.c(), m.d()}; }

}  // namespace

Representation reflect_conjugate(const Representation& r) {
    std::vector<Mat2> a;
    std::vector<Mat2> b;
    for (const Mat2& m : r.a()) a.push_back(reflect(m));
    for (const Mat2& m : r.b()) b.push_back(reflect(m));
    Representation out(std::move(a), std::move(b));
    return r.validated() ? out.validate() : out;
}

Representation conjugate(const Representation& r, const Mat2& g) {
    const Mat2 ginv = g.inverse();
    std::vector<Mat2> a;
    std::vector<Mat2> b;
    for (const Mat2& m : r.a()) a.push_back(g * m * ginv);
    for (const Mat2& m : r.b()) b.push_back(g * m * ginv);
    return {std::move(a), std::move(b)};
}

bool branch_independence_check(const Representation& r, std::uint64_t seed, int trials) {
    const long principal = toledo(r).value;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> branch(-3, 3);
    std::vector<long> ks(static_cast<std::size_t>(2 * r.genus()));
    for (int t = 0; t < trials; ++t) {
        for (long& k : ks) k = branch(rng);
        if (toledo(r, ks).value != principal) return false;
    }
    return true;
}

}  // namespace hypsurf
