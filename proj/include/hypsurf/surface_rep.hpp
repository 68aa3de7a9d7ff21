#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hypsurf/cover.hpp"
#include "hypsurf/mobius.hpp"

namespace hypsurf {

inline constexpr double kRelationTolerance = 1e-6;
inline constexpr double kIntegralityTolerance = 1e-3;
inline constexpr double kIntegralityWarning = 1e-6;

// Homomorphism from the genus-g surface group <a_i, b_i | prod [a_i, b_i] = 1>
// into SL(2,R), given by the images of the generators. Candidates that do not
// (yet) satisfy the relation are allowed; validate() checks and flags them.
class Representation {
public:
    Representation(std::vector<Mat2> a, std::vector<Mat2> b);

    static Representation trivial(int genus);

    int genus() const noexcept { return static_cast<int>(a_.size()); }
    std::span<const Mat2> a() const noexcept { return a_; }
    std::span<const Mat2> b() const noexcept { return b_; }

    // prod_i [A_i, B_i], left to right
    Mat2 relation_product() const noexcept;

    bool validated() const noexcept { return validated_; }
    // Throws RelationViolated if relation_residual exceeds tol.
    Representation validate(double tol = kRelationTolerance) const;

    // Entry-wise equality of the generators; the validation flag is ignored.
    bool same_generators(const Representation& other) const noexcept;

private:
    std::vector<Mat2> a_;
    std::vector<Mat2> b_;
    bool validated_ = false;
};

// min(|P - I|_F, |P + I|_F) for P = prod [A_i, B_i]. A product of -I still
// defines a representation into PSL(2,R).
double relation_residual(const Representation& r) noexcept;

struct ToledoResult {
    long value;
    // Im phi(i) / pi of the lifted commutator product, before rounding.
    double raw;
    double residual;
    // Distance of the commutator product from +I (or -I when psl_only).
    double kernel_matrix_residual;
    // The product sits over -I: the representation only exists in PSL(2,R)
    // and the invariant is odd.
    bool psl_only;
    // residual landed in [1e-6, 1e-3]: accepted but numerically marginal.
    bool marginal;
};

// Lifts every generator to the universal cover (principal branch unless
// `branches` supplies 2g integers ordered a_1, b_1, ..., a_g, b_g), multiplies
// the lifted commutators and reads off the winding of the result in units of
// pi. Throws RelationViolated or NonIntegral.
ToledoResult toledo(const Representation& r, std::span<const long> branches = {});

// |tau| <= 2g - 2
bool milnor_check(const Representation& r);

// |tau| == 2g - 2, which for g >= 2 characterizes Fuchsian representations.
bool goldman_fuchsian_test(const Representation& r);

// Conjugation of every generator by diag(1, -1), i.e. by the reflection
// z -> -conj(z). Exact.
Representation reflect_conjugate(const Representation& r);

// G rho G^{-1}
Representation conjugate(const Representation& r, const Mat2& g);

// Recomputes the invariant `trials` times with branch integers drawn from
// [-3, 3] per generator and compares with the principal-branch value.
bool branch_independence_check(const Representation& r, std::uint64_t seed, int trials = 1);

}  // namespace hypsurf
