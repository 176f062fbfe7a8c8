#pragma once

#include "qlp/linkpat.hpp"
#include "qlp/qfield.hpp"
#include "qlp/uqsl2.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qlp {

struct CheckResult {
    std::string pattern;
    std::string check;
    bool pass = false;
    std::string detail;
    std::optional<TensorVector> residual;
};

// v_alpha for a planar pair partition (unit valences, no defects); memoized.
TensorVector build_v_pp(const LinkPattern &alpha);
// Closed form for the nested pattern.
TensorVector rainbow_vector(int N);
// frak v_omega = R_+^{(s)}( p-hat^{(varsigma,s)}( v_{alpha(omega)} ) ); memoized.
TensorVector build_v_omega(const LinkPattern &omega);
// Variant built through R_- from the rotated pair partition S^{o s}(alpha(omega)).
TensorVector build_v_omega_minus(const LinkPattern &omega);
// [2]^s / ((q - q^{-1})^s [s+1]!) e_0 (x) ... (x) e_0 for the shape of lambda.
TensorVector shuffle_vector(const std::vector<int> &lambda);

ExactScalar constant_C(int m, int s1, int s2);
// The q-binomial form of the same constant.
ExactScalar constant_C_binomial(int m, int s1, int s2);

CheckResult verify_projection(const LinkPattern &omega, int j, int m);
// Same conditions asserted on a supplied vector in place of frak v_omega.
CheckResult verify_projection(const LinkPattern &omega, int j, int m, const TensorVector &v);
// frak v_{S(omega)} = (-q)^{s_p} S(frak v_omega)
CheckResult verify_cyclic(const LinkPattern &omega);
// S applied p times equals prod_i (-q)^{-s_i} times the identity on frak v_omega.
CheckResult verify_full_cycle(const LinkPattern &omega);
// E v = 0 and K v = q^s v.
CheckResult verify_highest_weight(const LinkPattern &omega);

struct DualFunctional {
    LinkPattern source;
    Ordering recipe;
};

// One functional per allowable ordering. An ordering with a step that leaves links between the
// two points can fail to vanish on other basis vectors.
std::vector<DualFunctional> dual_functionals(const LinkPattern &omega);
// Apply the recipe's projections and read off the scalar relative to frak v_{shuffle(lambda)}.
ExactScalar dual_eval(const DualFunctional &psi, const TensorVector &v);
// prod over the recipe of 1/C(m; s_j, s_{j+1}) at the current valences
ExactScalar dual_expected_diagonal(const DualFunctional &psi);

struct FactorizeResult {
    LinkPattern tau, quotient;
    // tau-coefficients on the quotient shape: e_m at the collapsed point stands for F^m v_tau,
    // read off by expanding each block component in the basis F^m frak v_upsilon
    TensorVector coefficients;
    ExactScalar scale; // coefficients = scale * frak v_{omega/tau}
    bool ok = false;
    // frak v_omega has no block component outside the one generated by frak v_tau
    bool pure = false;
    std::string detail;
};
FactorizeResult factorize(const LinkPattern &omega, int j, int k);

// Dimension of the subspace of H^{(s)}_varsigma killed by every pi-tilde_j^{(delta)}, m >= 1.
std::size_t uniqueness_probe(const std::vector<int> &valences, int s);

// Rank of the family {frak v_omega} over the universe LP^{(s)}_varsigma.
std::size_t basis_rank(const std::vector<int> &valences, int s);

} // namespace qlp
