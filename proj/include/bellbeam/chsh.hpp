#pragma once

// CHSH combination S = C(a,b) - C(a,b') + C(a',b) + C(a',b') for a
// Schmidt-form beam, its maximization over angle sets, and a Monte Carlo
// check of the |S| <= 2 bound for factorizable (hidden-variable) models.

#include <cstdint>
#include <functional>
#include <random>
#include <utility>

#include "bellbeam/core_model.hpp"

namespace bellbeam {

// The four analyzer angles, each canonical modulo pi.
struct AngleSet {
    Angle a, a_prime, b, b_prime;

    static AngleSet from_radians(double a, double a_prime, double b, double b_prime);

    // a = 0, a' = pi/4, b = pi/8, b' = 3pi/8. At these angles
    // S = sqrt(2) (1 + 2 kappa1 kappa2), which reaches 2 sqrt(2) for a
    // thermal beam.
    static AngleSet canonical();
};

// S together with its ingredients. `s` is the signed four-correlation
// combination exactly as combined; `s_closed_form` is the explicit
// trigonometric formula in the kappas. The two agree to rounding.
struct SValue {
    double s = 0.0;
    AngleSet angle_set;
    double c_ab = 0.0;
    double c_ab_prime = 0.0;
    double c_a_prime_b = 0.0;
    double c_a_prime_b_prime = 0.0;
    double s_closed_form = 0.0;
};

SValue s_from_correlations(const SchmidtBeam& beam, const AngleSet& angles);

// Explicit formula:
//   S = 2 k1 k2 [sin 2a (sin 2b - sin 2b') + sin 2a' (sin 2b + sin 2b')]
//       + cos 2a (cos 2b - cos 2b') + cos 2a' (cos 2b + cos 2b'),
// angles relative to the beam's Schmidt axes.
double s_closed_form(const SchmidtBeam& beam, const AngleSet& angles);

// Maximize S over [0, pi)^4: coarse grid (grid_resolution points per axis,
// >= 8) followed by coordinate ascent, each coordinate update solved in
// closed form. Deterministic. The optimum equals
// 2 sqrt(1 + 4 kappa1^2 kappa2^2).
std::pair<AngleSet, double> max_s_over_angles(const SchmidtBeam& beam,
                                              int grid_resolution = 32);

// True iff the angle-maximized S exceeds 2 + 1e-9. Holds exactly when
// kappa1 kappa2 > 0, i.e. for every nonseparable beam.
bool violation_threshold(const SchmidtBeam& beam);

// A factorizable hidden-variable model: bounded responses A(a, lambda) and
// B(b, lambda) in [-1, 1] plus a sampler for the shared hidden variable.
struct LhvStrategy {
    std::function<double(double angle, double lambda)> a_response;
    std::function<double(double angle, double lambda)> b_response;
    std::function<double(std::mt19937_64&)> lambda_sampler;
};

// Deterministic sign responses sign(cos 2(lambda - angle)), lambda uniform
// on [0, pi).
LhvStrategy lhv_sign_model();

// Bounded continuous responses cos 2(lambda - angle), lambda uniform on
// [0, pi).
LhvStrategy lhv_cosine_model();

struct LhvEstimate {
    double s = 0.0;
    double standard_error = 0.0;
};

// Monte Carlo estimate of S under the factorizable model
//   C(a,b) = E_lambda[ A(a,lambda) B(b,lambda) ].
// Deterministic for a fixed seed. Throws StrategyOutOfRangeError if any
// sampled response leaves [-1, 1].
LhvEstimate lhv_estimate_s(const LhvStrategy& strategy, const AngleSet& angles,
                           std::int64_t samples, std::uint64_t seed);

// Single-pair correlation estimate under the same model.
LhvEstimate lhv_estimate_correlation(const LhvStrategy& strategy, Angle a, Angle b,
                                     std::int64_t samples, std::uint64_t seed);

}  // namespace bellbeam
