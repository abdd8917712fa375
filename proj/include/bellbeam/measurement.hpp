#pragma once

// Projection algebra on a Schmidt-form beam: rotated bases, marginal and
// joint projection probabilities, and the lab/function-space correlation
//
//     C(a,b) = P11 - P12 - P21 + P22
//            = cos 2a cos 2b + 2 kappa1 kappa2 sin 2a sin 2b,
//
// with the angles taken relative to the beam's Schmidt axes. Lab angles are
// absolute (measured from h); the lab orientation is subtracted internally.
// Function-space angles are measured from f1 directly.

#include "bellbeam/core_model.hpp"

namespace bellbeam {

// Real orthogonal basis change for a rotation by theta:
//   |u1'> = cos t |u1> - sin t |u2>,  |u2'> = sin t |u1> + cos t |u2>.
// Rows are the rotated basis vectors, so new_coords = m * old_coords.
struct BasisRotation {
    double m[2][2];

    double operator()(int row, int col) const { return m[row][col]; }
};

BasisRotation rotate_basis(Angle theta);

// Signed projection amplitudes a_kl = <u_k^a| <f_l^b| e>. Complete:
// sum of squares is 1.
struct AmplitudeTable {
    double a11 = 0.0, a12 = 0.0, a21 = 0.0, a22 = 0.0;

    double sum_of_squares() const {
        return a11 * a11 + a12 * a12 + a21 * a21 + a22 * a22;
    }
};

// Joint projection probabilities p_kl = a_kl^2 for one angle pair.
// Entries are in [0,1] and sum to 1.
struct JointProbabilityTable {
    double p11 = 0.0, p12 = 0.0, p21 = 0.0, p22 = 0.0;
    double angle_a = 0.0;  // canonical radians
    double angle_b = 0.0;

    double sum() const { return p11 + p12 + p21 + p22; }
    // Lab-side marginals (row sums) and function-side marginals (column sums).
    double marginal_lab_1() const { return p11 + p12; }
    double marginal_lab_2() const { return p21 + p22; }
    double marginal_fn_1() const { return p11 + p21; }
    double marginal_fn_2() const { return p12 + p22; }
    // Signed combination appearing in the correlation.
    double correlation() const { return p11 - p12 - p21 + p22; }
};

AmplitudeTable amplitudes(const SchmidtBeam& beam, Angle a, Angle b);

JointProbabilityTable joint_probabilities(const SchmidtBeam& beam, Angle a, Angle b);

// A(a) = P1(a) - P2(a) = (kappa1^2 - kappa2^2) cos 2(a - orientation),
// in [-1, 1]. Independent of any function-space setting.
double marginal_A(const SchmidtBeam& beam, Angle a);

// C(a,b), evaluated in closed form; agrees with the table combination
// to rounding.
double correlation(const SchmidtBeam& beam, Angle a, Angle b);

}  // namespace bellbeam
