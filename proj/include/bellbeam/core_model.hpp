#pragma once

// Two-space representation of a classical partially polarized beam.
//
// A beam is held either statistically, as the 2x2 second-moment (coherence)
// matrix of its field components in the fixed (h, v) lab frame, or
// analytically, in normalized Schmidt form
//
//     |e> = kappa1 |u1>|f1> + kappa2 |u2>|f2>,   kappa1^2 + kappa2^2 = 1,
//
// where u1, u2 are orthogonal lab polarization directions and f1, f2 span
// the effective two-dimensional statistical function space. The two forms
// are interconvertible; all rotations are real (linear polarization only).

#include <complex>

namespace bellbeam {

inline constexpr double kPi = 3.14159265358979323846;

// Polarizer angle, period pi. Stores the canonical representative in [0, pi).
class Angle {
  public:
    Angle() = default;
    explicit Angle(double radians);

    double radians() const { return rad_; }

  private:
    double rad_ = 0.0;
};

// Reduce any real angle to [0, pi).
double canonical_angle(double radians);

// 2x2 Hermitian second-moment matrix of the lab-frame field components:
//   j11 = <E_h E_h*>, j22 = <E_v E_v*>, j12 = <E_h E_v*>, j21 = conj(j12).
struct CoherenceMatrix {
    double j11 = 0.0;
    double j22 = 0.0;
    std::complex<double> j12{0.0, 0.0};

    double trace() const { return j11 + j22; }
    double det() const { return j11 * j22 - std::norm(j12); }
};

// Normalized Schmidt form of the beam. Invariants enforced on construction:
// kappa1 >= kappa2 >= 0, kappa1^2 + kappa2^2 = 1, intensity >= 0.
// lab_orientation is the angle of |u1> measured from h, canonical in [0, pi).
class SchmidtBeam {
  public:
    // Fully polarized unit beam along h.
    SchmidtBeam() = default;

    // General constructor from (possibly unnormalized, unordered) kappas.
    // Swapping kappas into canonical order shifts the orientation by pi/2.
    static SchmidtBeam from_kappas(double kappa1, double kappa2,
                                   double lab_orientation = 0.0,
                                   double intensity = 1.0);

    // Construct from kappa1^2; kappa2 = sqrt(1 - kappa1^2).
    static SchmidtBeam from_kappa1_sq(double kappa1_sq,
                                      double lab_orientation = 0.0,
                                      double intensity = 1.0);

    // kappa1 = kappa2 = 1/sqrt(2): unpolarized thermal light, maximal
    // classical entanglement.
    static SchmidtBeam thermal(double intensity = 1.0);

    double kappa1() const { return kappa1_; }
    double kappa2() const { return kappa2_; }
    double lab_orientation() const { return orientation_; }
    double intensity() const { return intensity_; }

    // False for the degenerate decomposition kappa1 = kappa2, where the
    // Schmidt basis (and hence the orientation) is not unique.
    bool orientation_unique() const;

  private:
    SchmidtBeam(double k1, double k2, double orientation, double intensity);

    double kappa1_ = 1.0;
    double kappa2_ = 0.0;
    double orientation_ = 0.0;
    double intensity_ = 1.0;
};

// Schmidt decomposition of a coherence matrix: kappa_k^2 are the descending
// eigenvalues of j divided by its trace, intensity is the trace, and the
// orientation is the major-axis angle (set to 0 when degenerate).
// The 2x2 eigenproblem is solved in closed form.
// Throws ZeroIntensityError if trace(j) <= 0, NotPsdError if j fails
// positive semidefiniteness beyond the relative tolerance 1e-12 * trace^2.
SchmidtBeam schmidt_decompose(const CoherenceMatrix& j);

// Inverse of schmidt_decompose for canonical beams:
//   j = I * R(theta0) * diag(kappa1^2, kappa2^2) * R(theta0)^T
// with R the standard rotation by the lab orientation. Always real.
CoherenceMatrix to_coherence(const SchmidtBeam& beam);

// kappa1^2 - kappa2^2, in [0, 1]. Zero for thermal light, one when fully
// polarized.
double degree_of_polarization(const SchmidtBeam& beam);

// 2 * kappa1 * kappa2, in [0, 1]: the entanglement monotone of the beam's
// two-space state. Satisfies concurrence^2 + degree_of_polarization^2 = 1.
double concurrence(const SchmidtBeam& beam);

}  // namespace bellbeam
