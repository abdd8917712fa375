#include "bellbeam/core_model.hpp"

#include <cmath>
#include <sstream>

#include "bellbeam/errors.hpp"

namespace bellbeam {

namespace {

// kappa1 - kappa2 below this is treated as a degenerate decomposition.
constexpr double kDegenerateTol = 1e-12;

}  // namespace

double canonical_angle(double radians) {
    double r = std::fmod(radians, kPi);
    if (r < 0.0) r += kPi;
    if (r >= kPi) r = 0.0;  // fmod seam rounding
    return r;
}

Angle::Angle(double radians) : rad_(canonical_angle(radians)) {}

SchmidtBeam::SchmidtBeam(double k1, double k2, double orientation, double intensity)
    : kappa1_(k1), kappa2_(k2), orientation_(canonical_angle(orientation)), intensity_(intensity) {}

SchmidtBeam SchmidtBeam::from_kappas(double kappa1, double kappa2,
                                     double lab_orientation, double intensity) {
    if (!(kappa1 >= 0.0) || !(kappa2 >= 0.0)) {
        throw std::invalid_argument("SchmidtBeam: kappas must be nonnegative");
    }
    if (!(intensity >= 0.0)) {
        throw std::invalid_argument("SchmidtBeam: intensity must be nonnegative");
    }
    double norm = std::hypot(kappa1, kappa2);
    if (norm <= 0.0) {
        throw std::invalid_argument("SchmidtBeam: kappas must not both vanish");
    }
    double k1 = kappa1 / norm;
    double k2 = kappa2 / norm;
    // Canonical order: relabeling the Schmidt pairs (1 <-> 2) rotates u1 to
    // the old u2 direction, a quarter turn of the orientation.
    if (k1 < k2) {
        std::swap(k1, k2);
        lab_orientation += kPi / 2.0;
    }
    return SchmidtBeam(k1, k2, lab_orientation, intensity);
}

SchmidtBeam SchmidtBeam::from_kappa1_sq(double kappa1_sq, double lab_orientation,
                                        double intensity) {
    if (!(kappa1_sq >= 0.0) || !(kappa1_sq <= 1.0)) {
        throw std::invalid_argument("SchmidtBeam: kappa1^2 must lie in [0, 1]");
    }
    return from_kappas(std::sqrt(kappa1_sq), std::sqrt(1.0 - kappa1_sq),
                       lab_orientation, intensity);
}

SchmidtBeam SchmidtBeam::thermal(double intensity) {
    return from_kappa1_sq(0.5, 0.0, intensity);
}

bool SchmidtBeam::orientation_unique() const {
    return kappa1_ - kappa2_ > kDegenerateTol;
}

SchmidtBeam schmidt_decompose(const CoherenceMatrix& j) {
    const double tr = j.trace();
    if (!(tr > 0.0)) {
        std::ostringstream msg;
        msg << "schmidt_decompose: trace " << tr << " is not positive";
        throw ZeroIntensityError(msg.str());
    }
    // Relative PSD tolerance, unit independent.
    const double psd_tol = 1e-12 * tr * tr;
    if (j.det() < -psd_tol || j.j11 < -psd_tol || j.j22 < -psd_tol) {
        throw NotPsdError("schmidt_decompose: matrix is not positive semidefinite");
    }

    // Closed-form spectral decomposition of the 2x2 Hermitian matrix:
    //   lambda_{+,-} = m -+... = m +- d,  m = tr/2,  d = sqrt(h^2 + |j12|^2)
    const double m = 0.5 * tr;
    const double h = 0.5 * (j.j11 - j.j22);
    const double d = std::hypot(h, std::abs(j.j12));
    const double lam1 = m + d;
    const double lam2 = std::max(m - d, 0.0);  // clamp tolerated PSD slack

    double k1 = std::sqrt(lam1 / tr);
    double k2 = std::sqrt(lam2 / tr);
    const double norm = std::hypot(k1, k2);
    k1 /= norm;
    k2 /= norm;

    double orientation = 0.0;
    if (k1 - k2 > kDegenerateTol) {
        // Major-axis angle of the eigenvector for lambda_1. For complex j12
        // this is the azimuth of the polarization ellipse, which coincides
        // with the eigenvector angle in the real (linear) case handled here.
        orientation = 0.5 * std::atan2(2.0 * j.j12.real(), j.j11 - j.j22);
    }
    return SchmidtBeam::from_kappas(k1, k2, orientation, tr);
}

CoherenceMatrix to_coherence(const SchmidtBeam& beam) {
    const double c = std::cos(beam.lab_orientation());
    const double s = std::sin(beam.lab_orientation());
    const double l1 = beam.intensity() * beam.kappa1() * beam.kappa1();
    const double l2 = beam.intensity() * beam.kappa2() * beam.kappa2();
    CoherenceMatrix j;
    j.j11 = l1 * c * c + l2 * s * s;
    j.j22 = l1 * s * s + l2 * c * c;
    j.j12 = std::complex<double>((l1 - l2) * c * s, 0.0);
    return j;
}

double degree_of_polarization(const SchmidtBeam& beam) {
    return beam.kappa1() * beam.kappa1() - beam.kappa2() * beam.kappa2();
}

double concurrence(const SchmidtBeam& beam) {
    return 2.0 * beam.kappa1() * beam.kappa2();
}

}  // namespace bellbeam
