#include "bellbeam/measurement.hpp"

#include <cmath>

namespace bellbeam {

BasisRotation rotate_basis(Angle theta) {
    const double c = std::cos(theta.radians());
    const double s = std::sin(theta.radians());
    return BasisRotation{{{c, -s}, {s, c}}};
}

AmplitudeTable amplitudes(const SchmidtBeam& beam, Angle a, Angle b) {
    const double ar = a.radians() - beam.lab_orientation();
    const double br = b.radians();
    const double ca = std::cos(ar), sa = std::sin(ar);
    const double cb = std::cos(br), sb = std::sin(br);
    const double k1 = beam.kappa1(), k2 = beam.kappa2();
    AmplitudeTable t;
    t.a11 = k1 * ca * cb + k2 * sa * sb;
    t.a12 = k1 * ca * sb - k2 * sa * cb;
    t.a21 = k1 * sa * cb - k2 * ca * sb;
    t.a22 = k1 * sa * sb + k2 * ca * cb;
    return t;
}

JointProbabilityTable joint_probabilities(const SchmidtBeam& beam, Angle a, Angle b) {
    const AmplitudeTable t = amplitudes(beam, a, b);
    JointProbabilityTable p;
    p.p11 = t.a11 * t.a11;
    p.p12 = t.a12 * t.a12;
    p.p21 = t.a21 * t.a21;
    p.p22 = t.a22 * t.a22;
    p.angle_a = a.radians();
    p.angle_b = b.radians();
    return p;
}

double marginal_A(const SchmidtBeam& beam, Angle a) {
    const double ar = a.radians() - beam.lab_orientation();
    return degree_of_polarization(beam) * std::cos(2.0 * ar);
}

double correlation(const SchmidtBeam& beam, Angle a, Angle b) {
    const double ar = a.radians() - beam.lab_orientation();
    const double br = b.radians();
    return std::cos(2.0 * ar) * std::cos(2.0 * br) +
           concurrence(beam) * std::sin(2.0 * ar) * std::sin(2.0 * br);
}

}  // namespace bellbeam
