#include "bellbeam/chsh.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "bellbeam/errors.hpp"
#include "bellbeam/measurement.hpp"
#include "bellbeam/rng.hpp"

namespace bellbeam {

AngleSet AngleSet::from_radians(double a, double a_prime, double b, double b_prime) {
    return AngleSet{Angle(a), Angle(a_prime), Angle(b), Angle(b_prime)};
}

AngleSet AngleSet::canonical() {
    return from_radians(0.0, kPi / 4.0, kPi / 8.0, 3.0 * kPi / 8.0);
}

SValue s_from_correlations(const SchmidtBeam& beam, const AngleSet& angles) {
    SValue v;
    v.angle_set = angles;
    v.c_ab = correlation(beam, angles.a, angles.b);
    v.c_ab_prime = correlation(beam, angles.a, angles.b_prime);
    v.c_a_prime_b = correlation(beam, angles.a_prime, angles.b);
    v.c_a_prime_b_prime = correlation(beam, angles.a_prime, angles.b_prime);
    v.s = v.c_ab - v.c_ab_prime + v.c_a_prime_b + v.c_a_prime_b_prime;
    v.s_closed_form = s_closed_form(beam, angles);
    return v;
}

double s_closed_form(const SchmidtBeam& beam, const AngleSet& angles) {
    const double t0 = beam.lab_orientation();
    const double a2 = 2.0 * (angles.a.radians() - t0);
    const double ap2 = 2.0 * (angles.a_prime.radians() - t0);
    const double b2 = 2.0 * angles.b.radians();
    const double bp2 = 2.0 * angles.b_prime.radians();
    const double c = concurrence(beam);
    return c * (std::sin(a2) * (std::sin(b2) - std::sin(bp2)) +
                std::sin(ap2) * (std::sin(b2) + std::sin(bp2))) +
           std::cos(a2) * (std::cos(b2) - std::cos(bp2)) +
           std::cos(ap2) * (std::cos(b2) + std::cos(bp2));
}

namespace {

// S in Schmidt-relative angles, from per-angle cos2/sin2 values.
inline double s_relative(double conc, double c2a, double s2a, double c2ap, double s2ap,
                         double c2b, double s2b, double c2bp, double s2bp) {
    return conc * (s2a * (s2b - s2bp) + s2ap * (s2b + s2bp)) +
           c2a * (c2b - c2bp) + c2ap * (c2b + c2bp);
}

// For one coordinate the objective is alpha cos 2t + beta sin 2t + const;
// the maximizer is 2t = atan2(beta, alpha).
inline double coordinate_argmax(double alpha, double beta, double fallback) {
    if (alpha == 0.0 && beta == 0.0) return fallback;
    return 0.5 * std::atan2(beta, alpha);
}

}  // namespace

std::pair<AngleSet, double> max_s_over_angles(const SchmidtBeam& beam, int grid_resolution) {
    if (grid_resolution < 8) {
        throw std::invalid_argument("max_s_over_angles: grid_resolution must be >= 8");
    }
    const double conc = concurrence(beam);
    const int n = grid_resolution;

    std::vector<double> c2(n), s2(n);
    for (int i = 0; i < n; ++i) {
        const double t = kPi * i / n;
        c2[i] = std::cos(2.0 * t);
        s2[i] = std::sin(2.0 * t);
    }

    // Coarse pass over the full period in Schmidt-relative coordinates.
    double best = -1e300;
    int ba = 0, bap = 0, bb = 0, bbp = 0;
    for (int ia = 0; ia < n; ++ia)
        for (int iap = 0; iap < n; ++iap)
            for (int ib = 0; ib < n; ++ib)
                for (int ibp = 0; ibp < n; ++ibp) {
                    const double s = s_relative(conc, c2[ia], s2[ia], c2[iap], s2[iap],
                                                c2[ib], s2[ib], c2[ibp], s2[ibp]);
                    if (s > best) {
                        best = s;
                        ba = ia; bap = iap; bb = ib; bbp = ibp;
                    }
                }

    double a = kPi * ba / n;
    double ap = kPi * bap / n;
    double b = kPi * bb / n;
    double bp = kPi * bbp / n;

    auto eval = [&](void) {
        return s_relative(conc, std::cos(2 * a), std::sin(2 * a), std::cos(2 * ap),
                          std::sin(2 * ap), std::cos(2 * b), std::sin(2 * b),
                          std::cos(2 * bp), std::sin(2 * bp));
    };

    // Coordinate ascent with exact per-coordinate maximization.
    double value = eval();
    for (int sweep = 0; sweep < 200; ++sweep) {
        a = coordinate_argmax(std::cos(2 * b) - std::cos(2 * bp),
                              conc * (std::sin(2 * b) - std::sin(2 * bp)), a);
        ap = coordinate_argmax(std::cos(2 * b) + std::cos(2 * bp),
                               conc * (std::sin(2 * b) + std::sin(2 * bp)), ap);
        b = coordinate_argmax(std::cos(2 * a) + std::cos(2 * ap),
                              conc * (std::sin(2 * a) + std::sin(2 * ap)), b);
        bp = coordinate_argmax(std::cos(2 * ap) - std::cos(2 * a),
                               conc * (std::sin(2 * ap) - std::sin(2 * a)), bp);
        const double next = eval();
        if (next - value < 1e-12) {
            value = std::max(value, next);
            break;
        }
        value = next;
    }

    const double t0 = beam.lab_orientation();
    return {AngleSet::from_radians(a + t0, ap + t0, b, bp), value};
}

bool violation_threshold(const SchmidtBeam& beam) {
    return max_s_over_angles(beam).second > 2.0 + 1e-9;
}

LhvStrategy lhv_sign_model() {
    auto sign_response = [](double angle, double lambda) {
        const double x = std::cos(2.0 * (lambda - angle));
        return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0);
    };
    LhvStrategy s;
    s.a_response = sign_response;
    s.b_response = sign_response;
    s.lambda_sampler = [](std::mt19937_64& rng) {
        return std::uniform_real_distribution<double>(0.0, kPi)(rng);
    };
    return s;
}

LhvStrategy lhv_cosine_model() {
    auto cos_response = [](double angle, double lambda) {
        return std::cos(2.0 * (lambda - angle));
    };
    LhvStrategy s;
    s.a_response = cos_response;
    s.b_response = cos_response;
    s.lambda_sampler = [](std::mt19937_64& rng) {
        return std::uniform_real_distribution<double>(0.0, kPi)(rng);
    };
    return s;
}

namespace {

double checked_response(const std::function<double(double, double)>& f, double angle,
                        double lambda, const char* side) {
    const double r = f(angle, lambda);
    if (!(r >= -1.0 && r <= 1.0)) {
        std::ostringstream msg;
        msg << "lhv response " << side << "(" << angle << ", " << lambda
            << ") = " << r << " outside [-1, 1]";
        throw StrategyOutOfRangeError(msg.str());
    }
    return r;
}

// Mean and standard error of per-lambda values produced by `body`.
template <typename Body>
LhvEstimate mc_mean(std::int64_t samples, std::uint64_t seed,
                    const std::function<double(std::mt19937_64&)>& sampler, Body body) {
    std::mt19937_64 rng = make_engine(seed);
    double mean = 0.0, m2 = 0.0;
    for (std::int64_t i = 0; i < samples; ++i) {
        const double lambda = sampler(rng);
        const double x = body(lambda);
        const double delta = x - mean;
        mean += delta / static_cast<double>(i + 1);
        m2 += delta * (x - mean);
    }
    const double variance = m2 / static_cast<double>(samples - 1);
    return LhvEstimate{mean, std::sqrt(variance / static_cast<double>(samples))};
}

}  // namespace

LhvEstimate lhv_estimate_s(const LhvStrategy& strategy, const AngleSet& angles,
                           std::int64_t samples, std::uint64_t seed) {
    if (samples < 1000) {
        throw std::invalid_argument("lhv_estimate_s: samples must be >= 1000");
    }
    const double a = angles.a.radians(), ap = angles.a_prime.radians();
    const double b = angles.b.radians(), bp = angles.b_prime.radians();
    return mc_mean(samples, seed, strategy.lambda_sampler, [&](double lambda) {
        const double ra = checked_response(strategy.a_response, a, lambda, "A");
        const double rap = checked_response(strategy.a_response, ap, lambda, "A");
        const double rb = checked_response(strategy.b_response, b, lambda, "B");
        const double rbp = checked_response(strategy.b_response, bp, lambda, "B");
        return ra * (rb - rbp) + rap * (rb + rbp);
    });
}

LhvEstimate lhv_estimate_correlation(const LhvStrategy& strategy, Angle a, Angle b,
                                     std::int64_t samples, std::uint64_t seed) {
    if (samples < 1000) {
        throw std::invalid_argument("lhv_estimate_correlation: samples must be >= 1000");
    }
    return mc_mean(samples, seed, strategy.lambda_sampler, [&](double lambda) {
        const double ra = checked_response(strategy.a_response, a.radians(), lambda, "A");
        const double rb = checked_response(strategy.b_response, b.radians(), lambda, "B");
        return ra * rb;
    });
}

}  // namespace bellbeam
