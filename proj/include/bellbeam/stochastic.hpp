#pragma once

// Monte Carlo realization of the beam as an ensemble of complex Gaussian
// field samples. Each realization carries independent circular-complex
// Gaussian weights on the Schmidt diagonal, which reproduces every second
// moment of the beam; intensities, joint probabilities and correlations are
// re-derived by ensemble averaging and converge to the analytic values at
// the usual 1/sqrt(M) rate.

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "bellbeam/chsh.hpp"
#include "bellbeam/core_model.hpp"
#include "bellbeam/measurement.hpp"

namespace bellbeam {

struct EnsembleConfig {
    SchmidtBeam beam;
    std::int64_t samples = 0;
    std::uint64_t seed = 0;
    // Function-space dimension carried by each sample; modes beyond the
    // Schmidt span have zero weight and consume no random draws, so
    // estimates are bit-identical across embed_dim for a fixed seed.
    int embed_dim = 2;
};

// One realization: a 2 x embed_dim complex amplitude matrix. Row k is the
// lab axis (0 = h, 1 = v), column l the function mode. Non-owning view into
// the ensemble's storage.
struct FieldSample {
    const std::complex<double>* row_h = nullptr;
    const std::complex<double>* row_v = nullptr;
    int embed_dim = 0;

    std::complex<double> amplitude(int lab_axis, int mode) const {
        return lab_axis == 0 ? row_h[mode] : row_v[mode];
    }
};

// Flat-stored sequence of field samples plus the generating configuration.
class FieldEnsemble {
  public:
    FieldEnsemble(SchmidtBeam beam, int embed_dim, std::int64_t samples);

    std::int64_t size() const { return samples_; }
    int embed_dim() const { return embed_dim_; }
    const SchmidtBeam& beam() const { return beam_; }

    FieldSample sample(std::int64_t i) const;
    std::complex<double>* mutable_row(std::int64_t i, int lab_axis);

  private:
    SchmidtBeam beam_;
    int embed_dim_;
    std::int64_t samples_;
    std::vector<std::complex<double>> data_;  // samples x 2 x embed_dim
};

struct EstimateWithError {
    double value = 0.0;
    double standard_error = 0.0;
};

// Draw the ensemble. Deterministic for a fixed seed: one generation stream,
// two complex Gaussian draws per sample in fixed order.
FieldEnsemble sample_ensemble(const EnsembleConfig& config);

// Sample-mean second-moment matrix in the fixed (h, v) frame.
CoherenceMatrix empirical_coherence(const FieldEnsemble& ensemble);

// Estimated joint probabilities: mean projected power per rotated (k, l)
// channel over the mean total power. Normalized so the table sums to one
// at any sample count.
JointProbabilityTable empirical_joint_probabilities(const FieldEnsemble& ensemble,
                                                    Angle a, Angle b);

// Signed combination of the empirical joint probabilities, with a
// leave-one-block-out jackknife standard error (100 blocks).
EstimateWithError empirical_correlation(const FieldEnsemble& ensemble, Angle a, Angle b);

// CHSH S estimated from the four correlations of one shared ensemble;
// the jackknife is applied to the full S functional so cross-correlations
// between the four estimates are accounted for.
EstimateWithError empirical_s(const FieldEnsemble& ensemble, const AngleSet& angles);

// CSV dump, columns: sample_index,k,l,re,im (k, l are 1-based).
void dump_ensemble_csv(const FieldEnsemble& ensemble, std::ostream& out);

}  // namespace bellbeam
