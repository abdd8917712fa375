#include "bellbeam/stochastic.hpp"

#include <array>
#include <cmath>
#include <ostream>

#include "bellbeam/errors.hpp"
#include "bellbeam/rng.hpp"
#include "bellbeam/text.hpp"

namespace bellbeam {

FieldEnsemble::FieldEnsemble(SchmidtBeam beam, int embed_dim, std::int64_t samples)
    : beam_(beam), embed_dim_(embed_dim), samples_(samples),
      data_(static_cast<std::size_t>(samples) * 2 * embed_dim) {}

FieldSample FieldEnsemble::sample(std::int64_t i) const {
    const std::complex<double>* base = data_.data() + static_cast<std::size_t>(i) * 2 * embed_dim_;
    return FieldSample{base, base + embed_dim_, embed_dim_};
}

std::complex<double>* FieldEnsemble::mutable_row(std::int64_t i, int lab_axis) {
    return data_.data() + (static_cast<std::size_t>(i) * 2 + lab_axis) * embed_dim_;
}

FieldEnsemble sample_ensemble(const EnsembleConfig& config) {
    if (config.samples < 1) {
        throw std::invalid_argument("sample_ensemble: samples must be >= 1");
    }
    if (config.embed_dim < 2) {
        throw std::invalid_argument("sample_ensemble: embed_dim must be >= 2");
    }
    const SchmidtBeam& beam = config.beam;
    FieldEnsemble ens(beam, config.embed_dim, config.samples);

    const double c = std::cos(beam.lab_orientation());
    const double s = std::sin(beam.lab_orientation());
    const double amp1 = std::sqrt(beam.intensity()) * beam.kappa1();
    const double amp2 = std::sqrt(beam.intensity()) * beam.kappa2();

    std::mt19937_64 rng = make_engine(config.seed);
    // Circular complex Gaussian with E|z|^2 = 1.
    std::normal_distribution<double> gauss(0.0, 1.0 / std::sqrt(2.0));

    for (std::int64_t i = 0; i < config.samples; ++i) {
        const std::complex<double> d1 = amp1 * std::complex<double>(gauss(rng), gauss(rng));
        const std::complex<double> d2 = amp2 * std::complex<double>(gauss(rng), gauss(rng));
        // Schmidt-diagonal realization rotated into the (h, v) frame;
        // function modes beyond the Schmidt span stay zero.
        std::complex<double>* row_h = ens.mutable_row(i, 0);
        std::complex<double>* row_v = ens.mutable_row(i, 1);
        row_h[0] = c * d1;
        row_h[1] = -s * d2;
        row_v[0] = s * d1;
        row_v[1] = c * d2;
    }
    return ens;
}

CoherenceMatrix empirical_coherence(const FieldEnsemble& ensemble) {
    if (ensemble.size() == 0) {
        throw EmptyEnsembleError("empirical_coherence: ensemble is empty");
    }
    double sum_hh = 0.0, sum_vv = 0.0;
    std::complex<double> sum_hv{0.0, 0.0};
    for (std::int64_t i = 0; i < ensemble.size(); ++i) {
        const FieldSample smp = ensemble.sample(i);
        for (int l = 0; l < smp.embed_dim; ++l) {
            sum_hh += std::norm(smp.row_h[l]);
            sum_vv += std::norm(smp.row_v[l]);
            sum_hv += smp.row_h[l] * std::conj(smp.row_v[l]);
        }
    }
    const double inv = 1.0 / static_cast<double>(ensemble.size());
    return CoherenceMatrix{sum_hh * inv, sum_vv * inv, sum_hv * inv};
}

namespace {

constexpr int kJackknifeBlocks = 100;

// Per-block projected power sums for a list of angle pairs: for each pair,
// the four |amplitude|^2 channel sums and their total.
struct BlockSums {
    int blocks = 0;
    // [pair][block][channel 0..3]
    std::vector<std::array<double, 4>> channel;
    // [pair][block]
    std::vector<double> total;

    std::size_t idx(std::size_t pair, int block) const {
        return pair * static_cast<std::size_t>(blocks) + block;
    }
};

// Lab-side projection combining the Schmidt-relative analyzer rotation with
// the beam orientation: coords_uframe = R(theta0)^T coords_lab, then the
// rotated-basis change by (a - theta0).
std::array<double, 4> lab_projection(const SchmidtBeam& beam, Angle a) {
    const double t0 = beam.lab_orientation();
    const double ar = a.radians() - t0;
    const double ca = std::cos(ar), sa = std::sin(ar);
    const double c0 = std::cos(t0), s0 = std::sin(t0);
    // M(ar) * R(t0)^T
    return {ca * c0 + (-sa) * (-s0), ca * s0 + (-sa) * c0,
            sa * c0 + ca * (-s0),    sa * s0 + ca * c0};
}

BlockSums accumulate_projected_power(const FieldEnsemble& ensemble,
                                     const std::vector<std::pair<Angle, Angle>>& pairs) {
    const std::int64_t m = ensemble.size();
    BlockSums sums;
    sums.blocks = static_cast<int>(std::min<std::int64_t>(kJackknifeBlocks, m));
    sums.channel.assign(pairs.size() * sums.blocks, {0.0, 0.0, 0.0, 0.0});
    sums.total.assign(pairs.size() * sums.blocks, 0.0);

    std::vector<std::array<double, 4>> lab(pairs.size());
    std::vector<double> cb(pairs.size()), sb(pairs.size());
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        lab[p] = lab_projection(ensemble.beam(), pairs[p].first);
        cb[p] = std::cos(pairs[p].second.radians());
        sb[p] = std::sin(pairs[p].second.radians());
    }

    for (std::int64_t i = 0; i < m; ++i) {
        const FieldSample smp = ensemble.sample(i);
        const int block = static_cast<int>((i * sums.blocks) / m);
        // Function modes beyond the Schmidt span carry zero weight.
        const std::complex<double> a0 = smp.row_h[0], a1 = smp.row_h[1];
        const std::complex<double> b0 = smp.row_v[0], b1 = smp.row_v[1];
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            const std::array<double, 4>& q = lab[p];
            const std::complex<double> r00 = q[0] * a0 + q[1] * b0;
            const std::complex<double> r01 = q[0] * a1 + q[1] * b1;
            const std::complex<double> r10 = q[2] * a0 + q[3] * b0;
            const std::complex<double> r11 = q[2] * a1 + q[3] * b1;
            const double p11 = std::norm(cb[p] * r00 - sb[p] * r01);
            const double p12 = std::norm(sb[p] * r00 + cb[p] * r01);
            const double p21 = std::norm(cb[p] * r10 - sb[p] * r11);
            const double p22 = std::norm(sb[p] * r10 + cb[p] * r11);
            std::array<double, 4>& ch = sums.channel[sums.idx(p, block)];
            ch[0] += p11;
            ch[1] += p12;
            ch[2] += p21;
            ch[3] += p22;
            sums.total[sums.idx(p, block)] += p11 + p12 + p21 + p22;
        }
    }
    return sums;
}

double signed_combination(const std::array<double, 4>& ch) {
    return ch[0] - ch[1] - ch[2] + ch[3];
}

// Leave-one-block-out jackknife standard error for a statistic defined on
// block sums.
template <typename Replicate>
double jackknife_se(int blocks, Replicate replicate) {
    if (blocks < 2) return 0.0;
    std::vector<double> reps(blocks);
    double mean = 0.0;
    for (int b = 0; b < blocks; ++b) {
        reps[b] = replicate(b);
        mean += reps[b];
    }
    mean /= blocks;
    double ss = 0.0;
    for (int b = 0; b < blocks; ++b) {
        const double d = reps[b] - mean;
        ss += d * d;
    }
    return std::sqrt(ss * (blocks - 1) / static_cast<double>(blocks));
}

}  // namespace

JointProbabilityTable empirical_joint_probabilities(const FieldEnsemble& ensemble,
                                                    Angle a, Angle b) {
    if (ensemble.size() == 0) {
        throw EmptyEnsembleError("empirical_joint_probabilities: ensemble is empty");
    }
    const BlockSums sums = accumulate_projected_power(ensemble, {{a, b}});
    std::array<double, 4> ch{0.0, 0.0, 0.0, 0.0};
    double total = 0.0;
    for (int blk = 0; blk < sums.blocks; ++blk) {
        for (int i = 0; i < 4; ++i) ch[i] += sums.channel[sums.idx(0, blk)][i];
        total += sums.total[sums.idx(0, blk)];
    }
    JointProbabilityTable table;
    table.p11 = ch[0] / total;
    table.p12 = ch[1] / total;
    table.p21 = ch[2] / total;
    table.p22 = ch[3] / total;
    table.angle_a = a.radians();
    table.angle_b = b.radians();
    return table;
}

EstimateWithError empirical_correlation(const FieldEnsemble& ensemble, Angle a, Angle b) {
    if (ensemble.size() == 0) {
        throw EmptyEnsembleError("empirical_correlation: ensemble is empty");
    }
    const BlockSums sums = accumulate_projected_power(ensemble, {{a, b}});
    std::array<double, 4> ch{0.0, 0.0, 0.0, 0.0};
    double total = 0.0;
    for (int blk = 0; blk < sums.blocks; ++blk) {
        for (int i = 0; i < 4; ++i) ch[i] += sums.channel[sums.idx(0, blk)][i];
        total += sums.total[sums.idx(0, blk)];
    }
    const double value = signed_combination(ch) / total;
    const double se = jackknife_se(sums.blocks, [&](int leave) {
        std::array<double, 4> c = ch;
        for (int i = 0; i < 4; ++i) c[i] -= sums.channel[sums.idx(0, leave)][i];
        return signed_combination(c) / (total - sums.total[sums.idx(0, leave)]);
    });
    return EstimateWithError{value, se};
}

EstimateWithError empirical_s(const FieldEnsemble& ensemble, const AngleSet& angles) {
    if (ensemble.size() == 0) {
        throw EmptyEnsembleError("empirical_s: ensemble is empty");
    }
    const std::vector<std::pair<Angle, Angle>> pairs = {
        {angles.a, angles.b},
        {angles.a, angles.b_prime},
        {angles.a_prime, angles.b},
        {angles.a_prime, angles.b_prime}};
    static constexpr double kSign[4] = {1.0, -1.0, 1.0, 1.0};

    const BlockSums sums = accumulate_projected_power(ensemble, pairs);
    std::array<std::array<double, 4>, 4> ch{};
    std::array<double, 4> total{};
    for (std::size_t p = 0; p < 4; ++p) {
        for (int blk = 0; blk < sums.blocks; ++blk) {
            for (int i = 0; i < 4; ++i) ch[p][i] += sums.channel[sums.idx(p, blk)][i];
            total[p] += sums.total[sums.idx(p, blk)];
        }
    }

    auto s_of = [&](const std::array<std::array<double, 4>, 4>& c,
                    const std::array<double, 4>& t) {
        double s = 0.0;
        for (std::size_t p = 0; p < 4; ++p) s += kSign[p] * signed_combination(c[p]) / t[p];
        return s;
    };

    const double value = s_of(ch, total);
    const double se = jackknife_se(sums.blocks, [&](int leave) {
        std::array<std::array<double, 4>, 4> c = ch;
        std::array<double, 4> t = total;
        for (std::size_t p = 0; p < 4; ++p) {
            for (int i = 0; i < 4; ++i) c[p][i] -= sums.channel[sums.idx(p, leave)][i];
            t[p] -= sums.total[sums.idx(p, leave)];
        }
        return s_of(c, t);
    });
    return EstimateWithError{value, se};
}

void dump_ensemble_csv(const FieldEnsemble& ensemble, std::ostream& out) {
    out << "sample_index,k,l,re,im\n";
    for (std::int64_t i = 0; i < ensemble.size(); ++i) {
        const FieldSample smp = ensemble.sample(i);
        for (int k = 0; k < 2; ++k) {
            for (int l = 0; l < smp.embed_dim; ++l) {
                const std::complex<double> v = smp.amplitude(k, l);
                out << i << ',' << (k + 1) << ',' << (l + 1) << ','
                    << to_sig12(v.real()) << ',' << to_sig12(v.imag()) << '\n';
            }
        }
    }
}

}  // namespace bellbeam
