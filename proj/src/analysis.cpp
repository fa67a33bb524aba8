#include "gfdm/analysis.hpp"

#include <cmath>

namespace gfdm {

cdouble deviation_covariance(int l, int lbar, int ref_bin, const ChannelStats& stats,
                             const Config& cfg) {
    const int N = cfg.N;
    cdouble acc = 0.0;
    for (int i = 0; i < stats.n_paths(); ++i) {
        const double di = stats.delay_samples[i];
        const cdouble fi = cis(2.0 * pi * l * di / N) - cis(2.0 * pi * ref_bin * di / N);
        if (fi == cdouble{0.0, 0.0}) continue;
        for (int j = 0; j < stats.n_paths(); ++j) {
            const double dj = stats.delay_samples[j];
            const cdouble fj =
                cis(-2.0 * pi * lbar * dj / N) - cis(-2.0 * pi * ref_bin * dj / N);
            if (fj == cdouble{0.0, 0.0}) continue;
            acc += tap_correlation(stats, i, j, N) * fi * fj;
        }
    }
    return acc;
}

cdouble channel_covariance(int l, int lbar, int k, const ChannelStats& stats, const Config& cfg) {
    if (l < 0 || l >= cfg.N || lbar < 0 || lbar >= cfg.N)
        throw usage_error("channel_covariance: bin index out of range");
    return deviation_covariance(l, lbar, subcarrier_bin(cfg, k), stats, cfg);
}

double interference_variance(int k, int m, const FreqWindow& G, const FreqWindow& Gamma,
                             const ChannelStats& stats, const Config& cfg) {
    const int N = cfg.N;
    const int M = cfg.M;
    const int tau = G.half_support;
    if (k < 0 || k >= cfg.K || m < 0 || m >= cfg.M)
        throw usage_error("interference_variance: (k, m) out of range");
    const int ref = subcarrier_bin(cfg, k);

    // Data term sum_{kbar,mbar} G*_{kbar,mbar}(l) G_{kbar,mbar}((l+delta)_N):
    // the mbar phase sum leaves M * delta(delta mod M), and the kbar sum folds
    // to the support offsets u = l (mod M). Depends on (l mod M, delta) only.
    const int dmax = tau / M;
    std::vector<cdouble> data_term(static_cast<size_t>(M) * (2 * dmax + 1), cdouble{0.0, 0.0});
    for (int r = 0; r < M; ++r) {
        for (int dd = -dmax; dd <= dmax; ++dd) {
            const int delta = dd * M;
            cdouble acc = 0.0;
            int u = -tau + mod_n(static_cast<long long>(r) + tau, M);
            for (; u <= tau; u += M) {
                const cdouble a = G.spectrum[mod_n(u, N)];
                if (a == cdouble{0.0, 0.0}) continue;
                acc += std::conj(a) * G.spectrum[mod_n(static_cast<long long>(u) + delta, N)];
            }
            data_term[static_cast<size_t>(r) * (2 * dmax + 1) + (dd + dmax)] =
                static_cast<double>(M) * acc;
        }
    }

    const long long koff = static_cast<long long>(k) * M;
    cdouble total = 0.0;
    for (int l = 0; l < N; ++l) {
        const cdouble gl = Gamma.spectrum[mod_n(l + koff, N)];
        if (gl == cdouble{0.0, 0.0}) continue;
        const int r = l % M;
        for (int dd = -dmax; dd <= dmax; ++dd) {
            const int delta = dd * M;
            const cdouble w = data_term[static_cast<size_t>(r) * (2 * dmax + 1) + (dd + dmax)];
            if (w == cdouble{0.0, 0.0}) continue;
            const cdouble gbar = std::conj(Gamma.spectrum[mod_n(l + delta + koff, N)]);
            if (gbar == cdouble{0.0, 0.0}) continue;
            total += deviation_covariance(l, mod_n(l + delta, N), ref, stats, cfg) * w * gl * gbar;
        }
    }
    total /= static_cast<double>(N) * static_cast<double>(N);
    if (std::abs(total.imag()) > 1e-9)
        throw numerical_error("interference_variance: imaginary residue " +
                              std::to_string(total.imag()) + " exceeds 1e-9");
    return total.real();
}

double noise_variance(const FreqWindow& Gamma, double sigma, const Config& cfg) {
    double e = 0.0;
    for (const auto& v : Gamma.spectrum) e += std::norm(v);
    return sigma * sigma * e / static_cast<double>(cfg.N);
}

double noise_variance(const LocalWindow& w, double sigma, const Config& cfg) {
    double e = 0.0;
    for (const auto& v : w.values) e += std::norm(v);
    return static_cast<double>(cfg.N) * sigma * sigma * e;
}

const char* receiver_tag(Receiver r) {
    switch (r) {
        case Receiver::OFDM: return "ofdm";
        case Receiver::ZfDirect: return "zf-direct";
        case Receiver::MfSic: return "mf-sic";
        case Receiver::FftMfZf: return "fft-mf-zf";
        case Receiver::ZfMfSplit: return "zf-mf-split";
        case Receiver::FdDgt: return "fd-dgt";
        case Receiver::Ldgt: return "ldgt";
    }
    return "?";
}

Receiver parse_receiver_tag(const std::string& tag) {
    for (Receiver r : {Receiver::OFDM, Receiver::ZfDirect, Receiver::MfSic, Receiver::FftMfZf,
                       Receiver::ZfMfSplit, Receiver::FdDgt, Receiver::Ldgt})
        if (tag == receiver_tag(r)) return r;
    throw usage_error("unknown receiver tag: " + tag);
}

double complexity_count(Receiver r, const ComplexityParams& p, bool soft_output) {
    if (p.M < 1 || p.K < 1 || p.J < 1) throw usage_error("complexity_count: parameters must be positive");
    const double M = p.M;
    const double K = p.K;
    const double MK = M * K;
    const double J = soft_output ? 0.0 : static_cast<double>(p.J);
    const double lgMK = std::log2(MK);
    const double lgK = std::log2(K);
    const double lgM = std::log2(M);
    switch (r) {
        case Receiver::OFDM:
            return MK / 2.0 * lgK + MK + J * MK;
        case Receiver::ZfDirect:
            return MK * MK + MK * lgMK + MK + J * MK;
        case Receiver::MfSic:
            return MK * (1.5 * lgMK + 0.5 * lgM + p.I + 1 + p.I0 * (lgM + 1 + J));
        case Receiver::FftMfZf:
            return MK * (1.5 * lgMK + 0.5 * lgM + p.I + 1 + J);
        case Receiver::ZfMfSplit:
            return MK / 2.0 * (M + 3.0 * lgK) + MK + J * MK;
        case Receiver::FdDgt:
            return MK * lgMK + M * K * K + 2.0 * J * MK;
        case Receiver::Ldgt:
            return (MK / 2.0 + p.L + 1) * lgMK + K * (2.0 * p.L + 1) + 2.0 * J * MK;
    }
    throw usage_error("complexity_count: unknown receiver");
}

ComplexityReport complexity(Receiver r, const ComplexityParams& p, bool soft_output) {
    return ComplexityReport{r, complexity_count(r, p, soft_output), p};
}

}  // namespace gfdm
