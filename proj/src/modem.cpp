#include "gfdm/modem.hpp"

#include "gfdm/fft.hpp"

namespace gfdm {

Spectrum idgt_freq(const SymbolGrid& d, const FreqWindow& G, const Config& cfg) {
    const int K = cfg.K;
    const int M = cfg.M;
    const int N = cfg.N;
    if (d.K != K || d.M != M) throw usage_error("idgt_freq: grid shape mismatch");

    // Stage 1: per-subcarrier M-point transforms T[k][r] = sum_m d(k,m) e^{-j2pi r m / M}.
    cvec twiddle(static_cast<size_t>(M) * M);
    for (int r = 0; r < M; ++r)
        for (int m = 0; m < M; ++m) twiddle[r * M + m] = cis(-2.0 * pi * r * m / M);

    cvec T(static_cast<size_t>(K) * M);
    #pragma omp parallel for schedule(static)
    for (int k = 0; k < K; ++k) {
        for (int r = 0; r < M; ++r) {
            cdouble acc = 0.0;
            for (int m = 0; m < M; ++m) acc += d.at(k, m) * twiddle[r * M + m];
            T[static_cast<size_t>(k) * M + r] = acc;
        }
    }

    // Stage 2: banded gather. Bin l receives G((u)_N) T[k][l mod M] for every
    // support offset u in [-tau, tau] with u = l (mod M), k = ((u - l)/M) mod K.
    const int tau = G.half_support;
    Spectrum X;
    X.bins.assign(N, cdouble{0.0, 0.0});
    #pragma omp parallel for schedule(static)
    for (int l = 0; l < N; ++l) {
        const int r = l % M;
        cdouble acc = 0.0;
        int u = -tau + mod_n(static_cast<long long>(r) - (-tau), M);  // smallest u >= -tau, u = r (mod M)
        for (; u <= tau; u += M) {
            const cdouble g = G.spectrum[mod_n(u, N)];
            if (g == cdouble{0.0, 0.0}) continue;
            const int k = mod_n((static_cast<long long>(u) - l) / M, K);
            acc += g * T[static_cast<size_t>(k) * M + r];
        }
        X.bins[l] = acc;
    }
    return X;
}

TimeSignal add_cyclic_prefix(const cvec& block, const Config& cfg) {
    const int N = cfg.N;
    const int cp = cfg.cp_len;
    if (static_cast<int>(block.size()) != N) throw usage_error("add_cyclic_prefix: block length != N");
    TimeSignal out;
    out.samples.resize(static_cast<size_t>(N) + cp);
    for (int i = 0; i < cp; ++i) out.samples[i] = block[N - cp + i];
    for (int n = 0; n < N; ++n) out.samples[cp + n] = block[n];
    return out;
}

cvec strip_cyclic_prefix(const TimeSignal& framed, const Config& cfg) {
    if (static_cast<int>(framed.samples.size()) != cfg.N + cfg.cp_len)
        throw usage_error("strip_cyclic_prefix: framed length != N + cp_len");
    return cvec(framed.samples.begin() + cfg.cp_len, framed.samples.end());
}

TimeSignal modulate(const SymbolGrid& d, const FreqWindow& G, const Config& cfg) {
    Spectrum X = idgt_freq(d, G, cfg);
    cvec x = fft::inverse(X.bins);
    return add_cyclic_prefix(x, cfg);
}

Spectrum strip_and_transform(const TimeSignal& framed, const Config& cfg) {
    cvec block = strip_cyclic_prefix(framed, cfg);
    Spectrum Y;
    fft::forward(block, Y.bins);
    return Y;
}

}  // namespace gfdm
