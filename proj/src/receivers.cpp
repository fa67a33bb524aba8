#include "gfdm/receivers.hpp"

#include <Eigen/Dense>

#include "gfdm/fft.hpp"

namespace gfdm {

cvec analysis_time_window(const FreqWindow& Gamma, const Config& cfg) {
    if (static_cast<int>(Gamma.spectrum.size()) != cfg.N)
        throw usage_error("analysis_time_window: spectrum length != N");
    return fft::inverse(Gamma.spectrum);
}

SymbolGrid dgt_time(const TimeSignal& x, const cvec& gamma, const Config& cfg) {
    const int K = cfg.K;
    const int M = cfg.M;
    const int N = cfg.N;
    if (static_cast<int>(x.samples.size()) != N)
        throw usage_error("dgt_time: expected unframed length-N input");
    if (static_cast<int>(gamma.size()) != N)
        throw usage_error("dgt_time: analysis window length != N");

    cvec twiddle(static_cast<size_t>(K) * K);
    for (int k = 0; k < K; ++k)
        for (int rho = 0; rho < K; ++rho) twiddle[static_cast<size_t>(k) * K + rho] = cis(2.0 * pi * k * rho / K);

    SymbolGrid d(K, M);
    #pragma omp parallel for schedule(static)
    for (int m = 0; m < M; ++m) {
        cvec folded(K, cdouble{0.0, 0.0});
        for (int n = 0; n < N; ++n)
            folded[n % K] += x.samples[n] * std::conj(gamma[mod_n(static_cast<long long>(n) - static_cast<long long>(m) * K, N)]);
        for (int k = 0; k < K; ++k) {
            cdouble acc = 0.0;
            for (int rho = 0; rho < K; ++rho) acc += twiddle[static_cast<size_t>(k) * K + rho] * folded[rho];
            d.at(k, m) = acc;
        }
    }
    return d;
}

SymbolGrid fd_dgt_receive(const Spectrum& Y, const FreqWindow& Gamma, const Config& cfg) {
    const int K = cfg.K;
    const int M = cfg.M;
    const int N = cfg.N;
    if (static_cast<int>(Y.bins.size()) != N) throw usage_error("fd_dgt_receive: spectrum length != N");

    cvec twiddle(static_cast<size_t>(M) * M);
    for (int m = 0; m < M; ++m)
        for (int r = 0; r < M; ++r) twiddle[static_cast<size_t>(m) * M + r] = cis(2.0 * pi * m * r / M);

    SymbolGrid out(K, M);
    const double inv_n = 1.0 / static_cast<double>(N);
    #pragma omp parallel for schedule(static)
    for (int k = 0; k < K; ++k) {
        // Banded product folded into the M residues, then an M-point transform.
        cvec folded(M, cdouble{0.0, 0.0});
        const long long off = static_cast<long long>(k) * M;
        for (int l = 0; l < N; ++l)
            folded[l % M] += Y.bins[l] * std::conj(Gamma.spectrum[mod_n(l + off, N)]);
        for (int m = 0; m < M; ++m) {
            cdouble acc = 0.0;
            for (int r = 0; r < M; ++r) acc += twiddle[static_cast<size_t>(m) * M + r] * folded[r];
            out.at(k, m) = acc * inv_n;
        }
    }
    return out;
}

namespace {

// Shared core of the two local receivers: window values already carry 1/N.
SymbolGrid local_receive(const Spectrum& Y, const cvec& w, int L, const Config& cfg) {
    const int K = cfg.K;
    const int M = cfg.M;
    const int N = cfg.N;
    if (static_cast<int>(Y.bins.size()) != N) throw usage_error("local receiver: spectrum length != N");
    if (static_cast<int>(w.size()) != 2 * L + 1) throw usage_error("local receiver: window length != 2L+1");

    cvec twiddle(static_cast<size_t>(M) * M);
    for (int m = 0; m < M; ++m)
        for (int r = 0; r < M; ++r) twiddle[static_cast<size_t>(m) * M + r] = cis(2.0 * pi * m * r / M);

    SymbolGrid out(K, M);
    #pragma omp parallel for schedule(static)
    for (int k = 0; k < K; ++k) {
        const int c = subcarrier_bin(cfg, k);
        cvec folded(M, cdouble{0.0, 0.0});
        for (int l = -L; l <= L; ++l)
            folded[mod_n(l, M)] += Y.bins[mod_n(static_cast<long long>(c) + l, N)] * std::conj(w[l + L]);
        for (int m = 0; m < M; ++m) {
            cdouble acc = 0.0;
            for (int r = 0; r < M; ++r) acc += twiddle[static_cast<size_t>(m) * M + r] * folded[r];
            out.at(k, m) = acc;
        }
    }
    return out;
}

}  // namespace

SymbolGrid truncated_fd_dgt_receive(const Spectrum& Y, const LocalWindow& trunc,
                                    const Config& cfg) {
    return local_receive(Y, trunc.values, trunc.L, cfg);
}

SymbolGrid ldgt_receive(const Spectrum& Y, const LocalWindow& w, const Config& cfg) {
    return local_receive(Y, w.values, w.L, cfg);
}

SymbolGrid detect(const SymbolGrid& soft, const cvec& gains, const Config& cfg, int* flagged) {
    if (soft.K != cfg.K || soft.M != cfg.M) throw usage_error("detect: grid shape mismatch");
    if (static_cast<int>(gains.size()) != cfg.K) throw usage_error("detect: need one gain per subcarrier");
    const cvec& pts = alphabet(cfg.constellation);
    SymbolGrid hard(cfg.K, cfg.M);
    int flags = 0;
    for (int k = 0; k < cfg.K; ++k) {
        for (int m = 0; m < cfg.M; ++m) {
            const cdouble y = soft.at(k, m);
            int best = 0;
            double best_d2 = std::norm(y - gains[k] * pts[0]);
            bool all_tied = true;
            for (int i = 1; i < static_cast<int>(pts.size()); ++i) {
                const double d2 = std::norm(y - gains[k] * pts[i]);
                if (d2 != best_d2) all_tied = false;
                if (d2 < best_d2) {
                    best_d2 = d2;
                    best = i;
                }
            }
            if (all_tied) ++flags;
            hard.at(k, m) = pts[best];
        }
    }
    if (flagged) *flagged = flags;
    return hard;
}

std::vector<cvec> transmit_matrix(const FreqWindow& G, const Config& cfg) {
    std::vector<cvec> cols(static_cast<size_t>(cfg.N));
    cvec g = fft::inverse(G.spectrum);
    for (int k = 0; k < cfg.K; ++k) {
        for (int m = 0; m < cfg.M; ++m) {
            cvec col(cfg.N);
            for (int n = 0; n < cfg.N; ++n)
                col[n] = g[mod_n(static_cast<long long>(n) - static_cast<long long>(m) * cfg.K, cfg.N)] *
                         cis(-2.0 * pi * k * n / cfg.K);
            cols[static_cast<size_t>(k) * cfg.M + m] = std::move(col);
        }
    }
    return cols;
}

SymbolGrid zf_oracle_receive(const TimeSignal& y, const ChannelRealization& h,
                             const FreqWindow& G, const Config& cfg) {
    const int N = cfg.N;
    if (N > 4096) throw usage_error("zf_oracle_receive: desk scale only (N <= 4096)");
    Spectrum Yf = strip_and_transform(y, cfg);

    // Frequency-domain image of the channel+synthesis operator: column (k,m)
    // is H(l) * G_{k,m}(l).
    Eigen::MatrixXcd A(N, N);
    for (int k = 0; k < cfg.K; ++k) {
        for (int m = 0; m < cfg.M; ++m) {
            cvec col = shift_synthesis(G, k, m, cfg);
            const int s = k * cfg.M + m;
            for (int l = 0; l < N; ++l) A(l, s) = h.H.bins[l] * col[l];
        }
    }
    Eigen::VectorXcd b(N);
    for (int l = 0; l < N; ++l) b(l) = Yf.bins[l];

    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(A);
    Eigen::VectorXcd d = lu.solve(b);
    const double resid = (A * d - b).norm();
    const double scale = b.norm() + 1.0;
    if (!(resid / scale < 1e-6))
        throw numerical_error("zf_oracle_receive: combined matrix numerically singular", 0.0);

    SymbolGrid grid(cfg.K, cfg.M);
    for (int s = 0; s < N; ++s) grid.values[s] = d(s);
    return grid;
}

}  // namespace gfdm
