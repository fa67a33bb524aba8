#include "gfdm/windows.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <iostream>
#include <limits>

namespace gfdm {

namespace {

constexpr double kCondLimit = 1e12;

// Largest |l| with G((l)_N) != 0. The RC taper is exactly zero at its edge
// bins, so this can be below the declared half-support.
int effective_half_support(const FreqWindow& G, int N) {
    int t = 0;
    for (int l = 1; l <= N / 2; ++l) {
        if (std::abs(G.spectrum[l]) != 0.0 || std::abs(G.spectrum[mod_n(-l, N)]) != 0.0)
            t = l;
    }
    return t;
}

// Subcarrier-averaged covariance of the Jakes-correlated tap model:
// (1/K) sum_k E{H(c_k + a) H*(c_k + b)}. Cross-tap terms survive only when
// the delay difference is a multiple of K.
cdouble averaged_covariance(const ChannelStats& stats, int a, int b, int N, int K) {
    cdouble acc = 0.0;
    for (int i = 0; i < stats.n_paths(); ++i)
        for (int j = 0; j < stats.n_paths(); ++j) {
            if (mod_n(stats.delay_samples[i] - stats.delay_samples[j], K) != 0) continue;
            acc += tap_correlation(stats, i, j, N) *
                   cis(-2.0 * pi *
                       (static_cast<double>(a) * stats.delay_samples[i] -
                        static_cast<double>(b) * stats.delay_samples[j]) /
                       N);
        }
    return acc;
}

Eigen::MatrixXcd hermitized(const Eigen::MatrixXcd& A) {
    return 0.5 * (A + A.adjoint());
}

// Hermitian positive-definite solve with an explicit condition gate.
Eigen::VectorXcd guarded_solve(const Eigen::MatrixXcd& gram, const Eigen::VectorXcd& rhs,
                               const char* what) {
    Eigen::MatrixXcd H = hermitized(gram);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H, Eigen::EigenvaluesOnly);
    const double lmin = es.eigenvalues().minCoeff();
    const double lmax = es.eigenvalues().maxCoeff();
    if (!(lmin > 0.0) || lmax / lmin > kCondLimit) {
        const double cond = lmin > 0.0 ? lmax / lmin : std::numeric_limits<double>::infinity();
        throw numerical_error(std::string(what) + ": Gram matrix condition " +
                                  std::to_string(cond) + " exceeds 1e12",
                              cond);
    }
    return H.ldlt().solve(rhs);
}

}  // namespace

FreqWindow rc_synthesis_window(const Config& cfg) {
    const int N = cfg.N;
    const int M = cfg.M;
    const int tau = cfg.tau;
    cvec spec(N, cdouble{0.0, 0.0});

    if (cfg.beta == 0.0) {
        const int lo = (M % 2 == 0) ? -M / 2 : -(M - 1) / 2;
        const int hi = (M % 2 == 0) ? M / 2 - 1 : (M - 1) / 2;
        for (int l = lo; l <= hi; ++l) spec[mod_n(l, N)] = 1.0;
    } else {
        const double flat = (1.0 - cfg.beta) * M / 2.0;
        for (int l = -tau; l <= tau; ++l) {
            const double a = std::abs(static_cast<double>(l));
            double v;
            if (a >= static_cast<double>(tau))
                v = 0.0;
            else if (a <= flat)
                v = 1.0;
            else
                v = 0.5 * (1.0 + std::cos(pi * (a - flat) / (tau - flat)));
            spec[mod_n(l, N)] = v;
        }
    }

    double energy = 0.0;
    for (const auto& v : spec) energy += std::norm(v);
    const double scale = std::sqrt(static_cast<double>(N) / energy);
    for (auto& v : spec) v *= scale;

    FreqWindow G;
    G.spectrum = std::move(spec);
    G.half_support = tau;
    G.kind = WindowKind::Synthesis;
    return G;
}

cvec shift_synthesis(const FreqWindow& G, int k, int m, const Config& cfg) {
    if (k < 0 || k >= cfg.K || m < 0 || m >= cfg.M)
        throw usage_error("shift_synthesis: (k, m) out of range");
    cvec out(cfg.N);
    for (int l = 0; l < cfg.N; ++l)
        out[l] = G.spectrum[mod_n(static_cast<long long>(l) + static_cast<long long>(k) * cfg.M,
                                  cfg.N)] *
                 cis(-2.0 * pi * l * m / cfg.M);
    return out;
}

double wexler_raz_residual(const FreqWindow& G, const FreqWindow& Gamma, const Config& cfg) {
    const int N = cfg.N;
    std::vector<int> supp;
    for (int u = 0; u < N; ++u)
        if (std::abs(G.spectrum[u]) != 0.0) supp.push_back(u);

    double worst = 0.0;
    for (int k = 0; k < cfg.M; ++k) {
        for (int m = 0; m < cfg.K; ++m) {
            cdouble acc = 0.0;
            for (int u : supp)
                acc += G.spectrum[u] * cis(2.0 * pi * k * u / cfg.M) *
                       std::conj(Gamma.spectrum[mod_n(u - static_cast<long long>(m) * cfg.M, N)]);
            acc /= static_cast<double>(N);
            if (k == 0 && m == 0) acc -= 1.0;
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

FreqWindow dual_window_fullband(const FreqWindow& G, const Config& cfg) {
    const int K = cfg.K;
    const int M = cfg.M;
    const int N = cfg.N;

    // Residue r subsystem: sum_q G(((q+m)M + r)_N) Gamma*(qM + r) = K delta(m).
    // The matrix rows are circular shifts of a_r(s) = G(sM + r), so its
    // singular values are the K-point DFT magnitudes of a_r.
    cvec gamma(N);
    std::vector<double> bad_cond(M, 0.0);  // nonzero marks a failed residue
    #pragma omp parallel for schedule(static)
    for (int r = 0; r < M; ++r) {
        cvec a(K);
        for (int s = 0; s < K; ++s) a[s] = G.spectrum[s * M + r];

        double amin = std::numeric_limits<double>::infinity();
        double amax = 0.0;
        for (int nu = 0; nu < K; ++nu) {
            cdouble acc = 0.0;
            for (int s = 0; s < K; ++s)
                if (std::abs(a[s]) != 0.0) acc += a[s] * cis(-2.0 * pi * nu * s / K);
            const double mag = std::abs(acc);
            amin = std::min(amin, mag);
            amax = std::max(amax, mag);
        }
        if (!(amin > amax / kCondLimit)) {
            bad_cond[r] = amin > 0.0 ? amax / amin : std::numeric_limits<double>::infinity();
            continue;
        }

        Eigen::MatrixXcd A(K, K);
        for (int m = 0; m < K; ++m)
            for (int q = 0; q < K; ++q) A(m, q) = a[(m + q) % K];
        Eigen::VectorXcd b = Eigen::VectorXcd::Zero(K);
        b(0) = static_cast<double>(K);
        Eigen::VectorXcd z = A.partialPivLu().solve(b);
        for (int q = 0; q < K; ++q) gamma[q * M + r] = std::conj(z(q));
    }
    for (int r = 0; r < M; ++r) {
        if (bad_cond[r] != 0.0)
            throw numerical_error("dual_window_fullband: residue system " + std::to_string(r) +
                                      " singular or ill-conditioned (condition " +
                                      std::to_string(bad_cond[r]) + ")",
                                  bad_cond[r]);
    }

    FreqWindow Gamma;
    Gamma.spectrum = std::move(gamma);
    Gamma.half_support = N / 2;
    Gamma.kind = WindowKind::AnalysisFull;

    const double res = wexler_raz_residual(G, Gamma, cfg);
    if (res > 1e-9)
        throw numerical_error("dual_window_fullband: biorthogonality residual " +
                                  std::to_string(res) + " exceeds 1e-9",
                              res);
    return Gamma;
}

LocalSystem build_local_system(const FreqWindow& G, int L, const Config& cfg) {
    const int K = cfg.K;
    const int M = cfg.M;
    const int N = cfg.N;
    if (L < 0 || 2 * L + 1 > N)
        throw usage_error("build_local_system: window length 2L+1 must lie in [1, N]");
    if (L < G.half_support)
        std::cerr << "build_local_system: warning: L=" << L
                  << " below synthesis half-support tau=" << G.half_support << "\n";

    const int t_eff = effective_half_support(G, N);
    const int alpha = (L + t_eff + 1 + M - 1) / M;

    std::vector<int> shifts;
    if (2 * alpha - 1 <= K) {
        shifts.assign(2 * alpha - 1, 0);
        for (int s = -alpha + 1; s <= alpha - 1; ++s) shifts[mod_n(s, 2 * alpha - 1)] = s;
    } else {
        // All K distinct circular shifts participate; nothing to delete.
        shifts.assign(K, 0);
        for (int p = 0; p < K; ++p) shifts[p] = (p <= K / 2) ? p : p - K;
    }

    const int blocks = static_cast<int>(shifts.size());
    LocalSystem sys;
    sys.alpha = alpha;
    sys.L = L;
    sys.M = M;
    sys.K = K;
    sys.N = N;
    sys.block_shifts = shifts;
    sys.B.resize(blocks * M, 2 * L + 1);
    sys.g0.resize(2 * L + 1);

    for (int p = 0; p < blocks; ++p) {
        const int shift_bins = mod_n(shifts[p], K) * M;
        for (int k = 0; k < M; ++k) {
            for (int l = -L; l <= L; ++l) {
                const int ln = mod_n(l, N);
                sys.B(k + p * M, l + L) =
                    G.spectrum[mod_n(static_cast<long long>(ln) + shift_bins, N)] *
                    cis(2.0 * pi * k * ln / M);
            }
        }
    }
    for (int l = -L; l <= L; ++l) sys.g0(l + L) = G.spectrum[mod_n(l, N)];
    return sys;
}

Eigen::MatrixXcd local_gram(const LocalSystem& sys) {
    return sys.B.transpose() * sys.B.conjugate();
}

Eigen::VectorXcd phase_ramp(const LocalSystem& sys, int m) {
    Eigen::VectorXcd d(2 * sys.L + 1);
    for (int l = -sys.L; l <= sys.L; ++l)
        d(l + sys.L) = cis(-2.0 * pi * m * mod_n(l, sys.N) / sys.M);
    return d;
}

Eigen::VectorXcd detection_target(const LocalSystem& sys, int m) {
    Eigen::VectorXcd e = Eigen::VectorXcd::Zero(sys.B.rows());
    e(mod_n(sys.M - m, sys.M)) = 1.0;
    return e;
}

LocalWindow ldgt_window_ideal(const LocalSystem& sys) {
    Eigen::VectorXcd w = guarded_solve(local_gram(sys), sys.g0, "ldgt_window_ideal");
    LocalWindow out;
    out.L = sys.L;
    out.values.assign(w.data(), w.data() + w.size());
    return out;
}

void stat_expectation(const LocalSystem& sys, const ChannelStats& stats, const Config& cfg,
                      int k, Eigen::MatrixXcd& gram, Eigen::VectorXcd& rhs) {
    const int c = subcarrier_bin(cfg, k);
    const int L = sys.L;
    gram = local_gram(sys);
    rhs.resize(2 * L + 1);
    for (int l = -L; l <= L; ++l) {
        const int a = mod_n(static_cast<long long>(c) + l, cfg.N);
        for (int lp = -L; lp <= L; ++lp) {
            if (gram(l + L, lp + L) == cdouble{0.0, 0.0}) continue;
            const int b = mod_n(static_cast<long long>(c) + lp, cfg.N);
            gram(l + L, lp + L) *= freq_covariance(stats, a, b, cfg.N);
        }
        rhs(l + L) = freq_covariance(stats, a, c, cfg.N) * sys.g0(l + L);
    }
}

LocalWindow ldgt_window_stat(const LocalSystem& sys, const ChannelStats& stats,
                             const Config& cfg) {
    // Expectations averaged over the subcarrier index: one window serves all
    // subcarriers, and the average collapses the covariance to a stationary
    // form (cross-tap terms cancel unless delays differ by a multiple of K).
    const int L = sys.L;
    Eigen::MatrixXcd gram = local_gram(sys);
    Eigen::VectorXcd rhs(2 * L + 1);
    for (int l = -L; l <= L; ++l) {
        for (int lp = -L; lp <= L; ++lp) {
            if (gram(l + L, lp + L) == cdouble{0.0, 0.0}) continue;
            gram(l + L, lp + L) *= averaged_covariance(stats, l, lp, cfg.N, cfg.K);
        }
        rhs(l + L) = averaged_covariance(stats, l, 0, cfg.N, cfg.K) * sys.g0(l + L);
    }
    Eigen::VectorXcd w = guarded_solve(gram, rhs, "ldgt_window_stat");
    LocalWindow out;
    out.L = L;
    out.values.assign(w.data(), w.data() + w.size());
    return out;
}

LocalWindow truncate_fullband(const FreqWindow& Gamma, int L) {
    const int N = static_cast<int>(Gamma.spectrum.size());
    if (L < 0 || 2 * L + 1 > N)
        throw usage_error("truncate_fullband: window length 2L+1 must lie in [1, N]");
    LocalWindow out;
    out.L = L;
    out.values.resize(2 * L + 1);
    for (int l = -L; l <= L; ++l)
        out.values[l + L] = Gamma.spectrum[mod_n(l, N)] / static_cast<double>(N);
    return out;
}

}  // namespace gfdm
