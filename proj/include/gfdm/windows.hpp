#pragma once

#include <Eigen/Dense>

#include "gfdm/channel.hpp"
#include "gfdm/config.hpp"
#include "gfdm/types.hpp"

namespace gfdm {

enum class WindowKind { Synthesis, AnalysisFull };

// Length-N frequency-domain window with declared half-support tau.
struct FreqWindow {
    cvec spectrum;  // indexed l = 0..N-1
    int half_support = 0;
    WindowKind kind = WindowKind::Synthesis;
};

// Length-(2L+1) local analysis window, ordered
// [G(N-L), ..., G(N-1), G(0), ..., G(L)] and carrying the 1/N scale.
struct LocalWindow {
    cvec values;
    int L = 0;

    int length() const { return 2 * L + 1; }
};

// Local biorthogonality system B * conj(gamma) = e_1 after zero-row removal.
// Row blocks correspond to the circular shifts in block_shifts (one block of M
// rows per shift); columns to window bins l = -L..L.
struct LocalSystem {
    Eigen::MatrixXcd B;          // (#blocks * M) x (2L+1)
    Eigen::VectorXcd g0;         // synthesis window bins at l = -L..L
    int alpha = 0;               // ceil((L + tau_eff + 1)/M), tau_eff = actual support
    int L = 0;
    int M = 0;
    int K = 0;
    int N = 0;
    std::vector<int> block_shifts;  // signed shifts in row-block order

    int rows() const { return static_cast<int>(B.rows()); }
    int cols() const { return static_cast<int>(B.cols()); }
};

// Raised-cosine synthesis spectrum: flat for |l| <= (1-beta)M/2, cosine taper
// to zero at |l| = tau, energy-normalized to (1/N) sum |G|^2 = 1. For beta = 0
// it is the rectangle of width M (even M: l in [-M/2, M/2-1]; odd M:
// l in [-(M-1)/2, (M-1)/2]).
FreqWindow rc_synthesis_window(const Config& cfg);

// output[l] = G((l + kM)_N) e^{-j2pi l m / M}.
cvec shift_synthesis(const FreqWindow& G, int k, int m, const Config& cfg);

// Full-band Wexler-Raz dual: (1/N) sum_l G((l+mM)_N) e^{j2pi kl/M} Gamma*(l)
// = delta(k)delta(m). Solved exactly via the M decoupled K x K residue
// systems; throws numerical_error on singular residue spectra or if the
// verified residual exceeds 1e-9.
FreqWindow dual_window_fullband(const FreqWindow& G, const Config& cfg);

// Residual infinity-norm of the biorthogonality identity for a candidate dual.
double wexler_raz_residual(const FreqWindow& G, const FreqWindow& Gamma, const Config& cfg);

LocalSystem build_local_system(const FreqWindow& G, int L, const Config& cfg);

// Least-squares local window (B^T B*)^{-1} g0; hard error above condition 1e12.
LocalWindow ldgt_window_ideal(const LocalSystem& sys);

// Channel-statistics-optimal local window
// (E{H B^T B* H*})^{-1} E{H*(0) H} g0 under the Jakes-correlated tap model.
LocalWindow ldgt_window_stat(const LocalSystem& sys, const ChannelStats& stats,
                             const Config& cfg);

// Keeps Gamma(N-L..N-1), Gamma(0..L) with the 1/N scale.
LocalWindow truncate_fullband(const FreqWindow& Gamma, int L);

// Hermitian Gram B^T B*.
Eigen::MatrixXcd local_gram(const LocalSystem& sys);

// Diagonal of Phi_m: e^{-j2pi m (l)_N / M} for l = -L..L in storage order.
Eigen::VectorXcd phase_ramp(const LocalSystem& sys, int m);

// Detection target e_{m+1}: unit at row (M-m) mod M of block 0.
Eigen::VectorXcd detection_target(const LocalSystem& sys, int m);

// Expectation matrices behind ldgt_window_stat, exposed for verification:
// gram is E{H B^T B* H*}, rhs is E{H*(c_k) H} g0, both assembled at
// subcarrier k.
void stat_expectation(const LocalSystem& sys, const ChannelStats& stats, const Config& cfg,
                      int k, Eigen::MatrixXcd& gram, Eigen::VectorXcd& rhs);

}  // namespace gfdm
