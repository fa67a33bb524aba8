#pragma once

#include <Eigen/Dense>

#include "gfdm/config.hpp"
#include "gfdm/types.hpp"
#include "gfdm/windows.hpp"

// Serial reference implementations evaluated straight from the defining sums.
// Used by the tests as independent oracles and by the benchmark as the serial
// baseline; nothing here shares code with the optimized kernels.
namespace gfdm::ref {

// Direct O(N^2) transforms.
cvec dft(const cvec& x);
cvec idft(const cvec& X);

// X(l) = sum_k sum_m d(k,m) G((l+kM)_N) e^{-j2pi l m / M}, triple loop.
cvec idgt_freq(const SymbolGrid& d, const cvec& G, const Config& cfg);

// x(n) = sum_k sum_m d(k,m) g((n-mK)_N) e^{-j2pi k n / K}, no prefix.
cvec modulate_block(const SymbolGrid& d, const cvec& g_time, const Config& cfg);

// Y(k,m) = (1/N) sum_l Y(l) Gamma*((l+kM)_N) e^{+j2pi m l / M}, triple loop.
SymbolGrid fd_dgt(const cvec& Y, const cvec& Gamma, const Config& cfg);

// d(k,m) = sum_n x(n) gamma*((n-mK)_N) e^{+j2pi k n / K}, triple loop.
SymbolGrid dgt_time(const cvec& x, const cvec& gamma, const Config& cfg);

// Local transform on the 2L+1 bins around each band center; w carries 1/N.
SymbolGrid local_dgt(const cvec& Y, const cvec& w, int L, const Config& cfg);

// Dense Wexler-Raz system: all K*M biorthogonality equations in the N unknown
// conjugated dual bins, solved by least squares.
cvec dual_window_dense(const cvec& G, const Config& cfg);

// Least-squares local window from an independently assembled system: matrix
// entries straight from the shifted-window products, solved via the normal
// equations with a pseudoinverse.
cvec local_window_normal_equations(const cvec& G, int L, const Config& cfg);

// Dense operator d -> LDGT(IDGT(d)) in the (k*M + m) symbol ordering,
// assembled column-by-column from the defining sums.
Eigen::MatrixXcd ldgt_operator(const cvec& G, const cvec& w, int L, const Config& cfg);

// Reconstruction penalty Tr{(I - A)(I - A)^H} of a local analysis window.
double reconstruction_trace(const cvec& G, const cvec& w, int L, const Config& cfg);

}  // namespace gfdm::ref
