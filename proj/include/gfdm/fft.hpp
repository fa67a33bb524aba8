#pragma once

#include "gfdm/types.hpp"

namespace gfdm::fft {

// Unnormalized forward DFT: X(l) = sum_n x(n) e^{-j2pi ln/N}.
void forward(const cvec& in, cvec& out);

// Inverse with the 1/N: x(n) = (1/N) sum_l X(l) e^{+j2pi ln/N}.
void inverse(const cvec& in, cvec& out);

cvec forward(const cvec& in);
cvec inverse(const cvec& in);

}  // namespace gfdm::fft
