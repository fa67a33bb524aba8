#pragma once

#include "gfdm/config.hpp"
#include "gfdm/types.hpp"
#include "gfdm/windows.hpp"

namespace gfdm {

// Frequency-domain block synthesis:
// X(l) = sum_k sum_m d(k,m) G((l + kM)_N) e^{-j2pi l m / M}.
Spectrum idgt_freq(const SymbolGrid& d, const FreqWindow& G, const Config& cfg);

// Time-domain block with cyclic prefix prepended; equals IDFT of idgt_freq.
TimeSignal modulate(const SymbolGrid& d, const FreqWindow& G, const Config& cfg);

// Removes the cyclic prefix and returns the N-point DFT of the block.
Spectrum strip_and_transform(const TimeSignal& framed, const Config& cfg);

// Frame = cp_len tail samples + block.
TimeSignal add_cyclic_prefix(const cvec& block, const Config& cfg);

// The length-N block of a framed signal (prefix dropped).
cvec strip_cyclic_prefix(const TimeSignal& framed, const Config& cfg);

}  // namespace gfdm
