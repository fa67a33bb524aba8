#pragma once

#include "gfdm/channel.hpp"
#include "gfdm/config.hpp"
#include "gfdm/modem.hpp"
#include "gfdm/types.hpp"
#include "gfdm/windows.hpp"

namespace gfdm {

// CLI-facing bundle: soft statistics, hard decisions, genie gains.
struct ReceiverOutput {
    SymbolGrid soft_grid;
    SymbolGrid hard_grid;
    cvec channel_gains;   // H at the subcarrier band centers
    int flagged_symbols = 0;  // detections that fell back to the tie rule
};

// gamma = inverse DFT of the full-band analysis spectrum.
cvec analysis_time_window(const FreqWindow& Gamma, const Config& cfg);

// Time-domain transform: d(k,m) = sum_n x(n) gamma*((n - mK)_N) e^{+j2pi k n / K}.
SymbolGrid dgt_time(const TimeSignal& x, const cvec& gamma, const Config& cfg);

// Whole-band transform: Y(k,m) = (1/N) sum_l Y(l) Gamma*((l + kM)_N) e^{+j2pi m l / M}.
SymbolGrid fd_dgt_receive(const Spectrum& Y, const FreqWindow& Gamma, const Config& cfg);

// Same structure restricted to the 2L+1 bins around each subcarrier band,
// using the truncated full-band dual.
SymbolGrid truncated_fd_dgt_receive(const Spectrum& Y, const LocalWindow& trunc,
                                    const Config& cfg);

// Local transform with a least-squares window (ideal or channel-statistics).
SymbolGrid ldgt_receive(const Spectrum& Y, const LocalWindow& w, const Config& cfg);

// Symbol-by-symbol detection: argmin_s |soft(k,m) - gains[k] * s|^2, ties to
// the lowest alphabet index. flagged (optional) counts all-tie fallbacks.
SymbolGrid detect(const SymbolGrid& soft, const cvec& gains, const Config& cfg,
                  int* flagged = nullptr);

// Dense exact baseline: inverts the combined channel+synthesis operator on the
// CP-stripped block. Desk scale only (N <= 4096).
SymbolGrid zf_oracle_receive(const TimeSignal& y, const ChannelRealization& h,
                             const FreqWindow& G, const Config& cfg);

// Columns of the time-domain transmit operator, column s = k*M + m.
std::vector<cvec> transmit_matrix(const FreqWindow& G, const Config& cfg);

}  // namespace gfdm
