#pragma once

#include <cstdint>

#include "gfdm/types.hpp"

namespace gfdm {

enum class Constellation { QPSK, QAM16 };

// Block geometry and prototype-window parameters. Immutable after build_config.
struct Config {
    int K = 0;       // subcarriers
    int M = 0;       // subsymbols per block
    int N = 0;       // samples per block, N = K*M (critical sampling)
    double beta = 0.0;
    int tau = 0;     // half-support of G(l) in frequency bins
    int cp_len = 0;
    Constellation constellation = Constellation::QPSK;
    uint64_t seed = 0;  // optional, carried through from config files
};

// tau = lround(M(1+beta)/2) for even M, lround((M-1)(1+beta)/2) for odd M,
// clamped below at ceil(M/2). Throws usage_error on bad parameters.
Config build_config(int K, int M, double beta, int cp_len,
                    Constellation constellation = Constellation::QPSK);

int bits_per_symbol(Constellation c);

// Gray-indexed points, zero mean, unit average energy.
const cvec& alphabet(Constellation c);

// Bit count must be exactly K*M*bits_per_symbol; symbols fill the grid k-major.
SymbolGrid map_bits(const std::vector<uint8_t>& bits, const Config& cfg);
std::vector<uint8_t> demap_symbols(const SymbolGrid& grid, const Config& cfg);

Constellation parse_constellation(const std::string& name);
std::string to_string(Constellation c);

// Center bin of subcarrier k's spectral band: (N - k*M) mod N.
inline int subcarrier_bin(const Config& cfg, int k) {
    return mod_n(static_cast<long long>(cfg.N) - static_cast<long long>(k) * cfg.M, cfg.N);
}

}  // namespace gfdm
