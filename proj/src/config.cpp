#include "gfdm/config.hpp"

#include <algorithm>
#include <cmath>

namespace gfdm {

Config build_config(int K, int M, double beta, int cp_len, Constellation constellation) {
    if (K < 1 || M < 1)
        throw usage_error("build_config: K and M must be positive (K*M = 0 rejected)");
    if (!(beta >= 0.0 && beta <= 1.0))
        throw usage_error("build_config: beta must lie in [0, 1]");
    if (cp_len < 0)
        throw usage_error("build_config: cp_len must be non-negative");

    Config cfg;
    cfg.K = K;
    cfg.M = M;
    cfg.N = K * M;
    cfg.beta = beta;
    cfg.cp_len = cp_len;
    cfg.constellation = constellation;

    // Window half-width from the support geometry M = 2*tau/(1+beta) (even M)
    // or M = 2*tau/(1+beta) + 1 (odd M); rounded half away from zero.
    long tau = (M % 2 == 0) ? std::lround(M * (1.0 + beta) / 2.0)
                            : std::lround((M - 1) * (1.0 + beta) / 2.0);
    long tau_min = (M + 1) / 2;  // ceil(M/2): keeps support >= M
    cfg.tau = static_cast<int>(std::max(tau, tau_min));
    if (2 * cfg.tau > cfg.N)
        throw usage_error("build_config: window half-support exceeds N/2; block too small");
    return cfg;
}

int bits_per_symbol(Constellation c) {
    return c == Constellation::QPSK ? 2 : 4;
}

namespace {

cvec make_qpsk() {
    // Gray map, index = b0b1: 00 -> (1+j)/sqrt(2), 01 -> (1-j), 11 -> (-1-j), 10 -> (-1+j).
    const double s = 1.0 / std::sqrt(2.0);
    return {
        {s, s},    // 00
        {s, -s},   // 01
        {-s, s},   // 10
        {-s, -s},  // 11
    };
}

cvec make_qam16() {
    // Index = b0b1b2b3; (b0,b1) selects I, (b2,b3) selects Q.
    // Per-axis Gray levels: 00 -> -3, 01 -> -1, 11 -> +1, 10 -> +3, scaled by 1/sqrt(10).
    const double axis[4] = {-3.0, -1.0, 1.0, 3.0};
    // Gray code order on two bits: value index for bits (a,b).
    auto level = [&](int a, int b) {
        int g = (a << 1) | b;        // 00,01,10,11
        int idx[4] = {0, 1, 3, 2};   // Gray: 00->-3, 01->-1, 10->+3, 11->+1
        return axis[idx[g]];
    };
    const double s = 1.0 / std::sqrt(10.0);
    cvec pts(16);
    for (int b0 = 0; b0 < 2; ++b0)
        for (int b1 = 0; b1 < 2; ++b1)
            for (int b2 = 0; b2 < 2; ++b2)
                for (int b3 = 0; b3 < 2; ++b3) {
                    int index = (b0 << 3) | (b1 << 2) | (b2 << 1) | b3;
                    pts[index] = {level(b0, b1) * s, level(b2, b3) * s};
                }
    return pts;
}

}  // namespace

const cvec& alphabet(Constellation c) {
    static const cvec qpsk = make_qpsk();
    static const cvec qam16 = make_qam16();
    return c == Constellation::QPSK ? qpsk : qam16;
}

SymbolGrid map_bits(const std::vector<uint8_t>& bits, const Config& cfg) {
    const int bps = bits_per_symbol(cfg.constellation);
    const size_t need = static_cast<size_t>(cfg.N) * bps;
    if (bits.size() != need)
        throw usage_error("map_bits: expected " + std::to_string(need) + " bits, got " +
                          std::to_string(bits.size()));
    const cvec& pts = alphabet(cfg.constellation);
    SymbolGrid grid(cfg.K, cfg.M);
    for (int s = 0; s < cfg.N; ++s) {
        int index = 0;
        for (int b = 0; b < bps; ++b) index = (index << 1) | (bits[s * bps + b] & 1);
        grid.values[s] = pts[index];
    }
    return grid;
}

std::vector<uint8_t> demap_symbols(const SymbolGrid& grid, const Config& cfg) {
    if (grid.K != cfg.K || grid.M != cfg.M)
        throw usage_error("demap_symbols: grid shape mismatch");
    const int bps = bits_per_symbol(cfg.constellation);
    const cvec& pts = alphabet(cfg.constellation);
    std::vector<uint8_t> bits(static_cast<size_t>(cfg.N) * bps);
    for (int s = 0; s < cfg.N; ++s) {
        int best = 0;
        double best_d2 = std::norm(grid.values[s] - pts[0]);
        for (int i = 1; i < static_cast<int>(pts.size()); ++i) {
            double d2 = std::norm(grid.values[s] - pts[i]);
            if (d2 < best_d2) {
                best_d2 = d2;
                best = i;
            }
        }
        for (int b = 0; b < bps; ++b)
            bits[s * bps + b] = static_cast<uint8_t>((best >> (bps - 1 - b)) & 1);
    }
    return bits;
}

Constellation parse_constellation(const std::string& name) {
    if (name == "QPSK" || name == "qpsk") return Constellation::QPSK;
    if (name == "QAM16" || name == "qam16" || name == "16QAM" || name == "16qam")
        return Constellation::QAM16;
    throw usage_error("unknown constellation: " + name);
}

std::string to_string(Constellation c) {
    return c == Constellation::QPSK ? "QPSK" : "QAM16";
}

}  // namespace gfdm
