#pragma once

#include "misoic/channel.hpp"
#include "misoic/linalg.hpp"

#include <array>
#include <string>

namespace misoic {

// Receiver behavior per user: N = treat interference as noise, D = decode
// the interfering message first and subtract it. The two-letter code gives
// user 1's receiver first.
enum class Structure { NN, ND, DN, DD };

const char* structure_name(Structure s);
Structure structure_from_name(const std::string& name);

// Unit-norm beamformers and per-user transmit powers.
struct TxStrategy {
    CVec w1, w2;
    double p1 = 0.0, p2 = 0.0;
};

// Received signal powers g_jk = |h_jk^H w_k|^2 * p_k at receiver j from
// transmitter k, with unit noise. g11/g22 are the desired powers, g21 the
// interference user 1 causes at receiver 2, g12 the reverse.
struct Gains {
    double g11 = 0.0, g21 = 0.0, g22 = 0.0, g12 = 0.0;
};

Gains gains(const Channel& ch, const TxStrategy& s);

// Single-user rate of user i with the interference removed.
double rate_C(const Channel& ch, const TxStrategy& s, int user);
// Rate of user i when its receiver treats the interference as noise.
double rate_D(const Channel& ch, const TxStrategy& s, int user);
// Rate at which receiver j != i can decode user i's message first.
double rate_T(const Channel& ch, const TxStrategy& s, int user);

struct RatePoint {
    double r1 = 0.0, r2 = 0.0;
    Structure structure = Structure::NN;
};

RatePoint rate_pair(Structure st, const Channel& ch, const TxStrategy& s);
double sum_rate(Structure st, const Channel& ch, const TxStrategy& s);

// Gain-domain variants used by the grid kernels; identical formulas, no
// channel evaluation.
RatePoint rate_pair_from_gains(Structure st, const Gains& g);
double sum_rate_from_gains(Structure st, const Gains& g);

// The four linear-domain terms whose minimum gives 2^(sum rate) under DD:
// z1 = (1+g11)(1+g22), z2 = 1+g11+g12, z3 = 1+g21+g22, z4 = z2*z3/z1.
std::array<double, 4> zdd_terms(const Channel& ch, const TxStrategy& s);

// Half-time alternation between the two single-user MRT links at full power.
double tdma_sum_rate(const Channel& ch, double p_max);

} // namespace misoic
