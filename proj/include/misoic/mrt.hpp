#pragma once

#include "misoic/channel.hpp"
#include "misoic/rates.hpp"

#include <array>

namespace misoic {

// Closed-form optimality checks for matched-filter (MRT) transmission, i.e.
// beamforming straight onto the direct channel ("selfish") or onto the cross
// channel ("interference"). Each verdict evaluates one printed condition
// chain on the channel geometry; the tests confirm the verdicts against the
// grid argmax of the corresponding candidate search.

enum class MrtStrategy {
    SelfishPair,       // (unit(h11), unit(h22))
    InterferencePair,  // (unit(h21), unit(h12))
    User1Selfish,      // w1 = unit(h11), partner matched to its direct channel
    User1Interference, // w1 = unit(h21), partner matched to its cross channel
    User2Selfish,
    User2Interference,
};

const char* mrt_strategy_name(MrtStrategy s);

// One condition chain lhs <= mid <= rhs. Single-sided conditions store the
// constrained quantity in both lhs and mid. `boundary` marks a comparison
// sitting at equality within relative 1e-12, where the verdict direction is
// numerically undecidable.
struct MrtVerdict {
    Structure structure = Structure::ND;
    MrtStrategy strategy = MrtStrategy::User1Selfish;
    bool holds = false;
    bool boundary = false;
    double lhs = 0.0, mid = 0.0, rhs = 0.0;
};

// ND with w2 = unit(h22): verdicts for w1 = unit(h11) (index 0) and
// w1 = unit(h21) (index 1) being the candidate-set argmax. The selfish chain
// is lambda_b <= cos^2(theta1) <= X and applies only when the balance
// crossing actually lies on the family, which happens exactly when the
// interference condition fails strictly; at most one verdict holds.
std::array<MrtVerdict, 2> nd_mrt_check(const Channel& ch, double p_max);

// DD verdicts, in the order SelfishPair, InterferencePair, User1Selfish,
// User1Interference, User2Selfish, User2Interference. Per-user verdicts pin
// the partner to its half of the named pair: selfish chains are one-sided
// sufficiency checks, interference chains a two-sided window on the desired
// received power at the cross-matched point. Pair verdicts conjoin the two
// constituent chains and report the one with the smaller margin.
std::array<MrtVerdict, 6> dd_mrt_check(const Channel& ch, double p_max);

} // namespace misoic
