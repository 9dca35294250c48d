#pragma once

#include "misoic/channel.hpp"
#include "misoic/rates.hpp"

#include <string>
#include <vector>

namespace misoic {

// Low-complexity baseline: evaluate a fixed shortlist of matched-filter and
// zero-forcing beamformer pairs at full power, plus time sharing, and pick
// the best sum rate. No grids, no balance solves.
struct HeuristicChoice {
    std::string name;
    Structure structure = Structure::NN;
    bool tdma = false;
    TxStrategy strategy;     // empty beamformers for the tdma entry
    RatePoint rates;
    double sum = 0.0;
};

// All shortlist entries in their fixed order: zero-forcing and matched
// pairs under NN, the one-sided pairs under ND/DN, the four matched
// combinations under DD, and tdma last.
std::vector<HeuristicChoice> heuristic_rates(const Channel& ch, double p_max);

// The shortlist entry with the highest sum rate; ties keep the earlier
// entry.
HeuristicChoice simple_select(const Channel& ch, double p_max);

} // namespace misoic
