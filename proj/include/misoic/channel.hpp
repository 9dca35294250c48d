#pragma once

#include "misoic/linalg.hpp"

#include <cstdint>
#include <string>

namespace misoic {

// Two-user MISO interference channel with N antennas per transmitter and
// unit noise variance at both receivers. h_jk is the vector channel from
// transmitter k to receiver j, so h11/h22 are the direct links and h12/h21
// carry the cross interference.
struct Channel {
    int n = 0;
    CVec h11, h12, h21, h22;
};

// Principal angle between the complex lines spanned by a and b, in [0, pi/2].
double angle(const CVec& a, const CVec& b);

// All four channel vectors i.i.d. with CN(0,1) entries, i.e. each entry is
// (x + iy)/sqrt(2) with x, y standard normal. Entries are drawn in the fixed
// order h11, h12, h21, h22, each vector front to back.
Channel gen_iid(int n, std::uint64_t seed);

// Symmetric-geometry ensemble: the direct channels are i.i.d. while each
// cross channel makes the prescribed principal angle theta with its partner
// direct channel and carries norm ||h_jj||/sqrt(sir). The residual direction
// and its phase are drawn uniformly.
Channel gen_symmetric(int n, double theta, double sir, std::uint64_t seed);

// Channel with the two user indices exchanged (receiver and transmitter
// labels both swap, so direct links stay direct).
Channel swap_users(const Channel& ch);

std::string channel_to_json(const Channel& ch);
Channel channel_from_json(const std::string& text);

void save_channel(const Channel& ch, const std::string& path);
Channel load_channel(const std::string& path);

} // namespace misoic
