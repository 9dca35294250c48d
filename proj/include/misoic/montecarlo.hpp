#pragma once

#include "misoic/channel.hpp"
#include "misoic/rates.hpp"
#include "misoic/pareto.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace misoic {

// Monte Carlo experiments over i.i.d. or symmetric channel ensembles. Every
// trial draws its channel with seed ^ trial_index, so runs are reproducible
// and the same realizations are shared across the sweep axis (common random
// numbers). SNR values in dB map to p_max = 10^(snr/10) against unit noise.

double snr_db_to_power(double snr_db);

// How often each closed-form ND matched-filter condition fires across the
// ensemble. A trial counts as "selfish" when the two-sided chain around
// cos^2(theta1) holds for the matched filter on h11, otherwise as
// "interference" when the one-sided bound for the matched filter on h21
// holds, and as "balanced" when neither does. The selfish chain is evaluated
// as a bare inequality here, without the crossing-validity guard that the
// verdict in mrt.hpp applies, because the bare form is what the frequency
// curves track.
struct FreqPoint {
    double snr_db = 0.0;
    double interference = 0.0;
    double selfish = 0.0;
    double balanced = 0.0;
};

std::vector<FreqPoint> mrt_frequency_vs_snr(int n, const std::vector<double>& snr_db,
                                            int trials, std::uint64_t seed,
                                            int n_lambda = default_n_lambda);

// Mean sum-rate loss of the best matched-filter pair against the
// candidate-search maximum for one structure, both as a fraction of the
// maximum and as a plain bit difference. The fractional form divides by a
// small maximum at low SNR, so trend statements are steadier on the gap.
struct LossPoint {
    double snr_db = 0.0;
    double mean_loss = 0.0; // (best - mrt) / best, averaged
    double mean_gap = 0.0;  // best - mrt in bits, averaged
};

std::vector<LossPoint> rate_loss_vs_snr(Structure st, int n, const std::vector<double>& snr_db,
                                        int trials, std::uint64_t seed,
                                        int n_lambda = default_n_lambda);

// Mean per-structure candidate maxima and the tdma baseline over the
// symmetric ensemble, swept over interference strength or transmit power.
// `best` names the structure (or "TDMA") with the highest mean.
struct SweepPoint {
    double x = 0.0; // sir or snr_db, matching the sweep axis
    std::array<double, 4> structure_rate{}; // indexed by Structure order
    double tdma = 0.0;
    std::string best;
};

std::vector<SweepPoint> sweep_sir(int n, double theta, const std::vector<double>& sir,
                                  double snr_db, int trials, std::uint64_t seed,
                                  int n_lambda = default_n_lambda);

std::vector<SweepPoint> sweep_snr(int n, double theta, double sir,
                                  const std::vector<double>& snr_db, int trials,
                                  std::uint64_t seed, int n_lambda = default_n_lambda);

} // namespace misoic
