#pragma once

#include "misoic/channel.hpp"
#include "misoic/cloud.hpp"
#include "misoic/rates.hpp"

#include <vector>

namespace misoic {

// Exhaustive lattice maximum of the sum rate for one structure. The lattice
// crosses the per-side beamformer grid with the power grid; sides whose
// power is pinned by the structure (both for NN, side 1 for ND, side 2 for
// DN) stay at p_max. lambda/phase report the argmax coordinates,
// holding the polar and relative angle under the full-sphere scope. The
// final rate is recomputed from the reconstructed strategy.
struct OracleArg {
    double rate = 0.0;
    Structure structure = Structure::NN;
    double lambda1 = 0.0, phase1 = 0.0, p1 = 0.0;
    double lambda2 = 0.0, phase2 = 0.0, p2 = 0.0;
    CVec w1, w2;
};

OracleArg oracle_max(const Channel& ch, Structure st, const GridSpec& spec,
                     double p_max, int threads = 1);

// For each threshold t: max{ r2 : r1 >= t } over the lattice, or -inf when
// no lattice point reaches t. Exact (single streaming pass; thresholds are
// bucketed by binary search, no quantization of the rates themselves).
// Phase reduction is chosen per side so the reachable (r1, r2) pairs are
// preserved, which needs the full phase grid on side 2 for ND and side 1
// for DN; spec.phase_mode is ignored here.
std::vector<double> oracle_max_r2(const Channel& ch, Structure st, const GridSpec& spec,
                                  double p_max, const std::vector<double>& thresholds,
                                  int threads = 1);

// Sampled Pareto frontier: the r2 envelope over n_thresholds evenly spaced
// r1 thresholds, reduced to its non-dominated subset. Each point's r1 is
// the threshold, a lower bound on the achieving lattice point's rate.
std::vector<RatePoint> oracle_pareto(const Channel& ch, Structure st, const GridSpec& spec,
                                     double p_max, int n_thresholds = 512, int threads = 1);

} // namespace misoic
