#pragma once

#include "misoic/channel.hpp"
#include "misoic/rates.hpp"

#include <functional>
#include <vector>

namespace misoic {

// Default grid sizes for the lambda and power axes.
inline constexpr int default_n_lambda = 201;
inline constexpr int default_n_power = 21;

enum class FamilyKind {
    W, // basis aligned with the interference channel h_ji: cross gain is lambda*||h_ji||^2*p
    V  // basis aligned with the desired channel h_ii: desired gain is lambda*||h_ii||^2*p
};

// One-parameter beamformer family w(lambda) = sqrt(lambda)*basis_a +
// sqrt(1-lambda)*basis_b for one user. basis_a carries the channel the family
// is aligned with, basis_b its in-span orthogonal complement. When the direct
// and cross channels are parallel the family collapses to the single
// direction stored in basis_a and `degenerate` is set.
struct LambdaFamily {
    FamilyKind kind = FamilyKind::W;
    int user = 1;
    CVec basis_a, basis_b;
    bool degenerate = false;
};

LambdaFamily make_family(const Channel& ch, int user, FamilyKind kind);

// Beamformer at the given family coordinate. Throws RangeError outside [0,1].
CVec w_from_lambda(const LambdaFamily& fam, double lambda);

// cos^2 of the principal angle between h_ii and h_ji. This is the coordinate
// of unit(h_ii) in the W family and of unit(h_ji) in the V family.
double lambda_mrt(const Channel& ch, int user);

// Scalar gain profile of a family: desired and cross channel powers at
// coordinate lambda and unit transmit power. Used by the sweep loops so the
// inner grid stays free of vector algebra.
struct GainProfile {
    double des_a = 0.0, des_b = 0.0;   // |h_des^H basis_a|, |h_des^H basis_b| (both real >= 0)
    double cross_a = 0.0, cross_b = 0.0; // same for the cross channel
    bool degenerate = false;             // collapsed family: gains do not depend on lambda
    double desired(double lambda) const;
    double cross(double lambda) const;
};

GainProfile gain_profile(const Channel& ch, const LambdaFamily& fam);

// One grid candidate of a region: beamformers with their family coordinates
// and the power pair.
struct CandidateTuple {
    CVec w1, w2;
    double p1 = 0.0, p2 = 0.0;
    Structure structure = Structure::NN;
    double lambda1 = 0.0, lambda2 = 0.0;
};

// Full candidate grid of a region. Order is lambda1-major, then lambda2,
// then p1, then p2 where the region leaves the power free; fixed powers sit
// at P_max. NN: W1 x W2 at full power. ND: p2 on the grid, p1 = P_max.
// DN: mirrored. DD: V1 x V2 with both powers on the grid.
std::vector<CandidateTuple> candidate_grid(Structure st, const Channel& ch, double p_max,
                                           int n_lambda = default_n_lambda,
                                           int n_power = default_n_power);

// Rate pairs of every grid candidate, in candidate_grid order.
std::vector<RatePoint> region_sweep(Structure st, const Channel& ch, double p_max,
                                    int n_lambda = default_n_lambda,
                                    int n_power = default_n_power);

// Streaming visitor over the grid rate points; same order as region_sweep
// without materializing the point list.
void region_sweep_visit(Structure st, const Channel& ch, double p_max, int n_lambda, int n_power,
                        const std::function<void(const RatePoint&, double lambda1, double lambda2,
                                                 double p1, double p2)>& visit);

// Mutually non-dominated subset, sorted by r1 ascending. A point dominates
// another when it is >= in both coordinates and > in at least one; duplicate
// points are kept once.
std::vector<RatePoint> pareto_filter(std::vector<RatePoint> pts);

// pareto_filter(region_sweep(...)) evaluated chunk-wise in bounded memory.
std::vector<RatePoint> region_frontier(Structure st, const Channel& ch, double p_max,
                                       int n_lambda = default_n_lambda,
                                       int n_power = default_n_power);

// Achievable (desired power, interference power) samples of one user's W
// family over the lambda x power grid, lambda-major.
struct PowerPoint {
    double lambda = 0.0, p = 0.0;
    double desired = 0.0, interference = 0.0;
};

std::vector<PowerPoint> power_region_boundary(const Channel& ch, int user, double p_max,
                                              int n_lambda = default_n_lambda,
                                              int n_power = default_n_power);

} // namespace misoic
