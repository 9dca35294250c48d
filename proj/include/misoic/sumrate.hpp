#pragma once

#include "misoic/channel.hpp"
#include "misoic/pareto.hpp"
#include "misoic/rates.hpp"

#include <array>
#include <vector>

namespace misoic {

// Candidate-set construction and sum-rate maximization for the four decoding
// structures. Candidate sets are finite families of beamformer pairs at full
// power; the tests compare their maximizers against exhaustive grid oracles.

// Balance coordinate for user 1 under ND with transmitter 2 fixed: the
// algebraic root, on the W1 family, of the equality between user 1's own
// decoding constraint and the decodability constraint at receiver 2. Always
// lands in [0, 1]. The root is an actual crossing only when decodability has
// overtaken the decoding constraint by lambda = 1; otherwise decoding binds
// across the whole family, the cross matched filter is the slice argmax, and
// the bare root only feeds the closed-form frequency conditions. Throws
// DegenerateBalance when the balance denominator vanishes.
double lambda_b_nd(const Channel& ch, const CVec& w2, double p_max);

// Beamformer for transmitter 2 that equalizes user 2's rate with the rate at
// which receiver 1 can decode user 2, for a fixed unit-norm w1. Built from
// the signed eigenpair of p_max*(h22 h22^H - g*h12 h12^H) with
// g = |h21^H w1|^2 / |h11^H w1|^2; the two eigenvectors are combined with
// weights 1/sqrt(a - (g-1)) and 1/sqrt(b + (g-1)) and a phase that aligns
// their projections on h22. Infeasibility (either weight undefined) is a
// value, not an error.
struct BalanceResult {
    bool feasible = false;
    CVec w2;              // unit norm when feasible
    double lambda2 = 0.0; // W2-family coordinate recovered from |h12^H w2|^2
};

BalanceResult w2_balance_nd(const Channel& ch, const CVec& w1, double p_max);

// Alignment coordinate for user `user` under DD: the lambda on the V family
// where (1+g_jj)*|h_ii^H w|^2 equals |h_ji^H w|^2, with g_jj the partner's
// desired signal power. The expression is scale free, so transmit power
// enters only through g_jj. Returns +inf when the denominator vanishes; the
// caller omits the balanced point in that case.
double lambda_a_dd(const Channel& ch, int user, double g_jj);

// ND candidate description: three w1 members against a lambda grid on the
// W2 family covering [0, lambda2_mrt]; transmitter 2 never gains past the
// matched filter. The balanced w1 member stored here is the one for
// w2 = unit(h22); the search recomputes it for every w2 grid point.
struct NdCandidates {
    std::vector<CVec> w1_set;       // matched to h11, matched to h21, balanced
    std::vector<double> w1_lambdas; // W1-family coordinates of the above
    LambdaFamily w2_family;
    std::vector<double> w2_lambdas; // uniform [0, lambda2_mrt], then feasible balance probes
    bool anchored = false;          // at least one balance probe was feasible
    double p1 = 0.0, p2 = 0.0;      // always full power
};

NdCandidates nd_candidates(const Channel& ch, double p_max,
                           int n_lambda = default_n_lambda);

// DD candidates for one user: V-family grid from the alignment coordinate up
// to MRT, then the matched-filter endpoint lambda = 1 as an extra member.
struct DdUserCandidates {
    LambdaFamily family;
    double lambda_a = 0.0;   // alignment coordinate anchoring the grid
    double lambda_mrt = 0.0;
    std::vector<double> lambdas; // grid [lambda_lo, lambda_mrt] then 1.0
};

struct DdCandidates {
    DdUserCandidates user1; // anchored on partner gain probes g22 in {0, ||h22||^2 p}
    DdUserCandidates user2; // anchored on g11 at w1 = unit(h11)
    double p1 = 0.0, p2 = 0.0;
};

DdCandidates dd_candidates(const Channel& ch, double p_max,
                           int n_lambda = default_n_lambda);

// Best candidate found for one structure. lambda1/lambda2 are family
// coordinates of the winning members; the balanced ND member reports its
// exact lambda_b, which generally lies off the grid.
struct StructureBest {
    double rate = 0.0;
    CVec w1, w2;
    double p1 = 0.0, p2 = 0.0;
    double lambda1 = 0.0, lambda2 = 0.0;
};

struct SumRateResult {
    Structure best_structure = Structure::NN;
    StructureBest best;
    std::array<StructureBest, 4> per_structure; // indexed by Structure order
};

// Candidate-set maximum for a single structure. DN reuses the ND search on
// the user-swapped channel with the result mapped back.
StructureBest structure_search(const Channel& ch, Structure st, double p_max,
                               int n_lambda = default_n_lambda);

// Maximum sum rate over the candidate sets of all four structures at full
// power. Ties between structures resolve in the order NN, ND, DN, DD.
SumRateResult max_sum_rate(const Channel& ch, double p_max,
                           int n_lambda = default_n_lambda);

} // namespace misoic
