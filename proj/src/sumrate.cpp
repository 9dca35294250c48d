#include "misoic/sumrate.hpp"

#include "misoic/errors.hpp"
#include "misoic/linalg.hpp"
#include "misoic/warn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace misoic {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double gain_of(const CVec& h, const CVec& w) { return std::norm(inner(h, w)); }

// n points from lo to hi inclusive; collapses to {hi} when the ends meet.
std::vector<double> linspace(double lo, double hi, int n) {
    if (n < 2 || !(hi > lo)) return {hi};
    std::vector<double> g(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        g[static_cast<std::size_t>(k)] = lo + (hi - lo) * double(k) / double(n - 1);
    g.back() = hi;
    return g;
}

void check_p_max(double p_max) {
    if (!(p_max >= 0.0)) throw RangeError("p_max must be nonnegative");
}

} // namespace

double lambda_b_nd(const Channel& ch, const CVec& w2, double p_max) {
    check_p_max(p_max);
    const double d = gain_of(ch.h12, w2); // interference at receiver 1, unit power
    const double c = gain_of(ch.h22, w2); // desired power at receiver 2, unit power
    const double c1 = p_max / (d * p_max + 1.0);
    const double c2 = p_max / (c * p_max + 1.0);
    const double n1sq = norm2(ch.h11);
    const double n2sq = norm2(ch.h21);
    const double x = std::abs(inner(ch.h21, ch.h11));
    // ||h11||^2 sin^2(theta1) as the squared residual of h11 off h21.
    const double perp = std::max(n1sq - x * x / n2sq, 0.0);
    const double root = 2.0 * std::sqrt(c1 * c2) * x;
    const double den = c2 * n2sq - root + c1 * n1sq;
    const double mag = c2 * n2sq + root + c1 * n1sq;
    if (!(den > 1e-12 * mag))
        throw DegenerateBalance("lambda_b_nd: balance denominator vanished");
    return c1 * perp / den;
}

BalanceResult w2_balance_nd(const Channel& ch, const CVec& w1, double p_max) {
    if (!(p_max > 0.0)) throw RangeError("w2_balance_nd: p_max must be positive");
    const double g_num = gain_of(ch.h21, w1);
    const double g_den = gain_of(ch.h11, w1);
    if (g_den <= 0.0 || g_num <= 0.0)
        throw DegenerateBalance("w2_balance_nd: w1 is orthogonal to h11 or h21");
    const double g = g_num / g_den;

    Rank2Eig eig = rank2_herm_eig(ch.h22, ch.h12, p_max, -g * p_max);
    const double a = eig.pos_val;
    const double b = -eig.neg_val;
    const double at = a - (g - 1.0);
    const double bt = b + (g - 1.0);

    BalanceResult out;
    if (!(at > 0.0) || !(bt > 0.0)) return out; // infeasible, not an error

    // Phase aligning the two eigenvector projections on h22, so the combined
    // beamformer lands on the coherent (Pareto-relevant) branch.
    const cplx pa = inner(ch.h22, eig.pos_vec);
    const cplx pb = inner(ch.h22, eig.neg_vec);
    double phi = 0.0;
    if (std::abs(pa) > 0.0 && std::abs(pb) > 0.0) phi = std::arg(pa) - std::arg(pb);

    CVec w = add(scale(eig.pos_vec, 1.0 / std::sqrt(at)),
                 scale(eig.neg_vec, std::polar(1.0, phi) / std::sqrt(bt)));
    out.w2 = unit(w);
    out.lambda2 = gain_of(ch.h12, out.w2) / norm2(ch.h12);
    out.feasible = true;
    return out;
}

double lambda_a_dd(const Channel& ch, int user, double g_jj) {
    if (user != 1 && user != 2) throw RangeError("user index must be 1 or 2");
    if (!(g_jj >= 0.0)) throw RangeError("lambda_a_dd: g_jj must be nonnegative");
    const CVec& des = (user == 1) ? ch.h11 : ch.h22;
    const CVec& cro = (user == 1) ? ch.h21 : ch.h12;
    const double ndsq = norm2(des);
    const double ncsq = norm2(cro);
    const double x = std::abs(inner(des, cro));
    const double s = std::sqrt(1.0 + g_jj);
    const double num = std::max(ncsq - x * x / ndsq, 0.0); // ||h_ji||^2 sin^2(theta)
    const double den = ncsq + (1.0 + g_jj) * ndsq - 2.0 * x * s;
    const double mag = ncsq + (1.0 + g_jj) * ndsq + 2.0 * x * s;
    if (!(den > 1e-15 * mag)) return kInf;
    return num / den;
}

NdCandidates nd_candidates(const Channel& ch, double p_max, int n_lambda) {
    check_p_max(p_max);
    NdCandidates out;
    out.p1 = out.p2 = p_max;
    out.w2_family = make_family(ch, 2, FamilyKind::W);
    const double lam2mrt = lambda_mrt(ch, 2);

    // The balance coordinate of the optimal pair is taken against the w1 it
    // balances, so a probe at a fixed w1 bounds nothing; the grid covers
    // [0, lambda2_mrt] uniformly. Anything above the matched filter loses on
    // both rate terms at once and never wins. Feasible balance probes at the
    // two extreme w1 members join as extra off-grid members.
    out.w2_lambdas = linspace(0.0, lam2mrt, n_lambda);
    if (!out.w2_family.degenerate && p_max > 0.0) {
        for (const CVec& w1 : {unit(ch.h11), unit(ch.h21)}) {
            try {
                BalanceResult br = w2_balance_nd(ch, w1, p_max);
                if (br.feasible) {
                    out.w2_lambdas.push_back(std::clamp(br.lambda2, 0.0, 1.0));
                    out.anchored = true;
                }
            } catch (const DegenerateBalance&) {
            } catch (const ParallelChannels&) {
            }
        }
    }
    if (!out.anchored) warn("nd_candidates: no feasible balance probe; uniform w2 grid only");

    const double lam1mrt = lambda_mrt(ch, 1);
    out.w1_set.push_back(unit(ch.h11));
    out.w1_lambdas.push_back(lam1mrt);
    out.w1_set.push_back(unit(ch.h21));
    out.w1_lambdas.push_back(1.0);
    try {
        // Representative balanced member at the MRT end of the w2 grid.
        const double l1b = lambda_b_nd(ch, unit(ch.h22), p_max);
        LambdaFamily f1 = make_family(ch, 1, FamilyKind::W);
        out.w1_set.push_back(w_from_lambda(f1, l1b));
        out.w1_lambdas.push_back(l1b);
    } catch (const DegenerateBalance&) {
        warn("nd_candidates: balanced w1 member omitted (degenerate balance)");
    }
    return out;
}

namespace {

// Evaluation list for one DD user: family grid from the alignment coordinate
// up to MRT, the off-family alignment point when it lies beyond MRT, and the
// matched-filter endpoint.
std::vector<double> dd_lambda_list(double lam_a, double lam_mrt, int n_lambda) {
    double lo = lam_mrt;
    if (lam_a <= lam_mrt) lo = std::max(lam_a, 0.0);
    std::vector<double> out = linspace(lo, lam_mrt, n_lambda);
    if (lam_a > lam_mrt && lam_a <= 1.0) out.push_back(lam_a);
    if (out.back() < 1.0) out.push_back(1.0);
    return out;
}

} // namespace

DdCandidates dd_candidates(const Channel& ch, double p_max, int n_lambda) {
    check_p_max(p_max);
    DdCandidates out;
    out.p1 = out.p2 = p_max;
    out.user1.family = make_family(ch, 1, FamilyKind::V);
    out.user2.family = make_family(ch, 2, FamilyKind::V);
    out.user1.lambda_mrt = lambda_mrt(ch, 1);
    out.user2.lambda_mrt = lambda_mrt(ch, 2);

    // User 1's grid start covers the partner gain range [0, ||h22||^2 p];
    // the alignment coordinate is not monotone in the partner gain, so both
    // end probes anchor it.
    const double a10 = lambda_a_dd(ch, 1, 0.0);
    const double a1f = lambda_a_dd(ch, 1, norm2(ch.h22) * p_max);
    double lam1a = std::min(a10, a1f);
    if (lam1a == kInf) {
        warn("dd_candidates: alignment coordinate undefined for user 1");
        lam1a = out.user1.lambda_mrt;
    }
    out.user1.lambda_a = lam1a;
    out.user1.lambdas = dd_lambda_list(lam1a, out.user1.lambda_mrt, n_lambda);

    // User 2 is anchored against w1 = unit(h11) at full power.
    double lam2a = lambda_a_dd(ch, 2, norm2(ch.h11) * p_max);
    if (lam2a == kInf) {
        warn("dd_candidates: alignment coordinate undefined for user 2");
        lam2a = out.user2.lambda_mrt;
    }
    out.user2.lambda_a = lam2a;
    out.user2.lambdas = dd_lambda_list(lam2a, out.user2.lambda_mrt, n_lambda);
    return out;
}

namespace {

struct MemberGains {
    double des = 0.0, cro = 0.0; // per unit power
    double lambda = 0.0;
};

StructureBest nd_search(const Channel& ch, double p_max, int n_lambda) {
    NdCandidates cand = nd_candidates(ch, p_max, n_lambda);
    LambdaFamily f1 = make_family(ch, 1, FamilyKind::W);
    GainProfile gp1 = gain_profile(ch, f1);
    GainProfile gp2 = gain_profile(ch, cand.w2_family);

    // Fixed members: matched filter on h11 and on h21.
    const double lam1mrt = lambda_mrt(ch, 1);
    MemberGains fixed[2] = {{gp1.desired(lam1mrt), gp1.cross(lam1mrt), lam1mrt},
                            {gp1.desired(1.0), gp1.cross(1.0), 1.0}};

    StructureBest best;
    best.rate = -kInf;
    Gains g;
    for (double l2 : cand.w2_lambdas) {
        g.g22 = gp2.desired(l2) * p_max;
        g.g12 = gp2.cross(l2) * p_max;

        MemberGains members[3];
        int n_members = 2;
        members[0] = fixed[0];
        members[1] = fixed[1];
        if (p_max > 0.0) {
            try {
                const double l1b = lambda_b_nd(ch, w_from_lambda(cand.w2_family, l2), p_max);
                members[n_members++] = {gp1.desired(l1b), gp1.cross(l1b), l1b};
            } catch (const DegenerateBalance&) {
            }
        }
        for (int m = 0; m < n_members; ++m) {
            g.g11 = members[m].des * p_max;
            g.g21 = members[m].cro * p_max;
            const double r = sum_rate_from_gains(Structure::ND, g);
            if (r > best.rate) {
                best.rate = r;
                best.lambda1 = members[m].lambda;
                best.lambda2 = l2;
            }
        }
    }
    best.p1 = best.p2 = p_max;
    best.w1 = w_from_lambda(f1, best.lambda1);
    best.w2 = w_from_lambda(cand.w2_family, best.lambda2);
    return best;
}

StructureBest nn_search(const Channel& ch, double p_max, int n_lambda) {
    LambdaFamily f1 = make_family(ch, 1, FamilyKind::W);
    LambdaFamily f2 = make_family(ch, 2, FamilyKind::W);
    GainProfile gp1 = gain_profile(ch, f1);
    GainProfile gp2 = gain_profile(ch, f2);

    std::vector<double> lam = linspace(0.0, 1.0, n_lambda);
    std::vector<double> c2(lam.size()), d2(lam.size());
    for (std::size_t j = 0; j < lam.size(); ++j) {
        c2[j] = gp2.desired(lam[j]) * p_max;
        d2[j] = gp2.cross(lam[j]) * p_max;
    }

    StructureBest best;
    best.rate = -kInf;
    Gains g;
    for (double l1 : lam) {
        g.g11 = gp1.desired(l1) * p_max;
        g.g21 = gp1.cross(l1) * p_max;
        for (std::size_t j = 0; j < lam.size(); ++j) {
            g.g22 = c2[j];
            g.g12 = d2[j];
            const double r = sum_rate_from_gains(Structure::NN, g);
            if (r > best.rate) {
                best.rate = r;
                best.lambda1 = l1;
                best.lambda2 = lam[j];
            }
        }
    }
    best.p1 = best.p2 = p_max;
    best.w1 = w_from_lambda(f1, best.lambda1);
    best.w2 = w_from_lambda(f2, best.lambda2);
    return best;
}

StructureBest dd_search_oriented(const Channel& ch, double p_max, int n_lambda) {
    DdCandidates cand = dd_candidates(ch, p_max, n_lambda);
    GainProfile gp1 = gain_profile(ch, cand.user1.family);
    GainProfile gp2 = gain_profile(ch, cand.user2.family);
    const double lam2mrt = cand.user2.lambda_mrt;

    StructureBest best;
    best.rate = -kInf;
    Gains g;
    for (double l1 : cand.user1.lambdas) {
        g.g11 = gp1.desired(l1) * p_max;
        g.g21 = gp1.cross(l1) * p_max;
        // Inner grid re-anchored on this member's desired power, so the
        // best response tracks the outer sweep.
        double lam2a = lambda_a_dd(ch, 2, g.g11);
        if (lam2a == kInf) lam2a = lam2mrt;
        for (double l2 : dd_lambda_list(lam2a, lam2mrt, n_lambda)) {
            g.g22 = gp2.desired(l2) * p_max;
            g.g12 = gp2.cross(l2) * p_max;
            const double r = sum_rate_from_gains(Structure::DD, g);
            if (r > best.rate) {
                best.rate = r;
                best.lambda1 = l1;
                best.lambda2 = l2;
            }
        }
    }
    best.p1 = best.p2 = p_max;
    best.w1 = w_from_lambda(cand.user1.family, best.lambda1);
    best.w2 = w_from_lambda(cand.user2.family, best.lambda2);
    return best;
}

// Alternating best-response refinement on the two alignment coordinates.
// The sweep can land a grid step away from a mutual balance pair; a few
// exact response evaluations close that gap at negligible cost.
void dd_balance_polish(const Channel& ch, double p_max, StructureBest& best) {
    LambdaFamily f1 = make_family(ch, 1, FamilyKind::V);
    LambdaFamily f2 = make_family(ch, 2, FamilyKind::V);
    GainProfile gp1 = gain_profile(ch, f1);
    GainProfile gp2 = gain_profile(ch, f2);

    double l1 = best.lambda1, l2 = best.lambda2;
    bool moved = false;
    for (int it = 0; it < 40; ++it) {
        const double l1_prev = l1, l2_prev = l2;
        const double l2a = lambda_a_dd(ch, 2, gp1.desired(l1) * p_max);
        if (l2a != kInf) l2 = l2a;
        const double l1a = lambda_a_dd(ch, 1, gp2.desired(l2) * p_max);
        if (l1a != kInf) l1 = l1a;
        Gains g;
        g.g11 = gp1.desired(l1) * p_max;
        g.g21 = gp1.cross(l1) * p_max;
        g.g22 = gp2.desired(l2) * p_max;
        g.g12 = gp2.cross(l2) * p_max;
        const double r = sum_rate_from_gains(Structure::DD, g);
        if (r > best.rate) {
            best.rate = r;
            best.lambda1 = l1;
            best.lambda2 = l2;
            moved = true;
        }
        if (l1a == kInf && l2a == kInf) break;
        if (std::abs(l1 - l1_prev) < 1e-14 && std::abs(l2 - l2_prev) < 1e-14) break;
    }
    if (moved) {
        best.w1 = w_from_lambda(f1, best.lambda1);
        best.w2 = w_from_lambda(f2, best.lambda2);
    }
}

StructureBest dd_search(const Channel& ch, double p_max, int n_lambda) {
    // The oriented sweep anchors user 2 adaptively but user 1 statically, so
    // its coverage depends on which user is listed first. Running both
    // orientations restores the user-swap invariance of the DD sum rate.
    StructureBest best = dd_search_oriented(ch, p_max, n_lambda);
    StructureBest rev = dd_search_oriented(swap_users(ch), p_max, n_lambda);
    if (rev.rate > best.rate) {
        std::swap(rev.w1, rev.w2);
        std::swap(rev.lambda1, rev.lambda2);
        best = rev;
    }
    dd_balance_polish(ch, p_max, best);
    return best;
}

} // namespace

StructureBest structure_search(const Channel& ch, Structure st, double p_max, int n_lambda) {
    check_p_max(p_max);
    switch (st) {
        case Structure::NN: return nn_search(ch, p_max, n_lambda);
        case Structure::ND: return nd_search(ch, p_max, n_lambda);
        case Structure::DN: {
            // DN mirrors ND on the user-swapped channel.
            StructureBest dn = nd_search(swap_users(ch), p_max, n_lambda);
            std::swap(dn.w1, dn.w2);
            std::swap(dn.lambda1, dn.lambda2);
            return dn;
        }
        case Structure::DD: return dd_search(ch, p_max, n_lambda);
    }
    throw RangeError("unknown structure");
}

SumRateResult max_sum_rate(const Channel& ch, double p_max, int n_lambda) {
    check_p_max(p_max);
    SumRateResult out;
    for (int i = 0; i < 4; ++i)
        out.per_structure[static_cast<std::size_t>(i)] =
            structure_search(ch, static_cast<Structure>(i), p_max, n_lambda);

    int best_idx = 0;
    for (int i = 1; i < 4; ++i)
        if (out.per_structure[static_cast<std::size_t>(i)].rate >
            out.per_structure[static_cast<std::size_t>(best_idx)].rate)
            best_idx = i;
    out.best_structure = static_cast<Structure>(best_idx);
    out.best = out.per_structure[static_cast<std::size_t>(best_idx)];
    return out;
}

} // namespace misoic
