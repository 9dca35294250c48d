#include "misoic/mrt.hpp"

#include "misoic/errors.hpp"
#include "misoic/linalg.hpp"
#include "misoic/pareto.hpp"
#include "misoic/sumrate.hpp"

#include <algorithm>
#include <cmath>

namespace misoic {

namespace {

constexpr double kBoundaryTol = 1e-12;

bool near_equal(double a, double b) {
    return std::abs(a - b) <= kBoundaryTol * std::max({1.0, std::abs(a), std::abs(b)});
}

// Signed relative margin of a <= b; nonnegative when satisfied.
double rel_margin(double a, double b) {
    return (b - a) / std::max({1.0, std::abs(a), std::abs(b)});
}

void fill_chain(MrtVerdict& v, double lhs, double mid, double rhs) {
    v.lhs = lhs;
    v.mid = mid;
    v.rhs = rhs;
    v.holds = lhs <= mid && mid <= rhs;
    v.boundary = near_equal(lhs, mid) || near_equal(mid, rhs);
}

// Two-term comparisons reuse the chain fields with lhs duplicated into mid,
// so only the upper leg counts toward the boundary flag.
void fill_pair(MrtVerdict& v, double value, double bound) {
    v.lhs = v.mid = value;
    v.rhs = bound;
    v.holds = value <= bound;
    v.boundary = near_equal(value, bound);
}

double chain_margin(const MrtVerdict& v) {
    const double upper = rel_margin(v.mid, v.rhs);
    if (v.lhs == v.mid) return upper;
    return std::min(rel_margin(v.lhs, v.mid), upper);
}

} // namespace

const char* mrt_strategy_name(MrtStrategy s) {
    switch (s) {
        case MrtStrategy::SelfishPair: return "selfish-pair";
        case MrtStrategy::InterferencePair: return "interference-pair";
        case MrtStrategy::User1Selfish: return "user1-selfish";
        case MrtStrategy::User1Interference: return "user1-interference";
        case MrtStrategy::User2Selfish: return "user2-selfish";
        case MrtStrategy::User2Interference: return "user2-interference";
    }
    return "??";
}

std::array<MrtVerdict, 2> nd_mrt_check(const Channel& ch, double p_max) {
    if (!(p_max > 0.0)) throw RangeError("nd_mrt_check: p_max must be positive");
    const double n1sq = norm2(ch.h11);
    const double n2sq = norm2(ch.h21);
    const double cos2t1 = lambda_mrt(ch, 1);
    const double cos2t2 = lambda_mrt(ch, 2);

    // Weights of the two balance terms at w2 = unit(h22).
    const double c1 = p_max / (norm2(ch.h12) * cos2t2 * p_max + 1.0);
    const double c2 = p_max / (norm2(ch.h22) * p_max + 1.0);

    std::array<MrtVerdict, 2> out;
    out[0].structure = out[1].structure = Structure::ND;
    out[0].strategy = MrtStrategy::User1Selfish;
    out[1].strategy = MrtStrategy::User1Interference;

    // Interference MRT: receiver 2 decodes user 1 so easily that pushing w1
    // all the way onto h21 costs nothing. Equivalent to the balance crossing
    // falling off the family.
    const double bound = (c1 / c2) * n1sq * cos2t1;
    fill_pair(out[1], n2sq, bound);

    // Selfish MRT: the balance crossing exists below cos^2(theta1) and the
    // matched filter still satisfies the decodability constraint.
    const bool crossing = std::sqrt(c2) * std::sqrt(n2sq) >
                          std::sqrt(c1) * std::sqrt(n1sq) * std::sqrt(cos2t1);
    double lam1b = 0.0;
    bool have_lam1b = false;
    try {
        lam1b = lambda_b_nd(ch, unit(ch.h22), p_max);
        have_lam1b = true;
    } catch (const DegenerateBalance&) {
    }
    if (have_lam1b) {
        const double x = (c1 / c2) * n1sq / n2sq;
        fill_chain(out[0], lam1b, cos2t1, x);
        out[0].holds = out[0].holds && crossing;
        if (near_equal(std::sqrt(c2 * n2sq), std::sqrt(c1 * n1sq * cos2t1)))
            out[0].boundary = true;
    } else {
        out[0].holds = false;
        out[0].boundary = true;
        out[0].mid = cos2t1;
    }
    return out;
}

std::array<MrtVerdict, 6> dd_mrt_check(const Channel& ch, double p_max) {
    if (!(p_max > 0.0)) throw RangeError("dd_mrt_check: p_max must be positive");
    // Effective channel strengths sqrt(p)*h, squared.
    const double e11 = norm2(ch.h11) * p_max;
    const double e12 = norm2(ch.h12) * p_max;
    const double e21 = norm2(ch.h21) * p_max;
    const double e22 = norm2(ch.h22) * p_max;
    const double cos2t1 = lambda_mrt(ch, 1);
    const double cos2t2 = lambda_mrt(ch, 2);

    std::array<MrtVerdict, 6> out;
    for (MrtVerdict& v : out) v.structure = Structure::DD;
    out[0].strategy = MrtStrategy::SelfishPair;
    out[1].strategy = MrtStrategy::InterferencePair;
    out[2].strategy = MrtStrategy::User1Selfish;
    out[3].strategy = MrtStrategy::User1Interference;
    out[4].strategy = MrtStrategy::User2Selfish;
    out[5].strategy = MrtStrategy::User2Interference;

    // Selfish per user: the cross channel is strong and aligned enough that
    // receiver j decodes user i even under matched-filter transmission.
    fill_pair(out[2], (1.0 + e22) * e11, e21 * cos2t1);
    fill_pair(out[4], (1.0 + e11) * e22, e12 * cos2t2);

    // Interference per user, partner matched to its cross channel: the
    // matched point must sit inside the window where the decoded rate is the
    // binding one and amplifying interference further is the best response.
    // Received desired powers at the cross-matched pair.
    const double g11 = e11 * cos2t1;
    const double g22 = e22 * cos2t2;
    fill_chain(out[3], e21 / (1.0 + g22), g11, e12 / g22 - 1.0);
    fill_chain(out[5], e12 / (1.0 + g11), g22, e21 / g11 - 1.0);
    for (MrtVerdict* v : {&out[3], &out[5]}) {
        if (std::isnan(v->lhs) || std::isnan(v->rhs)) {
            v->holds = false;
            v->boundary = true;
        }
    }

    // Pair verdicts surface the chain with the smaller margin.
    auto combine = [](MrtVerdict& pair, const MrtVerdict& a, const MrtVerdict& b) {
        const MrtVerdict& tight = chain_margin(a) <= chain_margin(b) ? a : b;
        pair.lhs = tight.lhs;
        pair.mid = tight.mid;
        pair.rhs = tight.rhs;
        pair.holds = a.holds && b.holds;
        pair.boundary = a.boundary || b.boundary;
    };
    combine(out[0], out[2], out[4]);

    // Joint interference pair: both cross-matched vectors must balance the
    // same weighted product term from both sides at once.
    const double x = e11 * e22 * cos2t1 * cos2t2;
    MrtVerdict line1, line2;
    fill_chain(line1, e12 - e22 * cos2t2, x,
               e21 * e22 * cos2t2 / (1.0 + e22 * cos2t2));
    fill_chain(line2, e21 - e11 * cos2t1, x,
               e12 * e11 * cos2t1 / (1.0 + e11 * cos2t1));
    combine(out[1], line1, line2);
    return out;
}

} // namespace misoic
