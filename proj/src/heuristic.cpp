#include "misoic/heuristic.hpp"

#include "misoic/errors.hpp"
#include "misoic/linalg.hpp"

#include <cmath>

namespace misoic {

namespace {

// Zero-forcing direction: the part of the desired channel the cross channel
// cannot see. Falls back to the matched filter when the channels are
// parallel and the projection vanishes.
CVec zf_dir(const CVec& des, const CVec& cross) {
    CVec r = proj_orth(des, cross);
    if (vnorm(r) <= tol_par * vnorm(des)) return unit(des);
    return unit(r);
}

} // namespace

std::vector<HeuristicChoice> heuristic_rates(const Channel& ch, double p_max) {
    if (!(p_max >= 0.0)) throw RangeError("p_max must be nonnegative");
    const CVec m11 = unit(ch.h11), m21 = unit(ch.h21);
    const CVec m22 = unit(ch.h22), m12 = unit(ch.h12);

    struct Entry {
        const char* name;
        Structure st;
        CVec w1, w2;
    };
    const Entry entries[] = {
        {"nn-zf", Structure::NN, zf_dir(ch.h11, ch.h21), zf_dir(ch.h22, ch.h12)},
        {"nn-mrt", Structure::NN, m11, m22},
        {"nd", Structure::ND, m21, m22},
        {"dn", Structure::DN, m11, m12},
        {"dd-cross-cross", Structure::DD, m21, m12},
        {"dd-direct-direct", Structure::DD, m11, m22},
        {"dd-cross-direct", Structure::DD, m21, m22},
        {"dd-direct-cross", Structure::DD, m11, m12},
    };

    std::vector<HeuristicChoice> out;
    out.reserve(9);
    for (const Entry& e : entries) {
        HeuristicChoice hc;
        hc.name = e.name;
        hc.structure = e.st;
        hc.strategy = {e.w1, e.w2, p_max, p_max};
        hc.rates = rate_pair(e.st, ch, hc.strategy);
        hc.sum = hc.rates.r1 + hc.rates.r2;
        out.push_back(std::move(hc));
    }

    HeuristicChoice td;
    td.name = "tdma";
    td.tdma = true;
    td.strategy.p1 = td.strategy.p2 = p_max;
    td.rates.r1 = 0.5 * std::log2(1.0 + norm2(ch.h11) * p_max);
    td.rates.r2 = 0.5 * std::log2(1.0 + norm2(ch.h22) * p_max);
    td.sum = tdma_sum_rate(ch, p_max);
    out.push_back(std::move(td));
    return out;
}

HeuristicChoice simple_select(const Channel& ch, double p_max) {
    std::vector<HeuristicChoice> all = heuristic_rates(ch, p_max);
    std::size_t best = 0;
    for (std::size_t i = 1; i < all.size(); ++i)
        if (all[i].sum > all[best].sum) best = i;
    return all[best];
}

} // namespace misoic
