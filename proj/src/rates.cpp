#include "misoic/rates.hpp"

#include "misoic/errors.hpp"

#include <cmath>

namespace misoic {

namespace {

double log2p(double x) { return std::log2(x); }

void check_user(int user) {
    if (user != 1 && user != 2) throw RangeError("user index must be 1 or 2");
}

} // namespace

const char* structure_name(Structure s) {
    switch (s) {
        case Structure::NN: return "NN";
        case Structure::ND: return "ND";
        case Structure::DN: return "DN";
        case Structure::DD: return "DD";
    }
    return "??";
}

Structure structure_from_name(const std::string& name) {
    if (name == "NN" || name == "nn") return Structure::NN;
    if (name == "ND" || name == "nd") return Structure::ND;
    if (name == "DN" || name == "dn") return Structure::DN;
    if (name == "DD" || name == "dd") return Structure::DD;
    throw RangeError("unknown structure \"" + name + "\" (expected NN, ND, DN or DD)");
}

Gains gains(const Channel& ch, const TxStrategy& s) {
    Gains g;
    g.g11 = std::norm(inner(ch.h11, s.w1)) * s.p1;
    g.g21 = std::norm(inner(ch.h21, s.w1)) * s.p1;
    g.g22 = std::norm(inner(ch.h22, s.w2)) * s.p2;
    g.g12 = std::norm(inner(ch.h12, s.w2)) * s.p2;
    return g;
}

double rate_C(const Channel& ch, const TxStrategy& s, int user) {
    check_user(user);
    Gains g = gains(ch, s);
    return user == 1 ? log2p(1.0 + g.g11) : log2p(1.0 + g.g22);
}

double rate_D(const Channel& ch, const TxStrategy& s, int user) {
    check_user(user);
    Gains g = gains(ch, s);
    return user == 1 ? log2p(1.0 + g.g11 / (g.g12 + 1.0))
                     : log2p(1.0 + g.g22 / (g.g21 + 1.0));
}

double rate_T(const Channel& ch, const TxStrategy& s, int user) {
    check_user(user);
    Gains g = gains(ch, s);
    // Decoding user i at the other receiver sees that receiver's own desired
    // signal as noise.
    return user == 1 ? log2p(1.0 + g.g21 / (g.g22 + 1.0))
                     : log2p(1.0 + g.g12 / (g.g11 + 1.0));
}

RatePoint rate_pair_from_gains(Structure st, const Gains& g) {
    double c1 = log2p(1.0 + g.g11);
    double c2 = log2p(1.0 + g.g22);
    double d1 = log2p(1.0 + g.g11 / (g.g12 + 1.0));
    double d2 = log2p(1.0 + g.g22 / (g.g21 + 1.0));
    double t1 = log2p(1.0 + g.g21 / (g.g22 + 1.0));
    double t2 = log2p(1.0 + g.g12 / (g.g11 + 1.0));
    RatePoint rp;
    rp.structure = st;
    switch (st) {
        case Structure::NN:
            rp.r1 = d1;
            rp.r2 = d2;
            break;
        case Structure::ND:
            rp.r1 = std::min(d1, t1);
            rp.r2 = c2;
            break;
        case Structure::DN:
            rp.r1 = c1;
            rp.r2 = std::min(d2, t2);
            break;
        case Structure::DD:
            rp.r1 = std::min(c1, t1);
            rp.r2 = std::min(c2, t2);
            break;
    }
    return rp;
}

double sum_rate_from_gains(Structure st, const Gains& g) {
    RatePoint rp = rate_pair_from_gains(st, g);
    return rp.r1 + rp.r2;
}

RatePoint rate_pair(Structure st, const Channel& ch, const TxStrategy& s) {
    return rate_pair_from_gains(st, gains(ch, s));
}

double sum_rate(Structure st, const Channel& ch, const TxStrategy& s) {
    return sum_rate_from_gains(st, gains(ch, s));
}

std::array<double, 4> zdd_terms(const Channel& ch, const TxStrategy& s) {
    Gains g = gains(ch, s);
    double z1 = (1.0 + g.g11) * (1.0 + g.g22);
    double z2 = 1.0 + g.g11 + g.g12;
    double z3 = 1.0 + g.g21 + g.g22;
    double z4 = z2 * z3 / z1;
    return {z1, z2, z3, z4};
}

double tdma_sum_rate(const Channel& ch, double p_max) {
    return 0.5 * log2p(1.0 + norm2(ch.h11) * p_max) + 0.5 * log2p(1.0 + norm2(ch.h22) * p_max);
}

} // namespace misoic
