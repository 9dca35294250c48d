#include "misoic/pareto.hpp"

#include "misoic/errors.hpp"
#include "misoic/warn.hpp"

#include <algorithm>
#include <cmath>

namespace misoic {

namespace {

const CVec& direct_channel(const Channel& ch, int user) { return user == 1 ? ch.h11 : ch.h22; }
const CVec& cross_channel(const Channel& ch, int user) { return user == 1 ? ch.h21 : ch.h12; }

void check_user(int user) {
    if (user != 1 && user != 2) throw RangeError("user index must be 1 or 2");
}

std::vector<double> lambda_grid(int n_lambda) {
    if (n_lambda < 2) throw RangeError("n_lambda must be at least 2");
    std::vector<double> g(static_cast<std::size_t>(n_lambda));
    for (int k = 0; k < n_lambda; ++k) g[static_cast<std::size_t>(k)] = double(k) / double(n_lambda - 1);
    return g;
}

std::vector<double> power_grid(double p_max, int n_power) {
    if (n_power < 1) throw RangeError("n_power must be at least 1");
    if (p_max < 0.0) throw RangeError("p_max must be nonnegative");
    std::vector<double> g(static_cast<std::size_t>(n_power));
    if (n_power == 1) {
        g[0] = p_max;
        return g;
    }
    for (int k = 0; k < n_power; ++k)
        g[static_cast<std::size_t>(k)] = p_max * double(k) / double(n_power - 1);
    return g;
}

} // namespace

LambdaFamily make_family(const Channel& ch, int user, FamilyKind kind) {
    check_user(user);
    const CVec& des = direct_channel(ch, user);
    const CVec& cro = cross_channel(ch, user);
    // The family aligns with `al` and spans towards `other`.
    const CVec& al = (kind == FamilyKind::W) ? cro : des;
    const CVec& other = (kind == FamilyKind::W) ? des : cro;

    LambdaFamily fam;
    fam.kind = kind;
    fam.user = user;

    CVec residual = proj_orth(other, al);
    if (vnorm(residual) <= tol_par * vnorm(other)) {
        // Parallel channels: the two basis directions coincide and the family
        // is a single beamformer. Effectively a single-input link.
        warn("channel vectors of user " + std::to_string(user) +
             " are parallel; beamformer family collapses to one direction");
        fam.degenerate = true;
        fam.basis_a = unit(des);
        fam.basis_b = CVec(des.size(), cplx(0.0, 0.0));
        return fam;
    }

    CVec along = proj(other, al);
    if (vnorm(along) <= tol_deg * vnorm(other)) {
        // Orthogonal channels: the projection of `other` onto `al` vanishes,
        // so the aligned basis direction is al itself.
        fam.basis_a = unit(al);
    } else {
        fam.basis_a = unit(along);
    }
    fam.basis_b = unit(residual);
    return fam;
}

CVec w_from_lambda(const LambdaFamily& fam, double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0))
        throw RangeError("family coordinate " + std::to_string(lambda) + " outside [0,1]");
    if (fam.degenerate) return fam.basis_a;
    double sa = std::sqrt(lambda);
    double sb = std::sqrt(1.0 - lambda);
    CVec out(fam.basis_a.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = sa * fam.basis_a[i] + sb * fam.basis_b[i];
    return out;
}

double lambda_mrt(const Channel& ch, int user) {
    check_user(user);
    double c = std::cos(angle(direct_channel(ch, user), cross_channel(ch, user)));
    return c * c;
}

double GainProfile::desired(double lambda) const {
    if (degenerate) return des_a * des_a;
    double v = std::sqrt(lambda) * des_a + std::sqrt(1.0 - lambda) * des_b;
    return v * v;
}

double GainProfile::cross(double lambda) const {
    if (degenerate) return cross_a * cross_a;
    double v = std::sqrt(lambda) * cross_a + std::sqrt(1.0 - lambda) * cross_b;
    return v * v;
}

GainProfile gain_profile(const Channel& ch, const LambdaFamily& fam) {
    const CVec& des = direct_channel(ch, fam.user);
    const CVec& cro = cross_channel(ch, fam.user);
    GainProfile g;
    if (fam.degenerate) {
        g.degenerate = true;
        g.des_a = std::abs(inner(des, fam.basis_a));
        g.cross_a = std::abs(inner(cro, fam.basis_a));
        return g;
    }
    // In-span inner products are real up to the basis phase convention; the
    // magnitudes are the coherent combination coefficients.
    g.des_a = std::abs(inner(des, fam.basis_a));
    g.des_b = std::abs(inner(des, fam.basis_b));
    g.cross_a = std::abs(inner(cro, fam.basis_a));
    g.cross_b = std::abs(inner(cro, fam.basis_b));
    // The complement basis vector is orthogonal to the aligned channel.
    if (fam.kind == FamilyKind::W)
        g.cross_b = 0.0;
    else
        g.des_b = 0.0;
    return g;
}

namespace {

struct RegionGrids {
    LambdaFamily f1, f2;
    GainProfile g1, g2;
    std::vector<double> lam;
    std::vector<double> p1s, p2s;
};

RegionGrids make_region_grids(Structure st, const Channel& ch, double p_max, int n_lambda,
                              int n_power) {
    RegionGrids rg;
    FamilyKind kind = (st == Structure::DD) ? FamilyKind::V : FamilyKind::W;
    rg.f1 = make_family(ch, 1, kind);
    rg.f2 = make_family(ch, 2, kind);
    rg.g1 = gain_profile(ch, rg.f1);
    rg.g2 = gain_profile(ch, rg.f2);
    rg.lam = lambda_grid(n_lambda);
    switch (st) {
        case Structure::NN:
            rg.p1s = {p_max};
            rg.p2s = {p_max};
            break;
        case Structure::ND:
            rg.p1s = {p_max};
            rg.p2s = power_grid(p_max, n_power);
            break;
        case Structure::DN:
            rg.p1s = power_grid(p_max, n_power);
            rg.p2s = {p_max};
            break;
        case Structure::DD:
            rg.p1s = power_grid(p_max, n_power);
            rg.p2s = power_grid(p_max, n_power);
            break;
    }
    return rg;
}

} // namespace

void region_sweep_visit(Structure st, const Channel& ch, double p_max, int n_lambda, int n_power,
                        const std::function<void(const RatePoint&, double, double, double, double)>& visit) {
    RegionGrids rg = make_region_grids(st, ch, p_max, n_lambda, n_power);
    const std::size_t nl = rg.lam.size();
    // Per-lambda unit-power gains, hoisted out of the power loops.
    std::vector<double> a1(nl), b1(nl), c2(nl), d2(nl);
    for (std::size_t i = 0; i < nl; ++i) {
        a1[i] = rg.g1.desired(rg.lam[i]);
        b1[i] = rg.g1.cross(rg.lam[i]);
        c2[i] = rg.g2.desired(rg.lam[i]);
        d2[i] = rg.g2.cross(rg.lam[i]);
    }
    Gains g;
    for (std::size_t i1 = 0; i1 < nl; ++i1) {
        for (std::size_t i2 = 0; i2 < nl; ++i2) {
            for (double p1 : rg.p1s) {
                g.g11 = a1[i1] * p1;
                g.g21 = b1[i1] * p1;
                for (double p2 : rg.p2s) {
                    g.g22 = c2[i2] * p2;
                    g.g12 = d2[i2] * p2;
                    visit(rate_pair_from_gains(st, g), rg.lam[i1], rg.lam[i2], p1, p2);
                }
            }
        }
    }
}

std::vector<CandidateTuple> candidate_grid(Structure st, const Channel& ch, double p_max,
                                           int n_lambda, int n_power) {
    RegionGrids rg = make_region_grids(st, ch, p_max, n_lambda, n_power);
    std::vector<CandidateTuple> out;
    out.reserve(rg.lam.size() * rg.lam.size() * rg.p1s.size() * rg.p2s.size());
    for (double l1 : rg.lam) {
        CVec w1 = w_from_lambda(rg.f1, l1);
        for (double l2 : rg.lam) {
            CVec w2 = w_from_lambda(rg.f2, l2);
            for (double p1 : rg.p1s) {
                for (double p2 : rg.p2s) {
                    CandidateTuple t;
                    t.w1 = w1;
                    t.w2 = w2;
                    t.p1 = p1;
                    t.p2 = p2;
                    t.structure = st;
                    t.lambda1 = l1;
                    t.lambda2 = l2;
                    out.push_back(std::move(t));
                }
            }
        }
    }
    return out;
}

std::vector<RatePoint> region_sweep(Structure st, const Channel& ch, double p_max, int n_lambda,
                                    int n_power) {
    std::vector<RatePoint> out;
    std::size_t lam_n = static_cast<std::size_t>(n_lambda);
    std::size_t pw = (st == Structure::NN) ? 1
                     : (st == Structure::DD) ? static_cast<std::size_t>(n_power) * static_cast<std::size_t>(n_power)
                                             : static_cast<std::size_t>(n_power);
    out.reserve(lam_n * lam_n * pw);
    region_sweep_visit(st, ch, p_max, n_lambda, n_power,
                       [&](const RatePoint& rp, double, double, double, double) { out.push_back(rp); });
    return out;
}

std::vector<RatePoint> pareto_filter(std::vector<RatePoint> pts) {
    std::sort(pts.begin(), pts.end(), [](const RatePoint& x, const RatePoint& y) {
        if (x.r1 != y.r1) return x.r1 > y.r1;
        return x.r2 > y.r2;
    });
    std::vector<RatePoint> keep;
    double best_r2 = -1.0;
    double last_r1 = 0.0, last_r2 = 0.0;
    bool any = false;
    for (const RatePoint& p : pts) {
        if (!any || p.r2 > best_r2) {
            if (any && p.r1 == last_r1 && p.r2 == last_r2) continue; // exact duplicate
            keep.push_back(p);
            best_r2 = p.r2;
            last_r1 = p.r1;
            last_r2 = p.r2;
            any = true;
        }
    }
    std::reverse(keep.begin(), keep.end()); // r1 ascending
    return keep;
}

std::vector<RatePoint> region_frontier(Structure st, const Channel& ch, double p_max, int n_lambda,
                                       int n_power) {
    // front(A u B) == front(front(A) u front(B)), so filter in chunks to keep
    // memory bounded on the large DD grids.
    constexpr std::size_t chunk = 1u << 20;
    std::vector<RatePoint> buf;
    buf.reserve(chunk + 4096);
    std::vector<RatePoint> front;
    auto flush = [&]() {
        buf.insert(buf.end(), front.begin(), front.end());
        front = pareto_filter(std::move(buf));
        buf.clear();
    };
    region_sweep_visit(st, ch, p_max, n_lambda, n_power,
                       [&](const RatePoint& rp, double, double, double, double) {
                           buf.push_back(rp);
                           if (buf.size() >= chunk) flush();
                       });
    flush();
    return front;
}

std::vector<PowerPoint> power_region_boundary(const Channel& ch, int user, double p_max,
                                              int n_lambda, int n_power) {
    check_user(user);
    LambdaFamily fam = make_family(ch, user, FamilyKind::W);
    GainProfile gp = gain_profile(ch, fam);
    std::vector<double> lam = lambda_grid(n_lambda);
    std::vector<double> ps = power_grid(p_max, n_power);
    std::vector<PowerPoint> out;
    out.reserve(lam.size() * ps.size());
    for (double l : lam) {
        double des = gp.desired(l);
        double cro = gp.cross(l);
        for (double p : ps) out.push_back({l, p, des * p, cro * p});
    }
    return out;
}

} // namespace misoic
