#include "misoic/cloud.hpp"

#include "misoic/errors.hpp"

#include <cmath>

namespace misoic {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::vector<double> unit_lambda_grid(int n_lambda) {
    if (n_lambda < 2) throw RangeError("n_lambda must be at least 2");
    std::vector<double> g(static_cast<std::size_t>(n_lambda));
    for (int k = 0; k < n_lambda; ++k)
        g[static_cast<std::size_t>(k)] = double(k) / double(n_lambda - 1);
    return g;
}

std::vector<double> make_power_grid(double p_max, int n_power) {
    if (n_power < 1) throw RangeError("n_power must be at least 1");
    if (p_max < 0.0) throw RangeError("p_max must be nonnegative");
    if (n_power == 1) return {p_max};
    std::vector<double> g(static_cast<std::size_t>(n_power));
    for (int k = 0; k < n_power; ++k)
        g[static_cast<std::size_t>(k)] = p_max * double(k) / double(n_power - 1);
    return g;
}

int kept_phases(int n_phase, GridSpec::PhaseMode mode) {
    if (n_phase < 1) throw RangeError("n_phase must be at least 1");
    if (mode == GridSpec::PhaseMode::Reduced) return 1;
    return n_phase / 2 + 1; // cosine symmetry: k and n_phase - k coincide
}

} // namespace

GainCloud make_subspace_cloud(const Channel& ch, int user, FamilyKind kind,
                              const GridSpec& spec, double p_max) {
    LambdaFamily fam = make_family(ch, user, kind);
    GainProfile gp = gain_profile(ch, fam);

    GainCloud cl;
    cl.n_lambda = spec.n_lambda;
    cl.n_phase = spec.n_phase;
    cl.n_power = spec.n_power;
    cl.lam_vals = unit_lambda_grid(spec.n_lambda);
    cl.pow_vals = make_power_grid(p_max, spec.n_power);
    cl.phase_step = kTwoPi / double(spec.n_phase);

    const int nk = (fam.degenerate || gp.degenerate) ? 1 : kept_phases(spec.n_phase, spec.phase_mode);
    const std::size_t total = cl.lam_vals.size() * static_cast<std::size_t>(nk) * cl.pow_vals.size();
    cl.des.reserve(total);
    cl.cross.reserve(total);
    cl.il.reserve(total);
    cl.ik.reserve(total);
    cl.ip.reserve(total);

    // In the W basis the desired channel projects real and positive on both
    // basis vectors and the cross channel only on basis_a; in the V basis the
    // roles swap. The phase therefore modulates exactly one of the two gains.
    const bool phase_on_des = (kind == FamilyKind::W);
    const double ga = phase_on_des ? gp.des_a : gp.cross_a;
    const double gb = phase_on_des ? gp.des_b : gp.cross_b;

    for (int l = 0; l < spec.n_lambda; ++l) {
        const double lam = cl.lam_vals[static_cast<std::size_t>(l)];
        const double fixed = phase_on_des ? gp.cross(lam) : gp.desired(lam);
        const double coh = 2.0 * std::sqrt(lam * (1.0 - lam)) * ga * gb;
        const double base = lam * ga * ga + (1.0 - lam) * gb * gb;
        for (int k = 0; k < nk; ++k) {
            double mod = gp.degenerate ? gp.desired(lam) : base + coh * std::cos(cl.phase_step * k);
            if (gp.degenerate && !phase_on_des) mod = gp.cross(lam);
            if (mod < 0.0) mod = 0.0;
            for (int p = 0; p < spec.n_power; ++p) {
                const double pw = cl.pow_vals[static_cast<std::size_t>(p)];
                cl.des.push_back((phase_on_des ? mod : fixed) * pw);
                cl.cross.push_back((phase_on_des ? fixed : mod) * pw);
                cl.il.push_back(l);
                cl.ik.push_back(k);
                cl.ip.push_back(p);
            }
        }
    }
    return cl;
}

GainCloud make_sphere_cloud(const Channel& ch, int user, int n_alpha, int n_beta,
                            int n_power, double p_max) {
    if (ch.n != 2)
        throw UnsupportedDimension("full-sphere enumeration supports N = 2 only, got N = " +
                                   std::to_string(ch.n));
    if (n_alpha < 2) throw RangeError("n_alpha must be at least 2");
    if (n_beta < 1) throw RangeError("n_beta must be at least 1");
    const CVec& hd = (user == 1) ? ch.h11 : ch.h22;
    const CVec& hc = (user == 1) ? ch.h21 : ch.h12;

    GainCloud cl;
    cl.n_lambda = n_alpha;
    cl.n_phase = n_beta;
    cl.n_power = n_power;
    cl.lam_vals.resize(static_cast<std::size_t>(n_alpha));
    for (int i = 0; i < n_alpha; ++i)
        cl.lam_vals[static_cast<std::size_t>(i)] =
            (kTwoPi / 4.0) * double(i) / double(n_alpha - 1);
    cl.pow_vals = make_power_grid(p_max, n_power);
    cl.phase_step = kTwoPi / double(n_beta);

    const std::size_t total =
        static_cast<std::size_t>(n_alpha) * static_cast<std::size_t>(n_beta) * cl.pow_vals.size();
    cl.des.reserve(total);
    cl.cross.reserve(total);
    cl.il.reserve(total);
    cl.ik.reserve(total);
    cl.ip.reserve(total);

    // |h^H w|^2 = cos^2 |h0|^2 + sin^2 |h1|^2 + 2 cos sin |m| cos(arg(m) - b)
    // with m = conj(h0) h1.
    const double d0 = std::norm(hd[0]), d1 = std::norm(hd[1]);
    const double c0 = std::norm(hc[0]), c1 = std::norm(hc[1]);
    const cplx md = std::conj(hd[0]) * hd[1];
    const cplx mc = std::conj(hc[0]) * hc[1];

    for (int i = 0; i < n_alpha; ++i) {
        const double ca = std::cos(cl.lam_vals[static_cast<std::size_t>(i)]);
        const double sa = std::sin(cl.lam_vals[static_cast<std::size_t>(i)]);
        const double dbase = ca * ca * d0 + sa * sa * d1;
        const double cbase = ca * ca * c0 + sa * sa * c1;
        const double dosc = 2.0 * ca * sa * std::abs(md);
        const double cosc = 2.0 * ca * sa * std::abs(mc);
        const double dph = std::arg(md), cph = std::arg(mc);
        for (int k = 0; k < n_beta; ++k) {
            const double beta = cl.phase_step * k;
            double dv = dbase + dosc * std::cos(dph - beta);
            double cv = cbase + cosc * std::cos(cph - beta);
            if (dv < 0.0) dv = 0.0;
            if (cv < 0.0) cv = 0.0;
            for (int p = 0; p < n_power; ++p) {
                const double pw = cl.pow_vals[static_cast<std::size_t>(p)];
                cl.des.push_back(dv * pw);
                cl.cross.push_back(cv * pw);
                cl.il.push_back(i);
                cl.ik.push_back(k);
                cl.ip.push_back(p);
            }
        }
    }
    return cl;
}

CVec subspace_beamformer(const LambdaFamily& fam, double lambda, double phase) {
    if (!(lambda >= 0.0 && lambda <= 1.0))
        throw RangeError("family coordinate " + std::to_string(lambda) + " outside [0,1]");
    if (fam.degenerate) return fam.basis_a;
    const double sa = std::sqrt(lambda);
    const double sb = std::sqrt(1.0 - lambda);
    const cplx rot = std::polar(sb, phase);
    CVec out(fam.basis_a.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = sa * fam.basis_a[i] + rot * fam.basis_b[i];
    return out;
}

std::vector<CVec> subspace_grid(const Channel& ch, int user, const GridSpec& spec,
                                FamilyKind kind) {
    LambdaFamily fam = make_family(ch, user, kind);
    std::vector<double> lam = unit_lambda_grid(spec.n_lambda);
    if (spec.n_phase < 1) throw RangeError("n_phase must be at least 1");
    std::vector<CVec> out;
    out.reserve(lam.size() * static_cast<std::size_t>(spec.n_phase));
    for (double l : lam)
        for (int k = 0; k < spec.n_phase; ++k)
            out.push_back(subspace_beamformer(fam, l, kTwoPi * k / double(spec.n_phase)));
    return out;
}

std::vector<CVec> full_sphere_grid(int n, int n_alpha, int n_beta) {
    if (n != 2)
        throw UnsupportedDimension("full-sphere enumeration supports N = 2 only, got N = " +
                                   std::to_string(n));
    if (n_alpha < 2) throw RangeError("n_alpha must be at least 2");
    if (n_beta < 1) throw RangeError("n_beta must be at least 1");
    std::vector<CVec> out;
    out.reserve(static_cast<std::size_t>(n_alpha) * static_cast<std::size_t>(n_beta));
    for (int i = 0; i < n_alpha; ++i) {
        const double a = (kTwoPi / 4.0) * double(i) / double(n_alpha - 1);
        for (int k = 0; k < n_beta; ++k) {
            const double b = kTwoPi * k / double(n_beta);
            out.push_back({cplx(std::cos(a), 0.0), std::polar(std::sin(a), b)});
        }
    }
    return out;
}

std::vector<CVec> full_sphere_grid(int n, int resolution) {
    return full_sphere_grid(n, resolution, 2 * resolution);
}

} // namespace misoic
