#include "misoic/oracle.hpp"

#include "misoic/errors.hpp"
#include "misoic/kernels.hpp"
#include "misoic/pareto.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>
#include <utility>

namespace misoic {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

FamilyKind kind_for(Structure st) {
    return st == Structure::DD ? FamilyKind::V : FamilyKind::W;
}

void power_counts(Structure st, int n_power, int& np1, int& np2) {
    np1 = (st == Structure::DN || st == Structure::DD) ? n_power : 1;
    np2 = (st == Structure::ND || st == Structure::DD) ? n_power : 1;
}

struct CloudPair {
    GainCloud s1, s2;
};

CloudPair build_clouds(const Channel& ch, Structure st, const GridSpec& spec, double p_max,
                       GridSpec::PhaseMode m1, GridSpec::PhaseMode m2) {
    int np1 = 0, np2 = 0;
    power_counts(st, spec.n_power, np1, np2);
    CloudPair cp;
    if (spec.scope == GridSpec::Scope::FullSphere) {
        cp.s1 = make_sphere_cloud(ch, 1, spec.n_lambda, spec.n_phase, np1, p_max);
        cp.s2 = make_sphere_cloud(ch, 2, spec.n_lambda, spec.n_phase, np2, p_max);
        return cp;
    }
    GridSpec sp1 = spec, sp2 = spec;
    sp1.n_power = np1;
    sp1.phase_mode = m1;
    sp2.n_power = np2;
    sp2.phase_mode = m2;
    const FamilyKind kind = kind_for(st);
    cp.s1 = make_subspace_cloud(ch, 1, kind, sp1, p_max);
    cp.s2 = make_subspace_cloud(ch, 2, kind, sp2, p_max);
    return cp;
}

// Kernel structure: DN runs the ND kernel with the sides swapped.
PairBest run_kernel(Structure st, const double* a, const double* b, std::size_t n1,
                    const double* c, const double* d, std::size_t n2) {
    switch (st) {
        case Structure::NN: return nn_pair_max(a, b, n1, c, d, n2);
        case Structure::ND: return nd_pair_max(a, b, n1, c, d, n2);
        case Structure::DD: return dd_pair_max(a, b, n1, c, d, n2);
        case Structure::DN: {
            PairBest q = nd_pair_max(c, d, n2, a, b, n1);
            return {q.value, q.j, q.i};
        }
    }
    throw RangeError("unknown structure");
}

int clamp_threads(int threads, std::size_t rows) {
    if (threads < 1) throw RangeError("threads must be at least 1");
    return static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(threads), rows));
}

// Threaded pair max over side-1 row chunks. The merge prefers the smaller
// (i, j) on exact value ties, matching the single-thread scan order, so the
// result does not depend on the chunking.
PairBest pair_max_threaded(Structure st, const GainCloud& s1, const GainCloud& s2, int threads) {
    const std::size_t n1 = s1.size(), n2 = s2.size();
    // The DN kernel swap makes side 2 the chunked axis; chunk whichever side
    // the kernel iterates over rows.
    const bool swap = (st == Structure::DN);
    const std::size_t rows = swap ? n2 : n1;
    const int t = clamp_threads(threads, rows);
    if (t <= 1) return run_kernel(st, s1.des.data(), s1.cross.data(), n1,
                                  s2.des.data(), s2.cross.data(), n2);

    std::vector<PairBest> part(static_cast<std::size_t>(t));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(t));
    for (int k = 0; k < t; ++k) {
        const std::size_t lo = rows * static_cast<std::size_t>(k) / static_cast<std::size_t>(t);
        const std::size_t hi = rows * static_cast<std::size_t>(k + 1) / static_cast<std::size_t>(t);
        pool.emplace_back([&, k, lo, hi] {
            PairBest r;
            if (swap) {
                PairBest q = nd_pair_max(s2.des.data() + lo, s2.cross.data() + lo, hi - lo,
                                         s1.des.data(), s1.cross.data(), n1);
                r = {q.value, q.j, q.i + lo};
            } else {
                r = run_kernel(st, s1.des.data() + lo, s1.cross.data() + lo, hi - lo,
                               s2.des.data(), s2.cross.data(), n2);
                r.i += lo;
            }
            part[static_cast<std::size_t>(k)] = r;
        });
    }
    for (std::thread& th : pool) th.join();
    // Tie rule mirrors the kernel's scan order: rows are side 1, except for
    // the swapped DN case where side 2 is the row axis.
    auto row_col = [swap](const PairBest& p) {
        return swap ? std::pair<std::size_t, std::size_t>{p.j, p.i}
                    : std::pair<std::size_t, std::size_t>{p.i, p.j};
    };
    PairBest best = part[0];
    for (std::size_t k = 1; k < part.size(); ++k) {
        const PairBest& q = part[k];
        if (q.value > best.value || (q.value == best.value && row_col(q) < row_col(best)))
            best = q;
    }
    return best;
}

} // namespace

OracleArg oracle_max(const Channel& ch, Structure st, const GridSpec& spec, double p_max,
                     int threads) {
    CloudPair cp = build_clouds(ch, st, spec, p_max, spec.phase_mode, spec.phase_mode);
    PairBest pb = pair_max_threaded(st, cp.s1, cp.s2, threads);

    OracleArg arg;
    arg.structure = st;
    const GainCloud& s1 = cp.s1;
    const GainCloud& s2 = cp.s2;
    arg.lambda1 = s1.lam_vals[static_cast<std::size_t>(s1.il[pb.i])];
    arg.phase1 = s1.phase_step * s1.ik[pb.i];
    arg.p1 = s1.pow_vals[static_cast<std::size_t>(s1.ip[pb.i])];
    arg.lambda2 = s2.lam_vals[static_cast<std::size_t>(s2.il[pb.j])];
    arg.phase2 = s2.phase_step * s2.ik[pb.j];
    arg.p2 = s2.pow_vals[static_cast<std::size_t>(s2.ip[pb.j])];

    if (spec.scope == GridSpec::Scope::FullSphere) {
        arg.w1 = {cplx(std::cos(arg.lambda1), 0.0), std::polar(std::sin(arg.lambda1), arg.phase1)};
        arg.w2 = {cplx(std::cos(arg.lambda2), 0.0), std::polar(std::sin(arg.lambda2), arg.phase2)};
    } else {
        const FamilyKind kind = kind_for(st);
        arg.w1 = subspace_beamformer(make_family(ch, 1, kind), arg.lambda1, arg.phase1);
        arg.w2 = subspace_beamformer(make_family(ch, 2, kind), arg.lambda2, arg.phase2);
    }
    TxStrategy s{arg.w1, arg.w2, arg.p1, arg.p2};
    const RatePoint rp = rate_pair(st, ch, s);
    arg.rate = rp.r1 + rp.r2;
    return arg;
}

namespace {

// Linear-domain rate pair of one lattice pair.
struct LinPair {
    double r1 = 0.0, r2 = 0.0;
};

template <typename F>
void envelope_scan(const GainCloud& s1, const GainCloud& s2, const std::vector<double>& lin_thr,
                   std::vector<double>& buckets, std::size_t lo, std::size_t hi, F&& lin_pair) {
    for (std::size_t i = lo; i < hi; ++i) {
        const double ai = s1.des[i], bi = s1.cross[i];
        for (std::size_t j = 0; j < s2.size(); ++j) {
            const LinPair lp = lin_pair(ai, bi, s2.des[j], s2.cross[j]);
            // Last threshold not exceeding r1.
            auto it = std::upper_bound(lin_thr.begin(), lin_thr.end(), lp.r1);
            if (it == lin_thr.begin()) continue;
            const std::size_t k = static_cast<std::size_t>(it - lin_thr.begin()) - 1;
            if (lp.r2 > buckets[k]) buckets[k] = lp.r2;
        }
    }
}

LinPair lin_pair_for(Structure st, double a, double b, double c, double d) {
    const double x = 1.0 + a, bb = 1.0 + b, y = 1.0 + c, e = 1.0 + d;
    switch (st) {
        case Structure::NN: return {(x + d) / e, (bb + c) / bb};
        case Structure::ND: return {std::min((x + d) / e, (y + b) / y), y};
        case Structure::DN: return {x, std::min((bb + c) / bb, (x + d) / x)};
        case Structure::DD: return {std::min(x, (y + b) / y), std::min(y, (x + d) / x)};
    }
    throw RangeError("unknown structure");
}

} // namespace

std::vector<double> oracle_max_r2(const Channel& ch, Structure st, const GridSpec& spec,
                                  double p_max, const std::vector<double>& thresholds,
                                  int threads) {
    if (thresholds.empty()) return {};
    GridSpec::PhaseMode m1 = GridSpec::PhaseMode::Reduced;
    GridSpec::PhaseMode m2 = GridSpec::PhaseMode::Reduced;
    if (st == Structure::ND) m2 = GridSpec::PhaseMode::Full;
    if (st == Structure::DN) m1 = GridSpec::PhaseMode::Full;
    CloudPair cp = build_clouds(ch, st, spec, p_max, m1, m2);

    // Sort thresholds ascending, remembering where each came from.
    std::vector<std::size_t> order(thresholds.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t l, std::size_t r) { return thresholds[l] < thresholds[r]; });
    std::vector<double> lin_thr(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) lin_thr[k] = std::exp2(thresholds[order[k]]);

    const std::size_t rows = cp.s1.size();
    const int t = clamp_threads(threads, rows);
    std::vector<std::vector<double>> parts(static_cast<std::size_t>(t),
                                           std::vector<double>(lin_thr.size(), kNegInf));
    auto scan = [&](std::size_t lo, std::size_t hi, std::vector<double>& buckets) {
        envelope_scan(cp.s1, cp.s2, lin_thr, buckets, lo, hi,
                      [st](double a, double b, double c, double d) {
                          return lin_pair_for(st, a, b, c, d);
                      });
    };
    if (t <= 1) {
        scan(0, rows, parts[0]);
    } else {
        std::vector<std::thread> pool;
        for (int k = 0; k < t; ++k) {
            const std::size_t lo = rows * static_cast<std::size_t>(k) / static_cast<std::size_t>(t);
            const std::size_t hi =
                rows * static_cast<std::size_t>(k + 1) / static_cast<std::size_t>(t);
            pool.emplace_back([&, k, lo, hi] { scan(lo, hi, parts[static_cast<std::size_t>(k)]); });
        }
        for (std::thread& th : pool) th.join();
    }
    std::vector<double>& buckets = parts[0];
    for (std::size_t k = 1; k < parts.size(); ++k)
        for (std::size_t m = 0; m < buckets.size(); ++m)
            buckets[m] = std::max(buckets[m], parts[k][m]);

    // A pair beating threshold k beats every smaller one too.
    for (std::size_t k = buckets.size(); k-- > 1;)
        buckets[k - 1] = std::max(buckets[k - 1], buckets[k]);

    std::vector<double> out(thresholds.size(), kNegInf);
    for (std::size_t k = 0; k < order.size(); ++k)
        out[order[k]] = buckets[k] > 0.0 ? std::log2(buckets[k]) : kNegInf;
    return out;
}

std::vector<RatePoint> oracle_pareto(const Channel& ch, Structure st, const GridSpec& spec,
                                     double p_max, int n_thresholds, int threads) {
    if (n_thresholds < 2) throw RangeError("n_thresholds must be at least 2");
    const double r1_hi = std::log2(1.0 + norm2(ch.h11) * p_max);
    std::vector<double> thr(static_cast<std::size_t>(n_thresholds));
    for (int k = 0; k < n_thresholds; ++k)
        thr[static_cast<std::size_t>(k)] = r1_hi * double(k) / double(n_thresholds - 1);
    std::vector<double> env = oracle_max_r2(ch, st, spec, p_max, thr, threads);
    std::vector<RatePoint> pts;
    pts.reserve(thr.size());
    for (std::size_t k = 0; k < thr.size(); ++k) {
        if (env[k] == kNegInf) continue;
        RatePoint p;
        p.r1 = thr[k];
        p.r2 = env[k];
        p.structure = st;
        pts.push_back(p);
    }
    return pareto_filter(std::move(pts));
}

} // namespace misoic
