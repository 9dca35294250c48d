#include "misoic/montecarlo.hpp"

#include "misoic/errors.hpp"
#include "misoic/linalg.hpp"
#include "misoic/sumrate.hpp"

#include <algorithm>
#include <cmath>

namespace misoic {

namespace {

void check_trials(int trials) {
    if (trials < 1) throw RangeError("trials must be at least 1");
}

std::uint64_t trial_seed(std::uint64_t seed, int trial) {
    return seed ^ static_cast<std::uint64_t>(trial);
}

} // namespace

double snr_db_to_power(double snr_db) { return std::pow(10.0, snr_db / 10.0); }

std::vector<FreqPoint> mrt_frequency_vs_snr(int n, const std::vector<double>& snr_db, int trials,
                                            std::uint64_t seed, int /*n_lambda*/) {
    check_trials(trials);
    std::vector<FreqPoint> out;
    out.reserve(snr_db.size());
    for (double snr : snr_db) {
        const double p = snr_db_to_power(snr);
        int n_int = 0, n_self = 0, n_bal = 0;
        for (int t = 0; t < trials; ++t) {
            const Channel ch = gen_iid(n, trial_seed(seed, t));
            const double n1sq = norm2(ch.h11);
            const double n2sq = norm2(ch.h21);
            const double cos2t1 = lambda_mrt(ch, 1);
            const double cos2t2 = lambda_mrt(ch, 2);
            const double c1 = p / (norm2(ch.h12) * cos2t2 * p + 1.0);
            const double c2 = p / (norm2(ch.h22) * p + 1.0);
            // Bare selfish chain: balance coordinate strictly below the
            // matched filter, matched filter still decodable at receiver 2.
            bool selfish = false;
            try {
                const double lam1b = lambda_b_nd(ch, unit(ch.h22), p);
                selfish = lam1b < cos2t1 && cos2t1 * n2sq <= (c1 / c2) * n1sq;
            } catch (const DegenerateBalance&) {
            }
            if (selfish)
                ++n_self;
            else if (n2sq <= (c1 / c2) * n1sq * cos2t1)
                ++n_int;
            else
                ++n_bal;
        }
        FreqPoint fp;
        fp.snr_db = snr;
        fp.interference = double(n_int) / double(trials);
        fp.selfish = double(n_self) / double(trials);
        fp.balanced = double(n_bal) / double(trials);
        out.push_back(fp);
    }
    return out;
}

std::vector<LossPoint> rate_loss_vs_snr(Structure st, int n, const std::vector<double>& snr_db,
                                        int trials, std::uint64_t seed, int n_lambda) {
    check_trials(trials);
    std::vector<LossPoint> out;
    out.reserve(snr_db.size());
    for (double snr : snr_db) {
        const double p = snr_db_to_power(snr);
        double acc = 0.0, gap = 0.0;
        for (int t = 0; t < trials; ++t) {
            const Channel ch = gen_iid(n, trial_seed(seed, t));
            const double best = structure_search(ch, st, p, n_lambda).rate;
            const CVec m11 = unit(ch.h11), m21 = unit(ch.h21);
            const CVec m22 = unit(ch.h22), m12 = unit(ch.h12);
            auto sum_at = [&](const CVec& w1, const CVec& w2) {
                TxStrategy s{w1, w2, p, p};
                return sum_rate(st, ch, s);
            };
            double mrt = 0.0;
            switch (st) {
                case Structure::NN: mrt = sum_at(m11, m22); break;
                case Structure::ND: mrt = std::max(sum_at(m21, m22), sum_at(m11, m22)); break;
                case Structure::DN: mrt = std::max(sum_at(m11, m12), sum_at(m11, m22)); break;
                case Structure::DD: mrt = std::max(sum_at(m11, m22), sum_at(m21, m12)); break;
            }
            if (best > 0.0) acc += std::max(0.0, (best - mrt) / best);
            gap += std::max(0.0, best - mrt);
        }
        LossPoint lp;
        lp.snr_db = snr;
        lp.mean_loss = acc / double(trials);
        lp.mean_gap = gap / double(trials);
        out.push_back(lp);
    }
    return out;
}

namespace {

SweepPoint sweep_point(int n, double theta, double sir, double p, int trials, std::uint64_t seed,
                       int n_lambda, double x) {
    SweepPoint sp;
    sp.x = x;
    for (int t = 0; t < trials; ++t) {
        const Channel ch = gen_symmetric(n, theta, sir, trial_seed(seed, t));
        for (int s = 0; s < 4; ++s)
            sp.structure_rate[static_cast<std::size_t>(s)] +=
                structure_search(ch, static_cast<Structure>(s), p, n_lambda).rate;
        sp.tdma += tdma_sum_rate(ch, p);
    }
    for (double& r : sp.structure_rate) r /= double(trials);
    sp.tdma /= double(trials);

    int best = 0;
    for (int s = 1; s < 4; ++s)
        if (sp.structure_rate[static_cast<std::size_t>(s)] >
            sp.structure_rate[static_cast<std::size_t>(best)])
            best = s;
    if (sp.tdma > sp.structure_rate[static_cast<std::size_t>(best)])
        sp.best = "TDMA";
    else
        sp.best = structure_name(static_cast<Structure>(best));
    return sp;
}

} // namespace

std::vector<SweepPoint> sweep_sir(int n, double theta, const std::vector<double>& sir,
                                  double snr_db, int trials, std::uint64_t seed, int n_lambda) {
    check_trials(trials);
    const double p = snr_db_to_power(snr_db);
    std::vector<SweepPoint> out;
    out.reserve(sir.size());
    for (double s : sir) out.push_back(sweep_point(n, theta, s, p, trials, seed, n_lambda, s));
    return out;
}

std::vector<SweepPoint> sweep_snr(int n, double theta, double sir,
                                  const std::vector<double>& snr_db, int trials,
                                  std::uint64_t seed, int n_lambda) {
    check_trials(trials);
    std::vector<SweepPoint> out;
    out.reserve(snr_db.size());
    for (double snr : snr_db)
        out.push_back(
            sweep_point(n, theta, sir, snr_db_to_power(snr), trials, seed, n_lambda, snr));
    return out;
}

} // namespace misoic
