// Command line front end. Every subcommand prints CSV (or channel JSON for
// `gen`) to --out or stdout, with "#" metadata lines carrying the version
// and the full invocation. Exit codes: 0 success, 1 numeric or I/O failure,
// 2 usage error.

#include "CLI11.hpp"

#include "misoic/channel.hpp"
#include "misoic/cloud.hpp"
#include "misoic/csv.hpp"
#include "misoic/heuristic.hpp"
#include "misoic/montecarlo.hpp"
#include "misoic/mrt.hpp"
#include "misoic/oracle.hpp"
#include "misoic/pareto.hpp"
#include "misoic/rates.hpp"
#include "misoic/sumrate.hpp"
#include "misoic/version.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace misoic;

std::string join_argv(int argc, char** argv) {
    std::ostringstream os;
    for (int i = 0; i < argc; ++i) {
        if (i) os << ' ';
        os << argv[i];
    }
    return os.str();
}

void with_output(const std::string& path, const std::function<void(std::ostream&)>& fn) {
    if (path.empty()) {
        fn(std::cout);
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    fn(f);
}

std::string bool_field(bool b) { return b ? "1" : "0"; }

struct Common {
    std::string cmd;
};

void write_meta(CsvWriter& w, const Common& c) {
    w.meta("misoic", kVersion);
    w.meta("cmd", c.cmd);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-user MISO interference channel toolkit"};
    app.require_subcommand(1);
    Common common;
    common.cmd = join_argv(argc, argv);

    // gen
    auto* gen = app.add_subcommand("gen", "draw a channel and write it as JSON");
    int gen_n = 3;
    std::uint64_t gen_seed = 1;
    double gen_theta = -1.0, gen_sir = 0.0;
    std::string gen_out;
    gen->add_option("--n", gen_n, "antennas per transmitter")->check(CLI::Range(2, 64));
    gen->add_option("--seed", gen_seed, "rng seed");
    auto* opt_theta = gen->add_option("--theta", gen_theta, "cross-channel angle in radians");
    auto* opt_sir = gen->add_option("--sir", gen_sir, "signal-to-interference power ratio");
    opt_theta->needs(opt_sir);
    opt_sir->needs(opt_theta);
    gen->add_option("--out", gen_out, "output path (default stdout)");
    gen->callback([&] {
        Channel ch = opt_theta->count() ? gen_symmetric(gen_n, gen_theta, gen_sir, gen_seed)
                                        : gen_iid(gen_n, gen_seed);
        with_output(gen_out, [&](std::ostream& os) { os << channel_to_json(ch) << "\n"; });
    });

    // region
    auto* region = app.add_subcommand("region", "rate-region frontier of one structure");
    std::string re_channel, re_structure = "ND", re_out;
    double re_snr = 0.0;
    int re_nl = default_n_lambda, re_np = default_n_power;
    region->add_option("--channel", re_channel, "channel JSON path")->required();
    region->add_option("--structure", re_structure, "NN, ND, DN or DD");
    region->add_option("--snr-db", re_snr, "transmit SNR in dB");
    region->add_option("--grid-lambda", re_nl, "lambda grid points")->check(CLI::Range(2, 100000));
    region->add_option("--grid-power", re_np, "power grid points")->check(CLI::Range(1, 100000));
    region->add_option("--out", re_out, "output path (default stdout)");
    region->callback([&] {
        Channel ch = load_channel(re_channel);
        Structure st = structure_from_name(re_structure);
        auto front = region_frontier(st, ch, snr_db_to_power(re_snr), re_nl, re_np);
        with_output(re_out, [&](std::ostream& os) {
            CsvWriter w(os);
            write_meta(w, common);
            w.meta("structure", structure_name(st));
            w.header({"r1", "r2"});
            for (const RatePoint& p : front) w.row({csv_num(p.r1), csv_num(p.r2)});
        });
    });

    // powerregion
    auto* powerregion =
        app.add_subcommand("powerregion", "achievable desired/interference power samples");
    std::string pr_channel, pr_out;
    int pr_user = 1, pr_nl = default_n_lambda, pr_np = default_n_power;
    double pr_snr = 0.0;
    powerregion->add_option("--channel", pr_channel, "channel JSON path")->required();
    powerregion->add_option("--user", pr_user, "transmitter index")->check(CLI::Range(1, 2));
    powerregion->add_option("--snr-db", pr_snr, "transmit SNR in dB");
    powerregion->add_option("--grid-lambda", pr_nl, "lambda grid points")
        ->check(CLI::Range(2, 100000));
    powerregion->add_option("--grid-power", pr_np, "power grid points")
        ->check(CLI::Range(1, 100000));
    powerregion->add_option("--out", pr_out, "output path (default stdout)");
    powerregion->callback([&] {
        Channel ch = load_channel(pr_channel);
        auto pts = power_region_boundary(ch, pr_user, snr_db_to_power(pr_snr), pr_nl, pr_np);
        with_output(pr_out, [&](std::ostream& os) {
            CsvWriter w(os);
            write_meta(w, common);
            w.header({"lambda", "p", "desired", "interference"});
            for (const PowerPoint& p : pts)
                w.row({csv_num(p.lambda), csv_num(p.p), csv_num(p.desired),
                       csv_num(p.interference)});
        });
    });

    // sumrate
    auto* sumrate = app.add_subcommand("sumrate", "candidate-search maxima per structure");
    std::string su_channel, su_out;
    double su_snr = 0.0;
    int su_nl = default_n_lambda;
    sumrate->add_option("--channel", su_channel, "channel JSON path")->required();
    sumrate->add_option("--snr-db", su_snr, "transmit SNR in dB");
    sumrate->add_option("--grid-lambda", su_nl, "lambda grid points")->check(CLI::Range(2, 100000));
    sumrate->add_option("--out", su_out, "output path (default stdout)");
    sumrate->callback([&] {
        Channel ch = load_channel(su_channel);
        SumRateResult res = max_sum_rate(ch, snr_db_to_power(su_snr), su_nl);
        with_output(su_out, [&](std::ostream& os) {
            CsvWriter w(os);
            write_meta(w, common);
            w.header({"structure", "sum_rate", "lambda1", "lambda2", "best"});
            for (int s = 0; s < 4; ++s) {
                const StructureBest& b = res.per_structure[static_cast<std::size_t>(s)];
                w.row({structure_name(static_cast<Structure>(s)), csv_num(b.rate),
                       csv_num(b.lambda1), csv_num(b.lambda2),
                       bool_field(static_cast<Structure>(s) == res.best_structure)});
            }
        });
    });

    // mrt
    auto* mrt = app.add_subcommand("mrt", "matched-filter optimality verdicts");
    std::string mr_channel, mr_out;
    double mr_snr = 0.0;
    mrt->add_option("--channel", mr_channel, "channel JSON path")->required();
    mrt->add_option("--snr-db", mr_snr, "transmit SNR in dB");
    mrt->add_option("--out", mr_out, "output path (default stdout)");
    mrt->callback([&] {
        Channel ch = load_channel(mr_channel);
        const double p = snr_db_to_power(mr_snr);
        auto nd = nd_mrt_check(ch, p);
        auto dd = dd_mrt_check(ch, p);
        with_output(mr_out, [&](std::ostream& os) {
            CsvWriter w(os);
            write_meta(w, common);
            w.header({"structure", "strategy", "holds", "boundary", "lhs", "mid", "rhs"});
            auto emit = [&](const MrtVerdict& v) {
                w.row({structure_name(v.structure), mrt_strategy_name(v.strategy),
                       bool_field(v.holds), bool_field(v.boundary), csv_num(v.lhs),
                       csv_num(v.mid), csv_num(v.rhs)});
            };
            for (const MrtVerdict& v : nd) emit(v);
            for (const MrtVerdict& v : dd) emit(v);
        });
    });

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exhaustive lattice maximum");
    std::string or_channel, or_structure = "ND", or_out;
    double or_snr = 0.0;
    int or_nl = default_n_lambda, or_nk = 64, or_np = default_n_power, or_threads = 1;
    bool or_sphere = false, or_full_phase = false;
    oracle->add_option("--channel", or_channel, "channel JSON path")->required();
    oracle->add_option("--structure", or_structure, "NN, ND, DN or DD");
    oracle->add_option("--snr-db", or_snr, "transmit SNR in dB");
    oracle->add_option("--grid-lambda", or_nl, "lambda grid points")->check(CLI::Range(2, 100000));
    oracle->add_option("--grid-phase", or_nk, "phase grid points")->check(CLI::Range(1, 100000));
    oracle->add_option("--grid-power", or_np, "power grid points")->check(CLI::Range(1, 100000));
    oracle->add_option("--threads", or_threads, "worker threads")->check(CLI::Range(1, 256));
    oracle->add_flag("--sphere", or_sphere, "enumerate the full unit sphere (N = 2 only)");
    oracle->add_flag("--full-phase", or_full_phase, "keep the whole phase grid");
    oracle->add_option("--out", or_out, "output path (default stdout)");
    oracle->callback([&] {
        Channel ch = load_channel(or_channel);
        Structure st = structure_from_name(or_structure);
        GridSpec spec;
        spec.n_lambda = or_nl;
        spec.n_phase = or_nk;
        spec.n_power = or_np;
        spec.scope = or_sphere ? GridSpec::Scope::FullSphere : GridSpec::Scope::Subspace;
        spec.phase_mode =
            or_full_phase ? GridSpec::PhaseMode::Full : GridSpec::PhaseMode::Reduced;
        OracleArg arg = oracle_max(ch, st, spec, snr_db_to_power(or_snr), or_threads);
        with_output(or_out, [&](std::ostream& os) {
            CsvWriter w(os);
            write_meta(w, common);
            w.header({"structure", "rate", "lambda1", "phase1", "p1", "lambda2", "phase2", "p2"});
            w.row({structure_name(st), csv_num(arg.rate), csv_num(arg.lambda1),
                   csv_num(arg.phase1), csv_num(arg.p1), csv_num(arg.lambda2),
                   csv_num(arg.phase2), csv_num(arg.p2)});
        });
    });

    // heuristic
    auto* heuristic = app.add_subcommand("heuristic", "fixed-shortlist baseline rates");
    std::string he_channel, he_out;
    double he_snr = 0.0;
    heuristic->add_option("--channel", he_channel, "channel JSON path")->required();
    heuristic->add_option("--snr-db", he_snr, "transmit SNR in dB");
    heuristic->add_option("--out", he_out, "output path (default stdout)");
    heuristic->callback([&] {
        Channel ch = load_channel(he_channel);
        const double p = snr_db_to_power(he_snr);
        auto all = heuristic_rates(ch, p);
        auto sel = simple_select(ch, p);
        with_output(he_out, [&](std::ostream& os) {
            CsvWriter w(os);
            write_meta(w, common);
            w.header({"name", "structure", "r1", "r2", "sum", "selected"});
            for (const HeuristicChoice& h : all)
                w.row({h.name, h.tdma ? "-" : structure_name(h.structure), csv_num(h.rates.r1),
                       csv_num(h.rates.r2), csv_num(h.sum), bool_field(h.name == sel.name)});
        });
    });

    // mc-freq
    auto* mcfreq = app.add_subcommand("mc-freq", "ND matched-filter class frequencies");
    int mf_n = 3, mf_trials = 500, mf_nl = default_n_lambda;
    std::uint64_t mf_seed = 1;
    std::vector<double> mf_snr{40.0};
    std::string mf_out;
    mcfreq->add_option("--n", mf_n, "antennas per transmitter")->check(CLI::Range(2, 64));
    mcfreq->add_option("--snr-db", mf_snr, "SNR points in dB");
    mcfreq->add_option("--trials", mf_trials, "channels per point")->check(CLI::Range(1, 1000000));
    mcfreq->add_option("--seed", mf_seed, "rng seed");
    mcfreq->add_option("--grid-lambda", mf_nl, "lambda grid points")->check(CLI::Range(2, 100000));
    mcfreq->add_option("--out", mf_out, "output path (default stdout)");
    mcfreq->callback([&] {
        auto pts = mrt_frequency_vs_snr(mf_n, mf_snr, mf_trials, mf_seed, mf_nl);
        with_output(mf_out, [&](std::ostream& os) {
            CsvWriter w(os);
            write_meta(w, common);
            w.meta("seed", std::to_string(mf_seed));
            w.header({"snr_db", "interference", "selfish", "balanced"});
            for (const FreqPoint& p : pts)
                w.row({csv_num(p.snr_db), csv_num(p.interference), csv_num(p.selfish),
                       csv_num(p.balanced)});
        });
    });

    // mc-loss
    auto* mcloss = app.add_subcommand("mc-loss", "mean matched-filter sum-rate loss");
    std::string ml_structure = "ND", ml_out;
    int ml_n = 3, ml_trials = 500, ml_nl = default_n_lambda;
    std::uint64_t ml_seed = 1;
    std::vector<double> ml_snr{0.0, 10.0, 20.0, 30.0, 40.0};
    mcloss->add_option("--structure", ml_structure, "NN, ND, DN or DD");
    mcloss->add_option("--n", ml_n, "antennas per transmitter")->check(CLI::Range(2, 64));
    mcloss->add_option("--snr-db", ml_snr, "SNR points in dB");
    mcloss->add_option("--trials", ml_trials, "channels per point")->check(CLI::Range(1, 1000000));
    mcloss->add_option("--seed", ml_seed, "rng seed");
    mcloss->add_option("--grid-lambda", ml_nl, "lambda grid points")->check(CLI::Range(2, 100000));
    mcloss->add_option("--out", ml_out, "output path (default stdout)");
    mcloss->callback([&] {
        Structure st = structure_from_name(ml_structure);
        auto pts = rate_loss_vs_snr(st, ml_n, ml_snr, ml_trials, ml_seed, ml_nl);
        with_output(ml_out, [&](std::ostream& os) {
            CsvWriter w(os);
            write_meta(w, common);
            w.meta("seed", std::to_string(ml_seed));
            w.meta("structure", structure_name(st));
            w.header({"snr_db", "mean_loss", "mean_gap"});
            for (const LossPoint& p : pts)
                w.row({csv_num(p.snr_db), csv_num(p.mean_loss), csv_num(p.mean_gap)});
        });
    });

    // sweep-sir / sweep-snr
    auto* sweepsir = app.add_subcommand("sweep-sir", "mean rates over interference strength");
    auto* sweepsnr = app.add_subcommand("sweep-snr", "mean rates over transmit power");
    int sw_n = 3, sw_trials = 50, sw_nl = default_n_lambda;
    std::uint64_t sw_seed = 1;
    double sw_theta = 0.25, sw_snr_fixed = 0.0, sw_sir_fixed = 1.0;
    std::vector<double> sw_sir{10.0, 5.0, 2.0, 1.0, 0.5, 0.2, 0.1};
    std::vector<double> sw_snr{-10.0, 0.0, 10.0, 20.0, 30.0};
    std::string sw_out, sw_out2;
    sweepsir->add_option("--n", sw_n, "antennas per transmitter")->check(CLI::Range(2, 64));
    sweepsir->add_option("--theta", sw_theta, "cross-channel angle in radians")->required();
    sweepsir->add_option("--sir", sw_sir, "SIR points, strongest interference last");
    sweepsir->add_option("--snr-db", sw_snr_fixed, "fixed transmit SNR in dB");
    sweepsir->add_option("--trials", sw_trials, "channels per point")->check(CLI::Range(1, 1000000));
    sweepsir->add_option("--seed", sw_seed, "rng seed");
    sweepsir->add_option("--grid-lambda", sw_nl, "lambda grid points")->check(CLI::Range(2, 100000));
    sweepsir->add_option("--out", sw_out, "output path (default stdout)");
    auto emit_sweep = [&](std::ostream& os, const std::vector<SweepPoint>& pts,
                          const char* xname, std::uint64_t seed) {
        CsvWriter w(os);
        write_meta(w, common);
        w.meta("seed", std::to_string(seed));
        w.header({xname, "nn", "nd", "dn", "dd", "tdma", "best"});
        for (const SweepPoint& p : pts)
            w.row({csv_num(p.x), csv_num(p.structure_rate[0]), csv_num(p.structure_rate[1]),
                   csv_num(p.structure_rate[2]), csv_num(p.structure_rate[3]), csv_num(p.tdma),
                   p.best});
    };
    sweepsir->callback([&] {
        auto pts = sweep_sir(sw_n, sw_theta, sw_sir, sw_snr_fixed, sw_trials, sw_seed, sw_nl);
        with_output(sw_out, [&](std::ostream& os) { emit_sweep(os, pts, "sir", sw_seed); });
    });
    sweepsnr->add_option("--n", sw_n, "antennas per transmitter")->check(CLI::Range(2, 64));
    sweepsnr->add_option("--theta", sw_theta, "cross-channel angle in radians")->required();
    sweepsnr->add_option("--sir", sw_sir_fixed, "fixed signal-to-interference ratio");
    sweepsnr->add_option("--snr-db", sw_snr, "SNR points in dB");
    sweepsnr->add_option("--trials", sw_trials, "channels per point")->check(CLI::Range(1, 1000000));
    sweepsnr->add_option("--seed", sw_seed, "rng seed");
    sweepsnr->add_option("--grid-lambda", sw_nl, "lambda grid points")->check(CLI::Range(2, 100000));
    sweepsnr->add_option("--out", sw_out2, "output path (default stdout)");
    sweepsnr->callback([&] {
        auto pts = sweep_snr(sw_n, sw_theta, sw_sir_fixed, sw_snr, sw_trials, sw_seed, sw_nl);
        with_output(sw_out2, [&](std::ostream& os) { emit_sweep(os, pts, "snr_db", sw_seed); });
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "misoic: error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
