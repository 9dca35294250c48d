#include "misoic/channel.hpp"
#include "misoic/cloud.hpp"
#include "misoic/errors.hpp"
#include "misoic/kernels.hpp"
#include "misoic/oracle.hpp"
#include "misoic/rates.hpp"
#include "misoic/rng.hpp"

#include <doctest.h>

#include <cmath>
#include <cstddef>
#include <vector>

using namespace misoic;

namespace {

struct ModeRestore {
    ~ModeRestore() { set_kernel_mode(KernelMode::Auto); }
};

std::vector<double> random_gains(std::size_t n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<double> out(n);
    for (double& x : out) x = 20.0 * rng.uniform01();
    return out;
}

} // namespace

TEST_CASE("pair values are the exponentiated sum rates") {
    SplitMix64 rng(77);
    for (int i = 0; i < 200; ++i) {
        Gains g;
        g.g11 = 30.0 * rng.uniform01();
        g.g21 = 30.0 * rng.uniform01();
        g.g22 = 30.0 * rng.uniform01();
        g.g12 = 30.0 * rng.uniform01();
        const double nn = nn_pair_value(g.g11, g.g21, g.g22, g.g12);
        const double nd = nd_pair_value(g.g11, g.g21, g.g22, g.g12);
        const double dd = dd_pair_value(g.g11, g.g21, g.g22, g.g12);
        CHECK(nn == doctest::Approx(std::exp2(sum_rate_from_gains(Structure::NN, g))).epsilon(1e-12));
        CHECK(nd == doctest::Approx(std::exp2(sum_rate_from_gains(Structure::ND, g))).epsilon(1e-12));
        CHECK(dd == doctest::Approx(std::exp2(sum_rate_from_gains(Structure::DD, g))).epsilon(1e-12));
    }
}

TEST_CASE("vector and scalar kernels agree exactly") {
    if (!kernel_avx2_available()) return;
    ModeRestore restore;
    set_kernel_mode(KernelMode::Avx2);

    int cases = 0;
    for (std::size_t n1 : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 31u, 64u, 65u}) {
        for (std::size_t n2 : {1u, 5u, 8u, 33u}) {
            auto a = random_gains(n1, 10 * n1 + n2);
            auto b = random_gains(n1, 20 * n1 + n2);
            auto c = random_gains(n2, 30 * n1 + n2);
            auto d = random_gains(n2, 40 * n1 + n2);
            using Fn = PairBest (*)(const double*, const double*, std::size_t,
                                    const double*, const double*, std::size_t);
            const Fn vec[] = {nn_pair_max, nd_pair_max, dd_pair_max};
            const Fn ref[] = {nn_pair_max_scalar, nd_pair_max_scalar, dd_pair_max_scalar};
            for (int k = 0; k < 3; ++k) {
                PairBest v = vec[k](a.data(), b.data(), n1, c.data(), d.data(), n2);
                PairBest s = ref[k](a.data(), b.data(), n1, c.data(), d.data(), n2);
                CHECK(v.value == s.value);
                CHECK(v.i == s.i);
                CHECK(v.j == s.j);
                ++cases;
            }
        }
    }
    CHECK(cases == 11 * 4 * 3);
}

TEST_CASE("ties resolve to the first pair in either mode") {
    // Identical rows make every (i, j) score the same.
    std::vector<double> a(6, 2.0), b(6, 1.0), c(9, 3.0), d(9, 0.5);
    ModeRestore restore;
    for (KernelMode m : {KernelMode::Scalar, KernelMode::Avx2}) {
        if (m == KernelMode::Avx2 && !kernel_avx2_available()) continue;
        set_kernel_mode(m);
        for (auto fn : {nn_pair_max, nd_pair_max, dd_pair_max}) {
            PairBest best = fn(a.data(), b.data(), a.size(), c.data(), d.data(), c.size());
            CHECK(best.i == 0);
            CHECK(best.j == 0);
        }
    }
}

TEST_CASE("requesting avx2 without support is an error") {
    ModeRestore restore;
    if (kernel_avx2_available()) {
        set_kernel_mode(KernelMode::Avx2);
        CHECK(kernel_mode() == KernelMode::Avx2);
    } else {
        CHECK_THROWS_AS(set_kernel_mode(KernelMode::Avx2), RangeError);
    }
}

TEST_CASE("empty clouds are rejected") {
    double x = 1.0;
    CHECK_THROWS_AS(nn_pair_max(&x, &x, 0, &x, &x, 1), RangeError);
    CHECK_THROWS_AS(dd_pair_max_scalar(&x, &x, 1, &x, &x, 0), RangeError);
}

TEST_CASE("oracle results do not depend on the thread count") {
    GridSpec spec;
    spec.n_lambda = 31;
    spec.n_phase = 16;
    spec.n_power = 5;
    for (std::uint64_t seed : {400ULL, 401ULL}) {
        Channel ch = gen_iid(3, seed);
        for (Structure st : {Structure::NN, Structure::ND, Structure::DN, Structure::DD}) {
            OracleArg one = oracle_max(ch, st, spec, 2.0, 1);
            OracleArg three = oracle_max(ch, st, spec, 2.0, 3);
            CHECK(one.rate == three.rate);
            CHECK(one.lambda1 == three.lambda1);
            CHECK(one.lambda2 == three.lambda2);
            CHECK(one.p1 == three.p1);
            CHECK(one.p2 == three.p2);

            std::vector<double> th = {0.0, 0.5, 1.0, 2.0, 8.0};
            CHECK(oracle_max_r2(ch, st, spec, 2.0, th, 1) ==
                  oracle_max_r2(ch, st, spec, 2.0, th, 3));
        }
    }
}
