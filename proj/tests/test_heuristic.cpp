#include "misoic/channel.hpp"
#include "misoic/heuristic.hpp"
#include "misoic/linalg.hpp"
#include "misoic/rates.hpp"

#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

using namespace misoic;

TEST_CASE("shortlist layout is fixed") {
    Channel ch = gen_iid(3, 70);
    const double p = 2.5;
    auto all = heuristic_rates(ch, p);
    REQUIRE(all.size() == 9);

    const std::vector<std::string> names = {
        "nn-zf", "nn-mrt", "nd", "dn", "dd-cross-cross",
        "dd-direct-direct", "dd-cross-direct", "dd-direct-cross", "tdma"};
    for (std::size_t i = 0; i < names.size(); ++i) CHECK(all[i].name == names[i]);

    for (std::size_t i = 0; i + 1 < all.size(); ++i) {
        const HeuristicChoice& hc = all[i];
        CHECK_FALSE(hc.tdma);
        CHECK(hc.strategy.p1 == p);
        CHECK(hc.strategy.p2 == p);
        CHECK(std::fabs(vnorm(hc.strategy.w1) - 1.0) <= 1e-12);
        CHECK(std::fabs(vnorm(hc.strategy.w2) - 1.0) <= 1e-12);
        // Stored rates are the plain evaluation of the stored strategy.
        RatePoint rp = rate_pair(hc.structure, ch, hc.strategy);
        CHECK(hc.rates.r1 == rp.r1);
        CHECK(hc.rates.r2 == rp.r2);
        CHECK(hc.sum == hc.rates.r1 + hc.rates.r2);
    }

    const HeuristicChoice& td = all.back();
    CHECK(td.tdma);
    CHECK(td.strategy.w1.empty());
    CHECK(td.sum == tdma_sum_rate(ch, p));
    CHECK(td.rates.r1 == doctest::Approx(0.5 * std::log2(1.0 + norm2(ch.h11) * p)).epsilon(1e-15));
}

TEST_CASE("zero forcing entries cause no interference") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Channel ch = gen_iid(3, 710 + seed);
        auto all = heuristic_rates(ch, 4.0);
        Gains g = gains(ch, all[0].strategy);
        CHECK(g.g21 <= 1e-18 * g.g11);
        CHECK(g.g12 <= 1e-18 * g.g22);
    }
}

TEST_CASE("selection is the argmax of the shortlist") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Channel ch = gen_iid(3, 720 + seed);
        for (double p : {0.1, 1.0, 50.0}) {
            auto all = heuristic_rates(ch, p);
            HeuristicChoice pick = simple_select(ch, p);
            double best = -1.0;
            std::string first;
            for (const auto& hc : all)
                if (hc.sum > best) {
                    best = hc.sum;
                    first = hc.name;
                }
            CHECK(pick.sum == best);
            CHECK(pick.name == first);
        }
    }
}

TEST_CASE("regimes steer the selection") {
    for (std::uint64_t seed : {700ULL, 701ULL, 702ULL, 703ULL}) {
        // Nearly orthogonal cross channels with tiny relative power: treating
        // interference as noise with matched filters should win.
        Channel weak = gen_symmetric(3, 0.4, 1e4, seed);
        CHECK(simple_select(weak, 1.0).name == "nn-mrt");

        // Strong, nearly aligned interference favors decoding it at both
        // receivers.
        Channel strong = gen_symmetric(3, 0.05 * 3.14159265358979, 0.01, seed);
        CHECK(simple_select(strong, 10.0).structure == Structure::DD);
    }
}
