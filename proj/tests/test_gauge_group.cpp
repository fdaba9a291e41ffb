#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gica/gauge_group.hpp"

#include <random>

using namespace gica;

namespace {

GaugedConfiguration random_gauged(std::mt19937_64& rng, const GaugeGroup& group, int ring_size) {
    std::uniform_int_distribution<int> comp(0, group.alphabet_size() - 1);
    std::uniform_int_distribution<int> elem(0, group.size() - 1);
    std::vector<std::pair<int, Cell>> matter;
    std::vector<std::pair<int, Permutation>> field;
    for (int x = 0; x < ring_size; ++x) {
        matter.emplace_back(x, Cell{comp(rng), comp(rng)});
        field.emplace_back(x, group.element(elem(rng)));
    }
    return GaugedConfiguration::make(
        MatterConfiguration::make(Topology::ring(ring_size), group.alphabet_size(), matter), field);
}

}  // namespace

TEST_CASE("permutation composition") {
    const Permutation tau = Permutation::transposition(2, 0, 1);
    CHECK(tau.compose(tau).is_identity());
    const Permutation sigma = Permutation::parse_cycles(3, "(012)");
    CHECK(Permutation::identity(3).compose(sigma) == sigma);
    CHECK(sigma.compose(Permutation::identity(3)) == sigma);

    // Composing the swap tables by hand: (01) after (12) maps
    // 0 -> 1, 1 -> 2, 2 -> 0, the 3-cycle.
    const Permutation a = Permutation::transposition(3, 0, 1);
    const Permutation b = Permutation::transposition(3, 1, 2);
    const Permutation composed = a.compose(b);
    CHECK(composed.apply(0) == 1);
    CHECK(composed.apply(1) == 2);
    CHECK(composed.apply(2) == 0);
    CHECK(composed == Permutation::parse_cycles(3, "(012)"));

    CHECK_THROWS_AS(tau.compose(sigma), std::invalid_argument);
}

TEST_CASE("cycle words") {
    CHECK(Permutation::parse_cycles(2, "id").is_identity());
    CHECK(Permutation::parse_cycles(2, "(01)") == Permutation::transposition(2, 0, 1));
    CHECK(Permutation::parse_cycles(4, "(01)(23)").cycle_string() == "(01)(23)");
    CHECK(Permutation::parse_cycles(3, "(012)").cycle_string() == "(012)");
    CHECK(Permutation::identity(5).cycle_string() == "id");
    CHECK_THROWS_AS(Permutation::parse_cycles(2, "(02)"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse_cycles(2, "(0"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse_cycles(2, "(00)"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse_cycles(2, "01"), std::invalid_argument);
}

TEST_CASE("group construction checks the axioms") {
    const GaugeGroup flips = GaugeGroup::flip_group();
    CHECK(flips.size() == 2);
    CHECK(flips.identity().is_identity());
    CHECK(flips.element(1) == Permutation::transposition(2, 0, 1));

    const GaugeGroup s3 = GaugeGroup::symmetric_group(3);
    CHECK(s3.size() == 6);
    CHECK(s3.identity().is_identity());
    for (const auto& a : s3.elements()) {
        CHECK(s3.contains(a.inverse()));
        for (const auto& b : s3.elements()) CHECK(s3.contains(a.compose(b)));
    }
    CHECK(GaugeGroup::symmetric_group(4).size() == 24);

    // {id, (012)} is not closed under composition.
    CHECK_THROWS_AS(GaugeGroup::from_elements(
                        3, {Permutation::identity(3), Permutation::parse_cycles(3, "(012)")}),
                    std::invalid_argument);
    // missing identity
    CHECK_THROWS_AS(GaugeGroup::from_elements(2, {Permutation::transposition(2, 0, 1)}),
                    std::invalid_argument);
}

TEST_CASE("apply_local acts on the cell and its two links only") {
    const Permutation tau = Permutation::transposition(2, 0, 1);
    const auto vacuum = GaugedConfiguration::make(MatterConfiguration::make(Topology::ring(5), 2));

    SUBCASE("identity leaves everything unchanged") {
        CHECK(apply_local(Permutation::identity(2), 2, vacuum) == vacuum);
    }
    SUBCASE("tau on the vacuum dresses the site") {
        const auto out = apply_local(tau, 2, vacuum);
        CHECK(out.cell(2) == Cell{1, 1});
        CHECK(out.link(1) == tau);  // left link (1,2)
        CHECK(out.link(2) == tau);  // right link (2,3)
        for (int x = 0; x < 5; ++x)
            if (x != 2) CHECK(out.cell(x) == kQuiescent);
        CHECK(out.link(0).is_identity());
        CHECK(out.link(3).is_identity());
        CHECK(out.link(4).is_identity());
    }
    SUBCASE("involutive element applied twice restores the configuration") {
        std::mt19937_64 rng(11);
        const GaugeGroup flips = GaugeGroup::flip_group();
        for (int trial = 0; trial < 20; ++trial) {
            const auto c = random_gauged(rng, flips, 4);
            CHECK(apply_local(tau, 1, apply_local(tau, 1, c)) == c);
        }
    }
    SUBCASE("general inverse undoes the extended transformation") {
        std::mt19937_64 rng(13);
        const GaugeGroup s3 = GaugeGroup::symmetric_group(3);
        const Permutation cycle = Permutation::parse_cycles(3, "(012)");
        for (int trial = 0; trial < 20; ++trial) {
            const auto c = random_gauged(rng, s3, 4);
            CHECK(apply_local(cycle.inverse(), 3, apply_local(cycle, 3, c)) == c);
        }
    }
}

TEST_CASE("local transformations at distinct positions commute") {
    SUBCASE("exhaustive over Ring(3), N=2") {
        const GaugeGroup flips = GaugeGroup::flip_group();
        const auto configs = all_gauged_configurations(Topology::ring(3), flips);
        CHECK(configs.size() == 512);
        for (const auto& c : configs)
            for (const auto& g : flips.elements())
                for (const auto& h : flips.elements())
                    for (int x = 0; x < 3; ++x)
                        for (int y = 0; y < 3; ++y) {
                            if (x == y) continue;
                            CHECK(apply_local(g, x, apply_local(h, y, c)) ==
                                  apply_local(h, y, apply_local(g, x, c)));
                        }
    }
    SUBCASE("sampled over Ring(3), N=3") {
        const GaugeGroup s3 = GaugeGroup::symmetric_group(3);
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 40; ++trial) {
            const auto c = random_gauged(rng, s3, 3);
            for (const auto& g : s3.elements())
                for (const auto& h : s3.elements())
                    for (int x = 0; x < 3; ++x)
                        for (int y = 0; y < 3; ++y) {
                            if (x == y) continue;
                            CHECK(apply_local(g, x, apply_local(h, y, c)) ==
                                  apply_local(h, y, apply_local(g, x, c)));
                        }
        }
    }
}

TEST_CASE("apply_global") {
    const GaugeGroup flips = GaugeGroup::flip_group();
    const Permutation tau = Permutation::transposition(2, 0, 1);
    std::mt19937_64 rng(23);

    SUBCASE("all-identity transformation is a no-op") {
        const auto c = random_gauged(rng, flips, 4);
        const auto gamma = GaugeTransformation::all_identity(Topology::ring(4), 2);
        CHECK(apply_global(gamma, c) == c);
    }
    SUBCASE("a single factor equals apply_local") {
        const auto c = random_gauged(rng, flips, 4);
        const auto gamma = GaugeTransformation::make(Topology::ring(4), 2, {{2, tau}});
        CHECK(apply_global(gamma, c) == apply_local(tau, 2, c));
    }
    SUBCASE("application order does not matter") {
        const GaugeGroup s3 = GaugeGroup::symmetric_group(3);
        std::uniform_int_distribution<int> elem(0, s3.size() - 1);
        for (int trial = 0; trial < 15; ++trial) {
            const auto c = random_gauged(rng, s3, 4);
            std::vector<std::pair<int, Permutation>> assign;
            for (int x = 0; x < 4; ++x) assign.emplace_back(x, s3.element(elem(rng)));
            const auto gamma = GaugeTransformation::make(Topology::ring(4), 3, assign);

            std::vector<int> order{0, 1, 2, 3};
            GaugedConfiguration reference = apply_global(gamma, c);
            for (int shuffle = 0; shuffle < 3; ++shuffle) {
                std::shuffle(order.begin(), order.end(), rng);
                GaugedConfiguration out = c;
                for (int x : order) out = apply_local(gamma.at(x), x, out);
                CHECK(out == reference);
            }
        }
    }
    SUBCASE("composition and inverse are positionwise") {
        const auto c = random_gauged(rng, flips, 4);
        const auto g1 = GaugeTransformation::make(Topology::ring(4), 2, {{0, tau}, {2, tau}});
        const auto g2 = GaugeTransformation::make(Topology::ring(4), 2, {{2, tau}, {3, tau}});
        CHECK(apply_global(g1.compose(g2), c) == apply_global(g1, apply_global(g2, c)));
        CHECK(apply_global(g1.inverse(), apply_global(g1, c)) == c);
    }
}

TEST_CASE("enumerate_transformations counts |G|^n") {
    const GaugeGroup flips = GaugeGroup::flip_group();
    const GaugeGroup s3 = GaugeGroup::symmetric_group(3);
    CHECK(enumerate_transformations(flips, Topology::ring(2)).size() == 4);
    CHECK(enumerate_transformations(s3, Topology::ring(3)).size() == 216);
    CHECK(enumerate_transformations(s3, Topology::ring(1)).size() == 6);
    const auto all = enumerate_transformations(flips, Topology::ring(3));
    CHECK(std::set<GaugeTransformation>(all.begin(), all.end()).size() == all.size());
}

TEST_CASE("line transformations keep finite support") {
    const Permutation tau = Permutation::transposition(2, 0, 1);
    const auto gamma = GaugeTransformation::make(Topology::line(), 2, {{-5, tau}, {7, tau}});
    CHECK(gamma.support() == std::set<int>{-5, 7});
    CHECK(gamma.at(0).is_identity());
    CHECK(gamma.inverse().support() == gamma.support());
    const auto c = GaugedConfiguration::make(
        MatterConfiguration::make(Topology::line(), 2, {{-5, Cell{0, 1}}}));
    const auto out = apply_global(gamma, c);
    CHECK(out.cell(-5) == Cell{1, 0});
    CHECK(out.link(-6) == tau);
    CHECK(out.link(-5) == tau);
    CHECK(out.cell(7) == Cell{1, 1});
}
