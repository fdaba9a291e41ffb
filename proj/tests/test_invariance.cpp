#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gica/invariance.hpp"

using namespace gica;

namespace {

const LinkRule kGauged2{2, RuleKind::Gauged};
const LinkRule kBare2{2, RuleKind::Bare};
const LinkRule kGauged3{3, RuleKind::Gauged};

/// Independent witness-minimality oracle: scan the whole product in
/// reverse order and keep the least counterexample.
std::optional<LocalWitness> reverse_scan(const GaugeGroup& group, const LinkRule& rule) {
    const auto cells = all_cells(group.alphabet_size());
    std::optional<LocalWitness> best;
    for (auto cl = cells.rbegin(); cl != cells.rend(); ++cl)
        for (auto A = group.elements().rbegin(); A != group.elements().rend(); ++A)
            for (auto cr = cells.rbegin(); cr != cells.rend(); ++cr)
                for (auto gl = group.elements().rbegin(); gl != group.elements().rend(); ++gl)
                    for (auto gr = group.elements().rbegin(); gr != group.elements().rend(); ++gr)
                        for (const MismatchSlot slot :
                             {MismatchSlot::LeftOutput, MismatchSlot::RightOutput,
                              MismatchSlot::FieldOutput}) {
                            const LocalWitness w{*cl, *A, *cr, *gl, *gr, slot};
                            if (!replay(w, rule)) continue;
                            if (!best || w < *best) best = w;
                        }
    return best;
}

}  // namespace

TEST_CASE("local invariance of the gauged rule, two-element group") {
    const auto report = check_local_invariance(GaugeGroup::flip_group(), kGauged2);
    CHECK(report.verdict == InvarianceVerdict::Invariant);
    // |Sigma|^2 * |Lambda| * |G|^2 = 4*4*2*2*2
    CHECK(report.cases_checked == 128);
    CHECK_FALSE(report.partial);
    CHECK_FALSE(report.local_witness.has_value());
}

TEST_CASE("local invariance of the gauged rule, all of S(3)") {
    const auto report = check_local_invariance(GaugeGroup::symmetric_group(3), kGauged3);
    CHECK(report.verdict == InvarianceVerdict::Invariant);
    // 9*6*9*6*6
    CHECK(report.cases_checked == 17496);
}

TEST_CASE("the bare rule is not gauge-invariant") {
    const auto report = check_local_invariance(GaugeGroup::flip_group(), kBare2);
    CHECK(report.verdict == InvarianceVerdict::CounterexampleFound);
    CHECK(report.cases_checked == 128);
    REQUIRE(report.local_witness.has_value());
    CHECK(replay(*report.local_witness, kBare2));

    SUBCASE("the witness is the least over any enumeration order") {
        const auto oracle = reverse_scan(GaugeGroup::flip_group(), kBare2);
        REQUIRE(oracle.has_value());
        CHECK(*oracle == *report.local_witness);
    }
    SUBCASE("determinism across runs") {
        const auto again = check_local_invariance(GaugeGroup::flip_group(), kBare2);
        CHECK(*again.local_witness == *report.local_witness);
    }
}

TEST_CASE("global invariance on small rings") {
    const GaugeGroup flips = GaugeGroup::flip_group();
    SUBCASE("Ring(2), one step") {
        const auto report = check_global_invariance(flips, kGauged2, Topology::ring(2), 1);
        CHECK(report.verdict == InvarianceVerdict::Invariant);
        // 64 configurations x 4 transformations x 1 step
        CHECK(report.cases_checked == 256);
        CHECK_FALSE(report.partial);
    }
    SUBCASE("Ring(3), three steps") {
        const auto report = check_global_invariance(flips, kGauged2, Topology::ring(3), 3);
        CHECK(report.verdict == InvarianceVerdict::Invariant);
        CHECK(report.cases_checked == 512 * 8 * 3);
    }
    SUBCASE("the all-identity transformation is trivially consistent") {
        const auto gamma = GaugeTransformation::all_identity(Topology::ring(3), 2);
        for (const auto& c : all_gauged_configurations(Topology::ring(3), flips))
            CHECK(step(kGauged2, apply_global(gamma, c)) ==
                  apply_global(gamma, step(kGauged2, c)));
    }
}

TEST_CASE("the bare rule fails the global check with an uncompensatable witness") {
    const GaugeGroup flips = GaugeGroup::flip_group();
    const auto report = check_global_invariance(flips, kBare2, Topology::ring(3), 1);
    CHECK(report.verdict == InvarianceVerdict::CounterexampleFound);
    REQUIRE(report.global_witness.has_value());
    CHECK(report.global_witness->no_compensation);
    CHECK(replay(*report.global_witness, kBare2, flips));
}

TEST_CASE("local invariance implies global invariance on small rings") {
    SUBCASE("two-element group") {
        const GaugeGroup flips = GaugeGroup::flip_group();
        REQUIRE(check_local_invariance(flips, kGauged2).verdict == InvarianceVerdict::Invariant);
        CHECK(check_global_invariance(flips, kGauged2, Topology::ring(2), 2).verdict ==
              InvarianceVerdict::Invariant);
        CHECK(check_global_invariance(flips, kGauged2, Topology::ring(3), 2).verdict ==
              InvarianceVerdict::Invariant);
    }
    SUBCASE("S(3), Ring(2) exhaustive") {
        const GaugeGroup s3 = GaugeGroup::symmetric_group(3);
        REQUIRE(check_local_invariance(s3, kGauged3).verdict == InvarianceVerdict::Invariant);
        const auto report = check_global_invariance(s3, kGauged3, Topology::ring(2), 1);
        CHECK(report.verdict == InvarianceVerdict::Invariant);
        CHECK(report.cases_checked == 2916L * 36L);
    }
    SUBCASE("S(3), Ring(3) within a budget reports partial coverage") {
        const GaugeGroup s3 = GaugeGroup::symmetric_group(3);
        const auto report = check_global_invariance(s3, kGauged3, Topology::ring(3), 1, 20'000);
        CHECK(report.verdict == InvarianceVerdict::Invariant);
        CHECK(report.partial);
        CHECK(report.cases_checked == 20'000);
    }
}

TEST_CASE("sampled global checking") {
    const GaugeGroup flips = GaugeGroup::flip_group();
    SUBCASE("gauged rule on the line") {
        const auto report = check_global_invariance_sampled(flips, kGauged2, Topology::line(), 2,
                                                            60, 12345);
        CHECK(report.verdict == InvarianceVerdict::Invariant);
        CHECK(report.partial);
        CHECK(report.cases_checked == 60);
    }
    SUBCASE("bare rule on the line yields a replayable witness") {
        const auto report = check_global_invariance_sampled(flips, kBare2, Topology::line(), 1,
                                                            60, 999);
        CHECK(report.verdict == InvarianceVerdict::CounterexampleFound);
        REQUIRE(report.global_witness.has_value());
        CHECK(replay(*report.global_witness, kBare2, flips));
    }
    SUBCASE("the same seed reproduces the same verdict and witness") {
        const auto a = check_global_invariance_sampled(flips, kBare2, Topology::line(), 1, 30, 7);
        const auto b = check_global_invariance_sampled(flips, kBare2, Topology::line(), 1, 30, 7);
        REQUIRE(a.global_witness.has_value());
        REQUIRE(b.global_witness.has_value());
        CHECK(a.global_witness->input == b.global_witness->input);
        CHECK(a.global_witness->gamma == b.global_witness->gamma);
    }
    SUBCASE("large ring falls back to sampling") {
        const auto report = check_global_invariance_sampled(flips, kGauged2, Topology::ring(16), 2,
                                                            40, 2024);
        CHECK(report.verdict == InvarianceVerdict::Invariant);
    }
}

TEST_CASE("the gauge-transformation automaton Z is the identity") {
    const Permutation tau = Permutation::transposition(2, 0, 1);
    const auto gamma = GaugeTransformation::make(Topology::ring(4), 2, {{1, tau}});
    const auto id = GaugeTransformation::all_identity(Topology::ring(4), 2);
    CHECK(z_automaton(id) == id);
    CHECK(z_automaton(gamma) == gamma);
    // the identity is a homomorphism
    const auto gamma2 = GaugeTransformation::make(Topology::ring(4), 2, {{1, tau}, {3, tau}});
    CHECK(z_automaton(gamma.compose(gamma2)) == z_automaton(gamma).compose(z_automaton(gamma2)));
    CHECK(z_local(tau) == tau);
}
