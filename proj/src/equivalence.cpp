#include "gica/equivalence.hpp"

#include <stdexcept>
#include <string>

namespace gica {

namespace {

/// The variant's step is gauge-invariant with Z = id on this ring.
bool variant_invariant(const RuleVariant& v, const std::vector<GaugedConfiguration>& configs,
                       const std::vector<GaugeTransformation>& gammas) {
    for (const auto& c : configs)
        for (const auto& gamma : gammas)
            if (v.apply(apply_global(gamma, c)) != apply_global(gamma, v.apply(c))) return false;
    return true;
}

}  // namespace

EquivalenceReport check_simulation(const RuleVariant& T, const RuleVariant& T2,
                                   const GaugeGroup& group, const Topology& ring, long budget) {
    if (T.rule.alphabet_size != T2.rule.alphabet_size)
        throw std::invalid_argument("variants disagree on alphabet size");
    const auto configs = all_gauged_configurations(ring, group);
    const auto gammas = enumerate_transformations(group, ring);

    EquivalenceReport report;
    report.verdict = EquivalenceVerdict::Simulates;
    for (const auto& c : configs) {
        std::optional<SimulationWitness> found;
        for (const auto& gamma : gammas) {
            const GaugedConfiguration lhs = apply_global(gamma, T.apply(c));
            for (const auto& gamma2 : gammas) {
                if (report.cases_checked >= budget) {
                    report.partial = true;
                    return report;
                }
                ++report.cases_checked;
                if (lhs == T2.apply(apply_global(gamma2, c))) {
                    found = SimulationWitness{c, gamma, gamma2};
                    break;
                }
            }
            if (found) break;
        }
        if (!found) {
            report.verdict = EquivalenceVerdict::NotSimulated;
            report.failing_config = c;
            report.witnesses.clear();
            return report;
        }
        report.witnesses.push_back(std::move(*found));
    }
    return report;
}

EquivalenceReport check_equivalence(const RuleVariant& T, const RuleVariant& T2,
                                    const GaugeGroup& group, const Topology& ring, long budget) {
    EquivalenceReport forward = check_simulation(T, T2, group, ring, budget);
    if (forward.verdict != EquivalenceVerdict::Simulates) return forward;
    EquivalenceReport backward = check_simulation(T2, T, group, ring, budget);
    forward.cases_checked += backward.cases_checked;
    forward.partial = forward.partial || backward.partial;
    if (backward.verdict == EquivalenceVerdict::Simulates)
        forward.verdict = EquivalenceVerdict::Equivalent;
    else
        forward.failing_config = backward.failing_config;
    return forward;
}

EquivalenceReport check_proposition_statements(const RuleVariant& T, const RuleVariant& T2,
                                               const GaugeGroup& group, const Topology& ring) {
    const auto configs = all_gauged_configurations(ring, group);
    const auto gammas = enumerate_transformations(group, ring);

    EquivalenceReport report;
    report.statements_evaluated = true;
    report.hypothesis_first_invariant = variant_invariant(T, configs, gammas);
    report.hypothesis_second_invariant = variant_invariant(T2, configs, gammas);
    report.hypotheses_hold =
        report.hypothesis_first_invariant && report.hypothesis_second_invariant;

    // (1) forall c exists gamma, gamma2: gamma(T(c)) = T2(gamma2(c)).
    {
        bool holds = true;
        for (const auto& c : configs) {
            bool found = false;
            for (const auto& gamma : gammas) {
                const GaugedConfiguration lhs = apply_global(gamma, T.apply(c));
                for (const auto& gamma2 : gammas) {
                    ++report.cases_checked;
                    if (lhs == T2.apply(apply_global(gamma2, c))) {
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (!found) {
                holds = false;
                break;
            }
        }
        report.statements[0] = holds;
    }

    // (2) forall c exists gamma: T(c) = T2(gamma(c)).
    {
        bool holds = true;
        for (const auto& c : configs) {
            bool found = false;
            const GaugedConfiguration lhs = T.apply(c);
            for (const auto& gamma : gammas) {
                ++report.cases_checked;
                if (lhs == T2.apply(apply_global(gamma, c))) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                holds = false;
                break;
            }
        }
        report.statements[1] = holds;
    }

    // (3) forall c, forall gamma exists gamma2: gamma(T(c)) = T2(gamma2(c)).
    {
        bool holds = true;
        for (const auto& c : configs) {
            for (const auto& gamma : gammas) {
                bool found = false;
                const GaugedConfiguration lhs = apply_global(gamma, T.apply(c));
                for (const auto& gamma2 : gammas) {
                    ++report.cases_checked;
                    if (lhs == T2.apply(apply_global(gamma2, c))) {
                        found = true;
                        break;
                    }
                }
                if (!found) {
                    holds = false;
                    break;
                }
            }
            if (!holds) break;
        }
        report.statements[2] = holds;
    }

    report.verdict = report.statements[0] ? EquivalenceVerdict::Simulates
                                          : EquivalenceVerdict::NotSimulated;
    return report;
}

RuleVariant gauge_fix(const std::vector<RuleVariant>& variants, const GaugeGroup& group,
                      const Topology& ring) {
    if (variants.empty()) throw std::invalid_argument("gauge_fix needs at least one variant");
    for (size_t i = 0; i + 1 < variants.size(); ++i) {
        for (size_t j = i + 1; j < variants.size(); ++j) {
            const auto report = check_equivalence(variants[i], variants[j], group, ring);
            if (report.verdict != EquivalenceVerdict::Equivalent)
                throw std::invalid_argument("variants " + std::to_string(i) + " and " +
                                            std::to_string(j) + " are not gauge-equivalent");
        }
    }
    // The all-identity assignment is the lexicographic minimum, so the
    // least post is also the identity-post representative when present.
    size_t best = 0;
    for (size_t i = 1; i < variants.size(); ++i)
        if (variants[i].post < variants[best].post) best = i;
    return variants[best];
}

}  // namespace gica
