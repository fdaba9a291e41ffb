#include "gica/automaton.hpp"

#include <set>
#include <stdexcept>

namespace gica {

LinkGateOutput link_gate(const LinkRule& rule, Cell at_x, const Permutation& field, Cell at_x1) {
    if (rule.kind == RuleKind::Bare) return LinkGateOutput{at_x1.left, at_x.right};
    return LinkGateOutput{field.apply(at_x1.left), field.inverse().apply(at_x.right)};
}

MatterConfiguration step_bare(const MatterConfiguration& config) {
    const Topology& topo = config.topology();
    std::vector<std::pair<int, Cell>> next;
    if (topo.is_ring()) {
        for (int x = 0; x < topo.ring_size(); ++x)
            next.emplace_back(x, Cell{config.cell(x + 1).left, config.cell(x - 1).right});
    } else {
        std::set<int> window;
        for (int x : config.support()) {
            window.insert(x - 1);
            window.insert(x);
            window.insert(x + 1);
        }
        for (int x : window)
            next.emplace_back(x, Cell{config.cell(x + 1).left, config.cell(x - 1).right});
    }
    return MatterConfiguration::make(topo, config.alphabet_size(), next);
}

GaugedConfiguration step(const LinkRule& rule, const GaugedConfiguration& config) {
    if (rule.alphabet_size != config.alphabet_size())
        throw std::invalid_argument("rule and configuration disagree on alphabet size");
    const Topology& topo = config.topology();
    std::vector<std::pair<int, Cell>> next;
    if (topo.is_ring()) {
        const int n = topo.ring_size();
        std::vector<Cell> cells(static_cast<size_t>(n));
        for (int x = 0; x < n; ++x) {
            const auto out = link_gate(rule, config.cell(x), config.link(x), config.cell(x + 1));
            cells[static_cast<size_t>(x)].left = out.left_at_x;
            cells[static_cast<size_t>(topo.normalize(x + 1))].right = out.right_at_x1;
        }
        for (int x = 0; x < n; ++x) next.emplace_back(x, cells[static_cast<size_t>(x)]);
    } else {
        // Fire every link whose gate can produce a non-quiescent output:
        // links next to occupied cells and links carrying field values.
        std::set<int> links;
        for (int x : config.matter().support()) {
            links.insert(x - 1);
            links.insert(x);
        }
        if (rule.kind == RuleKind::Gauged)
            for (int x : config.field_support()) links.insert(x);
        std::map<int, Cell> cells;
        for (int x : links) {
            const auto out = link_gate(rule, config.cell(x), config.link(x), config.cell(x + 1));
            cells[x].left = out.left_at_x;
            cells[x + 1].right = out.right_at_x1;
        }
        for (const auto& [x, value] : cells) next.emplace_back(x, value);
    }
    MatterConfiguration matter = MatterConfiguration::make(topo, config.alphabet_size(), next);
    return config.with_matter(std::move(matter));
}

GaugedConfiguration step_gauged(const GaugedConfiguration& config) {
    return step(LinkRule{config.alphabet_size(), RuleKind::Gauged}, config);
}

std::vector<GaugedConfiguration> run(const LinkRule& rule, const GaugedConfiguration& config,
                                     int steps) {
    if (steps < 0) throw std::invalid_argument("step count must be non-negative");
    std::vector<GaugedConfiguration> trace;
    trace.reserve(static_cast<size_t>(steps) + 1);
    trace.push_back(config);
    for (int t = 0; t < steps; ++t) trace.push_back(step(rule, trace.back()));
    return trace;
}

}  // namespace gica
