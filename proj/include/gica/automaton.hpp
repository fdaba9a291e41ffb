#pragma once

#include "gica/lattice.hpp"

#include <vector>

namespace gica {

enum class RuleKind {
    Bare,    ///< pure transport, the field is carried along unread
    Gauged   ///< transport through the link elements, identity field dynamics
};

/// The link-wise local rule: one gate per link, all links firing
/// simultaneously. Each output component is written by exactly one link.
struct LinkRule {
    int alphabet_size = 2;
    RuleKind kind = RuleKind::Gauged;
    auto operator<=>(const LinkRule&) const = default;
};

/// Outputs of one link gate on (cell at x, link (x,x+1), cell at x+1):
/// the new left component of the cell at x and the new right component of
/// the cell at x+1. The link value never changes.
struct LinkGateOutput {
    int left_at_x = 0;
    int right_at_x1 = 0;
};

/// Gauged: the left-moving component crossing from x+1 to x is carried by
/// A into the frame at x; the right-moving component crossing from x to
/// x+1 is carried by A^-1. Bare: plain exchange, A unread. For the
/// involutive flip group both coincide with applying A to each crossing
/// component.
LinkGateOutput link_gate(const LinkRule& rule, Cell at_x, const Permutation& field, Cell at_x1);

/// Transport rule: left components move one site left, right components
/// one site right. Ring indices wrap.
MatterConfiguration step_bare(const MatterConfiguration& config);

/// One synchronous step of the rule on a gauged configuration. The field
/// follows the identity dynamics.
GaugedConfiguration step(const LinkRule& rule, const GaugedConfiguration& config);

/// Gauged-rule step (the gauge-invariant automaton).
GaugedConfiguration step_gauged(const GaugedConfiguration& config);

/// trace[0] = input, trace[t+1] = step(trace[t]); length steps + 1.
std::vector<GaugedConfiguration> run(const LinkRule& rule, const GaugedConfiguration& config,
                                     int steps);

}  // namespace gica
