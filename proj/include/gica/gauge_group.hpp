#pragma once

#include "gica/lattice.hpp"
#include "gica/permutation.hpp"

#include <map>
#include <vector>

namespace gica {

/// A finite group of local gauge transformations over the cell alphabet,
/// each element acting identically on both cell components (radius-zero
/// action on matter; the link extension is in apply_local). Construction
/// verifies closure, identity and inverses exhaustively; elements are kept
/// sorted with the identity first.
class GaugeGroup {
public:
    static GaugeGroup from_elements(int alphabet_size, std::vector<Permutation> elements);

    /// {id, tau x tau} over {0,1}: the two-element swap group.
    static GaugeGroup flip_group();

    /// All n! permutations acting diagonally on both components (n <= 6).
    static GaugeGroup symmetric_group(int alphabet_size);

    int alphabet_size() const { return alphabet_size_; }
    int size() const { return static_cast<int>(elements_.size()); }
    const std::vector<Permutation>& elements() const { return elements_; }
    const Permutation& identity() const { return elements_.front(); }
    const Permutation& element(int index) const { return elements_[static_cast<size_t>(index)]; }

    bool contains(const Permutation& p) const;
    int index_of(const Permutation& p) const;  // -1 when absent

private:
    GaugeGroup(int alphabet_size, std::vector<Permutation> elements)
        : alphabet_size_(alphabet_size), elements_(std::move(elements)) {}

    int alphabet_size_;
    std::vector<Permutation> elements_;  // sorted; identity is minimal, hence first
};

/// Position-indexed family of group elements: the product of commuting
/// local transformations. Total on a ring; identity at all but finitely
/// many positions on the line.
class GaugeTransformation {
public:
    static GaugeTransformation all_identity(const Topology& topology, int alphabet_size);
    static GaugeTransformation make(const Topology& topology, int alphabet_size,
                                    const std::vector<std::pair<int, Permutation>>& assignments);

    const Topology& topology() const { return topo_; }
    int alphabet_size() const { return alphabet_size_; }

    Permutation at(int pos) const;
    GaugeTransformation with(int pos, const Permutation& value) const;

    bool is_all_identity() const;
    std::set<int> support() const;

    /// Positionwise composition; (a.compose(b))(c) == a(b(c)) as maps on
    /// configurations.
    GaugeTransformation compose(const GaugeTransformation& other) const;
    GaugeTransformation inverse() const;

    /// All elements belong to the given group.
    bool within(const GaugeGroup& group) const;

    auto operator<=>(const GaugeTransformation&) const = default;

private:
    GaugeTransformation(Topology topo, int alphabet_size)
        : topo_(topo), alphabet_size_(alphabet_size) {}

    Topology topo_;
    int alphabet_size_;
    std::vector<Permutation> ring_assign_;
    std::map<int, Permutation> line_assign_;
};

/// Extended local gauge transformation at one site: the cell becomes g(c);
/// the link values are re-framed. A link element maps the gauge frame of
/// its right end to the frame of its left end, so the left link (x-1, x)
/// becomes A o g^-1 and the right link (x, x+1) becomes g o A. On the
/// two-element flip group this is exactly (A0 o g, g(c), g o A1).
GaugedConfiguration apply_local(const Permutation& g, int at, const GaugedConfiguration& config);

/// Sequential application of apply_local at every position of the family;
/// order-independent because the local transformations commute.
GaugedConfiguration apply_global(const GaugeTransformation& gamma, const GaugedConfiguration& config);

/// Cell-only action, for matter configurations without a field.
MatterConfiguration apply_global(const GaugeTransformation& gamma, const MatterConfiguration& config);

/// All |G|^n assignments over a ring, lexicographic by element index with
/// position 0 most significant. The caller keeps the size enumerable.
std::vector<GaugeTransformation> enumerate_transformations(const GaugeGroup& group,
                                                           const Topology& ring);

/// Every gauged configuration of a ring over the group's field alphabet
/// (Lambda = G), lexicographic: matter outer, field inner.
std::vector<GaugedConfiguration> all_gauged_configurations(const Topology& ring,
                                                           const GaugeGroup& group);

}  // namespace gica
