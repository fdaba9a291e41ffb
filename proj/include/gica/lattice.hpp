#pragma once

#include "gica/permutation.hpp"

#include <compare>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace gica {

/// Two-component cell state; both components lie in 0..N-1 for the
/// automaton's alphabet size N. (0,0) is the quiescent state.
struct Cell {
    int left = 0;
    int right = 0;
    auto operator<=>(const Cell&) const = default;
};

inline constexpr Cell kQuiescent{0, 0};

/// 1D substrate: a ring of n sites with wraparound links, or the infinite
/// line restricted to finite-support configurations.
class Topology {
public:
    enum class Kind { Ring, Line };

    static Topology ring(int size);
    static Topology line() { return Topology(Kind::Line, 0); }

    Kind kind() const { return kind_; }
    bool is_ring() const { return kind_ == Kind::Ring; }
    int ring_size() const;

    /// Ring: wrap into 0..n-1. Line: identity.
    int normalize(int pos) const;

    auto operator<=>(const Topology&) const = default;

private:
    Topology(Kind kind, int size) : kind_(kind), size_(size) {}

    Kind kind_;
    int size_;
};

/// Assignment of a cell state to every site; on the line all but finitely
/// many sites are quiescent and only those are stored.
class MatterConfiguration {
public:
    /// Unassigned positions are quiescent. Throws std::invalid_argument on
    /// out-of-range ring positions or component values >= alphabet_size.
    static MatterConfiguration make(const Topology& topology, int alphabet_size,
                                    const std::vector<std::pair<int, Cell>>& assignments = {});

    const Topology& topology() const { return topo_; }
    int alphabet_size() const { return alphabet_size_; }

    Cell cell(int pos) const;
    MatterConfiguration with_cell(int pos, Cell value) const;

    /// Positions whose cell differs from (0,0).
    std::set<int> support() const;

    auto operator<=>(const MatterConfiguration&) const = default;

private:
    MatterConfiguration(Topology topo, int alphabet_size)
        : topo_(topo), alphabet_size_(alphabet_size) {}

    void check_position(int pos) const;
    void check_cell(Cell value) const;

    Topology topo_;
    int alphabet_size_;
    std::vector<Cell> ring_cells_;      // ring storage, size n
    std::map<int, Cell> line_cells_;    // line storage, non-quiescent only
};

/// Matter plus a link-valued gauge field: one group element per link
/// (x, x+1). On the line, all but finitely many links carry the identity.
class GaugedConfiguration {
public:
    /// Field assignments are (link position x, element on link (x, x+1)).
    /// Requires ring size >= 2 so the two links of a site are distinct.
    static GaugedConfiguration make(MatterConfiguration matter,
                                    const std::vector<std::pair<int, Permutation>>& field = {});

    const MatterConfiguration& matter() const { return matter_; }
    const Topology& topology() const { return matter_.topology(); }
    int alphabet_size() const { return matter_.alphabet_size(); }

    Cell cell(int pos) const { return matter_.cell(pos); }

    /// Value on link (x, x+1); identity when unset.
    Permutation link(int x) const;

    GaugedConfiguration with_matter(MatterConfiguration matter) const;
    GaugedConfiguration with_cell(int pos, Cell value) const;
    GaugedConfiguration with_link(int x, const Permutation& value) const;

    /// Links carrying a non-identity element.
    std::set<int> field_support() const;

    auto operator<=>(const GaugedConfiguration&) const = default;

private:
    explicit GaugedConfiguration(MatterConfiguration matter) : matter_(std::move(matter)) {}

    int check_link(int x) const;

    MatterConfiguration matter_;
    std::vector<Permutation> ring_field_;       // ring storage, size n
    std::map<int, Permutation> line_field_;     // line storage, non-identity only
};

/// All N^2 cell states in lexicographic order.
std::vector<Cell> all_cells(int alphabet_size);

/// Every matter configuration of a ring, lexicographic by cell vector.
/// Intended for exhaustive desk-scale checks; the caller bounds the size.
std::vector<MatterConfiguration> all_matter_configurations(const Topology& ring, int alphabet_size);

}  // namespace gica
