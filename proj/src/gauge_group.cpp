#include "gica/gauge_group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gica {

GaugeGroup GaugeGroup::from_elements(int alphabet_size, std::vector<Permutation> elements) {
    if (elements.empty()) throw std::invalid_argument("gauge group needs at least the identity");
    for (const auto& e : elements)
        if (e.domain_size() != alphabet_size)
            throw std::invalid_argument("group element domain differs from alphabet size");

    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());

    // The identity is the lexicographic minimum of all image tables, so a
    // sorted element list starts with it when present.
    if (!elements.front().is_identity())
        throw std::invalid_argument("gauge group is missing the identity");
    for (const auto& a : elements) {
        if (!std::binary_search(elements.begin(), elements.end(), a.inverse()))
            throw std::invalid_argument("gauge group is not closed under inverse");
        for (const auto& b : elements)
            if (!std::binary_search(elements.begin(), elements.end(), a.compose(b)))
                throw std::invalid_argument("gauge group is not closed under composition");
    }
    return GaugeGroup(alphabet_size, std::move(elements));
}

GaugeGroup GaugeGroup::flip_group() {
    return from_elements(2, {Permutation::identity(2), Permutation::transposition(2, 0, 1)});
}

GaugeGroup GaugeGroup::symmetric_group(int alphabet_size) {
    // The axiom check is quadratic in |G| = n!; 6 keeps it instant.
    if (alphabet_size < 1 || alphabet_size > 6)
        throw std::invalid_argument("symmetric group limited to alphabet sizes 1..6");
    std::vector<int> images(static_cast<size_t>(alphabet_size));
    std::iota(images.begin(), images.end(), 0);
    std::vector<Permutation> elements;
    do {
        elements.push_back(Permutation::from_images(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return from_elements(alphabet_size, std::move(elements));
}

bool GaugeGroup::contains(const Permutation& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
}

int GaugeGroup::index_of(const Permutation& p) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    if (it == elements_.end() || *it != p) return -1;
    return static_cast<int>(it - elements_.begin());
}

GaugeTransformation GaugeTransformation::all_identity(const Topology& topology, int alphabet_size) {
    GaugeTransformation out(topology, alphabet_size);
    if (topology.is_ring())
        out.ring_assign_.assign(static_cast<size_t>(topology.ring_size()),
                                Permutation::identity(alphabet_size));
    return out;
}

GaugeTransformation GaugeTransformation::make(const Topology& topology, int alphabet_size,
                                              const std::vector<std::pair<int, Permutation>>& assignments) {
    GaugeTransformation out = all_identity(topology, alphabet_size);
    for (const auto& [pos, value] : assignments) {
        if (value.domain_size() != alphabet_size)
            throw std::invalid_argument("transformation element domain differs from alphabet size");
        if (topology.is_ring()) {
            if (pos < 0 || pos >= topology.ring_size())
                throw std::invalid_argument("position out of ring range");
            out.ring_assign_[static_cast<size_t>(pos)] = value;
        } else if (value.is_identity()) {
            out.line_assign_.erase(pos);
        } else {
            out.line_assign_[pos] = value;
        }
    }
    return out;
}

Permutation GaugeTransformation::at(int pos) const {
    if (topo_.is_ring()) return ring_assign_[static_cast<size_t>(topo_.normalize(pos))];
    auto it = line_assign_.find(pos);
    return it == line_assign_.end() ? Permutation::identity(alphabet_size_) : it->second;
}

GaugeTransformation GaugeTransformation::with(int pos, const Permutation& value) const {
    if (value.domain_size() != alphabet_size_)
        throw std::invalid_argument("transformation element domain differs from alphabet size");
    GaugeTransformation out = *this;
    if (topo_.is_ring()) {
        if (pos < 0 || pos >= topo_.ring_size())
            throw std::invalid_argument("position out of ring range");
        out.ring_assign_[static_cast<size_t>(pos)] = value;
    } else if (value.is_identity()) {
        out.line_assign_.erase(pos);
    } else {
        out.line_assign_[pos] = value;
    }
    return out;
}

bool GaugeTransformation::is_all_identity() const {
    if (topo_.is_ring()) {
        for (const auto& g : ring_assign_)
            if (!g.is_identity()) return false;
        return true;
    }
    return line_assign_.empty();
}

std::set<int> GaugeTransformation::support() const {
    std::set<int> out;
    if (topo_.is_ring()) {
        for (int x = 0; x < topo_.ring_size(); ++x)
            if (!ring_assign_[static_cast<size_t>(x)].is_identity()) out.insert(x);
    } else {
        for (const auto& [pos, g] : line_assign_) out.insert(pos);
    }
    return out;
}

GaugeTransformation GaugeTransformation::compose(const GaugeTransformation& other) const {
    if (topo_ != other.topo_ || alphabet_size_ != other.alphabet_size_)
        throw std::invalid_argument("composing transformations over different lattices");
    GaugeTransformation out = all_identity(topo_, alphabet_size_);
    if (topo_.is_ring()) {
        for (int x = 0; x < topo_.ring_size(); ++x)
            out.ring_assign_[static_cast<size_t>(x)] =
                at(x).compose(other.at(x));
    } else {
        std::set<int> positions = support();
        for (int p : other.support()) positions.insert(p);
        for (int p : positions) {
            Permutation g = at(p).compose(other.at(p));
            if (!g.is_identity()) out.line_assign_[p] = g;
        }
    }
    return out;
}

GaugeTransformation GaugeTransformation::inverse() const {
    GaugeTransformation out = all_identity(topo_, alphabet_size_);
    if (topo_.is_ring()) {
        for (int x = 0; x < topo_.ring_size(); ++x)
            out.ring_assign_[static_cast<size_t>(x)] = at(x).inverse();
    } else {
        for (const auto& [pos, g] : line_assign_) out.line_assign_[pos] = g.inverse();
    }
    return out;
}

bool GaugeTransformation::within(const GaugeGroup& group) const {
    if (topo_.is_ring()) {
        for (const auto& g : ring_assign_)
            if (!group.contains(g)) return false;
        return true;
    }
    for (const auto& [pos, g] : line_assign_)
        if (!group.contains(g)) return false;
    return true;
}

GaugedConfiguration apply_local(const Permutation& g, int at, const GaugedConfiguration& config) {
    if (g.domain_size() != config.alphabet_size())
        throw std::invalid_argument("transformation domain differs from alphabet size");
    if (config.topology().is_ring() && (at < 0 || at >= config.topology().ring_size()))
        throw std::invalid_argument("position out of ring range");

    const Cell c = config.cell(at);
    GaugedConfiguration out =
        config.with_cell(at, Cell{g.apply(c.left), g.apply(c.right)});
    const int left_link = config.topology().is_ring()
                              ? config.topology().normalize(at - 1)
                              : at - 1;
    out = out.with_link(left_link, config.link(left_link).compose(g.inverse()));
    // On a 2-ring the two links of a site are distinct, so reading from
    // `config` stays valid; `out` only changed the other link.
    out = out.with_link(at, g.compose(config.link(at)));
    return out;
}

GaugedConfiguration apply_global(const GaugeTransformation& gamma, const GaugedConfiguration& config) {
    if (gamma.topology() != config.topology() || gamma.alphabet_size() != config.alphabet_size())
        throw std::invalid_argument("transformation and configuration disagree on lattice");
    GaugedConfiguration out = config;
    if (config.topology().is_ring()) {
        for (int x = 0; x < config.topology().ring_size(); ++x) {
            const Permutation g = gamma.at(x);
            if (!g.is_identity()) out = apply_local(g, x, out);
        }
    } else {
        for (int x : gamma.support()) out = apply_local(gamma.at(x), x, out);
    }
    return out;
}

MatterConfiguration apply_global(const GaugeTransformation& gamma, const MatterConfiguration& config) {
    if (gamma.topology() != config.topology() || gamma.alphabet_size() != config.alphabet_size())
        throw std::invalid_argument("transformation and configuration disagree on lattice");
    MatterConfiguration out = config;
    std::set<int> positions = gamma.support();
    for (int x : positions) {
        const Permutation g = gamma.at(x);
        const Cell c = config.cell(x);
        out = out.with_cell(x, Cell{g.apply(c.left), g.apply(c.right)});
    }
    return out;
}

std::vector<GaugeTransformation> enumerate_transformations(const GaugeGroup& group,
                                                           const Topology& ring) {
    if (!ring.is_ring()) throw std::invalid_argument("exhaustive enumeration needs a ring");
    const int n = ring.ring_size();
    std::vector<GaugeTransformation> out;
    std::vector<int> odometer(static_cast<size_t>(n), 0);
    while (true) {
        std::vector<std::pair<int, Permutation>> assignment;
        for (int x = 0; x < n; ++x)
            assignment.emplace_back(x, group.element(odometer[static_cast<size_t>(x)]));
        out.push_back(GaugeTransformation::make(ring, group.alphabet_size(), assignment));
        int x = n - 1;
        while (x >= 0) {
            if (++odometer[static_cast<size_t>(x)] < group.size()) break;
            odometer[static_cast<size_t>(x)] = 0;
            --x;
        }
        if (x < 0) break;
    }
    return out;
}

std::vector<GaugedConfiguration> all_gauged_configurations(const Topology& ring,
                                                           const GaugeGroup& group) {
    if (!ring.is_ring() || ring.ring_size() < 2)
        throw std::invalid_argument("exhaustive enumeration needs a ring of size >= 2");
    const int n = ring.ring_size();
    std::vector<GaugedConfiguration> out;
    for (const auto& matter : all_matter_configurations(ring, group.alphabet_size())) {
        std::vector<int> odometer(static_cast<size_t>(n), 0);
        while (true) {
            std::vector<std::pair<int, Permutation>> field;
            for (int x = 0; x < n; ++x)
                field.emplace_back(x, group.element(odometer[static_cast<size_t>(x)]));
            out.push_back(GaugedConfiguration::make(matter, field));
            int x = n - 1;
            while (x >= 0) {
                if (++odometer[static_cast<size_t>(x)] < group.size()) break;
                odometer[static_cast<size_t>(x)] = 0;
                --x;
            }
            if (x < 0) break;
        }
    }
    return out;
}

}  // namespace gica
