#include "gica/lattice.hpp"

#include <stdexcept>

namespace gica {

Topology Topology::ring(int size) {
    if (size < 1) throw std::invalid_argument("ring size must be positive");
    return Topology(Kind::Ring, size);
}

int Topology::ring_size() const {
    if (!is_ring()) throw std::logic_error("ring_size on line topology");
    return size_;
}

int Topology::normalize(int pos) const {
    if (!is_ring()) return pos;
    int m = pos % size_;
    return m < 0 ? m + size_ : m;
}

MatterConfiguration MatterConfiguration::make(const Topology& topology, int alphabet_size,
                                              const std::vector<std::pair<int, Cell>>& assignments) {
    if (alphabet_size < 1) throw std::invalid_argument("alphabet size must be positive");
    MatterConfiguration config(topology, alphabet_size);
    if (topology.is_ring())
        config.ring_cells_.assign(static_cast<size_t>(topology.ring_size()), kQuiescent);
    for (const auto& [pos, value] : assignments) {
        config.check_position(pos);
        config.check_cell(value);
        if (topology.is_ring()) {
            config.ring_cells_[static_cast<size_t>(pos)] = value;
        } else if (value == kQuiescent) {
            config.line_cells_.erase(pos);
        } else {
            config.line_cells_[pos] = value;
        }
    }
    return config;
}

void MatterConfiguration::check_position(int pos) const {
    if (topo_.is_ring() && (pos < 0 || pos >= topo_.ring_size()))
        throw std::invalid_argument("position out of ring range");
}

void MatterConfiguration::check_cell(Cell value) const {
    if (value.left < 0 || value.left >= alphabet_size_ || value.right < 0 ||
        value.right >= alphabet_size_)
        throw std::invalid_argument("cell component outside alphabet bound");
}

Cell MatterConfiguration::cell(int pos) const {
    if (topo_.is_ring()) return ring_cells_[static_cast<size_t>(topo_.normalize(pos))];
    auto it = line_cells_.find(pos);
    return it == line_cells_.end() ? kQuiescent : it->second;
}

MatterConfiguration MatterConfiguration::with_cell(int pos, Cell value) const {
    check_position(pos);
    check_cell(value);
    MatterConfiguration out = *this;
    if (topo_.is_ring()) {
        out.ring_cells_[static_cast<size_t>(pos)] = value;
    } else if (value == kQuiescent) {
        out.line_cells_.erase(pos);
    } else {
        out.line_cells_[pos] = value;
    }
    return out;
}

std::set<int> MatterConfiguration::support() const {
    std::set<int> out;
    if (topo_.is_ring()) {
        for (int x = 0; x < topo_.ring_size(); ++x)
            if (ring_cells_[static_cast<size_t>(x)] != kQuiescent) out.insert(x);
    } else {
        for (const auto& [pos, value] : line_cells_) out.insert(pos);
    }
    return out;
}

GaugedConfiguration GaugedConfiguration::make(MatterConfiguration matter,
                                              const std::vector<std::pair<int, Permutation>>& field) {
    if (matter.topology().is_ring() && matter.topology().ring_size() < 2)
        throw std::invalid_argument("gauged configurations need ring size >= 2");
    GaugedConfiguration config(std::move(matter));
    const Permutation id = Permutation::identity(config.alphabet_size());
    if (config.topology().is_ring())
        config.ring_field_.assign(static_cast<size_t>(config.topology().ring_size()), id);
    for (const auto& [x, value] : field) {
        const int pos = config.check_link(x);
        if (value.domain_size() != config.alphabet_size())
            throw std::invalid_argument("field element domain differs from alphabet size");
        if (config.topology().is_ring()) {
            config.ring_field_[static_cast<size_t>(pos)] = value;
        } else if (value.is_identity()) {
            config.line_field_.erase(pos);
        } else {
            config.line_field_[pos] = value;
        }
    }
    return config;
}

int GaugedConfiguration::check_link(int x) const {
    if (topology().is_ring()) {
        if (x < 0 || x >= topology().ring_size())
            throw std::invalid_argument("link position out of ring range");
    }
    return x;
}

Permutation GaugedConfiguration::link(int x) const {
    if (topology().is_ring())
        return ring_field_[static_cast<size_t>(topology().normalize(x))];
    auto it = line_field_.find(x);
    return it == line_field_.end() ? Permutation::identity(alphabet_size()) : it->second;
}

GaugedConfiguration GaugedConfiguration::with_matter(MatterConfiguration matter) const {
    if (matter.topology() != topology() || matter.alphabet_size() != alphabet_size())
        throw std::invalid_argument("replacement matter has different topology or alphabet");
    GaugedConfiguration out = *this;
    out.matter_ = std::move(matter);
    return out;
}

GaugedConfiguration GaugedConfiguration::with_cell(int pos, Cell value) const {
    GaugedConfiguration out = *this;
    out.matter_ = matter_.with_cell(pos, value);
    return out;
}

GaugedConfiguration GaugedConfiguration::with_link(int x, const Permutation& value) const {
    check_link(x);
    if (value.domain_size() != alphabet_size())
        throw std::invalid_argument("field element domain differs from alphabet size");
    GaugedConfiguration out = *this;
    if (topology().is_ring()) {
        out.ring_field_[static_cast<size_t>(x)] = value;
    } else if (value.is_identity()) {
        out.line_field_.erase(x);
    } else {
        out.line_field_[x] = value;
    }
    return out;
}

std::set<int> GaugedConfiguration::field_support() const {
    std::set<int> out;
    if (topology().is_ring()) {
        for (int x = 0; x < topology().ring_size(); ++x)
            if (!ring_field_[static_cast<size_t>(x)].is_identity()) out.insert(x);
    } else {
        for (const auto& [pos, value] : line_field_) out.insert(pos);
    }
    return out;
}

std::vector<Cell> all_cells(int alphabet_size) {
    std::vector<Cell> out;
    out.reserve(static_cast<size_t>(alphabet_size) * static_cast<size_t>(alphabet_size));
    for (int l = 0; l < alphabet_size; ++l)
        for (int r = 0; r < alphabet_size; ++r) out.push_back(Cell{l, r});
    return out;
}

std::vector<MatterConfiguration> all_matter_configurations(const Topology& ring, int alphabet_size) {
    if (!ring.is_ring()) throw std::invalid_argument("exhaustive enumeration needs a ring");
    const int n = ring.ring_size();
    const auto cells = all_cells(alphabet_size);
    std::vector<MatterConfiguration> out;
    std::vector<size_t> odometer(static_cast<size_t>(n), 0);
    while (true) {
        std::vector<std::pair<int, Cell>> assignment;
        for (int x = 0; x < n; ++x) assignment.emplace_back(x, cells[odometer[static_cast<size_t>(x)]]);
        out.push_back(MatterConfiguration::make(ring, alphabet_size, assignment));
        int x = n - 1;
        while (x >= 0) {
            if (++odometer[static_cast<size_t>(x)] < cells.size()) break;
            odometer[static_cast<size_t>(x)] = 0;
            --x;
        }
        if (x < 0) break;
    }
    return out;
}

}  // namespace gica
