#include "gica/qca.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace gica {

double ScatteringParams::s() const { return std::sin(mass * spacing); }
double ScatteringParams::c() const { return std::cos(mass * spacing); }

Complex ScatteringParams::interaction_phase(int l) const {
    const double angle = 0.5 * spacing * spacing * charge * charge *
                         static_cast<double>(l) * static_cast<double>(l);
    return std::polar(1.0, angle);
}

QcaBasisState QcaBasisState::vacuum(const Topology& topology) {
    QcaBasisState state(topology);
    if (topology.is_ring()) {
        if (topology.ring_size() < 2)
            throw std::invalid_argument("quantum states need ring size >= 2");
        state.occ_.assign(static_cast<size_t>(topology.ring_size()), 0);
        state.field_.assign(static_cast<size_t>(topology.ring_size()), 0);
    }
    return state;
}

QcaBasisState QcaBasisState::make(const Topology& topology,
                                  const std::vector<std::pair<int, Cell>>& occupations,
                                  const std::vector<std::pair<int, int>>& field) {
    QcaBasisState state = vacuum(topology);
    if (topology.is_ring()) {
        const int n = topology.ring_size();
        for (const auto& [pos, bits] : occupations) {
            if (pos < 0 || pos >= n) throw std::invalid_argument("position out of ring range");
            if (bits.left < 0 || bits.left > 1 || bits.right < 0 || bits.right > 1)
                throw std::invalid_argument("occupation bits must be 0 or 1");
            state.occ_[static_cast<size_t>(pos)] =
                static_cast<uint8_t>(bits.left | (bits.right << 1));
        }
        for (const auto& [x, l] : field) {
            if (x < 0 || x >= n) throw std::invalid_argument("link position out of ring range");
            state.field_[static_cast<size_t>(x)] = static_cast<int16_t>(l);
        }
        return state;
    }

    bool any = false;
    int lo = 0, hi = 0;  // inclusive cell range
    auto grow = [&](int a, int b) {
        if (!any) {
            lo = a;
            hi = b;
            any = true;
        } else {
            lo = std::min(lo, a);
            hi = std::max(hi, b);
        }
    };
    for (const auto& [pos, bits] : occupations) {
        if (bits.left < 0 || bits.left > 1 || bits.right < 0 || bits.right > 1)
            throw std::invalid_argument("occupation bits must be 0 or 1");
        if (bits != kQuiescent) grow(pos, pos);
    }
    for (const auto& [x, l] : field)
        if (l != 0) grow(x, x + 1);
    if (!any) return state;

    state.origin_ = lo;
    state.occ_.assign(static_cast<size_t>(hi - lo + 1), 0);
    state.field_.assign(static_cast<size_t>(hi - lo), 0);
    for (const auto& [pos, bits] : occupations)
        if (bits != kQuiescent)
            state.occ_[static_cast<size_t>(pos - lo)] =
                static_cast<uint8_t>(bits.left | (bits.right << 1));
    for (const auto& [x, l] : field)
        if (l != 0) state.field_[static_cast<size_t>(x - lo)] = static_cast<int16_t>(l);
    state.canonicalize();
    return state;
}

void QcaBasisState::canonicalize() {
    if (topo_.is_ring()) return;
    size_t begin = 0, end = occ_.size();
    while (begin < end && occ_[begin] == 0 && (begin >= field_.size() || field_[begin] == 0))
        ++begin;
    while (end > begin && occ_[end - 1] == 0 && (end - 1 == begin || field_[end - 2] == 0))
        --end;
    if (begin == end) {
        origin_ = 0;
        occ_.clear();
        field_.clear();
        return;
    }
    if (begin > 0 || end < occ_.size()) {
        origin_ += static_cast<int32_t>(begin);
        occ_ = std::vector<uint8_t>(occ_.begin() + static_cast<long>(begin),
                                    occ_.begin() + static_cast<long>(end));
        field_ = std::vector<int16_t>(field_.begin() + static_cast<long>(begin),
                                      field_.begin() + static_cast<long>(end) - 1);
    }
}

int QcaBasisState::left_bit(int pos) const {
    if (topo_.is_ring()) return occ_[static_cast<size_t>(topo_.normalize(pos))] & 1;
    const int idx = pos - origin_;
    if (idx < 0 || idx >= static_cast<int>(occ_.size())) return 0;
    return occ_[static_cast<size_t>(idx)] & 1;
}

int QcaBasisState::right_bit(int pos) const {
    if (topo_.is_ring()) return (occ_[static_cast<size_t>(topo_.normalize(pos))] >> 1) & 1;
    const int idx = pos - origin_;
    if (idx < 0 || idx >= static_cast<int>(occ_.size())) return 0;
    return (occ_[static_cast<size_t>(idx)] >> 1) & 1;
}

int QcaBasisState::field_at(int link) const {
    if (topo_.is_ring()) return field_[static_cast<size_t>(topo_.normalize(link))];
    const int idx = link - origin_;
    if (idx < 0 || idx >= static_cast<int>(field_.size())) return 0;
    return field_[static_cast<size_t>(idx)];
}

int QcaBasisState::particle_count() const {
    int count = 0;
    for (uint8_t bits : occ_) count += (bits & 1) + ((bits >> 1) & 1);
    return count;
}

int QcaBasisState::max_abs_field() const {
    int out = 0;
    for (int16_t l : field_) out = std::max(out, std::abs(static_cast<int>(l)));
    return out;
}

int QcaBasisState::window_begin() const { return topo_.is_ring() ? 0 : origin_; }
int QcaBasisState::window_end() const {
    return topo_.is_ring() ? topo_.ring_size() : origin_ + static_cast<int>(occ_.size());
}

QuantumState QuantumState::basis(const QcaBasisState& state) {
    QuantumState out;
    out.terms_.emplace_back(state, Complex{1.0, 0.0});
    return out;
}

QuantumState QuantumState::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    QuantumState out;
    for (auto& term : terms) {
        if (!out.terms_.empty() && out.terms_.back().first == term.first)
            out.terms_.back().second += term.second;
        else
            out.terms_.push_back(std::move(term));
    }
    std::erase_if(out.terms_, [](const Term& t) { return t.second == Complex{}; });
    return out;
}

Complex QuantumState::amplitude(const QcaBasisState& state) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), state,
                               [](const Term& t, const QcaBasisState& s) { return t.first < s; });
    if (it == terms_.end() || !(it->first == state)) return Complex{};
    return it->second;
}

double QuantumState::norm() const {
    double sum = 0.0;
    for (const auto& [state, amp] : terms_) sum += std::norm(amp);
    return std::sqrt(sum);
}

QuantumState QuantumState::normalized() const {
    const double n = norm();
    if (n == 0.0) throw std::invalid_argument("cannot normalize the zero vector");
    return scaled(Complex{1.0 / n, 0.0});
}

QuantumState QuantumState::scaled(Complex factor) const {
    QuantumState out = *this;
    for (auto& [state, amp] : out.terms_) amp *= factor;
    std::erase_if(out.terms_, [](const Term& t) { return t.second == Complex{}; });
    return out;
}

QuantumState operator+(const QuantumState& a, const QuantumState& b) {
    std::vector<QuantumState::Term> terms = a.terms_;
    terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
    return QuantumState::from_terms(std::move(terms));
}

QuantumState operator-(const QuantumState& a, const QuantumState& b) {
    return a + b.scaled(Complex{-1.0, 0.0});
}

namespace {

struct LocalBranch {
    int left_bit_out;   // new left-mover at the link's left end
    int l_out;
    int right_bit_out;  // new right-mover at the link's right end
    Complex amp;
};

void local_branches(const ScatteringParams& p, int m, int l, int n,
                    std::vector<LocalBranch>& out) {
    out.clear();
    if (std::abs(l) >= p.field_cut)
        throw TruncationOverflow("gauge-field support touches the truncation bound L_max=" +
                                 std::to_string(p.field_cut));
    const double s = p.s();
    const double c = p.c();
    const Complex minus_is{0.0, -s};
    if (m == 0 && n == 0) {
        out.push_back({0, l, 0, p.interaction_phase(l)});
    } else if (m == 1 && n == 0) {
        if (s != 0.0) out.push_back({1, l, 0, minus_is * p.interaction_phase(l)});
        if (c != 0.0) out.push_back({0, l - 1, 1, c * p.interaction_phase(l - 1)});
    } else if (m == 0 && n == 1) {
        if (s != 0.0) out.push_back({0, l, 1, minus_is * p.interaction_phase(l)});
        if (c != 0.0) out.push_back({1, l + 1, 0, c * p.interaction_phase(l + 1)});
    } else {
        out.push_back({1, l, 1, -p.interaction_phase(l)});
    }
}

}  // namespace

GateAmplitudes scattering_gate(const ScatteringParams& params, const GateAmplitudes& in) {
    GateAmplitudes out;
    std::vector<LocalBranch> branches;
    for (const auto& [input, amp] : in) {
        if (input.m < 0 || input.m > 1 || input.n < 0 || input.n > 1)
            throw std::invalid_argument("occupation bits must be 0 or 1");
        if (amp == Complex{}) continue;
        local_branches(params, input.m, input.l, input.n, branches);
        for (const auto& br : branches)
            out[GateInput{br.left_bit_out, br.l_out, br.right_bit_out}] += amp * br.amp;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == Complex{}; });
    return out;
}

PairAmplitudes s_gate(const PairAmplitudes& in) {
    PairAmplitudes out;
    for (const auto& [bits, amp] : in) {
        if (bits.first < 0 || bits.first > 1 || bits.second < 0 || bits.second > 1)
            throw std::invalid_argument("occupation bits must be 0 or 1");
        out[bits] = (bits.first == 1 && bits.second == 1) ? -amp : amp;
    }
    return out;
}

/// Expands one basis term through the link gates and the sign gates.
class QcaStepper {
public:
    QcaStepper(const ScatteringParams& params) : params_(params) {}

    void expand(const QcaBasisState& state, Complex amp,
                std::vector<QuantumState::Term>& sink) {
        const Topology& topo = state.topology();
        const bool ring = topo.is_ring();
        const int begin = ring ? 0 : state.window_begin() - 1;
        const int end = ring ? topo.ring_size() : state.window_end() + 1;  // cells [begin, end)
        const int cells = end - begin;
        const int links = ring ? cells : cells - 1;
        if (cells <= 0) {
            // Line vacuum: every gate fixes (0, 0, 0).
            QcaBasisState out(state);
            sink.emplace_back(std::move(out), amp);
            return;
        }

        partials_.clear();
        partials_.push_back(Partial{std::vector<uint8_t>(static_cast<size_t>(cells), 0),
                                    std::vector<int16_t>(static_cast<size_t>(links), 0), amp});
        std::vector<LocalBranch> branches;
        scratch_.clear();
        for (int j = 0; j < links; ++j) {
            const int x = begin + j;
            const int m = state.right_bit(x);
            const int l = state.field_at(x);
            const int n = state.left_bit(x + 1);
            local_branches(params_, m, l, n, branches);
            scratch_.clear();
            for (const auto& partial : partials_) {
                for (const auto& br : branches) {
                    Partial next = partial;
                    next.occ[static_cast<size_t>(j)] |= static_cast<uint8_t>(br.left_bit_out);
                    const int right_cell = ring ? (j + 1) % cells : j + 1;
                    next.occ[static_cast<size_t>(right_cell)] |=
                        static_cast<uint8_t>(br.right_bit_out << 1);
                    next.field[static_cast<size_t>(j)] = static_cast<int16_t>(br.l_out);
                    next.amp *= br.amp;
                    scratch_.push_back(std::move(next));
                }
            }
            partials_.swap(scratch_);
        }

        for (auto& partial : partials_) {
            for (uint8_t bits : partial.occ)
                if ((bits & 3) == 3) partial.amp = -partial.amp;
            QcaBasisState out(topo);
            out.origin_ = ring ? 0 : begin;
            out.occ_ = std::move(partial.occ);
            out.field_ = std::move(partial.field);
            out.canonicalize();
            sink.emplace_back(std::move(out), partial.amp);
        }
    }

private:
    struct Partial {
        std::vector<uint8_t> occ;
        std::vector<int16_t> field;
        Complex amp;
    };

    const ScatteringParams& params_;
    std::vector<Partial> partials_;
    std::vector<Partial> scratch_;
};

QuantumState qca_step(const ScatteringParams& params, const QuantumState& psi) {
    if (psi.empty()) return psi;
    const Topology topo = psi.terms().front().first.topology();
    std::vector<QuantumState::Term> sink;
    sink.reserve(psi.size() * 2);
    QcaStepper stepper(params);
    for (const auto& [state, amp] : psi.terms()) {
        if (state.topology() != topo)
            throw std::invalid_argument("state mixes topologies");
        stepper.expand(state, amp, sink);
    }
    return QuantumState::from_terms(std::move(sink));
}

PhaseProfile PhaseProfile::zero(const Topology& topology) {
    PhaseProfile out(topology);
    if (topology.is_ring())
        out.ring_vals_.assign(static_cast<size_t>(topology.ring_size()), 0.0);
    return out;
}

PhaseProfile PhaseProfile::make(const Topology& topology,
                                const std::vector<std::pair<int, double>>& values) {
    PhaseProfile out = zero(topology);
    for (const auto& [pos, phi] : values) {
        if (topology.is_ring()) {
            if (pos < 0 || pos >= topology.ring_size())
                throw std::invalid_argument("position out of ring range");
            out.ring_vals_[static_cast<size_t>(pos)] = phi;
        } else if (phi == 0.0) {
            out.line_vals_.erase(pos);
        } else {
            out.line_vals_[pos] = phi;
        }
    }
    return out;
}

double PhaseProfile::at(int pos) const {
    if (topo_.is_ring()) return ring_vals_[static_cast<size_t>(topo_.normalize(pos))];
    auto it = line_vals_.find(pos);
    return it == line_vals_.end() ? 0.0 : it->second;
}

PhaseProfile PhaseProfile::negated() const {
    PhaseProfile out = *this;
    for (auto& v : out.ring_vals_) v = -v;
    for (auto& [pos, v] : out.line_vals_) v = -v;
    return out;
}

std::vector<std::pair<int, double>> PhaseProfile::entries() const {
    std::vector<std::pair<int, double>> out;
    if (topo_.is_ring()) {
        for (int x = 0; x < topo_.ring_size(); ++x)
            out.emplace_back(x, ring_vals_[static_cast<size_t>(x)]);
    } else {
        out.assign(line_vals_.begin(), line_vals_.end());
    }
    return out;
}

double gauge_phase(const QcaBasisState& state, const PhaseProfile& phi) {
    if (state.topology() != phi.topology())
        throw std::invalid_argument("state and phase profile disagree on topology");
    double angle = 0.0;
    const int begin = state.window_begin();
    const int end = state.window_end();
    for (int x = begin; x < end; ++x)
        angle += phi.at(x) * static_cast<double>(state.left_bit(x) + state.right_bit(x));
    const int link_end = state.topology().is_ring() ? end : end - 1;
    for (int x = begin; x < link_end; ++x) {
        const int l = state.field_at(x);
        if (l != 0) angle += static_cast<double>(l) * (phi.at(x + 1) - phi.at(x));
    }
    return angle;
}

QuantumState gauge_transform_q(const PhaseProfile& phi, const QuantumState& psi) {
    std::vector<QuantumState::Term> terms = psi.terms();
    for (auto& [state, amp] : terms) amp *= std::polar(1.0, gauge_phase(state, phi));
    return QuantumState::from_terms(std::move(terms));
}

double check_q_invariance(const ScatteringParams& params, const QuantumState& psi,
                          const PhaseProfile& phi) {
    const QuantumState transformed_first = qca_step(params, gauge_transform_q(phi, psi));
    const QuantumState stepped_first = gauge_transform_q(phi, qca_step(params, psi));
    return (transformed_first - stepped_first).norm();
}

TruncatedSpace TruncatedSpace::enumerate(const Topology& ring, int field_cut) {
    if (!ring.is_ring() || ring.ring_size() < 2)
        throw std::invalid_argument("truncated spaces are enumerated over rings of size >= 2");
    if (field_cut < 0) throw std::invalid_argument("field cut must be non-negative");
    TruncatedSpace space(ring, field_cut);
    const int n = ring.ring_size();

    std::vector<int> occ(static_cast<size_t>(n), 0);
    std::vector<int> field(static_cast<size_t>(n), -field_cut);
    while (true) {
        std::vector<std::pair<int, Cell>> occupations;
        std::vector<std::pair<int, int>> links;
        for (int x = 0; x < n; ++x) {
            occupations.emplace_back(x, Cell{occ[static_cast<size_t>(x)] & 1,
                                             (occ[static_cast<size_t>(x)] >> 1) & 1});
            links.emplace_back(x, field[static_cast<size_t>(x)]);
        }
        space.basis_.push_back(QcaBasisState::make(ring, occupations, links));

        int x = n - 1;
        while (x >= 0) {
            if (++field[static_cast<size_t>(x)] <= field_cut) break;
            field[static_cast<size_t>(x)] = -field_cut;
            --x;
        }
        if (x >= 0) continue;
        x = n - 1;
        while (x >= 0) {
            if (++occ[static_cast<size_t>(x)] < 4) break;
            occ[static_cast<size_t>(x)] = 0;
            --x;
        }
        if (x < 0) break;
    }
    std::sort(space.basis_.begin(), space.basis_.end());
    return space;
}

int TruncatedSpace::index_of(const QcaBasisState& state) const {
    auto it = std::lower_bound(basis_.begin(), basis_.end(), state);
    if (it == basis_.end() || !(*it == state)) return -1;
    return static_cast<int>(it - basis_.begin());
}

void SparseOperator::add(int row, int col, Complex value) {
    if (row < 0 || row >= dimension_ || col < 0 || col >= dimension_)
        throw std::invalid_argument("operator entry out of range");
    entries_[{row, col}] += value;
}

SparseOperator SparseOperator::identity(const TruncatedSpace& space) {
    SparseOperator op(space.dimension());
    for (int i = 0; i < space.dimension(); ++i) op.add(i, i, Complex{1.0, 0.0});
    return op;
}

SparseOperator SparseOperator::total_number(const TruncatedSpace& space) {
    SparseOperator op(space.dimension());
    for (int i = 0; i < space.dimension(); ++i) {
        const double count = space.basis(i).particle_count();
        if (count != 0.0) op.add(i, i, Complex{count, 0.0});
    }
    return op;
}

SparseOperator SparseOperator::raising(const TruncatedSpace& space, int pos, Component which) {
    SparseOperator op(space.dimension());
    const Topology& topo = space.topology();
    const int n = topo.ring_size();
    for (int i = 0; i < space.dimension(); ++i) {
        const QcaBasisState& b = space.basis(i);
        const int bit = which == Component::Left ? b.left_bit(pos) : b.right_bit(pos);
        if (bit == 1) continue;
        std::vector<std::pair<int, Cell>> occupations;
        std::vector<std::pair<int, int>> links;
        for (int x = 0; x < n; ++x) {
            Cell cell{b.left_bit(x), b.right_bit(x)};
            if (x == topo.normalize(pos)) {
                if (which == Component::Left)
                    cell.left = 1;
                else
                    cell.right = 1;
            }
            occupations.emplace_back(x, cell);
            links.emplace_back(x, b.field_at(x));
        }
        const int j = space.index_of(QcaBasisState::make(topo, occupations, links));
        op.add(j, i, Complex{1.0, 0.0});
    }
    return op;
}

double check_observable_gauge_constraint(const TruncatedSpace& space, const SparseOperator& op,
                                         const PhaseProfile& phi) {
    if (op.dimension() != space.dimension())
        throw std::invalid_argument("operator dimension differs from space dimension");
    std::vector<Complex> diag(static_cast<size_t>(space.dimension()));
    for (int i = 0; i < space.dimension(); ++i)
        diag[static_cast<size_t>(i)] = std::polar(1.0, gauge_phase(space.basis(i), phi));
    double sum = 0.0;
    for (const auto& [pos, value] : op.entries()) {
        const Complex difference = diag[static_cast<size_t>(pos.first)] -
                                   diag[static_cast<size_t>(pos.second)];
        sum += std::norm(difference * value);
    }
    return std::sqrt(sum);
}

}  // namespace gica
