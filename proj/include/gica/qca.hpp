#pragma once

#include "gica/lattice.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gica {

using Complex = std::complex<double>;

/// The gauge-field counter left the truncation window |l| <= L_max, or a
/// gate input touched +-L_max so a shift could leave it. Never silently
/// clipped.
class TruncationOverflow : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ScatteringParams {
    double mass = 0.5;
    double spacing = 0.1;   // epsilon, distance between two lattice points
    double charge = 1.0;
    int field_cut = 4;      // L_max

    double s() const;       // sin(mass * spacing)
    double c() const;       // cos(mass * spacing)
    /// exp(i/2 * eps^2 * charge^2 * l^2), the field-fermion interaction
    /// phase, applied after the 4x4 block action on the output counter.
    Complex interaction_phase(int l) const;

    bool operator==(const ScatteringParams&) const = default;
};

/// Occupation-number basis state: one left-mover bit and one right-mover
/// bit per site, an integer counter per link. On the line only a finite
/// window is non-quiescent and the stored window is canonical (trimmed).
class QcaBasisState {
public:
    static QcaBasisState vacuum(const Topology& topology);

    /// occupations: (position, Cell with components in {0,1}) where left
    /// is the left-mover bit and right the right-mover bit.
    /// field: (link position x, counter value on link (x, x+1)).
    static QcaBasisState make(const Topology& topology,
                              const std::vector<std::pair<int, Cell>>& occupations,
                              const std::vector<std::pair<int, int>>& field = {});

    const Topology& topology() const { return topo_; }

    int left_bit(int pos) const;
    int right_bit(int pos) const;
    int field_at(int link) const;

    int particle_count() const;
    int max_abs_field() const;

    /// Window of stored sites: ring -> [0, n); line -> [origin, origin+k).
    int window_begin() const;
    int window_end() const;

    auto operator<=>(const QcaBasisState&) const = default;

private:
    friend class QcaStepper;

    explicit QcaBasisState(Topology topo) : topo_(topo) {}
    void canonicalize();

    Topology topo_;
    int32_t origin_ = 0;             // line window start
    std::vector<uint8_t> occ_;       // bit0 left-mover, bit1 right-mover
    std::vector<int16_t> field_;     // ring: n links; line: k-1 inner links
};

/// Sparse superposition over basis states; terms sorted by basis state so
/// iteration and accumulation are reproducible bit-for-bit.
class QuantumState {
public:
    using Term = std::pair<QcaBasisState, Complex>;

    QuantumState() = default;
    static QuantumState basis(const QcaBasisState& state);
    static QuantumState from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    Complex amplitude(const QcaBasisState& state) const;
    double norm() const;
    QuantumState normalized() const;
    QuantumState scaled(Complex factor) const;

    friend QuantumState operator+(const QuantumState& a, const QuantumState& b);
    friend QuantumState operator-(const QuantumState& a, const QuantumState& b);

private:
    std::vector<Term> terms_;
};

/// Basis label of one scattering gate: right-mover entering from the
/// left site, counter, left-mover entering from the right site.
struct GateInput {
    int m = 0;
    int l = 0;
    int n = 0;
    auto operator<=>(const GateInput&) const = default;
};

using GateAmplitudes = std::map<GateInput, Complex>;

/// One scattering unitary on (m, l, n): |0,l,0> fixed; |1,l,0> goes to
/// -is|1,l,0> + c|0,l-1,1>; |0,l,1> to -is|0,l,1> + c|1,l+1,0>;
/// |1,l,1> to -|1,l,1>; every output |., l, .> then picks up the
/// interaction phase. Throws TruncationOverflow when the input support
/// touches +-L_max.
GateAmplitudes scattering_gate(const ScatteringParams& params, const GateAmplitudes& in);

/// The sign gate on a freshly formed cell (left bit, right bit):
/// |11> -> -|11>, everything else unchanged.
using PairAmplitudes = std::map<std::pair<int, int>, Complex>;
PairAmplitudes s_gate(const PairAmplitudes& in);

/// One global step: scattering on every link simultaneously, then the
/// sign gate on every cell's freshly formed pair.
QuantumState qca_step(const ScatteringParams& params, const QuantumState& psi);

/// Position-indexed U(1) angle; finite support on the line, total on a
/// ring.
class PhaseProfile {
public:
    static PhaseProfile zero(const Topology& topology);
    static PhaseProfile make(const Topology& topology,
                             const std::vector<std::pair<int, double>>& values);

    const Topology& topology() const { return topo_; }
    double at(int pos) const;
    PhaseProfile negated() const;
    std::vector<std::pair<int, double>> entries() const;

private:
    explicit PhaseProfile(Topology topo) : topo_(topo) {}

    Topology topo_;
    std::vector<double> ring_vals_;
    std::map<int, double> line_vals_;
};

/// Total phase angle a basis state gains under the transformation: per
/// site, phi(x) for each occupied component, plus l*phi(x) for the left
/// link and -l*phi(x) for the right link.
double gauge_phase(const QcaBasisState& state, const PhaseProfile& phi);

/// Diagonal gauge transformation: every basis amplitude multiplied by
/// exp(i * gauge_phase).
QuantumState gauge_transform_q(const PhaseProfile& phi, const QuantumState& psi);

/// || step(transform(psi)) - transform(step(psi)) ||; zero iff the step
/// commutes with the transformation on this state.
double check_q_invariance(const ScatteringParams& params, const QuantumState& psi,
                          const PhaseProfile& phi);

/// Explicitly enumerated basis of a small ring sector with |l| <= cut,
/// for operator-level checks.
class TruncatedSpace {
public:
    static TruncatedSpace enumerate(const Topology& ring, int field_cut);

    const Topology& topology() const { return topo_; }
    int field_cut() const { return field_cut_; }
    int dimension() const { return static_cast<int>(basis_.size()); }
    const QcaBasisState& basis(int index) const { return basis_[static_cast<size_t>(index)]; }
    int index_of(const QcaBasisState& state) const;  // -1 when absent

private:
    TruncatedSpace(Topology topo, int cut) : topo_(topo), field_cut_(cut) {}

    Topology topo_;
    int field_cut_;
    std::vector<QcaBasisState> basis_;
};

/// Sparse linear operator on a truncated space.
class SparseOperator {
public:
    explicit SparseOperator(int dimension) : dimension_(dimension) {}

    static SparseOperator identity(const TruncatedSpace& space);
    static SparseOperator total_number(const TruncatedSpace& space);
    /// Adds one fermion in the given component slot at `pos` (no
    /// fermionic sign strings; the artifact keeps the printed matrices).
    enum class Component { Left, Right };
    static SparseOperator raising(const TruncatedSpace& space, int pos, Component which);

    int dimension() const { return dimension_; }
    void add(int row, int col, Complex value);
    const std::map<std::pair<int, int>, Complex>& entries() const { return entries_; }

private:
    int dimension_;
    std::map<std::pair<int, int>, Complex> entries_;
};

/// Frobenius norm of the commutator [gamma_phi, O] on the truncated
/// space; ~0 iff O is a physical observable under the constraint.
double check_observable_gauge_constraint(const TruncatedSpace& space, const SparseOperator& op,
                                         const PhaseProfile& phi);

}  // namespace gica
