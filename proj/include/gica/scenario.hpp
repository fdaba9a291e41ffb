#pragma once

#include "gica/automaton.hpp"
#include "gica/gauge_group.hpp"
#include "gica/qca.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gica {

/// Parse failure with position information; `what()` renders
/// "line L, col C: message".
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int col, const std::string& message);
    int line() const { return line_; }
    int col() const { return col_; }
    const std::string& message() const { return message_; }

private:
    int line_;
    int col_;
    std::string message_;
};

enum class ModelKind { Abelian, NonAbelian, Quantum };

/// When a gauge transformation is applied around the evolution:
/// Start transforms the initial configuration; End appends a transformed
/// final row; Both transforms at the start and appends the inverse at the
/// end; EachStep composes the transformation after every step.
enum class GaugeSchedule { None, Start, End, Both, EachStep };

/// One simulation or verification setup, as read from a scenario file.
/// Entry lists are sorted by position and hold only non-trivial values,
/// so parse/render round-trips compare equal.
struct Scenario {
    ModelKind model = ModelKind::Abelian;
    int alphabet_size = 2;                       // classical models
    RuleKind rule = RuleKind::Gauged;            // classical models
    ScatteringParams params{};                   // quantum model

    Topology topology = Topology::ring(2);

    std::vector<std::pair<int, Cell>> matter;             // non-quiescent cells / bits
    std::vector<std::pair<int, Permutation>> field_perms; // classical, non-identity links
    std::vector<std::pair<int, int>> field_ints;          // quantum, non-zero links

    GaugeSchedule schedule = GaugeSchedule::None;
    std::vector<std::pair<int, Permutation>> gauge_perms; // classical
    std::vector<std::pair<int, double>> gauge_phases;     // quantum

    int steps = 0;
    std::optional<uint64_t> seed;
    std::vector<std::string> checks;

    bool operator==(const Scenario&) const = default;
};

/// Known check names for the [run] checks list.
inline constexpr const char* kCheckLocalInvariance = "local_invariance";
inline constexpr const char* kCheckGlobalInvariance = "global_invariance";
inline constexpr const char* kCheckEquivalence = "equivalence";
inline constexpr const char* kCheckQuantumInvariance = "quantum_invariance";

/// Line-oriented `key = value` sections [model] [topology] [matter]
/// [field] [gauge] [run]; '#' starts a comment. Throws ParseError with
/// line/column on syntax or semantic violations.
Scenario parse_scenario(std::string_view text);

/// Canonical text; parse_scenario(render_scenario(s)) == s.
std::string render_scenario(const Scenario& scenario);

/// Builders from a parsed scenario to runtime objects.
GaugeGroup scenario_group(const Scenario& scenario);                 // classical
LinkRule scenario_rule(const Scenario& scenario);                    // classical
GaugedConfiguration scenario_initial(const Scenario& scenario);      // classical
GaugeTransformation scenario_transformation(const Scenario& scenario);
QcaBasisState scenario_initial_basis(const Scenario& scenario);      // quantum
PhaseProfile scenario_phase_profile(const Scenario& scenario);       // quantum

/// The classical space-time trace with the gauge schedule applied.
/// End/Both append one extra transformed row past the last step.
std::vector<GaugedConfiguration> scenario_trace(const Scenario& scenario);

/// Final configuration including any end-of-run transformation.
GaugedConfiguration scenario_final(const Scenario& scenario);

}  // namespace gica
