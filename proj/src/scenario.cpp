#include "gica/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <set>

namespace gica {

ParseError::ParseError(int line, int col, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " +
                         message),
      line_(line),
      col_(col),
      message_(message) {}

namespace {

struct RawEntry {
    int line = 0;
    int key_col = 0;
    int value_col = 0;
    std::string key;
    std::string value;
};

struct RawSections {
    std::map<std::string, std::vector<RawEntry>> entries;
    std::set<std::string> seen;
};

const std::set<std::string> kSections = {"model", "topology", "matter", "field", "gauge", "run"};

std::string_view trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
    return s.substr(b, e - b);
}

RawSections tokenize(std::string_view text) {
    RawSections out;
    std::string current;
    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        const size_t eol = text.find('\n', pos);
        std::string_view raw = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                              : eol - pos);
        ++line_no;
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

        const size_t hash = raw.find('#');
        if (hash != std::string_view::npos) raw = raw.substr(0, hash);
        const std::string_view content = trim(raw);
        if (content.empty()) continue;
        const int first_col = static_cast<int>(raw.find_first_not_of(" \t")) + 1;

        if (content.front() == '[') {
            if (content.back() != ']')
                throw ParseError(line_no, first_col, "section header missing ']'");
            const std::string name(trim(content.substr(1, content.size() - 2)));
            if (!kSections.contains(name))
                throw ParseError(line_no, first_col, "unknown section [" + name + "]");
            if (out.seen.contains(name))
                throw ParseError(line_no, first_col, "duplicate section [" + name + "]");
            out.seen.insert(name);
            current = name;
            continue;
        }
        if (current.empty())
            throw ParseError(line_no, first_col, "entry before any section header");

        const size_t eq = content.find('=');
        if (eq == std::string_view::npos)
            throw ParseError(line_no, first_col, "expected 'key = value'");
        RawEntry entry;
        entry.line = line_no;
        entry.key = std::string(trim(content.substr(0, eq)));
        entry.value = std::string(trim(content.substr(eq + 1)));
        entry.key_col = first_col;
        const size_t value_off = raw.find_first_not_of(" \t", raw.find('=') + 1);
        entry.value_col = value_off == std::string_view::npos ? static_cast<int>(raw.size()) + 1
                                                              : static_cast<int>(value_off) + 1;
        if (entry.key.empty()) throw ParseError(line_no, first_col, "empty key");
        if (entry.value.empty()) throw ParseError(line_no, entry.value_col, "empty value");
        out.entries[current].push_back(std::move(entry));
    }
    return out;
}

int parse_int(const RawEntry& e, const std::string& what, bool key_side = false) {
    const std::string& text = key_side ? e.key : e.value;
    const int col = key_side ? e.key_col : e.value_col;
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ParseError(e.line, col, "expected an integer " + what + ", got '" + text + "'");
    return value;
}

double parse_real(const RawEntry& e, const std::string& what) {
    const char* begin = e.value.c_str();
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end != begin + e.value.size() || e.value.empty())
        throw ParseError(e.line, e.value_col, "expected a real " + what + ", got '" + e.value + "'");
    return value;
}

uint64_t parse_u64(const RawEntry& e) {
    uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(e.value.data(), e.value.data() + e.value.size(), value);
    if (ec != std::errc{} || ptr != e.value.data() + e.value.size())
        throw ParseError(e.line, e.value_col, "expected an unsigned seed, got '" + e.value + "'");
    return value;
}

Cell parse_cell(const RawEntry& e) {
    const size_t comma = e.value.find(',');
    if (comma == std::string::npos)
        throw ParseError(e.line, e.value_col, "expected 'left,right' cell components");
    const std::string left(trim(std::string_view(e.value).substr(0, comma)));
    const std::string right(trim(std::string_view(e.value).substr(comma + 1)));
    int l = 0, r = 0;
    auto lr = std::from_chars(left.data(), left.data() + left.size(), l);
    auto rr = std::from_chars(right.data(), right.data() + right.size(), r);
    if (lr.ec != std::errc{} || lr.ptr != left.data() + left.size() || rr.ec != std::errc{} ||
        rr.ptr != right.data() + right.size())
        throw ParseError(e.line, e.value_col, "expected integer cell components");
    return Cell{l, r};
}

Permutation parse_perm(const RawEntry& e, int alphabet_size) {
    try {
        return Permutation::parse_cycles(alphabet_size, e.value);
    } catch (const std::invalid_argument& err) {
        throw ParseError(e.line, e.value_col, std::string("bad permutation word: ") + err.what());
    }
}

void check_ring_position(const RawEntry& e, const Topology& topo, int pos) {
    if (topo.is_ring() && (pos < 0 || pos >= topo.ring_size()))
        throw ParseError(e.line, e.key_col,
                         "position " + std::to_string(pos) + " outside ring of size " +
                             std::to_string(topo.ring_size()));
}

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
    RawSections raw = tokenize(text);
    Scenario s;

    // --- [model] ---
    if (!raw.seen.contains("model")) throw ParseError(1, 1, "missing [model] section");
    bool have_type = false;
    std::optional<int> n_value;
    int n_line = 0;
    std::map<std::string, int> classical_keys, quantum_keys;
    for (const RawEntry& e : raw.entries["model"]) {
        if (e.key == "rule")
            classical_keys.emplace(e.key, e.line);
        else if (e.key == "mass" || e.key == "epsilon" || e.key == "charge" || e.key == "lmax")
            quantum_keys.emplace(e.key, e.line);
        if (e.key == "type") {
            have_type = true;
            if (e.value == "abelian")
                s.model = ModelKind::Abelian;
            else if (e.value == "nonabelian")
                s.model = ModelKind::NonAbelian;
            else if (e.value == "quantum")
                s.model = ModelKind::Quantum;
            else
                throw ParseError(e.line, e.value_col,
                                 "model type must be abelian, nonabelian or quantum");
        } else if (e.key == "n") {
            n_value = parse_int(e, "alphabet size");
            n_line = e.line;
        } else if (e.key == "rule") {
            if (e.value == "gauged")
                s.rule = RuleKind::Gauged;
            else if (e.value == "bare")
                s.rule = RuleKind::Bare;
            else
                throw ParseError(e.line, e.value_col, "rule must be gauged or bare");
        } else if (e.key == "mass") {
            s.params.mass = parse_real(e, "mass");
        } else if (e.key == "epsilon") {
            s.params.spacing = parse_real(e, "lattice spacing");
            if (s.params.spacing <= 0.0)
                throw ParseError(e.line, e.value_col, "epsilon must be positive");
        } else if (e.key == "charge") {
            s.params.charge = parse_real(e, "charge");
        } else if (e.key == "lmax") {
            s.params.field_cut = parse_int(e, "field truncation");
            if (s.params.field_cut < 0)
                throw ParseError(e.line, e.value_col, "lmax must be non-negative");
        } else {
            throw ParseError(e.line, e.key_col, "unknown [model] key '" + e.key + "'");
        }
    }
    if (!have_type) throw ParseError(1, 1, "[model] needs a type");
    const bool quantum = s.model == ModelKind::Quantum;
    if (quantum && !classical_keys.empty())
        throw ParseError(classical_keys.begin()->second, 1,
                         "'" + classical_keys.begin()->first + "' applies to classical models");
    if (!quantum && !quantum_keys.empty())
        throw ParseError(quantum_keys.begin()->second, 1,
                         "'" + quantum_keys.begin()->first + "' applies to the quantum model");
    if (quantum) {
        if (n_value)
            throw ParseError(n_line, 1, "n applies to classical models only");
        s.alphabet_size = 2;
    } else {
        s.alphabet_size = n_value.value_or(s.model == ModelKind::Abelian ? 2 : 3);
        if (s.model == ModelKind::Abelian && s.alphabet_size != 2)
            throw ParseError(n_line ? n_line : 1, 1, "the abelian model fixes n = 2");
        if (s.model == ModelKind::NonAbelian && (s.alphabet_size < 2 || s.alphabet_size > 5))
            throw ParseError(n_line ? n_line : 1, 1, "nonabelian n must lie in 2..5");
    }

    // --- [topology] ---
    if (!raw.seen.contains("topology")) throw ParseError(1, 1, "missing [topology] section");
    {
        const auto& entries = raw.entries["topology"];
        if (entries.size() != 1)
            throw ParseError(entries.empty() ? 1 : entries[1].line, 1,
                             "[topology] needs exactly one of 'ring = <n>' or 'line = yes'");
        const RawEntry& e = entries.front();
        if (e.key == "ring") {
            const int size = parse_int(e, "ring size");
            if (size < 2) throw ParseError(e.line, e.value_col, "ring size must be at least 2");
            s.topology = Topology::ring(size);
        } else if (e.key == "line") {
            if (e.value != "yes")
                throw ParseError(e.line, e.value_col, "line takes the value 'yes'");
            s.topology = Topology::line();
        } else {
            throw ParseError(e.line, e.key_col, "unknown [topology] key '" + e.key + "'");
        }
    }

    // --- [matter] ---
    {
        std::set<int> used;
        for (const RawEntry& e : raw.entries["matter"]) {
            const int pos = parse_int(e, "position", true);
            check_ring_position(e, s.topology, pos);
            if (!used.insert(pos).second)
                throw ParseError(e.line, e.key_col, "duplicate matter position");
            const Cell cell = parse_cell(e);
            const int bound = quantum ? 2 : s.alphabet_size;
            if (cell.left < 0 || cell.left >= bound || cell.right < 0 || cell.right >= bound)
                throw ParseError(e.line, e.value_col,
                                 "cell components must lie in 0.." + std::to_string(bound - 1));
            if (cell != kQuiescent) s.matter.emplace_back(pos, cell);
        }
        std::sort(s.matter.begin(), s.matter.end());
    }

    // --- [field] ---
    {
        std::set<int> used;
        for (const RawEntry& e : raw.entries["field"]) {
            const int pos = parse_int(e, "link position", true);
            check_ring_position(e, s.topology, pos);
            if (!used.insert(pos).second)
                throw ParseError(e.line, e.key_col, "duplicate field link");
            if (quantum) {
                const int l = parse_int(e, "field value");
                if (std::abs(l) > s.params.field_cut)
                    throw ParseError(e.line, e.value_col,
                                     "|l| exceeds lmax = " + std::to_string(s.params.field_cut));
                if (l != 0) s.field_ints.emplace_back(pos, l);
            } else {
                const Permutation p = parse_perm(e, s.alphabet_size);
                if (!p.is_identity()) s.field_perms.emplace_back(pos, p);
            }
        }
        std::sort(s.field_ints.begin(), s.field_ints.end());
        std::sort(s.field_perms.begin(), s.field_perms.end());
    }

    // --- [gauge] ---
    {
        GaugeSchedule schedule = GaugeSchedule::Start;
        std::set<int> used;
        for (const RawEntry& e : raw.entries["gauge"]) {
            if (e.key == "apply") {
                if (e.value == "start")
                    schedule = GaugeSchedule::Start;
                else if (e.value == "end")
                    schedule = GaugeSchedule::End;
                else if (e.value == "both")
                    schedule = GaugeSchedule::Both;
                else if (e.value == "each")
                    schedule = GaugeSchedule::EachStep;
                else
                    throw ParseError(e.line, e.value_col,
                                     "apply must be start, end, both or each");
                continue;
            }
            if (quantum) {
                if (e.key.starts_with("phi(") && e.key.back() == ')') {
                    RawEntry inner = e;
                    inner.key = e.key.substr(4, e.key.size() - 5);
                    const int pos = parse_int(inner, "position", true);
                    check_ring_position(e, s.topology, pos);
                    if (!used.insert(pos).second)
                        throw ParseError(e.line, e.key_col, "duplicate phi position");
                    const double phi = parse_real(e, "angle");
                    if (phi != 0.0) s.gauge_phases.emplace_back(pos, phi);
                    continue;
                }
                throw ParseError(e.line, e.key_col, "quantum gauge entries use phi(<pos>) = <real>");
            }
            if (e.key == "all") {
                if (!s.topology.is_ring())
                    throw ParseError(e.line, e.key_col, "'all' needs a ring topology");
                const Permutation p = parse_perm(e, s.alphabet_size);
                for (int x = 0; x < s.topology.ring_size(); ++x) {
                    if (!used.insert(x).second)
                        throw ParseError(e.line, e.key_col, "'all' overlaps explicit positions");
                    if (!p.is_identity()) s.gauge_perms.emplace_back(x, p);
                }
                continue;
            }
            const int pos = parse_int(e, "position", true);
            check_ring_position(e, s.topology, pos);
            if (!used.insert(pos).second)
                throw ParseError(e.line, e.key_col, "duplicate gauge position");
            const Permutation p = parse_perm(e, s.alphabet_size);
            if (!p.is_identity()) s.gauge_perms.emplace_back(pos, p);
        }
        std::sort(s.gauge_perms.begin(), s.gauge_perms.end());
        std::sort(s.gauge_phases.begin(), s.gauge_phases.end());
        const bool empty = s.gauge_perms.empty() && s.gauge_phases.empty();
        s.schedule = empty ? GaugeSchedule::None : schedule;
        if (!empty && quantum && schedule == GaugeSchedule::EachStep) {
            const int line = raw.entries["gauge"].front().line;
            throw ParseError(line, 1, "apply = each is a classical schedule");
        }
    }

    // --- [run] ---
    for (const RawEntry& e : raw.entries["run"]) {
        if (e.key == "steps") {
            s.steps = parse_int(e, "step count");
            if (s.steps < 0) throw ParseError(e.line, e.value_col, "steps must be non-negative");
        } else if (e.key == "seed") {
            s.seed = parse_u64(e);
        } else if (e.key == "checks") {
            size_t begin = 0;
            const std::string& v = e.value;
            while (begin <= v.size()) {
                size_t comma = v.find(',', begin);
                if (comma == std::string::npos) comma = v.size();
                const std::string name(trim(std::string_view(v).substr(begin, comma - begin)));
                if (!name.empty()) {
                    const bool classical_check = name == kCheckLocalInvariance ||
                                                 name == kCheckGlobalInvariance ||
                                                 name == kCheckEquivalence;
                    const bool quantum_check = name == kCheckQuantumInvariance;
                    if (!classical_check && !quantum_check)
                        throw ParseError(e.line, e.value_col, "unknown check '" + name + "'");
                    if (classical_check && quantum)
                        throw ParseError(e.line, e.value_col,
                                         "check '" + name + "' applies to classical models");
                    if (quantum_check && !quantum)
                        throw ParseError(e.line, e.value_col,
                                         "check '" + name + "' applies to the quantum model");
                    s.checks.push_back(name);
                }
                begin = comma + 1;
            }
        } else {
            throw ParseError(e.line, e.key_col, "unknown [run] key '" + e.key + "'");
        }
    }

    return s;
}

std::string render_scenario(const Scenario& s) {
    std::string out;
    const bool quantum = s.model == ModelKind::Quantum;

    out += "[model]\n";
    out += "type = ";
    out += s.model == ModelKind::Abelian ? "abelian" : (quantum ? "quantum" : "nonabelian");
    out += "\n";
    if (s.model == ModelKind::NonAbelian) out += "n = " + std::to_string(s.alphabet_size) + "\n";
    if (!quantum && s.rule == RuleKind::Bare) out += "rule = bare\n";
    if (quantum) {
        out += "mass = " + format_double(s.params.mass) + "\n";
        out += "epsilon = " + format_double(s.params.spacing) + "\n";
        out += "charge = " + format_double(s.params.charge) + "\n";
        out += "lmax = " + std::to_string(s.params.field_cut) + "\n";
    }

    out += "\n[topology]\n";
    if (s.topology.is_ring())
        out += "ring = " + std::to_string(s.topology.ring_size()) + "\n";
    else
        out += "line = yes\n";

    if (!s.matter.empty()) {
        out += "\n[matter]\n";
        for (const auto& [pos, cell] : s.matter)
            out += std::to_string(pos) + " = " + std::to_string(cell.left) + "," +
                   std::to_string(cell.right) + "\n";
    }

    if (!s.field_perms.empty() || !s.field_ints.empty()) {
        out += "\n[field]\n";
        for (const auto& [pos, perm] : s.field_perms)
            out += std::to_string(pos) + " = " + perm.cycle_string() + "\n";
        for (const auto& [pos, l] : s.field_ints)
            out += std::to_string(pos) + " = " + std::to_string(l) + "\n";
    }

    if (s.schedule != GaugeSchedule::None) {
        out += "\n[gauge]\n";
        const char* apply = "start";
        if (s.schedule == GaugeSchedule::End) apply = "end";
        if (s.schedule == GaugeSchedule::Both) apply = "both";
        if (s.schedule == GaugeSchedule::EachStep) apply = "each";
        out += std::string("apply = ") + apply + "\n";
        for (const auto& [pos, perm] : s.gauge_perms)
            out += std::to_string(pos) + " = " + perm.cycle_string() + "\n";
        for (const auto& [pos, phi] : s.gauge_phases)
            out += "phi(" + std::to_string(pos) + ") = " + format_double(phi) + "\n";
    }

    out += "\n[run]\n";
    out += "steps = " + std::to_string(s.steps) + "\n";
    if (s.seed) out += "seed = " + std::to_string(*s.seed) + "\n";
    if (!s.checks.empty()) {
        out += "checks = ";
        for (size_t i = 0; i < s.checks.size(); ++i) {
            if (i) out += ", ";
            out += s.checks[i];
        }
        out += "\n";
    }
    return out;
}

GaugeGroup scenario_group(const Scenario& s) {
    if (s.model == ModelKind::Quantum)
        throw std::invalid_argument("the quantum model has no finite gauge group");
    return s.model == ModelKind::Abelian ? GaugeGroup::flip_group()
                                         : GaugeGroup::symmetric_group(s.alphabet_size);
}

LinkRule scenario_rule(const Scenario& s) {
    if (s.model == ModelKind::Quantum)
        throw std::invalid_argument("the quantum model has no link rule");
    return LinkRule{s.alphabet_size, s.rule};
}

GaugedConfiguration scenario_initial(const Scenario& s) {
    MatterConfiguration matter =
        MatterConfiguration::make(s.topology, s.alphabet_size, s.matter);
    return GaugedConfiguration::make(std::move(matter), s.field_perms);
}

GaugeTransformation scenario_transformation(const Scenario& s) {
    return GaugeTransformation::make(s.topology, s.alphabet_size, s.gauge_perms);
}

QcaBasisState scenario_initial_basis(const Scenario& s) {
    return QcaBasisState::make(s.topology, s.matter, s.field_ints);
}

PhaseProfile scenario_phase_profile(const Scenario& s) {
    return PhaseProfile::make(s.topology, s.gauge_phases);
}

std::vector<GaugedConfiguration> scenario_trace(const Scenario& s) {
    const LinkRule rule = scenario_rule(s);
    GaugedConfiguration current = scenario_initial(s);
    const GaugeTransformation gamma = scenario_transformation(s);

    if (s.schedule == GaugeSchedule::Start || s.schedule == GaugeSchedule::Both)
        current = apply_global(gamma, current);

    std::vector<GaugedConfiguration> trace;
    trace.push_back(current);
    for (int t = 0; t < s.steps; ++t) {
        current = step(rule, current);
        if (s.schedule == GaugeSchedule::EachStep) current = apply_global(gamma, current);
        trace.push_back(current);
    }
    if (s.schedule == GaugeSchedule::End)
        trace.push_back(apply_global(gamma, trace.back()));
    else if (s.schedule == GaugeSchedule::Both)
        trace.push_back(apply_global(gamma.inverse(), trace.back()));
    return trace;
}

GaugedConfiguration scenario_final(const Scenario& s) { return scenario_trace(s).back(); }

}  // namespace gica
