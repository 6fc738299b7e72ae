#include "clocksim/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "clocksim/errors.hpp"

namespace clocksim {

namespace {

struct RawEntry {
    std::string value;
    int line = 0;
    int column = 0;
};

using Section = std::map<std::string, RawEntry>;

const std::set<std::string> kSections = {"units", "clock", "potential",
                                         "grid",  "evolution", "scenario"};

const std::map<std::string, std::set<std::string>> kKeys = {
    {"units", {"c", "g", "hbar", "m"}},
    {"clock", {"levels", "amplitudes"}},
    {"potential", {"kind", "center", "omega", "floor"}},
    {"grid", {"x_min", "x_max", "n"}},
    {"evolution", {"dt", "steps", "record_every"}},
    {"scenario",
     {"kind", "heights", "separation", "momenta", "bouncer_states", "sigma", "tol_shift",
      "tol_cancellation_shift", "tol_fidelity_deficit", "tol_bouncer_shift_rel",
      "tol_bouncer_drift", "tol_moving_amplitude", "tol_moving_slope", "tol_visibility_pointwise",
      "tol_zero_time_rel"}},
};

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::map<std::string, Section> tokenize(const std::string& text) {
    std::map<std::string, Section> out;
    std::istringstream stream(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(stream, line)) {
        ++lineno;
        const std::size_t comment = line.find_first_of("#;");
        if (comment != std::string::npos) line.erase(comment);
        const std::string body = trim(line);
        if (body.empty()) continue;
        if (body.front() == '[') {
            if (body.back() != ']')
                throw ParseError("unterminated section header", lineno,
                                 static_cast<int>(line.find('[')) + 1);
            section = trim(body.substr(1, body.size() - 2));
            if (!kSections.count(section))
                throw ParseError("unknown section [" + section + "]", lineno, 1);
            out[section];  // sections may legitimately stay empty
            continue;
        }
        const std::size_t eq = body.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected key = value", lineno, 1);
        if (section.empty())
            throw ParseError("key outside any section", lineno, 1);
        const std::string key = trim(body.substr(0, eq));
        const std::string value = trim(body.substr(eq + 1));
        if (!kKeys.at(section).count(key))
            throw ParseError("unknown key '" + key + "' in [" + section + "]", lineno, 1);
        if (out[section].count(key))
            throw ParseError("duplicate key '" + key + "' in [" + section + "]", lineno, 1);
        if (value.empty())
            throw ParseError("empty value for key '" + key + "'", lineno,
                             static_cast<int>(eq) + 2);
        out[section][key] = RawEntry{value, lineno, static_cast<int>(eq) + 2};
    }
    return out;
}

double parse_real(const RawEntry& e) {
    const char* begin = e.value.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        throw ParseError("expected a real number, got '" + e.value + "'", e.line, e.column);
    return v;
}

std::size_t parse_count(const RawEntry& e) {
    const double v = parse_real(e);
    if (!(v >= 0.0) || v != std::floor(v))
        throw ParseError("expected a non-negative integer, got '" + e.value + "'", e.line,
                         e.column);
    return static_cast<std::size_t>(v);
}

std::vector<double> parse_list(const RawEntry& e) {
    const std::string& s = e.value;
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw ParseError("expected a bracketed list, got '" + s + "'", e.line, e.column);
    std::vector<double> out;
    const std::string inner = trim(s.substr(1, s.size() - 2));
    if (inner.empty()) return out;
    std::istringstream items(inner);
    std::string item;
    while (std::getline(items, item, ',')) {
        RawEntry fake{trim(item), e.line, e.column};
        out.push_back(parse_real(fake));
    }
    return out;
}

class SectionReader {
public:
    SectionReader(const std::map<std::string, Section>& all, const std::string& name)
        : section_(nullptr) {
        auto it = all.find(name);
        if (it != all.end()) section_ = &it->second;
    }

    const RawEntry* find(const std::string& key) const {
        if (!section_) return nullptr;
        auto it = section_->find(key);
        return it == section_->end() ? nullptr : &it->second;
    }

    double real_or(const std::string& key, double fallback) const {
        const RawEntry* e = find(key);
        return e ? parse_real(*e) : fallback;
    }

private:
    const Section* section_;
};

const RawEntry& require(const SectionReader& reader, const std::string& section,
                        const std::string& key) {
    const RawEntry* e = reader.find(key);
    if (!e) throw ConfigInvalid("missing required key '" + key + "' in [" + section + "]");
    return *e;
}

ScenarioKind parse_scenario_kind(const RawEntry& e) {
    for (ScenarioKind k :
         {ScenarioKind::fixed_height_clocks, ScenarioKind::cancellation_control,
          ScenarioKind::bouncer_clock, ScenarioKind::moving_clock,
          ScenarioKind::superposition_interference}) {
        if (e.value == scenario_kind_name(k)) return k;
    }
    throw ParseError("unknown scenario kind '" + e.value + "'", e.line, e.column);
}

PotentialKind parse_potential_kind(const RawEntry& e) {
    for (PotentialKind k : {PotentialKind::zero, PotentialKind::mass_only_linear,
                            PotentialKind::cancelling_linear, PotentialKind::harmonic,
                            PotentialKind::hard_floor}) {
        if (e.value == potential_kind_name(k)) return k;
    }
    throw ParseError("unknown potential kind '" + e.value + "'", e.line, e.column);
}

ScenarioConfig assemble(const std::map<std::string, Section>& raw) {
    ScenarioConfig cfg;

    const SectionReader units(raw, "units");
    cfg.constants.c = units.real_or("c", cfg.constants.c);
    cfg.constants.g = units.real_or("g", cfg.constants.g);
    cfg.constants.hbar = units.real_or("hbar", cfg.constants.hbar);
    cfg.constants.m = units.real_or("m", cfg.constants.m);

    const SectionReader clock(raw, "clock");
    cfg.clock.levels = parse_list(require(clock, "clock", "levels"));
    if (const RawEntry* amp = clock.find("amplitudes")) {
        const auto flat = parse_list(*amp);
        if (flat.size() % 2 != 0 || flat.size() / 2 != cfg.clock.levels.size())
            throw ParseError("arity mismatch: " + std::to_string(flat.size() / 2) +
                                 " amplitude pair(s) for " +
                                 std::to_string(cfg.clock.levels.size()) + " level(s)",
                             amp->line, amp->column);
        cfg.clock.amplitudes.clear();
        for (std::size_t i = 0; i < flat.size(); i += 2)
            cfg.clock.amplitudes.emplace_back(flat[i], flat[i + 1]);
    } else {
        const double r = 1.0 / std::sqrt(static_cast<double>(cfg.clock.levels.size()));
        cfg.clock.amplitudes.assign(cfg.clock.levels.size(), cplx{r, 0.0});
    }

    const SectionReader pot(raw, "potential");
    cfg.potential.kind = parse_potential_kind(require(pot, "potential", "kind"));
    cfg.potential.center = pot.real_or("center", 0.0);
    cfg.potential.omega = pot.real_or("omega", 0.0);
    cfg.potential.floor = pot.real_or("floor", 0.0);

    const SectionReader grid(raw, "grid");
    cfg.grid.x_min = parse_real(require(grid, "grid", "x_min"));
    cfg.grid.x_max = parse_real(require(grid, "grid", "x_max"));
    cfg.grid.n = parse_count(require(grid, "grid", "n"));

    const SectionReader evo(raw, "evolution");
    cfg.evolution.dt = parse_real(require(evo, "evolution", "dt"));
    cfg.evolution.steps = parse_count(require(evo, "evolution", "steps"));
    cfg.evolution.record_every =
        evo.find("record_every") ? parse_count(*evo.find("record_every")) : 10;

    const SectionReader scen(raw, "scenario");
    cfg.kind = parse_scenario_kind(require(scen, "scenario", "kind"));
    if (const RawEntry* e = scen.find("heights")) cfg.heights = parse_list(*e);
    cfg.separation = scen.real_or("separation", 0.0);
    if (const RawEntry* e = scen.find("momenta")) cfg.momenta = parse_list(*e);
    if (const RawEntry* e = scen.find("bouncer_states")) {
        for (double v : parse_list(*e)) {
            if (!(v >= 1.0) || v != std::floor(v))
                throw ParseError("bouncer_states must be positive integers", e->line, e->column);
            cfg.bouncer_states.push_back(static_cast<std::size_t>(v));
        }
    }
    cfg.sigma = scen.real_or("sigma", 0.0);
    cfg.tolerances.shift = scen.real_or("tol_shift", cfg.tolerances.shift);
    cfg.tolerances.cancellation_shift =
        scen.real_or("tol_cancellation_shift", cfg.tolerances.cancellation_shift);
    cfg.tolerances.fidelity_deficit =
        scen.real_or("tol_fidelity_deficit", cfg.tolerances.fidelity_deficit);
    cfg.tolerances.bouncer_shift_rel =
        scen.real_or("tol_bouncer_shift_rel", cfg.tolerances.bouncer_shift_rel);
    cfg.tolerances.bouncer_drift = scen.real_or("tol_bouncer_drift", cfg.tolerances.bouncer_drift);
    cfg.tolerances.moving_amplitude =
        scen.real_or("tol_moving_amplitude", cfg.tolerances.moving_amplitude);
    cfg.tolerances.moving_slope = scen.real_or("tol_moving_slope", cfg.tolerances.moving_slope);
    cfg.tolerances.visibility_pointwise =
        scen.real_or("tol_visibility_pointwise", cfg.tolerances.visibility_pointwise);
    cfg.tolerances.zero_time_rel = scen.real_or("tol_zero_time_rel", cfg.tolerances.zero_time_rel);
    return cfg;
}

}  // namespace

ScenarioConfig parse_config(const std::string& text) {
    const auto raw = tokenize(text);
    ScenarioConfig cfg = assemble(raw);
    try {
        return validate_scenario(std::move(cfg));
    } catch (const ApproximationBreach& e) {
        throw ValidationError(std::string("ApproximationBreach: ") + e.what());
    } catch (const GridInvalid& e) {
        throw ValidationError(std::string("GridInvalid: ") + e.what());
    } catch (const ConfigInvalid& e) {
        throw ValidationError(e.what());
    } catch (const InvalidInput& e) {
        throw ValidationError(e.what());
    }
}

Constants parse_constants_text(const std::string& text) {
    const auto raw = tokenize(text);
    for (const auto& [name, _] : raw) {
        if (name != "units")
            throw ParseError("constants file may only contain a [units] section", 1, 1);
    }
    Constants konst;
    const SectionReader units(raw, "units");
    konst.c = units.real_or("c", konst.c);
    konst.g = units.real_or("g", konst.g);
    konst.hbar = units.real_or("hbar", konst.hbar);
    konst.m = units.real_or("m", konst.m);
    konst.validate();
    return konst;
}

std::string canonical_config_string(const ScenarioConfig& cfg) {
    std::ostringstream out;
    auto real = [&out](const char* key, double v) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        out << key << '=' << buf << ';';
    };
    out << "kind=" << scenario_kind_name(cfg.kind) << ';';
    real("c", cfg.constants.c);
    real("g", cfg.constants.g);
    real("hbar", cfg.constants.hbar);
    real("m", cfg.constants.m);
    out << "levels=";
    for (double v : cfg.clock.levels) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g,", v);
        out << buf;
    }
    out << ';' << "amplitudes=";
    for (const auto& a : cfg.clock.amplitudes) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,", a.real(), a.imag());
        out << buf;
    }
    out << ';' << "potential=" << potential_kind_name(cfg.potential.kind) << ';';
    real("center", cfg.potential.center);
    real("omega", cfg.potential.omega);
    real("floor", cfg.potential.floor);
    real("x_min", cfg.grid.x_min);
    real("x_max", cfg.grid.x_max);
    out << "n=" << cfg.grid.n << ';';
    real("dt", cfg.evolution.dt);
    out << "steps=" << cfg.evolution.steps << ';'
        << "record_every=" << cfg.evolution.record_every << ';';
    out << "heights=";
    for (double v : cfg.heights) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g,", v);
        out << buf;
    }
    out << ';';
    real("separation", cfg.separation);
    out << "momenta=";
    for (double v : cfg.momenta) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g,", v);
        out << buf;
    }
    out << ';' << "bouncer_states=";
    for (std::size_t v : cfg.bouncer_states) out << v << ',';
    out << ';';
    real("sigma", cfg.sigma);
    real("tol_shift", cfg.tolerances.shift);
    real("tol_cancellation_shift", cfg.tolerances.cancellation_shift);
    real("tol_fidelity_deficit", cfg.tolerances.fidelity_deficit);
    real("tol_bouncer_shift_rel", cfg.tolerances.bouncer_shift_rel);
    real("tol_bouncer_drift", cfg.tolerances.bouncer_drift);
    real("tol_moving_amplitude", cfg.tolerances.moving_amplitude);
    real("tol_moving_slope", cfg.tolerances.moving_slope);
    real("tol_visibility_pointwise", cfg.tolerances.visibility_pointwise);
    real("tol_zero_time_rel", cfg.tolerances.zero_time_rel);
    return out.str();
}

std::uint64_t config_hash(const ScenarioConfig& cfg) {
    const std::string canon = canonical_config_string(cfg);
    std::uint64_t hash = 14695981039346656037ull;
    for (unsigned char ch : canon) {
        hash ^= ch;
        hash *= 1099511628211ull;
    }
    return hash;
}

}  // namespace clocksim
