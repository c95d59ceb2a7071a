#include "glidesim/config.hpp"

#include "glidesim/units.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace glidesim {

namespace {

using nlohmann::json;

std::string join(const std::string& prefix, const std::string& key) {
    return prefix.empty() ? key : prefix + "." + key;
}

// Reads fields of one JSON object and rejects any key that was not read.
class Section {
public:
    Section(const json& node, std::string path) : node_(node), path_(std::move(path)) {
        if (!node_.is_object()) throw ConfigError(path_, "must be an object");
    }

    bool has(const std::string& key) const { return node_.contains(key); }

    void number(const std::string& key, double& out) {
        if (const json* v = find(key)) {
            if (!v->is_number()) throw ConfigError(join(path_, key), "must be a number");
            out = v->get<double>();
        }
    }

    void integer(const std::string& key, long& out) {
        if (const json* v = find(key)) {
            if (!v->is_number_integer()) throw ConfigError(join(path_, key), "must be an integer");
            out = v->get<long>();
        }
    }

    void boolean(const std::string& key, bool& out) {
        if (const json* v = find(key)) {
            if (!v->is_boolean()) throw ConfigError(join(path_, key), "must be true or false");
            out = v->get<bool>();
        }
    }

    void string(const std::string& key, std::string& out) {
        if (const json* v = find(key)) {
            if (!v->is_string()) throw ConfigError(join(path_, key), "must be a string");
            out = v->get<std::string>();
        }
    }

    std::optional<Section> child(const std::string& key) {
        if (const json* v = find(key)) return Section(*v, join(path_, key));
        return std::nullopt;
    }

    const json* raw(const std::string& key) { return find(key); }

    std::string path(const std::string& key) const { return join(path_, key); }

    void finish() const {
        for (const auto& [key, value] : node_.items()) {
            if (!seen_.count(key)) throw ConfigError(join(path_, key), "unknown key");
        }
    }

private:
    const json* find(const std::string& key) {
        seen_.insert(key);
        auto it = node_.find(key);
        return it == node_.end() ? nullptr : &*it;
    }

    const json& node_;
    std::string path_;
    std::set<std::string> seen_;
};

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError("", std::string("malformed JSON: ") + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

WingParams parse_geometry(Section s) {
    WingParams w;
    s.number("alpha_deg", w.alpha);
    s.number("l1", w.l1);
    s.number("l2", w.l2);
    s.number("lb", w.lb);
    s.number("chord_root", w.chord_root);
    s.number("chord_tip", w.chord_tip);
    s.number("thickness_ratio", w.thickness_ratio);
    s.number("body_thickness_ratio", w.body_thickness_ratio);
    s.number("wingtip_height", w.wingtip_height);
    std::string section = "naca";
    s.string("section", section);
    if (section == "naca") {
        w.section = SectionShape::Naca;
    } else if (section == "rectangle") {
        w.section = SectionShape::Rectangle;
    } else {
        throw ConfigError(s.path("section"), "must be \"naca\" or \"rectangle\"");
    }
    s.finish();
    w.validate();
    return w;
}

}  // namespace

LoadedScenario parse_scenario(const std::string& json_text) {
    const json root = parse_json(json_text);
    Section top(root, "");
    LoadedScenario out;
    ScenarioConfig& sc = out.scenario;
    top.string("description", out.description);

    if (auto s = top.child("constants")) {
        s->number("rho_water", sc.constants.rho_water);
        s->number("g", sc.constants.g);
        s->number("hydrostatic_gradient", sc.constants.hydrostatic_gradient);
        s->number("p_atm", sc.constants.p_atm);
        s->finish();
    }
    sc.constants.validate();

    if (auto s = top.child("design")) {
        s->number("mass", sc.design.mass);
        s->number("bladder_capacity", sc.design.bladder_capacity);
        s->number("added_mass_fraction", sc.design.added_mass_fraction);
        const int sources = s->has("hull_volume") + s->has("trim_force") + s->has("geometry");
        if (sources != 1) {
            throw ConfigError("design",
                              "give exactly one of hull_volume, trim_force or geometry");
        }
        if (s->has("hull_volume")) {
            s->number("hull_volume", sc.design.hull_volume);
        } else if (s->has("trim_force")) {
            double trim = 0;
            s->number("trim_force", trim);
            const double added = sc.design.added_mass_fraction;
            sc.design = GliderDesign::from_trim(sc.design.mass, trim, sc.design.bladder_capacity,
                                                sc.constants);
            sc.design.added_mass_fraction = added;
        } else {
            out.geometry = parse_geometry(*s->child("geometry"));
            sc.design.hull_volume = displaced_volume(*out.geometry);
        }
        s->finish();
    } else {
        throw ConfigError("design", "missing");
    }

    if (auto s = top.child("valve")) {
        s->number("p_snap_through", sc.valve.p_snap_through);
        s->number("p_snap_back", sc.valve.p_snap_back);
        s->number("membrane_displacement_volume", sc.valve.membrane_displacement_volume);
        s->number("sealed_chamber_volume", sc.valve.sealed_chamber_volume);
        s->number("additional_sealed_volume", sc.valve.additional_sealed_volume);
        s->number("membrane_thickness", sc.valve.membrane_thickness);
        s->number("opening_angle_deg", sc.valve.opening_angle);
        s->finish();
    }

    if (auto s = top.child("controller")) {
        Thresholds th{};
        if (!s->has("p_high") || !s->has("p_low")) {
            throw ConfigError(s->has("p_high") ? s->path("p_low") : s->path("p_high"),
                              "both p_high and p_low are required for an override");
        }
        s->number("p_high", th.p_high);
        s->number("p_low", th.p_low);
        s->finish();
        sc.threshold_override = th;
    }

    if (auto s = top.child("bladder")) {
        s->number("inflation_differential", sc.inflation_differential);
        s->finish();
    }

    if (auto s = top.child("cartridge")) {
        double p = 0, v = 0, temperature = 293.15, energy = co2_16g_energy;
        s->number("p_cartridge", p);
        s->number("v_cartridge", v);
        s->number("temperature", temperature);
        s->number("rated_energy", energy);
        s->finish();
        if (!(p > 0.0)) throw ConfigError(s->path("p_cartridge"), "must be > 0");
        if (!(v > 0.0)) throw ConfigError(s->path("v_cartridge"), "must be > 0");
        if (!(temperature > 0.0)) throw ConfigError(s->path("temperature"), "must be > 0");
        if (!(energy >= 0.0)) throw ConfigError(s->path("rated_energy"), "must be >= 0");
        sc.cartridge = Cartridge::ideal_gas(p, v, temperature, energy);
    } else {
        throw ConfigError("cartridge", "missing");
    }

    if (auto s = top.child("regulator")) {
        s->number("setpoint", sc.regulator.setpoint);
        s->finish();
    }

    if (auto s = top.child("pneumatics")) {
        s->number("inflate_flow_coefficient", sc.inflate_flow_coefficient);
        s->number("vent_flow_coefficient", sc.vent_flow_coefficient);
        s->boolean("instantaneous", sc.instantaneous_pneumatics);
        std::string convention = "absolute";
        s->string("gas_convention", convention);
        if (convention == "absolute") {
            sc.gas_convention = GasConvention::Absolute;
        } else if (convention == "gauge") {
            sc.gas_convention = GasConvention::Gauge;
        } else {
            throw ConfigError(s->path("gas_convention"), "must be \"absolute\" or \"gauge\"");
        }
        s->finish();
    }

    if (auto s = top.child("glide")) {
        double theta = sc.glide.theta / units::deg, phi = sc.glide.phi / units::deg;
        s->number("theta_deg", theta);
        s->number("phi_deg", phi);
        s->finish();
        sc.glide.theta = theta * units::deg;
        sc.glide.phi = phi * units::deg;
    }

    if (auto s = top.child("drag")) {
        s->number("c_d_a", sc.drag.c_d_a);
        s->number("rho", sc.drag.rho);
        s->number("linear_damping", sc.drag.linear_damping);
        s->finish();
    }

    if (auto s = top.child("simulation")) {
        s->number("dt", sc.dt);
        s->number("max_time", sc.max_time);
        s->number("depth_limit", sc.depth_limit);
        s->finish();
    }

    std::string objective = "range";
    top.string("objective", objective);
    if (objective == "range") {
        sc.objective = Objective::Range;
    } else if (objective == "efficiency") {
        sc.objective = Objective::Efficiency;
    } else {
        throw ConfigError("objective", "must be \"range\" or \"efficiency\"");
    }
    top.finish();

    sc.validate();
    sc.thresholds();  // surfaces valve-band errors at load time
    return out;
}

LoadedScenario load_scenario(const std::string& path) { return parse_scenario(read_file(path)); }

std::string scenario_to_json(const ScenarioConfig& sc) {
    json j;
    j["constants"] = {{"rho_water", sc.constants.rho_water},
                      {"g", sc.constants.g},
                      {"hydrostatic_gradient", sc.constants.hydrostatic_gradient},
                      {"p_atm", sc.constants.p_atm}};
    j["design"] = {{"mass", sc.design.mass},
                   {"hull_volume", sc.design.hull_volume},
                   {"bladder_capacity", sc.design.bladder_capacity},
                   {"added_mass_fraction", sc.design.added_mass_fraction}};
    j["valve"] = {{"p_snap_through", sc.valve.p_snap_through},
                  {"p_snap_back", sc.valve.p_snap_back},
                  {"membrane_displacement_volume", sc.valve.membrane_displacement_volume},
                  {"sealed_chamber_volume", sc.valve.sealed_chamber_volume},
                  {"additional_sealed_volume", sc.valve.additional_sealed_volume},
                  {"membrane_thickness", sc.valve.membrane_thickness},
                  {"opening_angle_deg", sc.valve.opening_angle}};
    if (sc.threshold_override) {
        j["controller"] = {{"p_high", sc.threshold_override->p_high},
                           {"p_low", sc.threshold_override->p_low}};
    }
    j["bladder"] = {{"inflation_differential", sc.inflation_differential}};
    j["cartridge"] = {{"p_cartridge", sc.cartridge.p_cartridge},
                      {"v_cartridge", sc.cartridge.v_cartridge},
                      {"temperature", sc.cartridge.temperature},
                      {"rated_energy", sc.cartridge.rated_energy}};
    j["regulator"] = {{"setpoint", sc.regulator.setpoint}};
    j["pneumatics"] = {
        {"inflate_flow_coefficient", sc.inflate_flow_coefficient},
        {"vent_flow_coefficient", sc.vent_flow_coefficient},
        {"instantaneous", sc.instantaneous_pneumatics},
        {"gas_convention", sc.gas_convention == GasConvention::Absolute ? "absolute" : "gauge"}};
    j["glide"] = {{"theta_deg", sc.glide.theta / units::deg}, {"phi_deg", sc.glide.phi / units::deg}};
    j["drag"] = {{"c_d_a", sc.drag.c_d_a},
                 {"rho", sc.drag.rho},
                 {"linear_damping", sc.drag.linear_damping}};
    j["simulation"] = {{"dt", sc.dt}, {"max_time", sc.max_time}, {"depth_limit", sc.depth_limit}};
    j["objective"] = sc.objective == Objective::Range ? "range" : "efficiency";
    return j.dump(2) + "\n";
}

SearchSpec parse_search_spec(const std::string& json_text) {
    const json root = parse_json(json_text);
    Section top(root, "space");
    SearchSpec spec;
    auto params = top.child("parameters");
    if (!params) throw ConfigError("space.parameters", "missing");
    // objects iterate in key order, so candidate vectors are alphabetical
    for (const auto& [name, value] : root.at("parameters").items()) {
        const std::string key = "space.parameters." + name;
        const auto p = param_from_name(name);
        if (!p) throw ConfigError(key, "unknown parameter");
        const json* v = params->raw(name);
        if (!v->is_array() || v->size() != 2 || !(*v)[0].is_number() || !(*v)[1].is_number()) {
            throw ConfigError(key, "must be [lo, hi]");
        }
        spec.space.dims.push_back({*p, {(*v)[0].get<double>(), (*v)[1].get<double>()}});
    }
    params->finish();

    long resolution = spec.resolution;
    top.integer("resolution", resolution);
    spec.resolution = static_cast<int>(resolution);
    long budget = static_cast<long>(spec.max_evaluations);
    top.integer("max_evaluations", budget);
    if (budget < 1) throw ConfigError("space.max_evaluations", "must be >= 1");
    spec.max_evaluations = static_cast<std::size_t>(budget);

    if (auto nm = top.child("nelder_mead")) {
        long iters = spec.max_iters;
        nm->integer("max_iters", iters);
        spec.max_iters = static_cast<int>(iters);
        nm->number("tolerance", spec.tolerance);
        if (auto start = nm->child("start")) {
            Candidate c;
            for (const auto& d : spec.space.dims) {
                const std::string name(param_name(d.param));
                double v = 0.5 * (d.bounds.lo + d.bounds.hi);
                start->number(name, v);
                c.push_back(v);
            }
            start->finish();
            spec.start = c;
        }
        nm->finish();
    }
    top.finish();

    spec.space.validate();
    if (spec.resolution < 1) throw ConfigError("space.resolution", "must be >= 1");
    return spec;
}

SearchSpec load_search_spec(const std::string& path) { return parse_search_spec(read_file(path)); }

}  // namespace glidesim
