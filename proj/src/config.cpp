#include "trispin/config.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace trispin {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

class Checker {
  public:
    void add(const std::string& issue) { issues_.push_back(issue); }

    void reject_unknown(const json& obj, const std::string& where,
                        std::initializer_list<const char*> known) {
        for (auto it = obj.begin(); it != obj.end(); ++it) {
            bool ok = false;
            for (const char* k : known)
                if (it.key() == k) { ok = true; break; }
            if (!ok) add("unknown key: " + where + it.key());
        }
    }

    // Returns def when missing/optional; records an issue when required or mistyped.
    double number(const json& obj, const std::string& where, const char* key, bool required,
                  double def = 0.0) {
        if (!obj.contains(key)) {
            if (required) add("missing required key: " + where + key);
            return def;
        }
        const json& v = obj.at(key);
        if (!v.is_number()) {
            add(where + key + " must be a number");
            return def;
        }
        const double x = v.get<double>();
        if (!std::isfinite(x)) add(where + key + " must be finite");
        return x;
    }

    long integer(const json& obj, const std::string& where, const char* key, bool required,
                 long def = 0) {
        if (!obj.contains(key)) {
            if (required) add("missing required key: " + where + key);
            return def;
        }
        const json& v = obj.at(key);
        if (!v.is_number_integer()) {
            add(where + key + " must be an integer");
            return def;
        }
        return v.get<long>();
    }

    std::string text(const json& obj, const std::string& where, const char* key, bool required,
                     const std::string& def = {}) {
        if (!obj.contains(key)) {
            if (required) add("missing required key: " + where + key);
            return def;
        }
        const json& v = obj.at(key);
        if (!v.is_string()) {
            add(where + key + " must be a string");
            return def;
        }
        return v.get<std::string>();
    }

    void finish() {
        if (!issues_.empty()) throw ValidationError(std::move(issues_));
    }

  private:
    std::vector<std::string> issues_;
};

}  // namespace

RunConfig parse_config(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("config parse error: ") + e.what());
    }

    Checker check;
    if (!doc.is_object()) throw ValidationError({"config document must be a JSON object"});
    check.reject_unknown(doc, "",
                         {"version", "mode", "direct", "physical", "initial_state", "time",
                          "output"});

    const long version = check.integer(doc, "", "version", true, kConfigVersion);
    if (version != kConfigVersion)
        check.add("unsupported config version " + std::to_string(version) + " (expected " +
                  std::to_string(kConfigVersion) + ")");

    RunConfig cfg;

    const std::string mode = check.text(doc, "", "mode", true);
    if (mode == "direct") {
        cfg.mode = RunMode::direct;
        if (doc.contains("physical")) check.add("mode=direct forbids the physical section");
        if (!doc.contains("direct") || !doc.at("direct").is_object()) {
            check.add("mode=direct requires a direct section");
        } else {
            const json& d = doc.at("direct");
            check.reject_unknown(d, "direct.", {"j12", "j23", "j31", "gamma"});
            CouplingSet c;
            c.j12 = check.number(d, "direct.", "j12", true);
            c.j23 = check.number(d, "direct.", "j23", true);
            c.j31 = check.number(d, "direct.", "j31", true);
            c.gamma_laser = check.number(d, "direct.", "gamma", true);
            if (c.gamma_laser < 0.0) check.add("direct.gamma must be >= 0");
            cfg.direct = c;
        }
    } else if (mode == "physical") {
        cfg.mode = RunMode::physical;
        if (doc.contains("direct")) check.add("mode=physical forbids the direct section");
        if (!doc.contains("physical") || !doc.at("physical").is_object()) {
            check.add("mode=physical requires a physical section");
        } else {
            const json& ph = doc.at("physical");
            check.reject_unknown(ph, "physical.",
                                 {"gamma0", "chi", "g", "delta", "lambda", "phi12", "phi21",
                                  "phi23", "phi32", "nu", "fiber_length", "gamma", "method"});
            PhysicalSetup setup;
            CavityParams& p = setup.cavity;
            p.gamma0 = check.number(ph, "physical.", "gamma0", true, 1.0);
            if (p.gamma0 <= 0.0) check.add("physical.gamma0 must be > 0");
            p.delta = check.number(ph, "physical.", "delta", true);
            p.lambda_drive = check.number(ph, "physical.", "lambda", true);
            p.phi12 = check.number(ph, "physical.", "phi12", false, 0.0);
            p.phi21 = check.number(ph, "physical.", "phi21", false, 0.0);
            p.phi23 = check.number(ph, "physical.", "phi23", false, 0.0);
            p.phi32 = check.number(ph, "physical.", "phi32", false, 0.0);
            p.nu = check.number(ph, "physical.", "nu", false, 0.0);
            if (p.nu < 0.0) check.add("physical.nu must be >= 0");
            p.fiber_length = check.number(ph, "physical.", "fiber_length", false, 0.0);
            if (p.fiber_length < 0.0) check.add("physical.fiber_length must be >= 0");

            const bool has_chi = ph.contains("chi");
            const bool has_g = ph.contains("g");
            if (has_chi) p.chi = check.number(ph, "physical.", "chi", true);
            if (has_g) {
                const double g = check.number(ph, "physical.", "g", false);
                if (p.delta == 0.0) {
                    check.add("physical.g needs a nonzero delta to derive chi = g^2/delta");
                } else if (has_chi) {
                    if (std::abs(p.chi - g * g / p.delta) >= 1e-12)
                        check.add("physical.chi and physical.g are inconsistent "
                                  "(|chi - g^2/delta| >= 1e-12)");
                } else {
                    p.chi = g * g / p.delta;
                }
            } else if (!has_chi) {
                check.add("physical section needs chi (or g with nonzero delta)");
            }

            setup.gamma_laser = check.number(ph, "physical.", "gamma", true);
            if (setup.gamma_laser < 0.0) check.add("physical.gamma must be >= 0");
            const std::string method = check.text(ph, "physical.", "method", false, "printed");
            if (method == "printed") setup.method = SteadyStateMethod::printed;
            else if (method == "firstprinciples") setup.method = SteadyStateMethod::firstprinciples;
            else check.add("physical.method must be printed or firstprinciples");
            cfg.physical = setup;
        }
    } else {
        check.add("mode must be direct or physical");
    }

    std::string initial = check.text(doc, "", "initial_state", false, "ggg");
    if (initial == "ground") initial = "ggg";
    if (initial.size() != 3 || initial.find_first_not_of("ge") != std::string::npos)
        check.add("initial_state must be \"ground\" or three letters from {g,e}");
    cfg.initial_state = initial;

    if (doc.contains("time")) {
        if (!doc.at("time").is_object()) {
            check.add("time must be an object");
        } else {
            const json& t = doc.at("time");
            check.reject_unknown(t, "time.", {"t_max", "steps"});
            cfg.time.t_max = check.number(t, "time.", "t_max", false, cfg.time.t_max);
            if (!(cfg.time.t_max > 0.0)) check.add("time.t_max must be > 0");
            const long steps = check.integer(t, "time.", "steps", false, cfg.time.steps);
            if (steps < 2) check.add("time.steps must be >= 2");
            else cfg.time.steps = static_cast<int>(steps);
        }
    }

    if (doc.contains("output")) {
        if (!doc.at("output").is_object()) {
            check.add("output must be an object");
        } else {
            const json& o = doc.at("output");
            check.reject_unknown(o, "output.", {"format", "path"});
            const std::string format = check.text(o, "output.", "format", false, "csv");
            if (format == "csv") cfg.output.format = OutputFormat::csv;
            else if (format == "json") cfg.output.format = OutputFormat::json;
            else check.add("output.format must be csv or json");
            cfg.output.path = check.text(o, "output.", "path", false, cfg.output.path);
            if (cfg.output.path.empty()) check.add("output.path must not be empty");
        }
    }

    check.finish();
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SinkError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string serialize_config(const RunConfig& cfg) {
    ordered_json doc;
    doc["version"] = kConfigVersion;
    doc["mode"] = cfg.mode == RunMode::direct ? "direct" : "physical";
    if (cfg.mode == RunMode::direct && cfg.direct) {
        const CouplingSet& c = *cfg.direct;
        doc["direct"] = {{"j12", c.j12}, {"j23", c.j23}, {"j31", c.j31}, {"gamma", c.gamma_laser}};
    }
    if (cfg.mode == RunMode::physical && cfg.physical) {
        const PhysicalSetup& s = *cfg.physical;
        const CavityParams& p = s.cavity;
        doc["physical"] = {{"gamma0", p.gamma0},
                           {"chi", p.chi},
                           {"delta", p.delta},
                           {"lambda", p.lambda_drive},
                           {"phi12", p.phi12},
                           {"phi21", p.phi21},
                           {"phi23", p.phi23},
                           {"phi32", p.phi32},
                           {"nu", p.nu},
                           {"fiber_length", p.fiber_length},
                           {"gamma", s.gamma_laser},
                           {"method", s.method == SteadyStateMethod::printed
                                          ? "printed"
                                          : "firstprinciples"}};
    }
    doc["initial_state"] = cfg.initial_state;
    doc["time"] = {{"t_max", cfg.time.t_max}, {"steps", cfg.time.steps}};
    doc["output"] = {{"format", cfg.output.format == OutputFormat::csv ? "csv" : "json"},
                     {"path", cfg.output.path}};
    return doc.dump(2);
}

}  // namespace trispin
