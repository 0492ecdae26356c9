#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "trispin/config.hpp"
#include "trispin/emit.hpp"

// Scenario presets, end-to-end runs and parameter sweeps.

namespace trispin {

struct ScenarioPreset {
    std::string name;
    CouplingSet couplings;
};

// Bundled presets: fig2a (4,4,0,0.1), fig2b (4,4,0.5,0.1), fig3 (4,4.1,0,0.1),
// fig4 (4,4,0,0.2).
const std::vector<ScenarioPreset>& scenario_presets();
CouplingSet preset_couplings(const std::string& name);  // throws ValidationError
RunConfig preset_config(const std::string& name);       // preset + default grid/state

struct RunResult {
    ConcurrenceSeries series;
    nlohmann::ordered_json diagnostics;
};

// Resolves the effective couplings (direct echo, or the physical pipeline
// steady state -> couplings -> fiber loss) plus an audit record with the
// intermediate quantities (alpha, beta, gamma_c, M, W2, raw and effective Js).
CouplingSet resolve_couplings(const RunConfig& cfg, nlohmann::ordered_json* diagnostics);

RunResult run_scenario(const RunConfig& cfg);

// Local maxima of a sampled series. A peak is an interior grid point above
// `threshold` that is >= both neighbours; its time is refined between the
// neighbours with the three-point parabolic vertex.
struct PeakStats {
    double max_value = 0.0;
    double first_peak_time;           // NaN when no peak qualifies
    std::vector<double> peak_times;   // refined, ascending
};
PeakStats analyze_peaks(const std::vector<double>& times, const std::vector<double>& values,
                        double threshold = 1e-6);

// Sweeps one coupling ("j12", "j23", "j31" in direct mode, "gamma" in either
// mode) over `points` evenly spaced values. Rows come back sorted ascending
// by parameter value; points may be evaluated concurrently.
std::vector<SweepRow> sweep(const RunConfig& base, const std::string& param, double from,
                            double to, int points);

}  // namespace trispin
