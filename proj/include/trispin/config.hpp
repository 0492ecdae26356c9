#pragma once

#include <optional>
#include <string>

#include "trispin/cavity.hpp"

// Run configuration: a versioned JSON document (schema v1, see README).
// Unknown keys are rejected; all violations are reported at once.

namespace trispin {

enum class RunMode { direct, physical };
enum class SteadyStateMethod { printed, firstprinciples };
enum class OutputFormat { csv, json };

struct TimeGrid {
    double t_max = 30.0;
    int steps = 600;  // number of grid points, >= 2

    bool operator==(const TimeGrid&) const = default;
};

struct OutputSpec {
    OutputFormat format = OutputFormat::csv;
    std::string path = "-";  // "-" writes to stdout

    bool operator==(const OutputSpec&) const = default;
};

struct PhysicalSetup {
    CavityParams cavity;
    double gamma_laser = 0.0;
    SteadyStateMethod method = SteadyStateMethod::printed;

    bool operator==(const PhysicalSetup&) const = default;
};

struct RunConfig {
    RunMode mode = RunMode::direct;
    std::optional<CouplingSet> direct;     // populated iff mode == direct
    std::optional<PhysicalSetup> physical; // populated iff mode == physical
    std::string initial_state = "ggg";
    TimeGrid time;
    OutputSpec output;

    bool operator==(const RunConfig&) const = default;
};

inline constexpr int kConfigVersion = 1;

// Throws ParseError (malformed JSON) or ValidationError (schema violations,
// all collected). "ground" is accepted as an alias for initial state "ggg".
RunConfig parse_config(const std::string& text);

// parse_config over a file's contents; throws SinkError if unreadable.
RunConfig load_config(const std::string& path);

// Canonical JSON form; parse_config(serialize_config(c)) == c.
std::string serialize_config(const RunConfig& cfg);

}  // namespace trispin
