#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace trispin {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// linalg
struct NotSquare : Error { using Error::Error; };
struct NotHermitian : Error { using Error::Error; };
struct BadDimension : Error { using Error::Error; };
struct BadPair : Error { using Error::Error; };
struct NonConvergence : Error { using Error::Error; };

// cavity model
struct DegenerateSteadyState : Error { using Error::Error; };
struct SingularSystem : Error { using Error::Error; };
struct NotConverged : Error { using Error::Error; };
struct DegenerateCoupling : Error { using Error::Error; };

// integrators
struct StepTooLarge : Error { using Error::Error; };

// configuration / output
struct ParseError : Error { using Error::Error; };
struct SinkError : Error { using Error::Error; };

class ValidationError : public Error {
  public:
    explicit ValidationError(std::vector<std::string> issues)
        : Error(join(issues)), issues_(std::move(issues)) {}

    const std::vector<std::string>& issues() const { return issues_; }

  private:
    static std::string join(const std::vector<std::string>& issues) {
        std::string msg = "invalid configuration:";
        for (const auto& s : issues) msg += "\n  - " + s;
        return msg;
    }

    std::vector<std::string> issues_;
};

}  // namespace trispin
