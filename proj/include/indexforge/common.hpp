#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace indexforge {

/// A raw value or score that may be absent. MISSING is an explicit state,
/// never conflated with zero.
using MaybeValue = std::optional<double>;

enum class Severity { Error, Warning };

struct ValidationIssue {
    Severity severity = Severity::Error;
    std::string location;
    std::string message;

    friend bool operator==(const ValidationIssue&, const ValidationIssue&) = default;
};

/// Deterministically ordered list of validation findings. Violations are data,
/// not failures: callers decide whether Errors are fatal.
class ValidationReport {
  public:
    void add(Severity sev, std::string location, std::string message) {
        issues_.push_back({sev, std::move(location), std::move(message)});
        sorted_ = false;
    }
    void error(std::string location, std::string message) {
        add(Severity::Error, std::move(location), std::move(message));
    }
    void warning(std::string location, std::string message) {
        add(Severity::Warning, std::move(location), std::move(message));
    }
    void merge(const ValidationReport& other) {
        issues_.insert(issues_.end(), other.issues_.begin(), other.issues_.end());
        sorted_ = false;
    }

    const std::vector<ValidationIssue>& issues() const {
        if (!sorted_) {
            std::stable_sort(issues_.begin(), issues_.end(),
                             [](const ValidationIssue& a, const ValidationIssue& b) {
                                 if (a.location != b.location) return a.location < b.location;
                                 return a.message < b.message;
                             });
            sorted_ = true;
        }
        return issues_;
    }

    bool empty() const { return issues_.empty(); }
    std::size_t error_count() const {
        return static_cast<std::size_t>(
            std::count_if(issues_.begin(), issues_.end(),
                          [](const ValidationIssue& i) { return i.severity == Severity::Error; }));
    }
    bool has_errors() const { return error_count() > 0; }

  private:
    mutable std::vector<ValidationIssue> issues_;
    mutable bool sorted_ = true;
};

/// Structural break in inputs or computation: unknown ids, degenerate data,
/// contract violations. Carries the offending location for reporting.
class StructuralError : public std::runtime_error {
  public:
    StructuralError(std::string location, const std::string& message)
        : std::runtime_error(location.empty() ? message : location + ": " + message),
          location_(std::move(location)) {}
    const std::string& location() const { return location_; }

  private:
    std::string location_;
};

/// Display rounding: one decimal, half away from zero (the convention the
/// published score tables follow).
inline double round_display(double x) {
    return std::round(x * 10.0) / 10.0;
}

std::string format_display(double x);

/// Mean of the present entries; throws if none are present.
double mean_of_present(const std::vector<MaybeValue>& values, const std::string& location);

inline double mean_of(const std::vector<double>& values) {
    if (values.empty()) throw StructuralError("", "mean of empty list");
    double s = 0.0;
    for (double v : values) s += v;
    return s / static_cast<double>(values.size());
}

}  // namespace indexforge
