#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace glidesim {

/// A function was called outside its mathematical domain (negative depth, etc).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The sealed-chamber model has no solution (membrane sweeps the whole chamber).
class ModelSingularityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid configuration. `key_path` names the offending field, e.g. "valve.p_snap_back".
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key_path, const std::string& message)
        : std::runtime_error(key_path.empty() ? message : key_path + ": " + message),
          key_path_(std::move(key_path)) {}

    const std::string& key_path() const noexcept { return key_path_; }

private:
    std::string key_path_;
};

/// A physically consistent configuration that cannot complete a mission
/// (never dives, never inflates, never surfaces). `invariant` is a short tag.
class ScenarioError : public std::runtime_error {
public:
    ScenarioError(std::string invariant, const std::string& detail)
        : std::runtime_error(invariant + ": " + detail), invariant_(std::move(invariant)) {}

    const std::string& invariant() const noexcept { return invariant_; }

private:
    std::string invariant_;
};

}  // namespace glidesim
