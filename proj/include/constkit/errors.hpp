#pragma once

#include <stdexcept>
#include <string>

namespace constkit {

struct DegenerateConstellation : std::runtime_error {
    explicit DegenerateConstellation(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidDistribution : std::runtime_error {
    explicit InvalidDistribution(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedScheme : std::runtime_error {
    explicit UnsupportedScheme(const std::string& what) : std::runtime_error(what) {}
};

struct SingularChannel : std::runtime_error {
    explicit SingularChannel(const std::string& what) : std::runtime_error(what) {}
};

struct UndefinedPenalty : std::runtime_error {
    explicit UndefinedPenalty(const std::string& what) : std::runtime_error(what) {}
};

struct UndefinedEnergy : std::runtime_error {
    explicit UndefinedEnergy(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidInput : std::runtime_error {
    explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

} // namespace constkit
