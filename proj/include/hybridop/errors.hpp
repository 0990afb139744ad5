#pragma once

#include <stdexcept>
#include <string>

namespace hybridop {

struct NonConvergent : std::runtime_error {
    explicit NonConvergent(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct GrowthError : std::runtime_error {
    explicit GrowthError(const std::string& what) : std::runtime_error(what) {}
};

struct PoleError : std::runtime_error {
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

struct MissingDerivative : std::runtime_error {
    explicit MissingDerivative(const std::string& what) : std::runtime_error(what) {}
};

struct HTooLarge : std::runtime_error {
    explicit HTooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct InsufficientData : std::runtime_error {
    explicit InsufficientData(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hybridop
