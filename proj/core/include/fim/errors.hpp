#pragma once

#include <stdexcept>
#include <string>

namespace fim {

struct ZeroMassError : std::runtime_error {
    explicit ZeroMassError(const std::string& what) : std::runtime_error(what) {}
};

struct NonPositiveVarianceError : std::invalid_argument {
    explicit NonPositiveVarianceError(const std::string& what) : std::invalid_argument(what) {}
};

struct GridMismatchError : std::invalid_argument {
    explicit GridMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

struct SupportViolationError : std::runtime_error {
    explicit SupportViolationError(const std::string& what) : std::runtime_error(what) {}
};

struct OverflowError : std::runtime_error {
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

struct NegativeAlphaError : std::invalid_argument {
    explicit NegativeAlphaError(const std::string& what) : std::invalid_argument(what) {}
};

struct EtaOutOfRangeError : std::invalid_argument {
    explicit EtaOutOfRangeError(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidLowerSeedError : std::invalid_argument {
    explicit InvalidLowerSeedError(const std::string& what) : std::invalid_argument(what) {}
};

struct TreeError : std::invalid_argument {
    explicit TreeError(const std::string& what) : std::invalid_argument(what) {}
};

struct HeightMismatchError : std::invalid_argument {
    explicit HeightMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

struct TreeTooLargeError : std::invalid_argument {
    explicit TreeTooLargeError(const std::string& what) : std::invalid_argument(what) {}
};

struct ZeroDensityAtLeafError : std::runtime_error {
    explicit ZeroDensityAtLeafError(const std::string& what) : std::runtime_error(what) {}
};

struct InsufficientPointsError : std::invalid_argument {
    explicit InsufficientPointsError(const std::string& what) : std::invalid_argument(what) {}
};

struct NonPositiveSequenceError : std::invalid_argument {
    explicit NonPositiveSequenceError(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidGeometryError : std::invalid_argument {
    explicit InvalidGeometryError(const std::string& what) : std::invalid_argument(what) {}
};

struct ParameterRangeError : std::invalid_argument {
    explicit ParameterRangeError(const std::string& what) : std::invalid_argument(what) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct SolverError : std::runtime_error {
    explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fim
