#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hardy {

enum class ErrorKind {
    DimensionMismatch,
    NotHermitian,
    TraceNotOne,
    NotPositive,
    InvalidSpec,
    InvalidArgument,
    ColoredNoiseRequiresTwoQubits,
    InvalidOutcomePair,
    InternalConsistency,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this one type so callers can
// branch on kind() without a catch ladder.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace hardy
