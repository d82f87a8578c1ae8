#include "hardy/error.hpp"

namespace hardy {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DimensionMismatch: return "dimension_mismatch";
        case ErrorKind::NotHermitian: return "not_hermitian";
        case ErrorKind::TraceNotOne: return "trace_not_one";
        case ErrorKind::NotPositive: return "not_positive";
        case ErrorKind::InvalidSpec: return "invalid_spec";
        case ErrorKind::InvalidArgument: return "invalid_argument";
        case ErrorKind::ColoredNoiseRequiresTwoQubits: return "colored_noise_requires_two_qubits";
        case ErrorKind::InvalidOutcomePair: return "invalid_outcome_pair";
        case ErrorKind::InternalConsistency: return "internal_consistency";
    }
    return "unknown";
}

}  // namespace hardy
