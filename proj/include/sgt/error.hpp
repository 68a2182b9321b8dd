#ifndef SGT_ERROR_HPP
#define SGT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sgt {

enum class ErrorKind {
    DuplicateEdge,
    Loop,
    VertexOutOfRange,
    InvalidSwitchSet,
    NotSymmetric,
    NotEquitable,
    InvalidPartition,
    ParameterRange,
    NoSignChange,
    Precondition,
    Overflow,
    Parse,
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::DuplicateEdge: return "duplicate_edge";
    case ErrorKind::Loop: return "loop";
    case ErrorKind::VertexOutOfRange: return "vertex_out_of_range";
    case ErrorKind::InvalidSwitchSet: return "invalid_switch_set";
    case ErrorKind::NotSymmetric: return "not_symmetric";
    case ErrorKind::NotEquitable: return "not_equitable";
    case ErrorKind::InvalidPartition: return "invalid_partition";
    case ErrorKind::ParameterRange: return "parameter_range";
    case ErrorKind::NoSignChange: return "no_sign_change";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::Parse: return "parse";
    }
    return "unknown";
}

/// Validation failure raised by every library entry point. The kind lets
/// callers (and the CLI) tell failures apart without parsing messages.
class Error : public std::invalid_argument {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::invalid_argument(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace sgt

#endif // SGT_ERROR_HPP
