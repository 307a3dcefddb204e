#pragma once

#include <stdexcept>
#include <string>

namespace gradedroots {

enum class ErrorKind {
    NotATree,
    DuplicateEdge,
    IterationCapExceeded,
    NotCoprime,
    NotCharacteristic,
    OutsideBox,
    NonIntegralIndex,
    NotALeaf,
    BadRange,
    SeparatingCurve,
    NLessThanN0,
    OpaqueCurve,
    NotNegativeDefinite,
    ParseError,
    Internal,
};

const char* error_name(ErrorKind kind);

/// Exit code category: 2 parse, 3 math precondition, 4 iteration cap.
int error_exit_code(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_name(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }
    const char* name() const { return error_name(kind_); }
    int exit_code() const { return error_exit_code(kind_); }

private:
    ErrorKind kind_;
};

inline const char* error_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotATree: return "NotATree";
        case ErrorKind::DuplicateEdge: return "DuplicateEdge";
        case ErrorKind::IterationCapExceeded: return "IterationCapExceeded";
        case ErrorKind::NotCoprime: return "NotCoprime";
        case ErrorKind::NotCharacteristic: return "NotCharacteristic";
        case ErrorKind::OutsideBox: return "OutsideBox";
        case ErrorKind::NonIntegralIndex: return "NonIntegralIndex";
        case ErrorKind::NotALeaf: return "NotALeaf";
        case ErrorKind::BadRange: return "BadRange";
        case ErrorKind::SeparatingCurve: return "SeparatingCurve";
        case ErrorKind::NLessThanN0: return "NLessThanN0";
        case ErrorKind::OpaqueCurve: return "OpaqueCurve";
        case ErrorKind::NotNegativeDefinite: return "NotNegativeDefinite";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

inline int error_exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ParseError: return 2;
        case ErrorKind::IterationCapExceeded: return 4;
        case ErrorKind::Internal: return 1;
        default: return 3;
    }
}

}  // namespace gradedroots
