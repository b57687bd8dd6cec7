#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace compform {

enum class ErrorKind {
    VarTableMismatch,
    UnknownVariable,
    UnassignedVariable,
    TooManyVariables,
    ExponentOverflow,
    Parse,
    NameCollision,
    ParameterCollision,
    NonExactDivision,
    UnknownFamily,
    ParamArity,
    NotTernaryCubic,
    WrongFamilyKind,
    DimensionMismatch,
    NotAUnit,
    SingularMap,
    SeedNotSolution,
    StepNotSolution,
    SearchSpaceTooLarge,
    InvalidArgument,
    VerificationFailed,
};

inline std::string_view to_string(ErrorKind k) {
    switch (k) {
        case ErrorKind::VarTableMismatch: return "VarTableMismatch";
        case ErrorKind::UnknownVariable: return "UnknownVariable";
        case ErrorKind::UnassignedVariable: return "UnassignedVariable";
        case ErrorKind::TooManyVariables: return "TooManyVariables";
        case ErrorKind::ExponentOverflow: return "ExponentOverflow";
        case ErrorKind::Parse: return "Parse";
        case ErrorKind::NameCollision: return "NameCollision";
        case ErrorKind::ParameterCollision: return "ParameterCollision";
        case ErrorKind::NonExactDivision: return "NonExactDivision";
        case ErrorKind::UnknownFamily: return "UnknownFamily";
        case ErrorKind::ParamArity: return "ParamArity";
        case ErrorKind::NotTernaryCubic: return "NotTernaryCubic";
        case ErrorKind::WrongFamilyKind: return "WrongFamilyKind";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NotAUnit: return "NotAUnit";
        case ErrorKind::SingularMap: return "SingularMap";
        case ErrorKind::SeedNotSolution: return "SeedNotSolution";
        case ErrorKind::StepNotSolution: return "StepNotSolution";
        case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::VerificationFailed: return "VerificationFailed";
    }
    return "Unknown";
}

/// All library failures are reported through this one exception type; the
/// kind tells callers (and the CLI) what went wrong.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace compform
