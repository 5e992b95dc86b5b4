#pragma once

#include <stdexcept>
#include <string>

namespace twc {

/// Error categories surfaced by the library.
enum class Errc {
    DivisionByZero,
    FieldMismatch,
    NonExactDivision,
    NotInvertible,
    NegativeIndexNeedsUnit,
    NotStrong,
    SchwarzViolated,
    RankMismatch,
    SyntaxError,
    UnknownSymbol,
    InvalidTwist,
    InvalidArgument,
};

inline const char* errc_name(Errc c) {
    switch (c) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::NonExactDivision: return "NonExactDivision";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::NegativeIndexNeedsUnit: return "NegativeIndexNeedsUnit";
    case Errc::NotStrong: return "NotStrong";
    case Errc::SchwarzViolated: return "SchwarzViolated";
    case Errc::RankMismatch: return "RankMismatch";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownSymbol: return "UnknownSymbol";
    case Errc::InvalidTwist: return "InvalidTwist";
    case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Error";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) { throw Error(code, message); }

} // namespace twc
