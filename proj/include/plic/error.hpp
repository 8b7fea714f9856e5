#pragma once

#include <stdexcept>
#include <string>

namespace plic {

// Error codes mirror the failure modes of the public operations so tests
// and the CLI can dispatch on them without string matching.
enum class Errc {
    AsymmetricRotation,
    Disconnected,
    LoopOrMultiEdge,
    EulerViolation,
    UnknownVertex,
    UnknownFace,
    UnsupportedLength,
    Acyclic,
    PartialColoring,
    TooLarge,
    PatternLengthMismatch,
    WitnessStale,
    ExtensionFailed,
    NotInClass,
    ListTooSmall,
    ParseError,
    Internal,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::AsymmetricRotation: return "AsymmetricRotation";
        case Errc::Disconnected: return "Disconnected";
        case Errc::LoopOrMultiEdge: return "LoopOrMultiEdge";
        case Errc::EulerViolation: return "EulerViolation";
        case Errc::UnknownVertex: return "UnknownVertex";
        case Errc::UnknownFace: return "UnknownFace";
        case Errc::UnsupportedLength: return "UnsupportedLength";
        case Errc::Acyclic: return "Acyclic";
        case Errc::PartialColoring: return "PartialColoring";
        case Errc::TooLarge: return "TooLarge";
        case Errc::PatternLengthMismatch: return "PatternLengthMismatch";
        case Errc::WitnessStale: return "WitnessStale";
        case Errc::ExtensionFailed: return "ExtensionFailed";
        case Errc::NotInClass: return "NotInClass";
        case Errc::ListTooSmall: return "ListTooSmall";
        case Errc::ParseError: return "ParseError";
        case Errc::Internal: return "Internal";
    }
    return "?";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const std::string& what) {
    if (!cond) fail(code, what);
}

}  // namespace plic
