#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace ctxsec {

using Json = nlohmann::json;
using TimeMs = std::int64_t;
using Bytes = std::vector<unsigned char>;

enum class ErrorCode {
    UnknownDevice,
    BadSignature,
    ReplayedSequence,
    ClockSkewExceeded,
    UnnormalizableValue,
    InvalidWindow,
    EmptyTrainingSet,
    UnknownUser,
    UnknownSubject,
    UnknownToken,
    UnknownPeer,
    TamperDetected,
    StaleEpoch,
    NonceReuse,
    DuplicateDevice,
    ContractViolation,
    CyclicConstraints,
    LintError,
    ParseError,
    UnresolvedReference,
    InvalidTransform,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::UnknownDevice: return "UnknownDevice";
        case ErrorCode::BadSignature: return "BadSignature";
        case ErrorCode::ReplayedSequence: return "ReplayedSequence";
        case ErrorCode::ClockSkewExceeded: return "ClockSkewExceeded";
        case ErrorCode::UnnormalizableValue: return "UnnormalizableValue";
        case ErrorCode::InvalidWindow: return "InvalidWindow";
        case ErrorCode::EmptyTrainingSet: return "EmptyTrainingSet";
        case ErrorCode::UnknownUser: return "UnknownUser";
        case ErrorCode::UnknownSubject: return "UnknownSubject";
        case ErrorCode::UnknownToken: return "UnknownToken";
        case ErrorCode::UnknownPeer: return "UnknownPeer";
        case ErrorCode::TamperDetected: return "TamperDetected";
        case ErrorCode::StaleEpoch: return "StaleEpoch";
        case ErrorCode::NonceReuse: return "NonceReuse";
        case ErrorCode::DuplicateDevice: return "DuplicateDevice";
        case ErrorCode::ContractViolation: return "ContractViolation";
        case ErrorCode::CyclicConstraints: return "CyclicConstraints";
        case ErrorCode::LintError: return "LintError";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::UnresolvedReference: return "UnresolvedReference";
        case ErrorCode::InvalidTransform: return "InvalidTransform";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

inline double clamp01(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }

// Glob match with '*' as the only wildcard (matches any run of characters).
inline bool glob_match(const std::string& pattern, const std::string& text) {
    std::size_t p = 0, t = 0, star = std::string::npos, mark = 0;
    while (t < text.size()) {
        if (p < pattern.size() && (pattern[p] == text[t])) {
            ++p;
            ++t;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = t;
        } else if (star != std::string::npos) {
            p = star + 1;
            t = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

// Number of literal (non-'*') characters; used to rank pattern specificity.
inline std::size_t glob_literal_count(const std::string& pattern) {
    std::size_t n = 0;
    for (char c : pattern)
        if (c != '*') ++n;
    return n;
}

}  // namespace ctxsec
