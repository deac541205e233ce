#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ringlab {

enum class SpecIssueKind {
    ShapeMismatch,
    IncompatibleModuli,
    NonAssociative,
    BadUnit,
};

/// One violated law of a ring presentation, with a witness generator triple
/// where applicable (indices are -1 when unused).
struct SpecIssue {
    SpecIssueKind kind;
    int i = -1;
    int j = -1;
    int l = -1;
    std::string detail;

    std::string message() const {
        std::string head;
        switch (kind) {
            case SpecIssueKind::ShapeMismatch: head = "ShapeMismatch"; break;
            case SpecIssueKind::IncompatibleModuli: head = "IncompatibleModuli"; break;
            case SpecIssueKind::NonAssociative: head = "NonAssociative"; break;
            case SpecIssueKind::BadUnit: head = "BadUnit"; break;
        }
        if (i >= 0) {
            head += "(" + std::to_string(i);
            if (j >= 0) head += "," + std::to_string(j);
            if (l >= 0) head += "," + std::to_string(l);
            head += ")";
        }
        if (!detail.empty()) head += ": " + detail;
        return head;
    }
};

struct RingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : RingError {
    std::vector<SpecIssue> issues;

    explicit ValidationError(std::vector<SpecIssue> iss)
        : RingError(join(iss)), issues(std::move(iss)) {}

    static std::string join(const std::vector<SpecIssue>& iss) {
        std::string s = "invalid ring spec:";
        for (const auto& e : iss) s += " " + e.message();
        return s;
    }
};

/// An enumeration or socle cap was exceeded; carries the size that would
/// have been required so callers can report it.
struct CapExceeded : RingError {
    std::uint64_t required;
    std::uint64_t cap;

    CapExceeded(std::uint64_t req, std::uint64_t c)
        : RingError("size " + std::to_string(req) + " exceeds cap " + std::to_string(c)),
          required(req), cap(c) {}
};

struct RingMismatch : RingError {
    RingMismatch() : RingError("elements belong to different rings") {}
};

struct NotTwoSided : RingError {
    NotTwoSided() : RingError("ideal is not two-sided") {}
};

/// A runtime re-verification of a mathematical fact failed; this always
/// signals an implementation bug, never a data outcome.
struct PostcheckFailed : RingError {
    using RingError::RingError;
};

/// A proved theorem disagreed with a computed instance: implementation defect.
struct TheoremViolation : RingError {
    using RingError::RingError;
};

struct PreconditionViolated : RingError {
    using RingError::RingError;
};

}  // namespace ringlab
