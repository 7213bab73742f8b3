#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace qgen {

// Base for everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---- core-model ----
class EmptyQuestion : public Error {
public:
    EmptyQuestion() : Error("question must be nonempty") {}
};

class SeedWithPrinciple : public Error {
public:
    SeedWithPrinciple() : Error("seed record cannot carry a principle or lineage") {}
};

// ---- dataset-io ----
class FileMissing : public Error {
public:
    explicit FileMissing(const std::string& path) : Error("file missing: " + path), path(path) {}
    std::string path;
};

class MalformedLine : public Error {
public:
    MalformedLine(size_t line_no, const std::string& why)
        : Error("line " + std::to_string(line_no) + ": " + why), line_no(line_no) {}
    size_t line_no;
};

class MissingField : public Error {
public:
    MissingField(size_t line_no, const std::string& name)
        : Error("line " + std::to_string(line_no) + ": missing field \"" + name + "\""),
          line_no(line_no), name(name) {}
    size_t line_no;
    std::string name;
};

class IoFailure : public Error {
public:
    explicit IoFailure(const std::string& what) : Error("io failure: " + what) {}
};

// ---- replay-buffer ----
class DuplicateId : public Error {
public:
    explicit DuplicateId(const std::string& id) : Error("duplicate record id: " + id), id(id) {}
    std::string id;
};

class InsufficientBuffer : public Error {
public:
    InsufficientBuffer(size_t k, size_t size)
        : Error("cannot sample " + std::to_string(k) + " from buffer of size " + std::to_string(size)),
          k(k), size(size) {}
    size_t k;
    size_t size;
};

class CorruptSnapshot : public Error {
public:
    explicit CorruptSnapshot(const std::string& why) : Error("corrupt snapshot: " + why) {}
};

// ---- prompting ----
class InvalidCandidate : public Error {
public:
    InvalidCandidate() : Error("candidate question must be nonempty") {}
};

class ActorParseError : public Error {
public:
    enum class Kind { NoQuestionMarker, NoAnswerMarker, EmptySegment };
    ActorParseError(Kind kind, const std::string& why) : Error(why), kind(kind) {}
    Kind kind;
};

class MalformedVerdict : public Error {
public:
    MalformedVerdict() : Error("critic output contains no decision phrase") {}
};

// ---- llm-gateway ----
class GatewayError : public Error {
public:
    enum class Kind { Timeout, RateLimited, MalformedResponse, ScriptExhausted, AuthMissing };
    GatewayError(Kind kind, const std::string& why,
                 std::optional<std::chrono::milliseconds> retry_after = std::nullopt)
        : Error(why), kind(kind), retry_after(retry_after) {}
    Kind kind;
    std::optional<std::chrono::milliseconds> retry_after;

    bool retryable() const { return kind == Kind::Timeout || kind == Kind::RateLimited; }
};

// ---- verification ----
class NoAnswerFound : public Error {
public:
    NoAnswerFound() : Error("no final answer found in solution text") {}
};

class MissingParentGold : public Error {
public:
    MissingParentGold() : Error("rephrase verification requires a resolvable parent answer") {}
};

// ---- diversity ----
class SelectedNotInGround : public Error {
public:
    SelectedNotInGround() : Error("selected vector is not a member of the ground set") {}
};

class KTooLarge : public Error {
public:
    KTooLarge(size_t k, size_t n)
        : Error("k=" + std::to_string(k) + " exceeds " + std::to_string(n) + " buffer vectors") {}
};

// ---- orchestrator / cli ----
class ConfigInvalid : public Error {
public:
    explicit ConfigInvalid(const std::string& why) : Error("invalid config: " + why) {}
};

class QuotasFilled : public Error {
public:
    QuotasFilled() : Error("all per-principle quotas are filled") {}
};

} // namespace qgen
