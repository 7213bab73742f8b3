#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qgen/errors.hpp"
#include "qgen/rational.hpp"

namespace qgen {

// ---------------------------------------------------------------------------
// Principles
// ---------------------------------------------------------------------------

enum class PrincipleId { rephrase, new_topic, restructure, new_scenario };

constexpr std::array<PrincipleId, 4> kAllPrinciples = {
    PrincipleId::rephrase, PrincipleId::new_topic,
    PrincipleId::restructure, PrincipleId::new_scenario};

std::string to_string(PrincipleId id);
std::optional<PrincipleId> principle_from_string(std::string_view name);

/// One exploration directive. actor_text is the directive the generator
/// follows; critic_text is the same directive phrased as an acceptance rule
/// for the evaluator. Both end with the identical worked example pair.
struct Principle {
    PrincipleId id;
    std::string actor_text;
    std::string critic_text;
    std::string example_pair; // shared tail of actor_text and critic_text
};

/// The built-in catalog of all four principles.
const std::vector<Principle>& principle_catalog();
const Principle& principle(PrincipleId id);

// ---------------------------------------------------------------------------
// Answers
// ---------------------------------------------------------------------------

/// Canonical final answer: an exact rational for numeric answers, or a
/// whitespace/case-normalized string otherwise.
using Answer = std::variant<Rational, std::string>;

std::string answer_to_string(const Answer& a);
/// Inverse of answer_to_string: numeric-looking text parses to a Rational.
Answer answer_from_string(const std::string& text);
/// Lowercase, collapse runs of whitespace, trim.
std::string normalize_answer_text(std::string_view text);
bool answers_equal(const Answer& a, const Answer& b);

// ---------------------------------------------------------------------------
// Records
// ---------------------------------------------------------------------------

enum class DomainTag { math, code, other };
enum class Provenance { seed, generated };

std::string to_string(DomainTag t);
std::optional<DomainTag> domain_from_string(std::string_view name);
std::string to_string(Provenance p);
std::optional<Provenance> provenance_from_string(std::string_view name);

struct ProblemRecord {
    std::string id;
    std::string question;
    std::string solution;
    std::optional<Answer> final_answer;
    DomainTag domain_tag = DomainTag::math;
    Provenance provenance = Provenance::seed;
    std::optional<PrincipleId> principle; // generated only
    std::vector<std::string> lineage;     // exemplar ids, generated only
    int64_t created_at = 0;

    bool operator==(const ProblemRecord&) const = default;
};

/// Issues records with opaque run-scoped ids and timestamps. Timestamps come
/// from the injected clock: a logical counter under scripted backends, wall
/// clock otherwise.
class RecordFactory {
public:
    RecordFactory(std::string run_id, std::function<int64_t()> clock);

    /// Logical clock starting at `start`; each call ticks by one.
    static std::function<int64_t()> logical_clock(int64_t start = 0);
    static std::function<int64_t()> wall_clock();

    ProblemRecord new_record(std::string question, std::string solution, Provenance provenance,
                             std::optional<PrincipleId> principle = std::nullopt,
                             std::vector<std::string> lineage = {});

    /// Same checks and answer extraction, but with a caller-chosen id
    /// (the orchestrator embeds batch/episode indices).
    ProblemRecord new_record_with_id(std::string id, std::string question, std::string solution,
                                     Provenance provenance,
                                     std::optional<PrincipleId> principle = std::nullopt,
                                     std::vector<std::string> lineage = {});

    const std::string& run_id() const { return run_id_; }

private:
    std::string run_id_;
    std::function<int64_t()> clock_;
    std::atomic<uint64_t> seq_{0};
};

// ---------------------------------------------------------------------------
// Critic verdicts and episode traces
// ---------------------------------------------------------------------------

enum class Novelty { novel, not_novel, unknown };
enum class Correctness { correct, incorrect, unknown };
enum class Decision { accept, reject };

std::string to_string(Novelty n);
std::string to_string(Correctness c);
std::string to_string(Decision d);

struct CritiqueResult {
    Novelty novelty = Novelty::unknown;
    Correctness correctness = Correctness::unknown;
    Decision decision = Decision::reject;
    std::string critique_text; // contiguous substring of raw_text, or empty
    std::string raw_text;

    bool operator==(const CritiqueResult&) const = default;
};

enum class EpisodeStatus { accepted, exhausted, parse_failed, backend_failed };

std::string to_string(EpisodeStatus s);
std::optional<EpisodeStatus> episode_status_from_string(std::string_view name);

struct ParsedCandidate {
    std::string question;
    std::string solution;
    bool operator==(const ParsedCandidate&) const = default;
};

struct EpisodeRound {
    std::string actor_raw;
    std::optional<ParsedCandidate> parsed;
    CritiqueResult critique;
    bool operator==(const EpisodeRound&) const = default;
};

struct EpisodeTrace {
    PrincipleId principle = PrincipleId::rephrase;
    std::vector<std::string> exemplar_ids;
    std::vector<EpisodeRound> rounds;
    EpisodeStatus status = EpisodeStatus::exhausted;
    std::optional<ProblemRecord> accepted_record;
    int batch_index = 0;
    int episode_index = 0;

    bool operator==(const EpisodeTrace&) const = default;
};

// ---------------------------------------------------------------------------
// Embeddings
// ---------------------------------------------------------------------------

struct EmbeddingVector {
    std::vector<double> values;

    size_t dim() const { return values.size(); }
    bool operator==(const EmbeddingVector&) const = default;
};

} // namespace qgen
