#include "qgen/model.hpp"

#include <cctype>
#include <chrono>
#include <cstdio>

#include "qgen/hash.hpp"
#include "qgen/verification.hpp"

namespace qgen {

std::string to_hex16(uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return std::string(buf);
}

// ---------------------------------------------------------------------------
// Enum names
// ---------------------------------------------------------------------------

std::string to_string(PrincipleId id) {
    switch (id) {
        case PrincipleId::rephrase: return "rephrase";
        case PrincipleId::new_topic: return "new_topic";
        case PrincipleId::restructure: return "restructure";
        case PrincipleId::new_scenario: return "new_scenario";
    }
    return "rephrase";
}

std::optional<PrincipleId> principle_from_string(std::string_view name) {
    for (PrincipleId id : kAllPrinciples)
        if (to_string(id) == name) return id;
    return std::nullopt;
}

std::string to_string(DomainTag t) {
    switch (t) {
        case DomainTag::math: return "math";
        case DomainTag::code: return "code";
        case DomainTag::other: return "other";
    }
    return "other";
}

std::optional<DomainTag> domain_from_string(std::string_view name) {
    if (name == "math") return DomainTag::math;
    if (name == "code") return DomainTag::code;
    if (name == "other") return DomainTag::other;
    return std::nullopt;
}

std::string to_string(Provenance p) {
    return p == Provenance::seed ? "seed" : "generated";
}

std::optional<Provenance> provenance_from_string(std::string_view name) {
    if (name == "seed") return Provenance::seed;
    if (name == "generated") return Provenance::generated;
    return std::nullopt;
}

std::string to_string(Novelty n) {
    switch (n) {
        case Novelty::novel: return "novel";
        case Novelty::not_novel: return "not_novel";
        case Novelty::unknown: return "unknown";
    }
    return "unknown";
}

std::string to_string(Correctness c) {
    switch (c) {
        case Correctness::correct: return "correct";
        case Correctness::incorrect: return "incorrect";
        case Correctness::unknown: return "unknown";
    }
    return "unknown";
}

std::string to_string(Decision d) {
    return d == Decision::accept ? "accept" : "reject";
}

std::string to_string(EpisodeStatus s) {
    switch (s) {
        case EpisodeStatus::accepted: return "accepted";
        case EpisodeStatus::exhausted: return "exhausted";
        case EpisodeStatus::parse_failed: return "parse_failed";
        case EpisodeStatus::backend_failed: return "backend_failed";
    }
    return "exhausted";
}

std::optional<EpisodeStatus> episode_status_from_string(std::string_view name) {
    if (name == "accepted") return EpisodeStatus::accepted;
    if (name == "exhausted") return EpisodeStatus::exhausted;
    if (name == "parse_failed") return EpisodeStatus::parse_failed;
    if (name == "backend_failed") return EpisodeStatus::backend_failed;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Principle catalog
// ---------------------------------------------------------------------------

namespace {

const char* kRephrasePair =
    "Question: Joy can read 8 pages of a book in 20 minutes. How many hours will it take her to "
    "read 120 pages?\n"
    "Question (rephrase): How many hours will Joy need to read 120 pages if she can read 8 pages "
    "in 20 minutes?";

const char* kNewTopicPair =
    "Question: Jack is stranded on a desert island. He wants some salt to season his fish. He "
    "collects 2 liters of seawater in an old bucket. If the water is 20% salt, how many ml of "
    "salt will Jack get when all the water evaporates?\n"
    "Question (topic): Samantha is designing a circular garden in her backyard. The garden has a "
    "diameter of 8 meters. She wants to build a path around the garden that is 1 meter wide. What "
    "is the area of the path, in square meters, that Samantha will need to pave with stones or "
    "concrete?";

const char* kRestructurePair =
    "Question: Dan owns an ice cream shop and every sixth customer gets a free ice cream cone. "
    "Cones cost $2 each. If he sold $100 worth of cones, how many free ones did he give away?\n"
    "Question (restructured): Dan owns an ice cream shop and every sixth customer gets a free ice "
    "cream cone. Cones cost $x each. If he sold $100 worth of cones, how many free ones did he "
    "give away? If we know the answer is 10, what is the value of x?";

const char* kNewScenarioPair =
    "Question: Ed has 2 dogs, 3 cats and twice as many fish as cats and dogs combined. How many "
    "pets does Ed have in total?\n"
    "Question (scenario): Sarah owns 4 bicycles, 2 skateboards, and three times as many pairs of "
    "rollerblades as bicycles and skateboards combined. How many wheeled sports equipment items "
    "does Sarah have in total?";

Principle make_principle(PrincipleId id, const char* actor_head, const char* critic_head,
                         const char* pair) {
    Principle p;
    p.id = id;
    p.example_pair = pair;
    p.actor_text = std::string(actor_head) + "\n" + pair;
    p.critic_text = std::string(critic_head) + "\n" + pair;
    return p;
}

} // namespace

const std::vector<Principle>& principle_catalog() {
    static const std::vector<Principle> catalog = {
        make_principle(PrincipleId::rephrase,
                       "You can rephrase any given question:",
                       "Rephrased question is acceptable:", kRephrasePair),
        make_principle(PrincipleId::new_topic,
                       "You can come up with a different topic:",
                       "A different topic is acceptable:", kNewTopicPair),
        make_principle(PrincipleId::restructure,
                       "You can change the structure of any question:",
                       "A question with different structure is acceptable:", kRestructurePair),
        make_principle(PrincipleId::new_scenario,
                       "You can come up with a different scenario:",
                       "A different scenario is acceptable:", kNewScenarioPair),
    };
    return catalog;
}

const Principle& principle(PrincipleId id) {
    for (const Principle& p : principle_catalog())
        if (p.id == id) return p;
    throw Error("unknown principle id");
}

// ---------------------------------------------------------------------------
// Answers
// ---------------------------------------------------------------------------

std::string answer_to_string(const Answer& a) {
    if (const auto* r = std::get_if<Rational>(&a)) return r->str();
    return std::get<std::string>(a);
}

Answer answer_from_string(const std::string& text) {
    if (auto r = Rational::parse(text)) return *r;
    return text;
}

std::string normalize_answer_text(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    bool pending_space = false;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) {
            out += ' ';
            pending_space = false;
        }
        out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
}

bool answers_equal(const Answer& a, const Answer& b) {
    if (a.index() != b.index()) return false;
    if (const auto* ra = std::get_if<Rational>(&a)) return *ra == std::get<Rational>(b);
    return normalize_answer_text(std::get<std::string>(a)) ==
           normalize_answer_text(std::get<std::string>(b));
}

// ---------------------------------------------------------------------------
// RecordFactory
// ---------------------------------------------------------------------------

RecordFactory::RecordFactory(std::string run_id, std::function<int64_t()> clock)
    : run_id_(std::move(run_id)), clock_(std::move(clock)) {}

std::function<int64_t()> RecordFactory::logical_clock(int64_t start) {
    auto counter = std::make_shared<std::atomic<int64_t>>(start);
    return [counter] { return counter->fetch_add(1); };
}

std::function<int64_t()> RecordFactory::wall_clock() {
    return [] {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::system_clock::now().time_since_epoch())
            .count();
    };
}

ProblemRecord RecordFactory::new_record(std::string question, std::string solution,
                                        Provenance provenance,
                                        std::optional<PrincipleId> principle,
                                        std::vector<std::string> lineage) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%06llu",
                  static_cast<unsigned long long>(seq_.fetch_add(1)));
    return new_record_with_id(run_id_ + "-" + buf, std::move(question), std::move(solution),
                              provenance, principle, std::move(lineage));
}

ProblemRecord RecordFactory::new_record_with_id(std::string id, std::string question,
                                                std::string solution, Provenance provenance,
                                                std::optional<PrincipleId> principle,
                                                std::vector<std::string> lineage) {
    if (question.empty()) throw EmptyQuestion();
    if (provenance == Provenance::seed && (principle.has_value() || !lineage.empty()))
        throw SeedWithPrinciple();
    if (provenance == Provenance::generated && !principle.has_value())
        throw Error("generated record requires a principle");

    ProblemRecord r;
    r.id = std::move(id);
    r.question = std::move(question);
    r.solution = std::move(solution);
    r.provenance = provenance;
    r.principle = principle;
    r.lineage = std::move(lineage);
    r.created_at = clock_();
    try {
        r.final_answer = extract_final_answer(r.solution);
    } catch (const NoAnswerFound&) {
        r.final_answer = std::nullopt;
    }
    return r;
}

} // namespace qgen
