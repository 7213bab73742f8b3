#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qgen/model.hpp"
#include "qgen/rational.hpp"

namespace qgen {

/// One checked "<expr> = <number>" occurrence from a solution text.
struct StepVerdict {
    std::string raw_step; // "<lhs expr> = <claimed>" as matched
    Rational lhs_value;
    Rational claimed;
    bool correct = false;

    bool operator==(const StepVerdict&) const = default;
};

struct StepCheck {
    std::vector<StepVerdict> verdicts;
    std::vector<std::string> skipped; // unparseable or division-by-zero sites

    bool all_correct() const {
        for (const auto& v : verdicts)
            if (!v.correct) return false;
        return true;
    }
};

/// Final answer of a solution text. Precedence: token after the last "####"
/// marker; else the first number of an "Answer:" / "The answer is" clause;
/// else the last number anywhere. Throws NoAnswerFound.
Answer extract_final_answer(const std::string& solution);

/// Scans for "<expr> = <number>" where expr uses only numbers, + - * /
/// (x, X, ×, ÷ and unicode minus are normalized first) and parentheses,
/// and evaluates each expr with exact rational arithmetic.
StepCheck check_arithmetic_steps(const std::string& solution);

/// Evaluates one arithmetic expression exactly. Standard precedence, unary
/// minus, parentheses. nullopt when the text is not a pure expression;
/// throws DivisionByZero.
std::optional<Rational> evaluate_expression(std::string_view expr);

struct VerifyResult {
    bool passed = false;
    std::string reason; // empty on pass

    static VerifyResult pass() { return {true, {}}; }
    static VerifyResult fail(std::string why) { return {false, std::move(why)}; }
};

/// Principle-conditional filter. restructure/new_topic pass unconditionally
/// (no ground truth for them); rephrase must match the parent's answer with
/// all calculations correct; new_scenario must be internally consistent.
/// Throws MissingParentGold for a rephrase without a parent answer.
VerifyResult verify_record(const ProblemRecord& record, PrincipleId principle,
                           const std::optional<Answer>& parent_gold = std::nullopt);

} // namespace qgen
