#include "qgen/verification.hpp"

#include <algorithm>
#include <cctype>

namespace qgen {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Replaces the multiplication/division glyphs the models actually emit
// (×, ÷, unicode minus, and a lone "x" between numeric operands) with ASCII
// operators so one parser handles all spellings.
std::string normalize_operators(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    size_t i = 0;
    auto prev_meaningful = [&]() -> char {
        for (size_t j = out.size(); j > 0; --j)
            if (!std::isspace(static_cast<unsigned char>(out[j - 1]))) return out[j - 1];
        return '\0';
    };
    while (i < text.size()) {
        unsigned char c = text[i];
        // UTF-8: × U+00D7, ÷ U+00F7, − U+2212
        if (c == 0xC3 && i + 1 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x97) {
            out += '*';
            i += 2;
            continue;
        }
        if (c == 0xC3 && i + 1 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0xB7) {
            out += '/';
            i += 2;
            continue;
        }
        if (c == 0xE2 && i + 2 < text.size() &&
            static_cast<unsigned char>(text[i + 1]) == 0x88 &&
            static_cast<unsigned char>(text[i + 2]) == 0x92) {
            out += '-';
            i += 3;
            continue;
        }
        if (c == 'x' || c == 'X') {
            char before = prev_meaningful();
            size_t j = i + 1;
            while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
            bool num_before = is_digit(before) || before == ')';
            bool num_after = j < text.size() && (is_digit(text[j]) || text[j] == '(');
            bool spaced = (i > 0 && std::isspace(static_cast<unsigned char>(text[i - 1]))) ||
                          (i + 1 < text.size() && std::isspace(static_cast<unsigned char>(text[i + 1])));
            if (num_before && num_after && spaced) {
                out += '*';
                ++i;
                continue;
            }
        }
        out += static_cast<char>(c);
        ++i;
    }
    return out;
}

struct ExprParser {
    std::string_view s;
    size_t pos = 0;
    int depth = 0; // binary ops + parenthesized groups

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    std::optional<Rational> number() {
        skip_ws();
        size_t start = pos;
        if (pos >= s.size() || !is_digit(s[pos])) return std::nullopt;
        while (pos < s.size() && (is_digit(s[pos]) ||
                                  (s[pos] == ',' && pos + 1 < s.size() && is_digit(s[pos + 1])) ||
                                  (s[pos] == '.' && pos + 1 < s.size() && is_digit(s[pos + 1]))))
            ++pos;
        return Rational::parse(s.substr(start, pos - start));
    }

    std::optional<Rational> primary() {
        skip_ws();
        if (pos < s.size() && s[pos] == '-') {
            ++pos;
            auto v = primary();
            if (!v) return std::nullopt;
            return -*v;
        }
        if (pos < s.size() && s[pos] == '(') {
            ++pos;
            auto v = sum();
            if (!v) return std::nullopt;
            skip_ws();
            if (pos >= s.size() || s[pos] != ')') return std::nullopt;
            ++pos;
            ++depth;
            return v;
        }
        return number();
    }

    std::optional<Rational> product() {
        auto lhs = primary();
        if (!lhs) return std::nullopt;
        for (;;) {
            skip_ws();
            if (pos < s.size() && (s[pos] == '*' || s[pos] == '/')) {
                char op = s[pos++];
                auto rhs = primary();
                if (!rhs) return std::nullopt;
                lhs = op == '*' ? *lhs * *rhs : *lhs / *rhs;
                ++depth;
            } else {
                return lhs;
            }
        }
    }

    std::optional<Rational> sum() {
        auto lhs = product();
        if (!lhs) return std::nullopt;
        for (;;) {
            skip_ws();
            if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
                char op = s[pos++];
                auto rhs = product();
                if (!rhs) return std::nullopt;
                lhs = op == '+' ? *lhs + *rhs : *lhs - *rhs;
                ++depth;
            } else {
                return lhs;
            }
        }
    }
};

std::optional<Rational> parse_expr(std::string_view text, int* depth_out = nullptr) {
    ExprParser p{text};
    auto v = p.sum();
    if (!v) return std::nullopt;
    p.skip_ws();
    if (p.pos != text.size()) return std::nullopt;
    if (depth_out) *depth_out = p.depth;
    return v;
}

bool is_expr_char(char c) {
    return is_digit(c) || c == '.' || c == ',' || c == '+' || c == '-' || c == '*' || c == '/' ||
           c == '(' || c == ')' || c == ' ' || c == '\t';
}

std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

// Scans a number token at text[pos...]: optional $, sign, digits with comma
// groups, decimal part or /denominator. Returns one-past-end, or npos.
size_t scan_number_token(std::string_view text, size_t pos, std::string* token) {
    size_t i = pos;
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    if (i < text.size() && text[i] == '$') ++i;
    size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    if (i >= text.size() || !is_digit(text[i])) return std::string::npos;
    while (i < text.size() &&
           (is_digit(text[i]) ||
            (text[i] == ',' && i + 1 < text.size() && is_digit(text[i + 1])) ||
            (text[i] == '.' && i + 1 < text.size() && is_digit(text[i + 1]))))
        ++i;
    if (i < text.size() && text[i] == '/' && i + 1 < text.size() && is_digit(text[i + 1])) {
        ++i;
        while (i < text.size() && is_digit(text[i])) ++i;
    }
    *token = std::string(text.substr(start, i - start));
    return i;
}

// True when the text after a claimed number continues the equation: another
// '=', or an operator leading into a further operand. Then this '=' is an
// inner link of a chain like "3 + 2 = 3 + 3 = 6" and not a final claim.
bool continues_as_expression(std::string_view text, size_t pos) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos >= text.size()) return false;
    char c = text[pos];
    if (c == '=') return true;
    if (c == '+' || c == '-' || c == '*' || c == '/') {
        size_t j = pos + 1;
        while (j < text.size() && (text[j] == ' ' || text[j] == '\t')) ++j;
        return j < text.size() && (is_digit(text[j]) || text[j] == '(' || text[j] == '$');
    }
    return false;
}

// Lowercased substring search.
size_t ifind(const std::string& hay, const std::string& needle, size_t from = 0) {
    if (from > hay.size()) return std::string::npos;
    auto it = std::search(hay.begin() + static_cast<long>(from), hay.end(), needle.begin(),
                          needle.end(), [](char a, char b) {
                              return std::tolower(static_cast<unsigned char>(a)) ==
                                     std::tolower(static_cast<unsigned char>(b));
                          });
    return it == hay.end() ? std::string::npos : static_cast<size_t>(it - hay.begin());
}

size_t last_ifind(const std::string& hay, const std::string& needle) {
    size_t best = std::string::npos;
    for (size_t at = ifind(hay, needle); at != std::string::npos; at = ifind(hay, needle, at + 1))
        best = at;
    return best;
}

std::optional<Rational> first_number_from(const std::string& text, size_t from) {
    for (size_t i = from; i < text.size(); ++i) {
        if (is_digit(text[i])) {
            size_t start = i > from && text[i - 1] == '-' ? i - 1 : i;
            std::string token;
            size_t end = scan_number_token(text, start, &token);
            if (end != std::string::npos)
                if (auto r = Rational::parse(token)) return r;
            i = end == std::string::npos ? i : end - 1;
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<Rational> evaluate_expression(std::string_view expr) {
    return parse_expr(normalize_operators(expr));
}

std::optional<Answer> final_answer_after_marker(const std::string& text) {
    size_t marker = text.rfind("####");
    if (marker == std::string::npos) return std::nullopt;
    size_t i = marker + 4;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    size_t end = i;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::string token = text.substr(i, end - i);
    while (!token.empty() && (token.back() == '.' || token.back() == ',')) token.pop_back();
    if (token.empty()) return std::nullopt;
    if (!token.empty() && token.front() == '$') token.erase(token.begin());
    if (auto r = Rational::parse(token)) return Answer(*r);
    return Answer(normalize_answer_text(token));
}

std::optional<Rational> last_number_in(const std::string& text) {
    std::optional<Rational> last;
    for (size_t i = 0; i < text.size();) {
        if (is_digit(text[i])) {
            size_t start = i > 0 && text[i - 1] == '-' ? i - 1 : i;
            std::string token;
            size_t end = scan_number_token(text, start, &token);
            if (end != std::string::npos) {
                if (auto r = Rational::parse(token)) last = r;
                i = end;
                continue;
            }
        }
        ++i;
    }
    return last;
}

Answer extract_final_answer(const std::string& solution) {
    if (auto marked = final_answer_after_marker(solution)) return *marked;

    size_t clause = std::string::npos;
    for (const char* text : {"answer:", "the answer is"}) {
        size_t at = last_ifind(solution, text);
        if (at != std::string::npos && (clause == std::string::npos || at > clause)) clause = at;
    }
    if (clause != std::string::npos)
        if (auto r = first_number_from(solution, clause)) return Answer(*r);

    if (auto r = last_number_in(solution)) return Answer(*r);
    throw NoAnswerFound();
}

StepCheck check_arithmetic_steps(const std::string& solution) {
    StepCheck result;
    std::string text = normalize_operators(solution);

    for (size_t eq = text.find('='); eq != std::string::npos; eq = text.find('=', eq + 1)) {
        std::string claimed_token;
        size_t rhs_end = scan_number_token(text, eq + 1, &claimed_token);
        if (rhs_end == std::string::npos) continue; // "=" not followed by a number
        if (continues_as_expression(text, rhs_end)) {
            result.skipped.push_back("chain link before '" + claimed_token + "'");
            continue;
        }
        auto claimed = Rational::parse(claimed_token);
        if (!claimed) continue;

        // Longest run of expression characters ending at '='.
        size_t lo = eq;
        while (lo > 0 && is_expr_char(text[lo - 1])) --lo;
        std::string_view window(text.data() + lo, eq - lo);

        // Longest parseable suffix with at least one operation.
        std::string lhs;
        Rational lhs_value;
        bool found = false;
        bool div_zero = false;
        for (size_t off = 0; off < window.size(); ++off) {
            std::string candidate = trim(window.substr(off));
            if (candidate.empty()) break;
            int depth = 0;
            try {
                auto v = parse_expr(candidate, &depth);
                if (v && depth >= 1) {
                    lhs = candidate;
                    lhs_value = *v;
                    found = true;
                    break;
                }
                if (v) break; // bare number: "a = b" is not a calculation
            } catch (const DivisionByZero&) {
                div_zero = true;
                lhs = candidate;
                break;
            } catch (const RationalOverflow&) {
                break;
            }
        }
        if (div_zero) {
            result.skipped.push_back("division by zero in '" + lhs + " = " + claimed_token + "'");
            continue;
        }
        if (!found) {
            std::string w = trim(window);
            if (!w.empty() && w.find_first_of("+*/") != std::string::npos)
                result.skipped.push_back("unparseable step '" + w + " = " + claimed_token + "'");
            continue;
        }

        StepVerdict v;
        v.raw_step = lhs + " = " + claimed_token;
        v.lhs_value = lhs_value;
        v.claimed = *claimed;
        v.correct = lhs_value == *claimed;
        result.verdicts.push_back(std::move(v));
    }
    return result;
}

VerifyResult verify_record(const ProblemRecord& record, PrincipleId principle,
                           const std::optional<Answer>& parent_gold) {
    // No ground truth exists for these two categories; they are not filtered.
    if (principle == PrincipleId::restructure || principle == PrincipleId::new_topic)
        return VerifyResult::pass();

    StepCheck steps = check_arithmetic_steps(record.solution);
    for (const auto& v : steps.verdicts)
        if (!v.correct)
            return VerifyResult::fail("incorrect calculation: " + v.raw_step + " (lhs is " +
                                      v.lhs_value.str() + ")");

    std::optional<Answer> answer = record.final_answer;
    if (!answer) {
        try {
            answer = extract_final_answer(record.solution);
        } catch (const NoAnswerFound&) {
            return VerifyResult::fail("no final answer found");
        }
    }

    if (principle == PrincipleId::rephrase) {
        if (!parent_gold) throw MissingParentGold();
        if (!answers_equal(*answer, *parent_gold))
            return VerifyResult::fail("final answer " + answer_to_string(*answer) +
                                      " does not match parent answer " +
                                      answer_to_string(*parent_gold));
        return VerifyResult::pass();
    }

    // new_scenario: internal consistency against the last step's value.
    if (steps.verdicts.empty())
        return VerifyResult::fail("no checkable calculation steps");
    const Rational& final_step = steps.verdicts.back().claimed;
    if (!answers_equal(*answer, Answer(final_step)))
        return VerifyResult::fail("final answer " + answer_to_string(*answer) +
                                  " does not match last step value " + final_step.str());
    return VerifyResult::pass();
}

} // namespace qgen
