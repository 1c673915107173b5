#include "aismaca/rules.hpp"

#include <string>

namespace aismaca {

Rule::Rule(int number) {
    if (number < 0 || number > 255) {
        throw InvalidRuleError("rule number " + std::to_string(number) +
                               " outside [0, 255]");
    }
    number_ = static_cast<std::uint8_t>(number);
}

RuleTable decode_rule(Rule rule) {
    RuleTable table{};
    for (int i = 0; i < 8; ++i) {
        table[i] = static_cast<std::uint8_t>((rule.number() >> i) & 1);
    }
    return table;
}

std::array<double, 8> rule_corners(Rule rule) {
    std::array<double, 8> corners{};
    for (int i = 0; i < 8; ++i) {
        corners[i] = static_cast<double>((rule.number() >> i) & 1);
    }
    return corners;
}

double eval_rule_fuzzy(Rule rule, double l, double c, double r) {
    for (double x : {l, c, r}) {
        if (!(x >= 0.0 && x <= 1.0)) {
            throw DomainError("fuzzy input " + std::to_string(x) +
                              " outside [0, 1]");
        }
    }
    return eval_corners(rule_corners(rule), l, c, r);
}

RuleVector::RuleVector(std::vector<Rule> rules, Boundary boundary)
    : rules_(std::move(rules)), boundary_(boundary) {}

RuleVector RuleVector::uniform(Rule rule, std::size_t n) {
    return RuleVector(std::vector<Rule>(n, rule));
}

RuleVector RuleVector::from_numbers(const std::vector<int>& numbers) {
    std::vector<Rule> rules;
    rules.reserve(numbers.size());
    for (int n : numbers) {
        rules.emplace_back(n);
    }
    return RuleVector(std::move(rules));
}

std::vector<int> RuleVector::numbers() const {
    std::vector<int> out;
    out.reserve(rules_.size());
    for (Rule r : rules_) {
        out.push_back(r.number());
    }
    return out;
}

}  // namespace aismaca
