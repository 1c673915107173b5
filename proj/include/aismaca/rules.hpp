// Elementary CA rules (0-255), their truth tables, and the fuzzy evaluation
// used by the classifier engine: the multilinear extension of a rule's truth
// table, the unique polynomial in (l, c, r) that agrees with the table on all
// Boolean corners and maps [0,1]^3 into [0,1].
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "aismaca/errors.hpp"

namespace aismaca {

// Entry (4l + 2c + r) is the successor bit for neighborhood (l, c, r).
using RuleTable = std::array<std::uint8_t, 8>;

class Rule {
public:
    Rule() = default;
    explicit Rule(int number);

    int number() const { return number_; }

    // 255 XOR number; its fuzzy form is 1 - f.
    Rule complemented() const { return Rule(255 - number_); }

    bool output(bool l, bool c, bool r) const {
        return (number_ >> ((l << 2) | (c << 1) | static_cast<int>(r))) & 1;
    }

    friend bool operator==(Rule, Rule) = default;

private:
    std::uint8_t number_ = 0;
};

RuleTable decode_rule(Rule rule);

// Multilinear extension, evaluated as trilinear interpolation of the eight
// corner bits. Exact on Boolean corners. Throws DomainError outside [0,1]^3.
double eval_rule_fuzzy(Rule rule, double l, double c, double r);

// Hot-path variant: corners precomputed as doubles, inputs assumed in range.
inline double eval_corners(const std::array<double, 8>& t, double l, double c,
                           double r) {
    const double c00 = t[0] + r * (t[1] - t[0]);
    const double c01 = t[2] + r * (t[3] - t[2]);
    const double c10 = t[4] + r * (t[5] - t[4]);
    const double c11 = t[6] + r * (t[7] - t[6]);
    const double m0 = c00 + c * (c01 - c00);
    const double m1 = c10 + c * (c11 - c10);
    return m0 + l * (m1 - m0);
}

std::array<double, 8> rule_corners(Rule rule);

enum class Boundary { Null };  // virtual cells beyond both ends are fixed 0

// Per-cell rule assignment; the evolvable genome of the classifier.
class RuleVector {
public:
    RuleVector() = default;
    explicit RuleVector(std::vector<Rule> rules,
                        Boundary boundary = Boundary::Null);

    static RuleVector uniform(Rule rule, std::size_t n);
    static RuleVector from_numbers(const std::vector<int>& numbers);

    std::size_t size() const { return rules_.size(); }
    bool empty() const { return rules_.empty(); }
    Rule operator[](std::size_t i) const { return rules_[i]; }
    const std::vector<Rule>& rules() const { return rules_; }
    Boundary boundary() const { return boundary_; }

    std::vector<int> numbers() const;

    friend bool operator==(const RuleVector&, const RuleVector&) = default;

private:
    std::vector<Rule> rules_;
    Boundary boundary_ = Boundary::Null;
};

}  // namespace aismaca
