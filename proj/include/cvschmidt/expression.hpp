#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "cvschmidt/amplitude.hpp"

namespace cvschmidt {

/// Syntax error with the byte offset of the offending token.
struct ParseError : std::invalid_argument {
    ParseError(const std::string& what, size_t offset)
        : std::invalid_argument(what + " at offset " + std::to_string(offset)), offset(offset) {}
    size_t offset;
};

/// A parsed arithmetic expression over the variables p and q.
///
/// Grammar: operators + - * / ^ (power, right-associative), unary minus,
/// parentheses, numeric literals, and the functions exp, sin, cos, sinc,
/// sqrt, abs. Evaluation costs O(size) per point; division by zero raises
/// NumericalError.
class Expression {
  public:
    static Expression parse(std::string_view src);

    double eval(double p, double q) const;
    /// Canonical text form; reparsing it yields an equivalent expression.
    std::string str() const;

    Amplitude as_amplitude() const;

    struct Node;

  private:
    explicit Expression(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
    std::shared_ptr<const Node> root_;
};

/// Spec'd convenience: parse src and wrap it as an Amplitude on the full
/// plane, labelled with the source text.
Amplitude parse_expression(std::string_view src);

}  // namespace cvschmidt
