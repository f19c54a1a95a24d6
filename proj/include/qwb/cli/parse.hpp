#pragma once

// Text expressions for the command line:
//   expr  := term (('+' | '-') term)*
//   term  := unary ('*' unary)*
//   unary := ('-' | '+') unary | power
//   power := atom ('^' integer)?
//   atom  := integer | integer '/' integer | 'i' | 'hbar' | variable | '(' expr ')'

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "qwb/opalg.hpp"
#include "qwb/poly.hpp"

namespace qwb::cli {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message);
  /// 0-based character offset into the input.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

PhasePoly parse_expression(const std::string& text, const TablePtr& table);

/// Ordered product of generators: q/Q and p/P (with mode suffixes) become Q_j and P_j.
CanonicalOperator parse_operator(const std::string& text, std::size_t modes);

/// The smallest table covering every identifier in the texts: the complex
/// chart if any z or zb appears, otherwise the canonical one.
TablePtr infer_table(const std::vector<std::string>& texts, std::size_t min_dof = 1);

}  // namespace qwb::cli
