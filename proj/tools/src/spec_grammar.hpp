#pragma once

#include <stdexcept>
#include <string>

#include "flagaut/parabolic.hpp"

namespace flagaut::cli {

/// Malformed spec text; `token()` is the offending piece of input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string token, const std::string& why)
      : std::runtime_error("cannot parse '" + token + "': " + why), token_(std::move(token)) {}
  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

/// TYPE:pP:factor(,factor)*, factor = aK:KERNEL | Q1 | Q2, optionally Q*Fm;
/// KERNEL = T | Gm | Nm. Root indices are 1-based.
ParabolicSpec parse_spec(const std::string& text);
/// Inverse of parse_spec on valid specs.
std::string format_spec(const ParabolicSpec& spec);

KernelSpec parse_kernel(const std::string& token);
/// "C3" style type token; shape errors are ParseError, bad ranks DomainError.
DynkinType parse_type(const std::string& token);

}  // namespace flagaut::cli
