#pragma once

#include <stdexcept>
#include <string>

namespace flagaut {

/// Failure of a mathematical precondition. `name()` is a stable kebab-case
/// identifier ("not-a-parabolic", "no-very-special-isogeny", ...) that the
/// CLI reports verbatim; `what()` adds a human-readable detail.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string name, const std::string& detail)
      : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

}  // namespace flagaut
