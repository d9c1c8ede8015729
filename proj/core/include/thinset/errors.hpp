#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace thinset {

// Invalid arguments, unknown names, horizons too small, and similar
// caller-visible failures.
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A declared certificate contradicts observed data or itself.
class CertificateError : public DomainError {
public:
  explicit CertificateError(const std::string& what) : DomainError(what) {}
};

// Set-expression text rejected by the grammar. Carries the byte offset
// where scanning stopped.
class ParseError : public DomainError {
public:
  ParseError(std::size_t position, const std::string& what)
      : DomainError("parse error at position " + std::to_string(position) +
                    ": " + what),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

}  // namespace thinset
