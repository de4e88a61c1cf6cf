#pragma once
#include <stdexcept>
#include <string>

namespace spectral {

enum class ErrorKind {
  DivisionByZero,
  FieldMismatch,
  NotNormalForm,
  NotCommuting,
  DuplicateOrderClass,
  NotSubgroup,
  NotInCentralizerSpan,
  ArityMismatch,
  NonConstantResultant,
  ZeroInput,
  InputNotReduced,
  DiscriminantZero,
  SyntaxError,
  UnknownSymbol,
  SugarOutsideField,
  NonIntegerExponent,
  Internal,
};

// Single exception type for everything the kernel can reject.  The kind is
// what the C API and the CLI exit codes key on; the message carries the
// diagnostic detail (order class, position, offending name).
class SpectralError : public std::runtime_error {
public:
  SpectralError(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

  // Parse-class errors come from reading session text; everything else is a
  // mathematical domain error.
  bool is_parse_error() const {
    switch (kind_) {
      case ErrorKind::SyntaxError:
      case ErrorKind::UnknownSymbol:
      case ErrorKind::SugarOutsideField:
      case ErrorKind::NonIntegerExponent:
        return true;
      default:
        return false;
    }
  }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw SpectralError(kind, message);
}

const char* error_kind_name(ErrorKind kind);

}  // namespace spectral
