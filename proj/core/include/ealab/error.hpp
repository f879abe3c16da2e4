#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ealab {

enum class ErrorKind {
  kInvalidTable,
  kNotAnEffectAlgebra,
  kNotALattice,
  kNotAPoset,
  kZeroHasNoOrder,
  kSubsetNotClosed,
  kNotCentral,
  kDegenerateInterval,
  kEmptyFactorList,
  kFactorTooSmall,
  kNotOrthomodular,
  kNotOrthocomplemented,
  kBoundExceeded,
  kInvalidArgument,
  kParseError,
  kContradictorySum,
  kUnknownName,
  kInternalInconsistency,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. Property violations that are part of
/// an operation's answer (axiom reports, state checks) are returned as data
/// instead.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::vector<std::uint32_t> witness = {});

  ErrorKind kind() const noexcept { return kind_; }
  /// Element indices that exhibit the failure, when there are any.
  const std::vector<std::uint32_t>& witness() const noexcept {
    return witness_;
  }

 private:
  ErrorKind kind_;
  std::vector<std::uint32_t> witness_;
};

/// Parse failures carry the 1-based line number (0 when the problem is a
/// missing line rather than a bad one).
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t line, const std::string& message);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace ealab
