#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace transit {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph6 text. The kind pins down what was wrong with the input.
class Graph6ParseError : public Error {
 public:
  enum class Kind {
    kEmptyInput,
    kUnsupportedHeader,  // multi-byte order header, or order 0
    kBadCharacter,       // byte outside the printable graph6 range [63,126]
    kTruncated,          // fewer body characters than the order requires
    kTrailingGarbage,    // more body characters than the order requires
    kBadPadding,         // nonzero bit in the final padding group
  };

  Graph6ParseError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Requested order is beyond what the operation supports.
class UnsupportedOrderError : public Error {
 public:
  using Error::Error;
};

/// Operation requires a connected graph.
class NotConnectedError : public Error {
 public:
  using Error::Error;
};

/// Invalid argument or input outside an operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Eigensolver ran out of iterations. Carries the best residual reached.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double best_residual, int iterations)
      : Error(what), best_residual_(best_residual), iterations_(iterations) {}
  double best_residual() const noexcept { return best_residual_; }
  int iterations() const noexcept { return iterations_; }

 private:
  double best_residual_;
  int iterations_;
};

/// A vertex partition failed the equitable row-sum test.
/// Identifies the offending block pair and the two rows that disagree.
class NotEquitableError : public Error {
 public:
  NotEquitableError(const std::string& what, int block_row, int block_col,
                    int reference_row, int offending_row)
      : Error(what),
        block_row_(block_row),
        block_col_(block_col),
        reference_row_(reference_row),
        offending_row_(offending_row) {}
  int block_row() const noexcept { return block_row_; }
  int block_col() const noexcept { return block_col_; }
  int reference_row() const noexcept { return reference_row_; }
  int offending_row() const noexcept { return offending_row_; }

 private:
  int block_row_;
  int block_col_;
  int reference_row_;
  int offending_row_;
};

/// Error in a graph6 line stream; carries the 1-based line number.
class StreamError : public Error {
 public:
  StreamError(const std::string& what, std::size_t line) : Error(what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace transit
