#pragma once

#include <stdexcept>
#include <string>

namespace kldecomp {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or non-finite Cartan / Coxeter data.
class CartanError : public Error {
 public:
  using Error::Error;
};

/// A word that is not a reduced expression, or names a generator that does
/// not exist.
class WordError : public Error {
 public:
  WordError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}

  /// 1-based position of the first offending letter.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Exact integer arithmetic left the range of the coefficient type.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A precondition of an operation was not met by the caller (ordering bugs,
/// missing table rows, mismatched sizes).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// Computed data contradicts a theorem the computation relies on, e.g. a
/// negative multiplicity. Always indicates bad input or an implementation bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// An on-disk table could not be parsed or does not describe the group it
/// claims to.
class CacheCorruption : public Error {
 public:
  CacheCorruption(const std::string& what, std::string path)
      : Error(what), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace kldecomp
