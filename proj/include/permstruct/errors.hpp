#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace permstruct {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// malformed text input: cycle strings, group files, CLI values
class ParseError : public Error {
public:
  using Error::Error;
};

// structurally invalid arguments: degree mismatch, not a subgroup, ...
class PreconditionError : public Error {
public:
  using Error::Error;
};

// decomposition requested on a group that is not a direct product of
// nonabelian simple groups
class NotSemisimpleError : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

// an enumeration limit was hit; never a silent wrong answer
class BudgetExceededError : public Error {
public:
  enum class Kind { Elements, Index };

  BudgetExceededError(Kind kind, std::uint64_t limit,
                      const std::string &what_arg)
      : Error(what_arg), kind_(kind), limit_(limit) {}

  Kind kind() const { return kind_; }
  std::uint64_t limit() const { return limit_; }

private:
  Kind kind_;
  std::uint64_t limit_;
};

struct EnumerationBudget {
  std::uint64_t max_elements = 2'000'000;
  std::uint64_t max_index = 200'000;

  void validate() const {
    if (max_elements == 0 || max_index == 0)
      throw PreconditionError("EnumerationBudget: limits must be positive");
  }
};

} // namespace permstruct
