#pragma once

#include <stdexcept>
#include <string>

namespace symcat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Polynomial division left a nonzero remainder.
class NonExactDivision : public Error {
 public:
  using Error::Error;
};

// Degree data with |D_G^1| != |D_H|, or a Borel quotient on unequal ranks.
class RankMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidDescriptor : public Error {
 public:
  using Error::Error;
};

class UnknownSpace : public Error {
 public:
  UnknownSpace(const std::string& id, std::string suggestions)
      : Error("unknown space '" + id + "'" +
              (suggestions.empty() ? std::string{} : "; did you mean: " + suggestions + "?")),
        id_(id),
        suggestions_(std::move(suggestions)) {}

  const std::string& id() const { return id_; }
  const std::string& suggestions() const { return suggestions_; }

 private:
  std::string id_;
  std::string suggestions_;
};

class UnsupportedFamily : public Error {
 public:
  using Error::Error;
};

// Killing form not proportional to the trace form of the realization.
class NonProportional : public Error {
 public:
  using Error::Error;
};

class SpectrumMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace symcat
