#pragma once

#include <stdexcept>
#include <string>

namespace specoh {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& m) : Error("invalid_argument", m) {}
};

class UnknownSpecies : public Error {
 public:
  explicit UnknownSpecies(const std::string& id) : Error("unknown_species", "unknown species '" + id + "'") {}
};

class NotAComplex : public Error {
 public:
  explicit NotAComplex(const std::string& m) : Error("not_a_complex", m) {}
};

/// A violated law; `witness` names the offending data.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& m, std::string witness)
      : Error("validation_failed", m + (witness.empty() ? "" : " (witness: " + witness + ")")),
        witness_(std::move(witness)) {}
  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

class HeavyComputation : public Error {
 public:
  explicit HeavyComputation(const std::string& m) : Error("heavy_computation", m) {}
};

}  // namespace specoh
