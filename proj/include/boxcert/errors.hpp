#pragma once

#include <stdexcept>
#include <string>

namespace boxcert {

// Base of every error thrown by the library. `stage()` names the pipeline
// stage that raised it so the CLI can report it on stderr.
class Error : public std::runtime_error {
 public:
  Error(std::string stage, const std::string& what)
      : std::runtime_error(what), stage_(std::move(stage)) {}

  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

// Malformed textual input (JSON, rational literals, CLI values).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error("parse", what) {}
};

// A precondition on an argument does not hold (nonpositive length, bad axis).
class InvalidArgument : public Error {
 public:
  InvalidArgument(const std::string& stage, const std::string& what)
      : Error(stage, what) {}
};

class InvalidPartition : public Error {
 public:
  explicit InvalidPartition(const std::string& what) : Error("validate", what) {}
};

// Some constituent box has no side whose length lies in X.
class HypothesisViolated : public Error {
 public:
  HypothesisViolated(std::size_t box, const std::string& what)
      : Error("assign_axes", what), box_(box) {}
  std::size_t box() const noexcept { return box_; }

 private:
  std::size_t box_;
};

// A condition guaranteed by the underlying mathematics failed to hold.
// Seeing one of these means a bug or an input that slipped past validation.
class InvariantFailure : public Error {
 public:
  using Error::Error;
};

class ParityViolation : public InvariantFailure {
 public:
  explicit ParityViolation(const std::string& what)
      : InvariantFailure("parity_audit", what) {}
};

class StuckAtEvenVertex : public InvariantFailure {
 public:
  explicit StuckAtEvenVertex(const std::string& what)
      : InvariantFailure("extract_trail", what) {}
};

class ZigzagIndexMissing : public InvariantFailure {
 public:
  explicit ZigzagIndexMissing(const std::string& what)
      : InvariantFailure("reduce", what) {}
};

// Derivation trees that do not replay.
class DerivationInvalid : public Error {
 public:
  explicit DerivationInvalid(const std::string& what)
      : Error("verify_derivation", what) {}
};

class LeafNotGenerator : public DerivationInvalid {
 public:
  using DerivationInvalid::DerivationInvalid;
};

class ReplayMismatch : public Error {
 public:
  ReplayMismatch(std::size_t step, const std::string& reason)
      : Error("replay", "step " + std::to_string(step) + ": " + reason),
        step_(step) {}
  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

class ClosureTooLarge : public Error {
 public:
  explicit ClosureTooLarge(const std::string& what) : Error("closure", what) {}
};

class RenderUnsupported : public Error {
 public:
  explicit RenderUnsupported(const std::string& what) : Error("render", what) {}
};

class GenerationFailed : public Error {
 public:
  explicit GenerationFailed(const std::string& what) : Error("generate", what) {}
};

}  // namespace boxcert
