#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace ringlab {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// A construction or classification would exceed the configured order cap.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string subject, std::uint64_t required, std::uint64_t allowed)
      : Error(subject + ": order " + render_required(required) + " exceeds cap " +
              std::to_string(allowed)),
        subject_(std::move(subject)),
        required_(required),
        allowed_(allowed) {}

  CapExceeded(const CapExceeded& inner, const std::string& context)
      : Error(std::string(inner.what()) + " (" + context + ")"),
        subject_(inner.subject_),
        required_(inner.required_),
        allowed_(inner.allowed_) {}

  const std::string& subject() const noexcept { return subject_; }
  /// Saturates at UINT64_MAX when the true order does not fit.
  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t allowed() const noexcept { return allowed_; }

 private:
  static std::string render_required(std::uint64_t required) {
    if (required == UINT64_MAX) return ">= 2^64";
    return std::to_string(required);
  }

  std::string subject_;
  std::uint64_t required_;
  std::uint64_t allowed_;
};

/// A candidate ideal failed one of its closure checks.
class InvalidIdeal : public Error {
 public:
  InvalidIdeal(std::string closure, const std::string& detail)
      : Error("invalid ideal: not closed under " + closure + " (" + detail + ")"),
        closure_(std::move(closure)) {}

  const std::string& closure() const noexcept { return closure_; }

 private:
  std::string closure_;
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("operands belong to different rings") {}
};

class CertificateInvalid : public Error {
 public:
  using Error::Error;
};

/// Raised when a self-check fails; always indicates a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// A closed-form criterion was invoked outside its hypotheses.
class NotApplicable : public Error {
 public:
  using Error::Error;
};

class ArithmeticOverflow : public Error {
 public:
  using Error::Error;
};

}  // namespace ringlab
