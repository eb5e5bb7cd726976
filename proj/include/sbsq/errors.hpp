#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace sbsq {

/// Failure categories raised by the library. The CLI maps these onto exit codes.
enum class ErrorKind {
  InvalidArgument,
  NoSolution,
  DegenerateLinewidth,
  Unstable,
  CutoffTooSmall,
  ZeroProbability,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::DegenerateLinewidth: return "DegenerateLinewidth";
    case ErrorKind::Unstable: return "Unstable";
    case ErrorKind::CutoffTooSmall: return "CutoffTooSmall";
    case ErrorKind::ZeroProbability: return "ZeroProbability";
  }
  return "Unknown";
}

/// Exception carrying the failure category and the name of the offending parameter.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string parameter, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + " [" + parameter + "]: " + what),
        kind_(kind),
        parameter_(std::move(parameter)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& parameter() const noexcept { return parameter_; }

 private:
  ErrorKind kind_;
  std::string parameter_;
};

namespace detail {

[[noreturn]] inline void raise(ErrorKind kind, std::string parameter, const std::string& what) {
  throw Error(kind, std::move(parameter), what);
}

inline void require(bool condition, std::string parameter, const std::string& what) {
  if (!condition) raise(ErrorKind::InvalidArgument, std::move(parameter), what);
}

}  // namespace detail
}  // namespace sbsq
