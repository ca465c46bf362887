#pragma once

#include <stdexcept>
#include <string>

namespace skewlab {

/// Base class for all skewlab errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

/// A pair of lines failed the skewness requirement of the crossing tournament.
class NotSkewError : public Error {
 public:
  NotSkewError(int i, int j, const std::string& verdict)
      : Error("lines " + std::to_string(i) + " and " + std::to_string(j) +
              " are not skew (" + verdict + ")"),
        first(i),
        second(j) {}
  int first;
  int second;
};

class PerturbationFailedError : public Error {
 public:
  explicit PerturbationFailedError(int retries)
      : Error("perturbation failed to reach general position after " +
              std::to_string(retries) + " retries") {}
};

class TooLargeError : public Error {
 public:
  explicit TooLargeError(int n)
      : Error("instance with " + std::to_string(n) +
              " vertices exceeds the solver ceiling"),
        n(n) {}
  int n;
};

class BundleVerificationFailedError : public Error {
 public:
  explicit BundleVerificationFailedError(const std::string& what) : Error(what) {}
};

/// A membership oracle reported a boundary/undefined value on a realized difference.
class OracleUndefinedError : public Error {
 public:
  OracleUndefinedError(int i, int j)
      : Error("membership oracle undefined on the difference of points " +
              std::to_string(i) + " and " + std::to_string(j)),
        first(i),
        second(j) {}
  int first;
  int second;
};

class NotASemigroupError : public Error {
 public:
  explicit NotASemigroupError(const std::string& what) : Error(what) {}
};

class BadRadiiError : public Error {
 public:
  explicit BadRadiiError(const std::string& what) : Error(what) {}
};

class NoStrategyError : public Error {
 public:
  explicit NoStrategyError(const std::string& leaf)
      : Error("no extraction strategy for leaf kind: " + leaf) {}
};

class ZeroPolynomialError : public Error {
 public:
  ZeroPolynomialError() : Error("the zero polynomial cannot be classified") {}
};

class NotGenericError : public Error {
 public:
  explicit NotGenericError(const std::string& what) : Error(what) {}
};

class TracerStalledError : public Error {
 public:
  explicit TracerStalledError(const std::string& what) : Error(what) {}
};

class SingularityClusterError : public Error {
 public:
  explicit SingularityClusterError(const std::string& what) : Error(what) {}
};

class CheckFailedError : public Error {
 public:
  CheckFailedError(const std::string& which, int d)
      : Error("spectral check '" + which + "' failed for d=" + std::to_string(d)) {}
};

}  // namespace skewlab
