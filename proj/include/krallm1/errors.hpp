// errors.hpp
//
// Exception hierarchy shared by every module. Each error carries a stable
// kind() string, which the CLI and the JSON reports use verbatim.

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace krallm1 {

class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// A Laurent product, derivative, or construction would need a degree below
/// the supported floor of -3.
class DegreeUnderflow : public Error {
 public:
  explicit DegreeUnderflow(int degree)
      : Error("DegreeUnderflow",
              "degree " + std::to_string(degree) + " is below the floor -3"),
        degree_(degree) {}
  int degree() const noexcept { return degree_; }

 private:
  int degree_;
};

/// A denominator factor of a closed form vanishes at the given parameters.
class DegenerateParameters : public Error {
 public:
  explicit DegenerateParameters(const std::string& what)
      : Error("DegenerateParameters", what) {}
};

/// Phi_{n-1} (or its q -> -1 counterpart) vanishes, so the Geronimus
/// transform does not exist from degree n on.
class GeronimusDegenerate : public Error {
 public:
  GeronimusDegenerate(int n, const std::string& what)
      : Error("GeronimusDegenerate",
              "GeronimusDegenerate(" + std::to_string(n) + "): " + what),
        n_(n) {}
  int n() const noexcept { return n_; }

 private:
  int n_;
};

/// apply_Lq needed (n, s) entries the table does not carry.
class IncompleteTable : public Error {
 public:
  explicit IncompleteTable(std::vector<std::pair<int, int>> missing)
      : Error("IncompleteTable", describe(missing)), missing_(std::move(missing)) {}
  const std::vector<std::pair<int, int>>& missing() const noexcept {
    return missing_;
  }

 private:
  static std::string describe(const std::vector<std::pair<int, int>>& missing) {
    std::string s = "representation table lacks entries";
    for (const auto& [n, sh] : missing) {
      s += " (" + std::to_string(n) + "," + std::to_string(sh) + ")";
    }
    return s;
  }
  std::vector<std::pair<int, int>> missing_;
};

/// The operator form of L0 left a nonzero coefficient at a negative degree.
class NonPolynomialOutput : public Error {
 public:
  explicit NonPolynomialOutput(const std::string& what)
      : Error("NonPolynomialOutput", what) {}
};

class InsufficientMoments : public Error {
 public:
  InsufficientMoments(int needed, int available)
      : Error("InsufficientMoments",
              "need moment index " + std::to_string(needed) + ", have up to " +
                  std::to_string(available)) {}
};

class IntegrabilityError : public Error {
 public:
  explicit IntegrabilityError(const std::string& what)
      : Error("IntegrabilityError", what) {}
};

/// Some recurrence coefficient u_i is not positive, so square roots of the
/// five-term construction are not real.
class NotPositiveDefinite : public Error {
 public:
  NotPositiveDefinite(int index, const std::string& value)
      : Error("NotPositiveDefinite", "u_" + std::to_string(index) + " = " +
                                         value + " is not positive"),
        index_(index) {}
  int index() const noexcept { return index_; }

 private:
  int index_;
};

class ResidualExceeded : public Error {
 public:
  explicit ResidualExceeded(const std::string& what)
      : Error("ResidualExceeded", what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error("ParseError", what) {}
};

}  // namespace krallm1
