#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace meccount {

/// Dense vertex label in [0, n).
using VertexId = std::uint32_t;

/// Ordered vertex pair; for knowledge and directed edges it reads first -> second.
using VertexPair = std::pair<VertexId, VertexId>;

/// Exact nonnegative count of orientations.
using Count = boost::multiprecision::cpp_int;

/// Sorted, duplicate-free vertex list.
using VertexSet = std::vector<VertexId>;

// Error hierarchy. Every error thrown by the library derives from Error so
// callers at the API boundary can translate them into status codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition on caller-supplied data does not hold.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Text could not be parsed; line is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Instance failed structural validation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The knowledge-touched vertex set of some clique is too large for Psi.
class PsiCapError : public Error {
 public:
  PsiCapError(std::size_t k, std::size_t cap)
      : Error("clique knowledge parameter k=" + std::to_string(k) +
              " exceeds the permutation cap of " + std::to_string(cap)),
        k_(k),
        cap_(cap) {}
  std::size_t k() const noexcept { return k_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t k_;
  std::size_t cap_;
};

/// Brute-force oracle refused an instance larger than its cap.
class OracleCapError : public Error {
 public:
  OracleCapError(std::size_t n, std::size_t cap)
      : Error("oracle refuses n=" + std::to_string(n) + " (cap is " +
              std::to_string(cap) + ")"),
        n_(n),
        cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }
  std::size_t n() const noexcept { return n_; }

 private:
  std::size_t n_;
  std::size_t cap_;
};

/// Random instance generation gave up.
class GenerationError : public Error {
 public:
  using Error::Error;
};

/// A structural invariant the algorithms rely on was violated.
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// Library version string.
const char* engine_version() noexcept;

}  // namespace meccount
