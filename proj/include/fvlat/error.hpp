#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace fvlat {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Mixed algebras, malformed values, or a violated operation precondition.
class DomainError : public Error {
public:
  using Error::Error;
};

/// A configured size cap was exceeded.
class SizeError : public Error {
public:
  using Error::Error;
};

/// A candidate structure failed a closure check. Carries the name of the
/// violated closure and, when applicable, the witness pair (as atom-index
/// sets).
class ValidationError : public Error {
public:
  ValidationError(const std::string& msg, std::string closure,
                  std::vector<std::size_t> witness_a = {},
                  std::vector<std::size_t> witness_b = {})
      : Error(msg),
        closure_(std::move(closure)),
        witness_a_(std::move(witness_a)),
        witness_b_(std::move(witness_b)) {}

  const std::string& closure() const { return closure_; }
  const std::vector<std::size_t>& witness_a() const { return witness_a_; }
  const std::vector<std::size_t>& witness_b() const { return witness_b_; }

private:
  std::string closure_;
  std::vector<std::size_t> witness_a_;
  std::vector<std::size_t> witness_b_;
};

/// A formal sum failed a cone-membership precondition. Carries an atom
/// whose coefficient sum is negative.
class MembershipError : public Error {
public:
  MembershipError(const std::string& msg, std::size_t witness_atom)
      : Error(msg), witness_atom_(witness_atom) {}

  std::size_t witness_atom() const { return witness_atom_; }

private:
  std::size_t witness_atom_;
};

/// Expression syntax or resolution error; carries the offending position.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

}  // namespace fvlat
