#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "etr/pairing.hpp"

namespace etr {

// Codes of finite partial functions routinely exceed 64 bits (the coding is
// base-3 positional over keys), so they live in arbitrary precision.
using big_nat = boost::multiprecision::cpp_int;

struct NotAMember : std::invalid_argument {
  explicit NotAMember(nat code)
      : std::invalid_argument("code " + std::to_string(code) + " is not a member of the order"),
        code(code) {}
  nat code;
};

struct IncompatibleEntries : std::invalid_argument {
  explicit IncompatibleEntries(nat key)
      : std::invalid_argument("conflicting bits at key " + std::to_string(key)), key(key) {}
  nat key;
};

struct NotAnApproximation : std::invalid_argument {
  NotAnApproximation(nat x, nat offending_key)
      : std::invalid_argument("function is not an approximation at element " + std::to_string(x)),
        x(x),
        offending_key(offending_key) {}
  nat x;
  nat offending_key;
};

// Raised when one query turns up both a positive and a negative witness for
// the same (x, n): the instance refutes the hypothesis of the recursion
// principle, so no verdict is meaningful. This is a diagnostic, not a verdict.
struct PremiseViolation : std::runtime_error {
  PremiseViolation(nat x, nat n, big_nat witness_phi, big_nat witness_psi)
      : std::runtime_error("premise violated at x=" + std::to_string(x) +
                           " n=" + std::to_string(n)),
        x(x),
        n(n),
        witness_phi(std::move(witness_phi)),
        witness_psi(std::move(witness_psi)) {}
  nat x;
  nat n;
  big_nat witness_phi;
  big_nat witness_psi;
};

}  // namespace etr
