#pragma once

#include <optional>
#include <string>
#include <utility>

#include "etr/errors.hpp"
#include "etr/pairing.hpp"

namespace etr {

// Honest result of a semi-decidable question under a step budget. Yes and No
// carry the witness that decided them (a function code or a key, depending on
// the operation); Unknown means the budget ran out first and says nothing.
enum class Outcome { yes, no, unknown };

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::yes: return "yes";
    case Outcome::no: return "no";
    default: return "unknown";
  }
}

struct Verdict {
  Outcome outcome = Outcome::unknown;
  std::optional<big_nat> witness;
  nat fuel_spent = 0;

  static Verdict yes(big_nat w, nat spent) { return {Outcome::yes, std::move(w), spent}; }
  static Verdict no(big_nat w, nat spent) { return {Outcome::no, std::move(w), spent}; }
  static Verdict unknown(nat spent) { return {Outcome::unknown, std::nullopt, spent}; }

  bool decided() const { return outcome != Outcome::unknown; }
};

}  // namespace etr
