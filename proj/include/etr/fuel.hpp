#pragma once

#include "etr/pairing.hpp"

namespace etr {

// Explicit step budget. One unit pays for one candidate-construction or
// base-predicate evaluation step; nested searches share one pool so that the
// boundary between decided and Unknown is reproducible.
class FuelPool {
 public:
  explicit FuelPool(nat budget) : remaining_(budget) {}

  bool try_spend(nat units = 1) {
    if (remaining_ < units) {
      spent_ += remaining_;
      remaining_ = 0;
      return false;
    }
    remaining_ -= units;
    spent_ += units;
    return true;
  }

  nat remaining() const { return remaining_; }
  nat spent() const { return spent_; }

 private:
  nat remaining_;
  nat spent_ = 0;
};

}  // namespace etr
