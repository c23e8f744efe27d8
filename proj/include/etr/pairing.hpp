#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace etr {

using nat = std::uint64_t;

// Cantor pairing pi(a,b) = (a+b)(a+b+1)/2 + b, a bijection between pairs of
// naturals and naturals. All structured codes in this library (keys of finite
// partial functions, members of lexicographic products, graph codes of the
// fast-growing hierarchy) go through this one pairing.
inline nat pair_code(nat a, nat b) {
  const unsigned __int128 s = static_cast<unsigned __int128>(a) + b;
  const unsigned __int128 c = s * (s + 1) / 2 + b;
  if (c > static_cast<unsigned __int128>(UINT64_MAX)) {
    throw std::overflow_error("pair_code: result exceeds 64 bits");
  }
  return static_cast<nat>(c);
}

struct Unpaired {
  nat first = 0;
  nat second = 0;
  bool valid = true;  // the pairing is bijective; kept so callers can state intent
};

// Total inverse of pair_code.
inline Unpaired unpair(nat c) {
  // diagonal index w = floor((sqrt(8c+1)-1)/2), then fix up float error
  const unsigned __int128 v = static_cast<unsigned __int128>(c) * 8 + 1;
  nat r = static_cast<nat>(std::sqrt(static_cast<long double>(v)));
  while (static_cast<unsigned __int128>(r) * r > v) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= v) ++r;
  const nat w = (r - 1) / 2;
  const nat t = w * (w + 1) / 2;
  const nat b = c - t;
  return Unpaired{w - b, b, true};
}

// Keys of finite partial functions decode to (element code, payload).
inline nat key_of(nat element, nat payload) { return pair_code(element, payload); }

}  // namespace etr
