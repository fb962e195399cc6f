#pragma once

// Small helpers shared by the test binaries.

#include <initializer_list>

#include "bgmu/rational.hpp"

namespace bgmu {

inline Vec tvec(std::initializer_list<Rat> xs) {
  Vec v(static_cast<int>(xs.size()));
  int i = 0;
  for (const Rat& x : xs) v(i++) = x;
  return v;
}

inline Vec tveci(std::initializer_list<long> xs) {
  Vec v(static_cast<int>(xs.size()));
  int i = 0;
  for (long x : xs) v(i++) = Rat(x);
  return v;
}

}  // namespace bgmu
