#pragma once

#include "f2lie/lie_algebra.hpp"

namespace f2lie::testing {

// [b0,b1]=b2, [b0,b2]=b0, [b1,b2]=b0+b1
inline LieAlgebra l31() {
  return LieAlgebra::from_brackets(3, {{0, 1, 0b100}, {0, 2, 0b001}, {1, 2, 0b011}}, "L_3_1");
}

inline Vec v3(int a, int b, int c) {
  return static_cast<Vec>(a) | (static_cast<Vec>(b) << 1) | (static_cast<Vec>(c) << 2);
}

}  // namespace f2lie::testing
