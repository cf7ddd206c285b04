#pragma once

#include <string>
#include <vector>

namespace bcom {

// Arithmetic tables for the finite fields F_q, q <= 5. Elements are encoded
// 0..q-1 with 0 and 1 the additive and multiplicative units. For prime q the
// encoding is the residues; F_4 is F_2[t]/(t^2 + t + 1) with
//   0 -> 0, 1 -> 1, 2 -> t, 3 -> t + 1.
struct Fq {
  int q = 0;
  int p = 0;  // characteristic
  std::vector<int> add;  // q*q
  std::vector<int> mul;  // q*q
  std::vector<int> neg;
  std::vector<std::string> labels;

  int a(int x, int y) const { return add[x * q + y]; }
  int m(int x, int y) const { return mul[x * q + y]; }
};

// Throws ValidationError if q is not a prime power, ResourceLimitError for
// prime powers beyond the supported range.
Fq make_fq(int q);

}  // namespace bcom
