#include "bcom/fq.hpp"

#include "bcom/errors.hpp"
#include "bcom/util.hpp"

namespace bcom {

namespace {

// F_4: polynomials a1*t + a0 over F_2 encoded as 2*a1 + a0, reduced by
// t^2 = t + 1.
int f4_mul(int x, int y) {
  int prod = 0;  // coefficients of t^0..t^2
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (((x >> i) & 1) && ((y >> j) & 1)) prod ^= 1 << (i + j);
  if (prod & 4) prod = (prod ^ 4) ^ 3;  // t^2 -> t + 1
  return prod;
}

}  // namespace

Fq make_fq(int q) {
  int p = 0, e = 0;
  if (!is_prime_power(q, &p, &e))
    throw ValidationError("q = " + std::to_string(q) + " is not a prime power");
  if (q > 5)
    throw ResourceLimitError("finite fields with q > 5 are out of range");
  Fq F;
  F.q = q;
  F.p = p;
  F.add.assign(q * q, 0);
  F.mul.assign(q * q, 0);
  F.neg.assign(q, 0);
  if (q == 4) {
    for (int x = 0; x < 4; ++x) {
      F.neg[x] = x;  // characteristic 2
      for (int y = 0; y < 4; ++y) {
        F.add[x * 4 + y] = x ^ y;
        F.mul[x * 4 + y] = f4_mul(x, y);
      }
    }
    F.labels = {"0", "1", "t", "t+1"};
  } else {
    for (int x = 0; x < q; ++x) {
      F.neg[x] = (q - x) % q;
      for (int y = 0; y < q; ++y) {
        F.add[x * q + y] = (x + y) % q;
        F.mul[x * q + y] = (x * y) % q;
      }
      F.labels.push_back(std::to_string(x));
    }
  }
  return F;
}

}  // namespace bcom
