#include "bcom/util.hpp"

#include <climits>

#include "bcom/caps.hpp"
#include "bcom/errors.hpp"

namespace bcom {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_prime_power(int n, int* p, int* e) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      int k = 0;
      while (n % d == 0) {
        n /= d;
        ++k;
      }
      if (n != 1) return false;
      if (p) *p = d;
      if (e) *e = k;
      return true;
    }
  }
  if (p) *p = n;
  if (e) *e = 1;
  return true;
}

int valuation(long long n, int ell) {
  int v = 0;
  while (n % ell == 0) {
    n /= ell;
    ++v;
  }
  return v;
}

long long ipow(long long base, int exp) {
  const long long cap = LLONG_MAX / 4;
  long long r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > cap / (base > 0 ? base : 1)) return cap;
    r *= base;
  }
  return r;
}

void Caps::validate() const {
  if (max_group_order <= 0 || max_subgroups <= 0 || max_tuple_estimate <= 0 ||
      max_simplices <= 0 || dense_column_limit <= 0)
    throw ValidationError("resource caps must be positive");
}

namespace {
bool g_progress = false;
}

void set_progress_enabled(bool on) { g_progress = on; }
bool progress_enabled() { return g_progress; }

void progress(const std::string& line) {
  if (g_progress) std::fprintf(stderr, "%s\n", line.c_str());
}

}  // namespace bcom
