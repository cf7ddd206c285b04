#pragma once

#include <cstdint>
#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

namespace bcom {

bool is_prime(int n);
bool is_prime_power(int n, int* p = nullptr, int* e = nullptr);
// largest k with ell^k | n (n > 0)
int valuation(long long n, int ell);
long long ipow(long long base, int exp);  // saturates at LLONG_MAX / 4

// Deterministic FNV-1a hash for simplex keys and member lists.
struct VecHash {
  size_t operator()(const std::vector<int32_t>& v) const {
    uint64_t h = 1469598103934665603ull;
    for (int32_t x : v) {
      uint32_t u = static_cast<uint32_t>(x);
      for (int b = 0; b < 4; ++b) {
        h ^= (u >> (8 * b)) & 0xff;
        h *= 1099511628211ull;
      }
    }
    return static_cast<size_t>(h);
  }
};

struct DisjointSets {
  std::vector<int32_t> parent;
  explicit DisjointSets(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int32_t find(int32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // keeps the smaller index as representative
  void unite(int32_t a, int32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
  }
};

// Progress notes on stderr; results always go to stdout only.
void set_progress_enabled(bool on);
bool progress_enabled();
void progress(const std::string& line);

}  // namespace bcom
