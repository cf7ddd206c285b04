#pragma once

#include <string>

#include "bcom/errors.hpp"
#include "bcom/group.hpp"
#include "bcom/util.hpp"

namespace bcom {

// Which cosimplicial group indexes the tuple spaces:
//   Free      -> all tuples (the full nerve of G)
//   Z         -> pairwise commuting tuples
//   ZMod m    -> commuting tuples of elements with g^m = e
//   ZAdic ell -> ell-adic; realized as ZMod ell^k, k = exponent_valuation
struct TauSpec {
  enum class Kind { Free, Z, ZMod, ZAdic };
  Kind kind = Kind::Z;
  int param = 0;  // m for ZMod, ell for ZAdic

  static TauSpec free_spec() { return {Kind::Free, 0}; }
  static TauSpec z() { return {Kind::Z, 0}; }
  static TauSpec zmod(int m) {
    if (m < 1) throw ValidationError("zmod parameter must be >= 1");
    return {Kind::ZMod, m};
  }
  static TauSpec zadic(int ell) {
    if (!is_prime(ell)) throw ValidationError("zadic parameter must be prime");
    return {Kind::ZAdic, ell};
  }

  // Replaces ZAdic by the stationary ZMod ell^k for this group.
  TauSpec resolve(const FiniteGroup& G) const {
    if (kind != Kind::ZAdic) return *this;
    const int k = exponent_valuation(G, param);
    long long m = 1;
    for (int i = 0; i < k; ++i) m *= param;
    return zmod(static_cast<int>(m));
  }

  std::string str() const {
    switch (kind) {
      case Kind::Free: return "free";
      case Kind::Z: return "z";
      case Kind::ZMod: return "zmod:" + std::to_string(param);
      case Kind::ZAdic: return "zadic:" + std::to_string(param);
    }
    return "?";
  }

  static TauSpec parse(const std::string& s) {
    if (s == "free") return free_spec();
    if (s == "z") return z();
    if (s.rfind("zmod:", 0) == 0) return zmod(std::stoi(s.substr(5)));
    if (s.rfind("zadic:", 0) == 0) return zadic(std::stoi(s.substr(6)));
    throw ValidationError("unknown tau spec '" + s + "'");
  }
};

}  // namespace bcom
