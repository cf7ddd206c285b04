#pragma once

#include <string>
#include <vector>

#include "bcom/caps.hpp"
#include "bcom/group.hpp"
#include "bcom/homology.hpp"

namespace bcom {

// pi_0 of the n-th commuting tuple space of SO(3), computed from the finite
// pushout of hom sets: * <- Hom(Z^n, Z/2) -> Hom(Z^n, (Z/2)^2)/Sigma3.
struct So3Pi0Report {
  int n = 0;
  long long orbit_count = 0;   // |Hom(Z^n,(Z/2)^2)/Sigma3|
  long long image_count = 0;   // image of Hom(Z^n, Z/2) in the orbit set
  long long components = 0;    // explicit coequalizer size
  long long burnside = 0;      // (4^n + 3*2^n + 2)/6
  bool burnside_match = false;
};

So3Pi0Report so3_pi0(int n);

// Betti table of nerve((Z/2)^2)/Sigma3 at ell through degree D. Reduced
// homology is expected to vanish for odd primes; ell = 2 is the control.
BettiTable quotient_lemma_check(int ell, int D, const Caps& caps = {});

struct Sigma3Report {
  BettiTable b2_z2_s3, b2_z_s3, b2_z2_c2;  // mod-2 tables through D
  bool iso_mod2 = false;                   // B(Z/2,S3) -> B(Z,S3) at ell=2
  bool iso_mod3 = false;                   // same map at ell=3 (expected false)
  BettiTable b3_z2_s3, b3_z_s3;            // mod-3 tables through min(D,2)
};

Sigma3Report sigma3_suite(int D, const Caps& caps = {});

// The ell-torsion torus of GL_2(F_q) and its conjugates. Requires ell odd
// and ell | q-1 (otherwise the caller should pass an extension field).
struct Gl2Census {
  int q = 0, ell = 0, s = 0;  // s = v_ell(q-1)
  long long group_order = 0;
  std::vector<Elt> torus;           // diagonal subgroup T
  std::vector<Elt> torus_ell;       // T_ell
  std::vector<Elt> center_torsion;  // Z_ell
  std::vector<Elt> normalizer;      // N(T_ell)
  long long n_q = 0;                // |G| / |N(T_ell)|
  int conjugate_count = 0;
  bool torus_ell_is_rank2 = false;  // isomorphic to (Z/ell^s)^2
  bool center_torsion_is_cyclic = false;
  bool sylow = false;  // |T_ell| is the full ell-part of |G|
  bool intersections_equal_center_torsion = false;
  bool n_q_formula_ok = false;  // (q-1)^2 q (q+1) / (2 ell^2) when s = 1
};

Gl2Census gl2_census(int q, int ell);

// Homotopy colimit over {Z_ell, conjugates of T_ell} versus the ell-torsion
// tuple space of GL_2(F_q), compared through degree D.
struct Gl2DecompositionReport {
  Gl2Census census;
  int diagram_objects = 0;
  BettiTable hocolim_betti, direct_betti;
  bool agree = false;
  int h1 = -1;
};

Gl2DecompositionReport gl2_decomposition_check(int q, int ell, int D,
                                               const Caps& caps = {});

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<CheckResult> verify_sigma3(const Caps& caps = {});
std::vector<CheckResult> verify_so3();
std::vector<CheckResult> verify_quotient(const Caps& caps = {});
std::vector<CheckResult> verify_gl2(const Caps& caps = {});

}  // namespace bcom
