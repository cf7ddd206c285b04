#pragma once

#include <string>
#include <vector>

#include "bcom/bcom_space.hpp"
#include "bcom/category.hpp"
#include "bcom/poset.hpp"
#include "bcom/simplicial.hpp"
#include "bcom/tau.hpp"

namespace bcom {

// A functor from a finite category to simplicial sets.
struct Diagram {
  FiniteCategory shape;
  std::vector<SSetPtr> values;           // per object
  std::vector<SimplicialMap> arrow_maps;  // per arrow, identities included

  // functoriality and per-map simplicial checks; values must reach
  // required_top
  void validate(int required_top) const;
};

// Homotopy colimit as the diagonal of the simplicial replacement: an
// n-simplex is a composable chain c_0 -> ... -> c_n in the shape together
// with an n-simplex of value(c_0). d_0 pushes the payload along the first
// arrow and then takes its d_0; inner faces compose the chain and take the
// matching payload face; degeneracies insert identity arrows and payload
// degeneracies. Keys are [c_0, arrows..., payload index].
SSetPtr hocolim(const Diagram& D_, int D, const Caps& caps = {});

// The subgroup-poset diagram A |-> B(tau, A) with inclusion-induced maps.
Diagram decomposition_diagram(const FiniteGroup& G, const AbelianPoset& P,
                              TauSpec tau, int D, const Caps& caps = {});

// (chain, payload) |-> payload viewed in B(tau, G)
SimplicialMap assembly_map(const Diagram& Dg, SSetPtr hoco, SSetPtr target);

struct Decomposition {
  AbelianPoset poset;
  Diagram diagram;
  SSetPtr hoco;
  SSetPtr target;
  SimplicialMap assembly;
};

Decomposition build_decomposition(const FiniteGroup& G, const AbelianPoset& P,
                                  TauSpec tau, int D, const Caps& caps = {});

// A functor from a diagram shape to a finite poset, given on objects.
struct PosetFunctor {
  FiniteCategory target;     // must be a poset
  std::vector<int> obj_map;  // shape object -> target object
};

// Collapse of a subgroup poset onto its conjugacy-class poset.
PosetFunctor conjugacy_collapse(const AbelianPoset& P);

// The pushforward diagram over the poset of nondegenerate chains of the
// target: the value at a chain is the disjoint union, over all lifts of the
// chain into the shape, of the value at the lift's source; arrows restrict
// chains and push payloads along the connecting composite. Requires the
// functor to reflect identities (no non-identity arrow maps to an identity),
// which makes the nondegenerate-chain reduction exact.
struct Pushforward {
  Diagram diagram;                                // over the chain poset
  std::vector<std::vector<int>> chain_objects;    // target-object chains
  std::vector<std::vector<std::vector<int>>> lift_objects;
  // lift_objects[chain][lift] = shape objects a_0..a_k of that lift
};

Pushforward pushforward_over_discrete(const Diagram& Dg,
                                      const PosetFunctor& rho, int D,
                                      const Caps& caps = {});

// Bookkeeping check for decomposition pushforwards: for every chain, the
// lifts fall into conjugation orbits of size |G|/|N(sigma)| with
// N(sigma) the chainwise normalizer, payload sizes constant on orbits, and
// the value of the pushforward is exactly the disjoint union of the orbit
// pieces.
struct OrbitReport {
  bool ok = true;
  std::string detail;
  std::vector<int> orbit_counts;  // per chain
};

OrbitReport pushforward_orbit_check(const FiniteGroup& G,
                                    const AbelianPoset& P,
                                    const Diagram& Dg,
                                    const Pushforward& pf);

}  // namespace bcom
