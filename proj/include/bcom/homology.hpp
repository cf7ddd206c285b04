#pragma once

#include <vector>

#include "bcom/caps.hpp"
#include "bcom/modmatrix.hpp"
#include "bcom/simplicial.hpp"

namespace bcom {

// mod-ell homology dimensions for degrees 0..D
struct BettiTable {
  int ell = 2;
  std::vector<int> dims;

  bool operator==(const BettiTable&) const = default;
  std::string str() const;
};

// Normalized chains: basis = nondegenerate simplices, boundary = alternating
// face sum with degenerate faces dropped. d(k) counts basis elements in
// degree k; boundary[k] has one sparse column per degree-k basis element.
struct ChainComplex {
  int ell = 2;
  int top = 0;
  std::vector<int> dims;                      // 0..top
  std::vector<std::vector<SparseCol>> boundary;  // [k], k = 1..top
  std::vector<std::vector<int32_t>> nd_index;    // sset index -> basis index or -1

  // asserts boundary(k) o boundary(k+1) = 0 for all k; throws otherwise
  void verify_dd_zero() const;
};

ChainComplex normalized_chains(const SimplicialSet& X, int ell);

// Homology dimensions through degree D; X must be populated through D+1.
// dims[0] is cross-checked against the component count of the 1-truncation.
BettiTable betti(const SimplicialSet& X, int ell, int D, const Caps& caps = {});

// The induced map on mod-ell homology of a simplicial map, degree by degree,
// with an "isomorphism through D" verdict.
struct InducedHomology {
  int ell = 2;
  int D = 0;
  std::vector<DenseMat> matrices;  // per degree 0..D, shape b_tgt x b_src
  std::vector<int> src_betti, tgt_betti, map_rank;
  bool isomorphism = false;
};

InducedHomology induced_on_homology(const SimplicialMap& f, int ell, int D,
                                    const Caps& caps = {});

// number of path components of the 1-truncation
int component_count(const SimplicialSet& X);

}  // namespace bcom
