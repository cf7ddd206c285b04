#include "bcom/case_studies.hpp"

#include <algorithm>
#include <unordered_map>

#include "bcom/builtin.hpp"
#include "bcom/diagram.hpp"
#include "bcom/poset.hpp"
#include "bcom/util.hpp"

namespace bcom {

So3Pi0Report so3_pi0(int n) {
  if (n < 0) throw ValidationError("degree must be >= 0");
  if (n > 12) throw ResourceLimitError("so3_pi0 supports n <= 12");
  So3Pi0Report rep;
  rep.n = n;
  const FiniteGroup V = klein_four();
  const auto autos = automorphism_group(V);
  const long long total = ipow(4, n);

  // tuples encoded base 4; orbits under the entrywise automorphism action
  DisjointSets uf(static_cast<int>(total));
  std::vector<Elt> t(n);
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (int i = 0; i < n; ++i) {
      t[i] = static_cast<Elt>(c % 4);
      c /= 4;
    }
    for (const auto& phi : autos) {
      long long img = 0;
      for (int i = n - 1; i >= 0; --i) img = img * 4 + phi[t[i]];
      uf.unite(static_cast<int32_t>(code), static_cast<int32_t>(img));
    }
  }
  std::vector<int32_t> orbit_of(total);
  std::vector<int32_t> reps;
  for (long long code = 0; code < total; ++code) {
    int32_t r = uf.find(static_cast<int32_t>(code));
    if (r == code) {
      orbit_of[code] = static_cast<int32_t>(reps.size());
      reps.push_back(r);
    }
  }
  for (long long code = 0; code < total; ++code)
    orbit_of[code] = orbit_of[uf.find(static_cast<int32_t>(code))];
  rep.orbit_count = static_cast<long long>(reps.size());

  // image of Hom(Z^n, Z/2) along the inclusion <a> = {0, 1} of the first
  // cyclic factor
  std::vector<char> in_image(reps.size(), 0);
  for (long long mask = 0; mask < (1ll << n); ++mask) {
    long long code = 0;
    for (int i = n - 1; i >= 0; --i) code = code * 4 + ((mask >> i) & 1);
    in_image[orbit_of[code]] = 1;
  }
  rep.image_count = std::count(in_image.begin(), in_image.end(), 1);

  // explicit coequalizer: collapse all image orbits to one point
  DisjointSets push(static_cast<int>(reps.size()) + 1);
  const int32_t star = static_cast<int32_t>(reps.size());
  for (size_t o = 0; o < reps.size(); ++o)
    if (in_image[o]) push.unite(static_cast<int32_t>(o), star);
  long long classes = 0;
  for (int32_t v = 0; v <= star; ++v)
    if (push.find(v) == v) ++classes;
  // the trivial tuple always lies in the image, so the star is absorbed
  rep.components = classes;

  rep.burnside = (ipow(4, n) + 3 * ipow(2, n) + 2) / 6;
  rep.burnside_match = rep.burnside == rep.orbit_count;
  if (rep.components != rep.orbit_count - rep.image_count + 1)
    throw std::logic_error("coequalizer count mismatch");
  if (rep.components < 1) throw std::logic_error("components must be >= 1");
  return rep;
}

BettiTable quotient_lemma_check(int ell, int D, const Caps& caps) {
  if (!is_prime(ell)) throw ValidationError("ell must be prime");
  const FiniteGroup V = klein_four();
  SSetPtr nerve = build_bcom(V, TauSpec::free_spec(), D, caps);
  SimplicialAction action = tuple_entry_action(nerve, automorphism_group(V));
  QuotientResult q = quotient_by_action(action);
  return betti(*q.quotient, ell, D, caps);
}

Sigma3Report sigma3_suite(int D, const Caps& caps) {
  Sigma3Report rep;
  const FiniteGroup S3 = symmetric_group(3);
  const FiniteGroup C2 = cyclic_group(2);
  rep.b2_z2_s3 = betti(*build_bcom(S3, TauSpec::zmod(2), D, caps), 2, D, caps);
  rep.b2_z_s3 = betti(*build_bcom(S3, TauSpec::z(), D, caps), 2, D, caps);
  rep.b2_z2_c2 = betti(*build_bcom(C2, TauSpec::zmod(2), D, caps), 2, D, caps);
  SimplicialMap inc = inclusion_map(S3, TauSpec::zmod(2), TauSpec::z(), D, caps);
  rep.iso_mod2 = induced_on_homology(inc, 2, D, caps).isomorphism;
  const int D3 = std::min(D, 2);
  SimplicialMap inc3 =
      inclusion_map(S3, TauSpec::zmod(2), TauSpec::z(), D3, caps);
  rep.iso_mod3 = induced_on_homology(inc3, 3, D3, caps).isomorphism;
  rep.b3_z2_s3 = betti(*inc3.src, 3, D3, caps);
  rep.b3_z_s3 = betti(*inc3.tgt, 3, D3, caps);
  return rep;
}

Gl2Census gl2_census(int q, int ell) {
  if (ell % 2 == 0 || !is_prime(ell))
    throw ValidationError("ell must be an odd prime");
  if (q > 5) throw ResourceLimitError("census restricted to q <= 5");
  if ((q - 1) % ell != 0)
    throw ValidationError(
        "ell does not divide q-1; pass an extension field F_{q^r} with "
        "q^r = 1 mod ell instead");
  Gl2Census c;
  c.q = q;
  c.ell = ell;
  c.s = valuation(q - 1, ell);
  const FiniteGroup G = gl2(q);
  c.group_order = G.order();

  Subgroup T{&G, diagonal_torus_members(G, q)};
  if (!is_subgroup(G, T.members) || !T.is_abelian())
    throw std::logic_error("diagonal torus is not an abelian subgroup");
  Subgroup Tl = ell_torsion(T, ell);
  Subgroup Z = center(G);
  Subgroup Zl = ell_torsion(Z, ell);
  Subgroup N = normalizer(G, Tl);
  c.torus = T.members;
  c.torus_ell = Tl.members;
  c.center_torsion = Zl.members;
  c.normalizer = N.members;
  c.n_q = G.order() / N.order();

  const long long ls = ipow(ell, c.s);
  c.torus_ell_is_rank2 =
      Tl.order() == ls * ls &&
      count_order_dividing(Tl, ls) == Tl.order() &&
      count_order_dividing(Tl, ls / ell) == (ls / ell) * (ls / ell);
  c.center_torsion_is_cyclic =
      Zl.order() == ls && is_cyclic(Zl);
  c.sylow = Tl.order() == ipow(ell, valuation(G.order(), ell));

  // conjugates of T_ell and their pairwise intersections
  std::unordered_map<std::vector<int32_t>, int, VecHash> seen;
  std::vector<std::vector<Elt>> conjugates;
  for (Elt g = 0; g < G.order(); ++g) {
    auto m = conjugate_members(G, g, Tl.members);
    if (seen.emplace(m, 1).second) conjugates.push_back(std::move(m));
  }
  c.conjugate_count = static_cast<int>(conjugates.size());
  c.intersections_equal_center_torsion = true;
  for (size_t i = 0; i < conjugates.size(); ++i)
    for (size_t j = i + 1; j < conjugates.size(); ++j) {
      std::vector<Elt> inter;
      std::set_intersection(conjugates[i].begin(), conjugates[i].end(),
                            conjugates[j].begin(), conjugates[j].end(),
                            std::back_inserter(inter));
      if (inter != Zl.members) c.intersections_equal_center_torsion = false;
    }
  if (c.s == 1) {
    const long long form = static_cast<long long>(q - 1) * (q - 1) * q *
                           (q + 1) / (2 * ell * ell);
    c.n_q_formula_ok = c.n_q == form;
  }
  if (c.n_q != c.conjugate_count)
    throw std::logic_error("conjugate count does not match |G|/|N|");
  return c;
}

Gl2DecompositionReport gl2_decomposition_check(int q, int ell, int D,
                                               const Caps& caps) {
  Gl2DecompositionReport rep;
  rep.census = gl2_census(q, ell);
  const FiniteGroup G = gl2(q);
  Subgroup T{&G, rep.census.torus_ell};
  std::vector<std::vector<Elt>> members{rep.census.center_torsion};
  std::unordered_map<std::vector<int32_t>, int, VecHash> seen;
  for (Elt g = 0; g < G.order(); ++g) {
    auto m = conjugate_members(G, g, T.members);
    if (seen.emplace(m, 1).second) members.push_back(std::move(m));
  }
  AbelianPoset P = poset_from_subgroups(G, std::move(members));
  rep.diagram_objects = P.size();
  Diagram Dg = decomposition_diagram(G, P, TauSpec::z(), D, caps);
  SSetPtr hoco = hocolim(Dg, D, caps);
  rep.hocolim_betti = betti(*hoco, ell, D, caps);
  SSetPtr direct = stabilized_adic(G, ell, D, caps);
  rep.direct_betti = betti(*direct, ell, D, caps);
  rep.agree = rep.hocolim_betti.dims == rep.direct_betti.dims;
  if (D >= 1) rep.h1 = rep.hocolim_betti.dims[1];
  return rep;
}

namespace {

std::string betti_pair(const BettiTable& a, const BettiTable& b) {
  return a.str() + " vs " + b.str();
}

}  // namespace

std::vector<CheckResult> verify_sigma3(const Caps& caps) {
  std::vector<CheckResult> out;
  Sigma3Report rep = sigma3_suite(3, caps);
  out.push_back({"sigma3 wedge table: betti(B(Z/2,S3);F2) = (1,3,3,3)",
                 rep.b2_z2_s3.dims == std::vector<int>{1, 3, 3, 3},
                 rep.b2_z2_s3.str()});
  out.push_back({"sigma3 cyclic table: betti(B(Z/2,C2);F2) = (1,1,1,1)",
                 rep.b2_z2_c2.dims == std::vector<int>{1, 1, 1, 1},
                 rep.b2_z2_c2.str()});
  out.push_back({"sigma3 tables differ (no mod-2 equivalence to B(Z/2,C2))",
                 rep.b2_z2_s3.dims != rep.b2_z2_c2.dims,
                 betti_pair(rep.b2_z2_s3, rep.b2_z2_c2)});
  out.push_back({"sigma3 inclusion B(Z/2,S3) -> B(Z,S3) iso at ell=2, D=3",
                 rep.iso_mod2, rep.iso_mod2 ? "isomorphism" : "not iso"});
  out.push_back({"sigma3 inclusion not iso at ell=3, D=2",
                 !rep.iso_mod3, betti_pair(rep.b3_z2_s3, rep.b3_z_s3)});
  return out;
}

std::vector<CheckResult> verify_so3() {
  std::vector<CheckResult> out;
  const std::vector<long long> expected_small{1, 2, 8};
  bool all = true;
  std::string detail;
  for (int n = 0; n <= 8; ++n) {
    So3Pi0Report r = so3_pi0(n);
    const long long closed = r.burnside - ipow(2, n) + 1;
    bool ok = r.burnside_match && r.components == closed;
    if (n >= 1 && n <= 3)
      ok = ok && r.components == expected_small[n - 1];
    all = all && ok;
    detail += (n ? "," : "") + std::to_string(r.components);
  }
  out.push_back({"so3 pi_0 pushout matches Burnside closed form, n <= 8", all,
                 "components = " + detail});
  return out;
}

std::vector<CheckResult> verify_quotient(const Caps& caps) {
  std::vector<CheckResult> out;
  for (int ell : {3, 5, 7}) {
    BettiTable t = quotient_lemma_check(ell, 4, caps);
    bool ok = t.dims.size() == 5 && t.dims[0] == 1;
    for (size_t i = 1; i < t.dims.size(); ++i) ok = ok && t.dims[i] == 0;
    out.push_back({"quotient nerve(V4)/S3 reduced homology vanishes at ell=" +
                       std::to_string(ell) + ", D=4",
                   ok, t.str()});
  }
  BettiTable control = quotient_lemma_check(2, 4, caps);
  out.push_back(
      {"quotient mod-2 control: dims[1] > 0", control.dims[1] > 0,
       control.str() + "; first nonzero reduced mod-2 degree = " + [&] {
         for (size_t i = 1; i < control.dims.size(); ++i)
           if (control.dims[i] > 0) return std::to_string(i);
         return std::string("none");
       }()});
  return out;
}

std::vector<CheckResult> verify_gl2(const Caps& caps) {
  std::vector<CheckResult> out;
  Gl2Census c = gl2_census(4, 3);
  out.push_back({"gl2 census: |GL2(F4)| = 180", c.group_order == 180,
                 std::to_string(c.group_order)});
  out.push_back({"gl2 census: T_3 = (Z/3)^2 and is a Sylow 3-subgroup",
                 c.torus_ell_is_rank2 && c.sylow,
                 "|T_3| = " + std::to_string(c.torus_ell.size())});
  out.push_back({"gl2 census: distinct conjugates of T_3 intersect in Z_3",
                 c.intersections_equal_center_torsion &&
                     c.center_torsion_is_cyclic,
                 "|Z_3| = " + std::to_string(c.center_torsion.size())});
  out.push_back({"gl2 census: n_q = 10 = (q-1)^2 q (q+1) / (2 ell^2)",
                 c.n_q == 10 && c.n_q_formula_ok, std::to_string(c.n_q)});
  Gl2DecompositionReport rep = gl2_decomposition_check(4, 3, 1, caps);
  out.push_back({"gl2 decomposition: 11-object diagram",
                 rep.diagram_objects == 11,
                 std::to_string(rep.diagram_objects)});
  out.push_back({"gl2 decomposition: hocolim Betti = direct Betti through D=1",
                 rep.agree,
                 betti_pair(rep.hocolim_betti, rep.direct_betti)});
  out.push_back({"gl2 decomposition: H_1 dimension positive", rep.h1 > 0,
                 "dim H_1 = " + std::to_string(rep.h1)});
  return out;
}

}  // namespace bcom
