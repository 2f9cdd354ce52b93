#pragma once

// End-to-end construction of the rank-2 finite parabolic bundle with S3
// holonomy on the (2,2,3) orbifold line: the double cover branched at 0 and
// 1, enriched at infinity, its Pic^0[3], the deck action, the split
// extension, the 2-dimensional irreducible, and its realization.

#include <algorithm>
#include <string>
#include <vector>

#include "orbipar/covers.hpp"
#include "orbipar/json_io.hpp"
#include "orbipar/orbifold.hpp"
#include "orbipar/parabolic.hpp"
#include "orbipar/report.hpp"
#include "orbipar/reptheory.hpp"

namespace orbipar {

// The automorphism a deck point-permutation induces on an embedded torsion
// subgroup of the Picard group, written on its canonical coordinates.
inline IntMat induced_torsion_matrix(const PicGroup& pic,
                                     const std::vector<std::uint32_t>& point_perm,
                                     const EmbeddedSubgroup& T) {
  std::size_t n = pic.point_count();
  auto permute_class = [&](const GroupElement& c) {
    auto x = pic.group().generator_coords(c);
    std::vector<Int> y(x.size(), 0);
    for (std::size_t j = 0; j < n; ++j) y[point_perm[j]] = x[j];
    y[n] = x[n];
    return pic.group().element(y);
  };
  std::map<std::vector<Int>, std::vector<Int>> coords_of;  // Pic coords -> T coords
  for (const auto& t : T.group.enumerate()) coords_of[T.embed_element(t).coords()] = t.coords();

  IntMat m(T.group.gen_count(), std::vector<Int>(T.group.gen_count(), 0));
  for (std::size_t k = 0; k < T.group.gen_count(); ++k) {
    auto img = permute_class(T.embed[k]);
    auto it = coords_of.find(img.coords());
    internal_check(it != coords_of.end(), "deck action leaves the torsion subgroup");
    for (std::size_t i = 0; i < T.group.gen_count(); ++i) m[i][k] = it->second[i];
  }
  return m;
}

inline Report run_example_s3(std::uint32_t max_power = 6) {
  Report rep;
  rep.command = "example-s3";

  // the double cover y^2 = x/(x-1): Z/2 monodromy (1,1) branched at 0 and 1
  auto C2 = group_from_permutations(2, {{1, 0}});
  OrbifoldCurve base01(0, {{"0", 2}, {"1", 2}});
  auto mono2 = validate_monodromy(base01, C2, {1, 1});
  TameCover double_cover(mono2, Subgroup(C2, {}));
  rep.add_check("double-cover-valid", true, "Z/2 monodromy (1,1) over (0,1; 2,2)");

  // enrich the base at infinity with an order-3 point
  TameCover cover2 = extend_orbifold(double_cover, {{"inf", 3}});
  const auto& up = cover2.geometry().upstairs;
  int order3_points = 0;
  for (const auto& p : up.points())
    if (p.order == 3) ++order3_points;
  rep.add_check("upstairs-orbifold",
                cover2.geometry().genus == 0 && up.point_count() == 4 && order3_points == 2,
                "two order-3 points over infinity on a genus-0 cover");

  // Pic^0[3] of the upstairs orbifold is cyclic of order 3
  auto tor = pic_zero_torsion(up, 3);
  rep.add_check("pic0-3-torsion",
                tor.torsion.group.invariant_factors() == std::vector<Int>{3},
                "Pic^0[3] = " + tor.torsion.group.structure_string());
  rep.results["pic_upstairs"] = json_from_structure(tor.pic.group());
  rep.results["pic0_torsion"] = json_from_structure(tor.torsion.group);

  // deck involution swaps the two points over infinity and inverts the torsion
  auto deck = deck_action_on_points(cover2);
  rep.add_check("deck-group-order-2", deck.deck.group.order() == 2);
  std::vector<IntMat> action;
  for (auto g : deck.deck.group.generators())
    action.push_back(induced_torsion_matrix(tor.pic, deck.point_perms[g], tor.torsion));
  bool swaps = false;
  {
    const auto& perm = deck.point_perms[deck.deck.group.generators().empty()
                                            ? 0
                                            : deck.deck.group.generators()[0]];
    for (std::size_t j = 0; j < up.point_count(); ++j)
      if (up.point(j).order == 3 && perm[j] != j) swaps = true;
  }
  rep.add_check("deck-swaps-infinity-points", swaps);

  // the split extension is the symmetric group S3
  auto sd = semidirect_product(tor.torsion.group, deck.deck.group, action);
  auto s3_reference = group_from_permutations(3, {{1, 0, 2}, {1, 2, 0}});
  rep.add_check("galois-group-s3",
                sd.group.order() == 6 && !sd.group.is_abelian() &&
                    isomorphic_small(sd.group, s3_reference),
                "order-6 nonabelian, multiplication table matches S3");

  // little groups: trivial, sign, and one 2-dimensional irreducible
  auto irreps = little_groups_irreducibles(
      sd, [](const Subgroup& S) { return monomial_irreducible_reps(S.as_group()); });
  std::vector<std::uint32_t> dims;
  for (const auto& r : irreps) dims.push_back(r.dim());
  std::sort(dims.begin(), dims.end());
  rep.add_check("little-groups-complete", dims == std::vector<std::uint32_t>{1, 1, 2},
                "irreducible dimensions 1, 1, 2");
  const MonomialRep* V = nullptr;
  for (const auto& r : irreps)
    if (r.dim() == 2) V = &r;
  internal_check(V != nullptr, "no 2-dimensional irreducible");
  auto chiV = character(*V);
  rep.add_check("irreducible-inner-product", inner_product(chiV, chiV) == 1,
                "<chi,chi> = 1, so the realized bundle is indecomposable");

  // monodromy of the S3 closure over (0,1,inf; 2,2,3): lift the Z/2 tuple
  std::uint32_t a_gen = UINT32_MAX, tau = UINT32_MAX;
  for (auto g : sd.group.generators()) {
    if (sd.h_part(g) == 0 && sd.a_part(g) != 0) a_gen = g;
    if (sd.a_part(g) == 0 && sd.h_part(g) != 0) tau = g;
  }
  internal_check(a_gen != UINT32_MAX && tau != UINT32_MAX, "semidirect generators");
  std::uint32_t g0 = tau;
  std::uint32_t g1 = sd.group.mul(a_gen, tau);
  std::uint32_t ginf = sd.group.inv(sd.group.mul(g0, g1));
  auto mono3 = validate_monodromy(cover2.base(), sd.group, {g0, g1, ginf});
  rep.add_check("s3-monodromy-valid", true,
                "orders (2,2,3), product one, generating");

  // the intermediate cover for the abelian subgroup reproduces the enriched
  // double cover upstairs
  TameCover cover3(mono3, sd.A_sub);
  rep.add_check("tower-upstairs-match", cover3.geometry().upstairs == up,
                "A-quotient of the S3 cover is the enriched double cover");

  // realize the 2-dimensional irreducible; both weight routes must agree
  ParabolicBundleData data;
  try {
    data = rh_realize(cover3, *V);
    rep.add_check("path-agreement", true,
                  "Tannakian exponents match the pushforward weights");
  } catch (const Error& e) {
    rep.add_check("path-agreement", false, e.what());
    return rep;
  }
  rep.results["bundle"] = json_from_bundle(data);
  rep.add_check("rank-2", data.rank == 2);
  rep.add_check("splitting", data.splitting == std::vector<Int>{-1, -1}, "O(-1) + O(-1)");
  bool weights_ok = data.weights[0] == std::vector<QmodZ>{QmodZ(), QmodZ(1, 2)} &&
                    data.weights[1] == std::vector<QmodZ>{QmodZ(), QmodZ(1, 2)} &&
                    data.weights[2] == std::vector<QmodZ>{QmodZ(1, 3), QmodZ(2, 3)};
  rep.add_check("weights", weights_ok, "{0,1/2} at 0 and 1, {1/3,2/3} at infinity");
  rep.add_check("parabolic-degree-zero", data.par_degree() == 0);

  // finiteness witness
  std::vector<ClassFunction> irred;
  for (const auto& r : irreps) irred.push_back(character(r));
  auto rel = find_finite_relation(*V, irred, max_power);
  bool rel_ok = rel.found && rel.p == std::vector<Int>{0, 0, 0, 1} &&
                rel.q == std::vector<Int>{0, 2, 1};
  rep.add_check("finite-relation", rel_ok,
                polynomial_to_string(rel.p) + " = " + polynomial_to_string(rel.q));
  if (rel.found) {
    rep.results["relation"] = Json::object();
    rep.results["relation"]["P"] = polynomial_to_string(rel.p);
    rep.results["relation"]["Q"] = polynomial_to_string(rel.q);
    rep.results["relation"]["constituents"] = rel.closure.size();
  }
  return rep;
}

}  // namespace orbipar
