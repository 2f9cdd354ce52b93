#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "orbipar/parabolic.hpp"

using namespace orbipar;

namespace {

OrbifoldCurve base22() { return OrbifoldCurve(0, {{"0", 2}, {"1", 2}}); }
OrbifoldCurve base223() { return OrbifoldCurve(0, {{"0", 2}, {"1", 2}, {"inf", 3}}); }
OrbifoldCurve orb33() { return OrbifoldCurve(0, {{"1", 3}, {"-1", 3}}); }

FiniteGroup s3() { return group_from_permutations(3, {{1, 0, 2}, {1, 2, 0}}); }

MonodromyTuple s3mono() { return validate_monodromy(base223(), s3(), {1, 3, 5}); }

TameCover z2cover() {
  auto G = group_from_permutations(2, {{1, 0}});
  return TameCover(validate_monodromy(base22(), G, {1, 1}), Subgroup(G, {}));
}

ParabolicLineBundle bundle_on(const OrbifoldCurve& orb, const Int& d, std::vector<Int> a) {
  ParabolicLineBundle L;
  L.orbifold = orb;
  L.pic = picard_group(orb);
  L.cls = L.pic.class_of(d, a);
  return L;
}

// oracle for the splitting solver: exhaustive search over candidate multisets
std::vector<std::vector<Int>> splitting_by_bruteforce(std::uint32_t d, const Int& k) {
  Int lo = floor_div(k, d) - 1, hi = -floor_div(-k, d) + 1;
  std::vector<std::vector<Int>> found;
  std::vector<Int> cur(d, lo);
  auto h_matches = [&](const std::vector<Int>& a) {
    for (Int m = -(abs(k) + Int(d) + 1); m <= abs(k) + Int(d) + 1; ++m) {
      Int lhs = 0;
      for (const auto& x : a) lhs += std::max(Int(x + m + 1), Int(0));
      if (lhs != std::max(Int(k + Int(d) * m + 1), Int(0))) return false;
    }
    return true;
  };
  for (;;) {
    bool sorted = true;
    for (std::size_t i = 0; i + 1 < cur.size(); ++i)
      if (cur[i] > cur[i + 1]) sorted = false;
    if (sorted) {
      Int sum = 0;
      for (const auto& x : cur) sum += x;
      if (sum == k + 1 - Int(d) && h_matches(cur)) found.push_back(cur);
    }
    std::size_t i = 0;
    for (; i < cur.size(); ++i) {
      if (cur[i] < hi) { ++cur[i]; break; }
      cur[i] = lo;
    }
    if (i == cur.size()) break;
  }
  return found;
}

}  // namespace

TEST_CASE("splitting type solver") {
  SECTION("pinned examples") {
    REQUIRE(splitting_type(1, 5) == std::vector<Int>{5});
    REQUIRE(splitting_type(2, -1) == std::vector<Int>{-1, -1});
    REQUIRE(splitting_type(2, 0) == std::vector<Int>{0, -1});
  }
  SECTION("matches the exhaustive search and is unique") {
    for (std::uint32_t d = 1; d <= 4; ++d)
      for (Int k = -7; k <= 7; ++k) {
        auto mine = splitting_type(d, k);
        std::sort(mine.begin(), mine.end());
        auto all = splitting_by_bruteforce(d, k);
        REQUIRE(all.size() == 1);
        REQUIRE(mine == all[0]);
      }
  }
}

TEST_CASE("line bundle data") {
  SECTION("class f") {
    auto d = line_bundle_data(bundle_on(base22(), 1, {0, 0}));
    REQUIRE(d.rank == 1);
    REQUIRE(d.splitting == std::vector<Int>{1});
    for (const auto& w : d.weights) REQUIRE(w == std::vector<QmodZ>{QmodZ()});
    REQUIRE(d.par_degree() == 1);
  }
  SECTION("N_1 - N_{-1} on (1,-1; 3,3): splitting {-1}, weights 1/3 and 2/3") {
    auto pic = picard_group(orb33());
    ParabolicLineBundle L{orb33(), pic, pic.root_class(0) - pic.root_class(1)};
    auto d = line_bundle_data(L);
    REQUIRE(d.splitting == std::vector<Int>{-1});
    REQUIRE(d.weights[0] == std::vector<QmodZ>{QmodZ(1, 3)});
    REQUIRE(d.weights[1] == std::vector<QmodZ>{QmodZ(2, 3)});
    REQUIRE(d.par_degree() == 0);
  }
  SECTION("trivial class") {
    auto d = line_bundle_data(bundle_on(base22(), 0, {0, 0}));
    REQUIRE(d.par_degree() == 0);
    REQUIRE(d.splitting == std::vector<Int>{0});
  }
}

TEST_CASE("shift") {
  auto orb3 = OrbifoldCurve(0, {{"p", 3}});
  SECTION("shift by zero is the identity") {
    auto E = line_bundle_data(bundle_on(orb3, 2, {1}));
    REQUIRE(shift(E, {Rat(0)}) == E);
  }
  SECTION("rank 1: weight 2/3 shifted by 1/3 wraps") {
    auto E = line_bundle_data(bundle_on(orb3, 0, {2}));
    auto S = shift(E, {Rat(1, 3)});
    REQUIRE(S.weights[0] == std::vector<QmodZ>{QmodZ()});
    REQUIRE(S.splitting == std::vector<Int>{1});
  }
  SECTION("integer shift equals tensoring by O(sum D_i)") {
    auto orb = OrbifoldCurve(0, {{"a", 2}, {"b", 3}});
    auto pic = picard_group(orb);
    auto cls = pic.class_of(1, {1, 2});
    auto E = line_bundle_data(ParabolicLineBundle{orb, pic, cls});
    auto S = shift(E, {Rat(1), Rat(1)});
    auto T = line_bundle_data(ParabolicLineBundle{
        orb, pic, cls + pic.root_class(0) * 2 + pic.root_class(1) * 3});
    REQUIRE(S == T);
  }
  SECTION("denominator mismatch is rejected") {
    auto E = line_bundle_data(bundle_on(orb3, 0, {0}));
    REQUIRE_THROWS_AS(shift(E, {Rat(1, 2)}), Error);
  }
  SECTION("parabolic degree moves by rank times the shift") {
    auto orb = OrbifoldCurve(0, {{"a", 4}, {"b", 6}});
    ParabolicBundleData E(orb, 2, {Int(3), Int(2)},
                          {{QmodZ(1, 4), QmodZ(3, 4)}, {QmodZ(1, 6), QmodZ(5, 6)}});
    auto S = shift(E, {Rat(3, 4), Rat(-5, 6)});
    REQUIRE(S.par_degree() == E.par_degree() + Rat(2) * (Rat(3, 4) + Rat(-5, 6)));
  }
  SECTION("round trip on balanced splittings") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> base_deg(-4, 4), num(0, 11);
    for (int trial = 0; trial < 80; ++trial) {
      auto orb = OrbifoldCurve(0, {{"a", 4}, {"b", 3}});
      std::uint32_t rank = 1 + trial % 3;
      Int b = base_deg(rng);
      std::vector<Int> split(rank, b);
      for (auto& s : split) s += num(rng) % 2;  // balanced: entries in {b, b+1}
      std::vector<std::vector<QmodZ>> w(2);
      for (std::uint32_t k = 0; k < rank; ++k) {
        w[0].push_back(QmodZ(num(rng), 4));
        w[1].push_back(QmodZ(num(rng), 3));
      }
      ParabolicBundleData E(orb, rank, split, w);
      std::vector<Rat> l{Rat(num(rng) - 5, 4), Rat(num(rng) - 5, 3)};
      REQUIRE(shift(shift(E, l), {-l[0], -l[1]}) == E);
    }
  }
}

TEST_CASE("tensor weights") {
  auto orb2 = OrbifoldCurve(0, {{"p", 2}});
  SECTION("tensor with the trivial line keeps weights") {
    auto orb = OrbifoldCurve(0, {{"p", 3}});
    auto E = line_bundle_data(bundle_on(orb, 0, {2}));
    auto T = line_bundle_data(bundle_on(orb, 0, {0}));
    auto tw = tensor_weights(E, T);
    REQUIRE(tw.rank == 1);
    REQUIRE(tw.weights == E.weights);
  }
  SECTION("1/3 + 2/3 wraps to 0") {
    auto orb = OrbifoldCurve(0, {{"p", 3}});
    auto tw = tensor_weights(line_bundle_data(bundle_on(orb, 0, {1})),
                             line_bundle_data(bundle_on(orb, 0, {2})));
    REQUIRE(tw.weights[0] == std::vector<QmodZ>{QmodZ()});
  }
  SECTION("{0,1/2} (x) {0,1/2} = {0,0,1/2,1/2}") {
    ParabolicBundleData E(orb2, 2, {Int(0), Int(0)}, {{QmodZ(), QmodZ(1, 2)}});
    auto tw = tensor_weights(E, E);
    REQUIRE(tw.rank == 4);
    REQUIRE(tw.weights[0] ==
            std::vector<QmodZ>{QmodZ(), QmodZ(), QmodZ(1, 2), QmodZ(1, 2)});
  }
  SECTION("orbifold mismatch is rejected") {
    auto E = line_bundle_data(bundle_on(orb2, 0, {0}));
    auto F = line_bundle_data(bundle_on(OrbifoldCurve(0, {{"q", 2}}), 0, {0}));
    REQUIRE_THROWS_AS(tensor_weights(E, F), Error);
  }
}

TEST_CASE("pushforward") {
  SECTION("trivial cover returns the line bundle's data") {
    auto m = s3mono();
    auto cover = TameCover(m, Subgroup(m.group, {1, 2}));
    ParabolicLineBundle L;
    L.orbifold = cover.geometry().upstairs;
    L.pic = picard_group(L.orbifold);
    L.cls = L.pic.class_of(-2, {1, 1, 2});
    auto data = pushforward(cover, L);
    auto direct = line_bundle_data(L);
    REQUIRE(data.rank == 1);
    REQUIRE(data.splitting == direct.splitting);
    REQUIRE(data.weights == direct.weights);
  }
  SECTION("pushforward of the trivial class along the Z/2 cover") {
    auto cover = z2cover();
    ParabolicLineBundle L;
    L.orbifold = cover.geometry().upstairs;
    L.pic = picard_group(L.orbifold);
    L.cls = L.pic.group().zero();
    auto data = pushforward(cover, L);
    // O + (O(-1) with weights 1/2 at both branch points)
    ParabolicBundleData line0(base22(), 1, {Int(0)}, {{QmodZ()}, {QmodZ()}});
    ParabolicBundleData line1(base22(), 1, {Int(-1)}, {{QmodZ(1, 2)}, {QmodZ(1, 2)}});
    REQUIRE(data == direct_sum(line0, line1));
    REQUIRE(data.par_degree() == 0);
  }
  SECTION("the rank-2 pushforward over (2,2,3)") {
    // r_*(L) for L of canonical form -f + 2 N_{(inf,0)} + N_{(inf,1)} on the
    // degree-2 intermediate cover of the S3 closure
    auto m = s3mono();
    auto cover = TameCover(m, Subgroup(m.group, {2}));
    const auto& up = cover.geometry().upstairs;
    ParabolicLineBundle L;
    L.orbifold = up;
    L.pic = picard_group(up);
    std::vector<Int> a(up.point_count(), 0);
    for (std::size_t j = 0; j < up.point_count(); ++j) {
      if (up.point(j).label == "(inf,0)") a[j] = 2;
      if (up.point(j).label == "(inf,1)") a[j] = 1;
    }
    L.cls = L.pic.class_of(-1, a);
    auto data = pushforward(cover, L);
    REQUIRE(data.rank == 2);
    REQUIRE(data.splitting == std::vector<Int>{-1, -1});
    REQUIRE(data.weights[0] == std::vector<QmodZ>{QmodZ(), QmodZ(1, 2)});
    REQUIRE(data.weights[1] == std::vector<QmodZ>{QmodZ(), QmodZ(1, 2)});
    REQUIRE(data.weights[2] == std::vector<QmodZ>{QmodZ(1, 3), QmodZ(2, 3)});
    REQUIRE(data.par_degree() == 0);
  }
  SECTION("a line bundle on the wrong orbifold is rejected") {
    auto cover = z2cover();
    ParabolicLineBundle L;
    L.orbifold = base22();  // the base, not the upstairs curve
    L.pic = picard_group(L.orbifold);
    L.cls = L.pic.group().zero();
    REQUIRE_THROWS_AS(pushforward(cover, L), Error);
  }
  SECTION("positive upstairs genus is rejected") {
    auto G = group_from_permutations(2, {{1, 0}});
    auto base = OrbifoldCurve(0, {{"a", 2}, {"b", 2}, {"c", 2}, {"d", 2}});
    auto cover = TameCover(validate_monodromy(base, G, {1, 1, 1, 1}), Subgroup(G, {}));
    ParabolicLineBundle L;
    L.orbifold = cover.geometry().upstairs;
    REQUIRE_THROWS_AS(pushforward(cover, L), Error);
  }
}

TEST_CASE("rh_realize") {
  auto m = s3mono();
  auto G = m.group;
  Subgroup A3(G, {2});
  Subgroup full(G, {1, 2});
  auto cover = TameCover(m, A3);

  SECTION("trivial representation gives the trivial bundle") {
    auto R = induce(G, full, Character1D::trivial(full));
    auto data = rh_realize(TameCover(m, full), R);
    REQUIRE(data.rank == 1);
    REQUIRE(data.splitting == std::vector<Int>{0});
    for (const auto& w : data.weights) REQUIRE(w == std::vector<QmodZ>{QmodZ()});
  }
  SECTION("the 2-dim irreducible realizes the rank-2 finite bundle") {
    auto V = induce(G, A3, Character1D(A3, {QmodZ(1, 3)}));
    auto data = rh_realize(cover, V);
    REQUIRE(data.rank == 2);
    REQUIRE(data.splitting == std::vector<Int>{-1, -1});
    REQUIRE(data.weights[0] == std::vector<QmodZ>{QmodZ(), QmodZ(1, 2)});
    REQUIRE(data.weights[1] == std::vector<QmodZ>{QmodZ(), QmodZ(1, 2)});
    REQUIRE(data.weights[2] == std::vector<QmodZ>{QmodZ(1, 3), QmodZ(2, 3)});
    REQUIRE(data.par_degree() == 0);
  }
  SECTION("the sign representation: weights {1/2,1/2,0}, splitting {-1}") {
    Character1D sgn = [&] {
      for (const auto& c : linear_characters(full))
        if (!c.same_values(Character1D::trivial(full))) return c;
      FAIL("no sign character");
      return Character1D::trivial(full);
    }();
    auto data = rh_realize(TameCover(m, full), induce(G, full, sgn));
    REQUIRE(data.rank == 1);
    REQUIRE(data.splitting == std::vector<Int>{-1});
    REQUIRE(data.weights[0] == std::vector<QmodZ>{QmodZ(1, 2)});
    REQUIRE(data.weights[1] == std::vector<QmodZ>{QmodZ(1, 2)});
    REQUIRE(data.weights[2] == std::vector<QmodZ>{QmodZ()});
    REQUIRE(data.par_degree() == 0);
  }
  SECTION("realization refines the cover to the inducing subgroup") {
    // passing the regular cover still realizes an A3-induced representation
    auto V = induce(G, A3, Character1D(A3, {QmodZ(1, 3)}));
    auto regular = TameCover(m, Subgroup(G, {}));
    REQUIRE(rh_realize(regular, V) == rh_realize(cover, V));
  }
}

TEST_CASE("mackey tensor of atoms") {
  auto m = s3mono();
  auto G = m.group;
  Subgroup A3(G, {2});
  Subgroup full(G, {1, 2});
  Atom chi_atom{TameCover(m, A3), Character1D(A3, {QmodZ(1, 3)})};
  Atom triv_atom{TameCover(m, full), Character1D::trivial(full)};

  SECTION("atom (x) trivial atom keeps the atom's realization") {
    auto expr = mackey_tensor(chi_atom, triv_atom);
    REQUIRE(expr.terms.size() == 1);
    REQUIRE(realize(expr) == realize(chi_atom));
  }
  SECTION("chi (x) chi over A3: two summands realizing V + trivial + sign") {
    auto expr = mackey_tensor(chi_atom, chi_atom);
    REQUIRE(expr.terms.size() == 2);
    auto sum = realize(expr);
    REQUIRE(sum.rank == 4);
    // = V + trivial + sign at the data level
    auto V = realize(chi_atom);
    ParabolicBundleData triv(m.base, 1, {Int(0)}, {{QmodZ()}, {QmodZ()}, {QmodZ()}});
    ParabolicBundleData sgn(m.base, 1, {Int(-1)},
                            {{QmodZ(1, 2)}, {QmodZ(1, 2)}, {QmodZ()}});
    REQUIRE(sum == direct_sum(direct_sum(V, triv), sgn));
  }
  SECTION("regular atom (x) V-atom: rank bookkeeping 6 * 2") {
    Atom reg{TameCover(m, Subgroup(G, {})), Character1D::trivial(Subgroup(G, {}))};
    auto expr = mackey_tensor(reg, chi_atom);
    auto sum = realize(expr);
    REQUIRE(sum.rank == 12);
  }
  SECTION("a genus-1 summand skips the realization check but still decomposes") {
    // V4 branched at four order-2 points: the two index-2 quotients are
    // rational but the regular cover (their intersection) has genus 1
    auto V4 = group_from_permutations(4, {{1, 0, 3, 2}, {2, 3, 0, 1}});
    auto base4 = OrbifoldCurve(0, {{"a", 2}, {"b", 2}, {"c", 2}, {"d", 2}});
    auto mono = validate_monodromy(base4, V4, {1, 2, 1, 2});
    Subgroup H1(V4, {1}), H2(V4, {2});
    Atom x{TameCover(mono, H1), Character1D::trivial(H1)};
    Atom y{TameCover(mono, H2), Character1D::trivial(H2)};
    REQUIRE(TameCover(mono, H1).geometry().genus == 0);
    REQUIRE(TameCover(mono, Subgroup(V4, {})).geometry().genus == 1);
    auto expr = mackey_tensor(x, y);
    REQUIRE(expr.terms.size() == 1);
    REQUIRE(expr.terms[0].first.cover.subgroup().order() == 1);
    // realizing the genus-1 summand is refused
    REQUIRE_THROWS_AS(realize(expr), Error);
  }
  SECTION("different closures are rejected") {
    auto other = validate_monodromy(base223(), G, {3, 1, 2});
    Atom foreign{TameCover(other, A3), Character1D(A3, {QmodZ(1, 3)})};
    REQUIRE_THROWS_AS(mackey_tensor(chi_atom, foreign), Error);
  }
}

TEST_CASE("finite relations") {
  auto G = s3();
  Subgroup A3(G, {2});
  Subgroup full(G, {1, 2});
  auto irreps = monomial_irreducible_reps(G);
  std::vector<ClassFunction> irred;
  for (const auto& r : irreps) irred.push_back(character(r));

  SECTION("trivial bundle: x^2 = x") {
    auto R = induce(G, full, Character1D::trivial(full));
    auto rel = find_finite_relation(R, irred);
    REQUIRE(rel.found);
    REQUIRE(rel.p == std::vector<Int>{0, 0, 1});
    REQUIRE(rel.q == std::vector<Int>{0, 1});
  }
  SECTION("V: x^3 = x^2 + 2x") {
    auto V = induce(G, A3, Character1D(A3, {QmodZ(1, 3)}));
    auto rel = find_finite_relation(V, irred);
    REQUIRE(rel.found);
    REQUIRE(rel.p == std::vector<Int>{0, 0, 0, 1});
    REQUIRE(rel.q == std::vector<Int>{0, 2, 1});
  }
  SECTION("sign: x^2 = 1") {
    Character1D sgn = [&] {
      for (const auto& c : linear_characters(full))
        if (!c.same_values(Character1D::trivial(full))) return c;
      return Character1D::trivial(full);
    }();
    auto rel = find_finite_relation(induce(G, full, sgn), irred);
    REQUIRE(rel.found);
    REQUIRE(rel.p == std::vector<Int>{0, 0, 1});
    REQUIRE(rel.q == std::vector<Int>{1});
  }
  SECTION("closure never exceeds the number of irreducibles") {
    auto V = induce(G, A3, Character1D(A3, {QmodZ(1, 3)}));
    auto rel = find_finite_relation(V, irred);
    REQUIRE(rel.closure.size() <= irred.size());
  }
  SECTION("search exhaustion still reports the closure") {
    auto V = induce(G, A3, Character1D(A3, {QmodZ(1, 3)}));
    auto T = induce(G, full, Character1D::trivial(full));
    auto rel = find_finite_relation(direct_sum({T, V}), irred, 2);
    REQUIRE(!rel.found);
    REQUIRE(rel.multiplicities.size() == 3);
    REQUIRE(!rel.closure.empty());
  }
  SECTION("mixed sum falls back to a general dependence") {
    auto V = induce(G, A3, Character1D(A3, {QmodZ(1, 3)}));
    auto T = induce(G, full, Character1D::trivial(full));
    auto rel = find_finite_relation(direct_sum({T, V}), irred);
    REQUIRE(rel.found);
    REQUIRE(rel.p != rel.q);
    // verify the relation on multiplicity vectors
    std::size_t deg = std::max(rel.p.size(), rel.q.size());
    for (std::size_t i = 0; i < irred.size(); ++i) {
      Int lhs = 0, rhs = 0;
      for (std::size_t k = 0; k < deg; ++k) {
        if (k < rel.p.size()) lhs += rel.p[k] * rel.multiplicities[k][i];
        if (k < rel.q.size()) rhs += rel.q[k] * rel.multiplicities[k][i];
      }
      REQUIRE(lhs == rhs);
    }
  }
}

TEST_CASE("mackey tensor sweep over small covers") {
  // deterministic atom pairs over a few groups; every realizable pair runs
  // the internal rank/weight cross-check inside mackey_tensor
  struct Entry { std::string name; FiniteGroup G; };
  std::vector<Entry> corpus;
  corpus.push_back({"S3", s3()});
  corpus.push_back({"D4", group_from_permutations(4, {{1, 2, 3, 0}, {0, 3, 2, 1}})});
  corpus.push_back({"A4", group_from_permutations(4, {{1, 0, 3, 2}, {1, 2, 0, 3}})});

  std::size_t pairs = 0;
  for (auto& [name, G] : corpus) {
    // first generating 3-tuple
    std::vector<std::uint32_t> tuple;
    for (std::uint32_t a = 0; a < G.order() && tuple.empty(); ++a)
      for (std::uint32_t b = a; b < G.order(); ++b) {
        std::uint32_t c = G.inv(G.mul(a, b));
        if (Subgroup(G, {a, b, c}).order() == G.order()) {
          tuple = {a, b, c};
          break;
        }
      }
    REQUIRE(!tuple.empty());
    std::vector<OrbifoldPoint> pts;
    for (std::size_t i = 0; i < tuple.size(); ++i)
      pts.push_back({"p" + std::to_string(i), G.element_order(tuple[i])});
    auto mono = validate_monodromy(OrbifoldCurve(0, pts), G, tuple);

    std::vector<Atom> atoms;
    for (const auto& H : all_subgroups(G)) {
      TameCover cover(mono, H);
      if (cover.geometry().genus != 0) continue;
      auto chars = linear_characters(H);
      atoms.push_back({cover, chars.front()});
      if (chars.size() > 1) atoms.push_back({cover, chars.back()});
      if (atoms.size() >= 8) break;
    }
    for (std::size_t i = 0; i < atoms.size(); ++i)
      for (std::size_t j = i; j < atoms.size(); ++j) {
        auto expr = mackey_tensor(atoms[i], atoms[j]);
        REQUIRE(!expr.terms.empty());
        ++pairs;
      }
  }
  REQUIRE(pairs >= 60);
}

TEST_CASE("Frobenius weight orbit for Z/7 x| Z/3") {
  // the 3-dimensional irreducibles of the order-21 Frobenius group carry the
  // weight orbit {m/7, 2m/7, 4m/7} at a full-order point
  auto C3 = group_from_permutations(3, {{1, 2, 0}});
  auto sd = semidirect_product(fp_group(1, {{7}}), C3, {IntMat{{2}}});
  const auto& G = sd.group;
  // tuple (g0, g1, ginf) of orders (3, 3, 7)
  std::uint32_t a_gen = UINT32_MAX, c = UINT32_MAX;
  for (auto g : G.generators())
    (sd.h_part(g) == 0 ? a_gen : c) = g;
  std::uint32_t g0 = c;
  std::uint32_t g1 = G.mul(a_gen, G.mul(c, c));
  std::uint32_t ginf = G.inv(G.mul(g0, g1));
  REQUIRE(G.element_order(ginf) == 7);
  auto base = OrbifoldCurve(0, {{"0", 3}, {"1", 3}, {"inf", 7}});
  auto mono = validate_monodromy(base, G, {g0, g1, ginf});

  auto reps = little_groups_irreducibles(
      sd, [](const Subgroup& S) { return monomial_irreducible_reps(S.as_group()); });
  int dim3 = 0;
  for (const auto& V : reps) {
    if (V.dim() != 3) continue;
    ++dim3;
    TameCover cover(mono, *V.provenance().from);
    auto data = rh_realize(cover, V);
    REQUIRE(data.rank == 3);
    REQUIRE(data.par_degree() == 0);
    // the infinity weights form one orbit {m, 2m, 4m}/7
    const auto& w = data.weights[2];
    Int m = w[0].num() * (Int(7) / w[0].den());
    std::multiset<Int> orbit{mod_floor(m, 7), mod_floor(m * 2, 7), mod_floor(m * 4, 7)};
    std::multiset<Int> got;
    for (const auto& x : w) got.insert(x.num() * (Int(7) / x.den()));
    REQUIRE(got == orbit);
  }
  REQUIRE(dim3 == 2);
}
