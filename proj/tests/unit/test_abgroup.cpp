#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "orbipar/abgroup.hpp"
#include "oracles.hpp"

using namespace orbipar;

namespace {

IntMat random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMat m(rows, std::vector<Int>(cols));
  for (auto& row : m)
    for (auto& x : row) x = d(rng);
  return m;
}

void check_snf_contract(const IntMat& m) {
  auto s = smith_normal_form(m);
  REQUIRE(mat_mul(mat_mul(s.U, m), s.V) == s.D);
  REQUIRE((oracles::det_laplace(s.U) == 1 || oracles::det_laplace(s.U) == -1));
  REQUIRE((oracles::det_laplace(s.V) == 1 || oracles::det_laplace(s.V) == -1));
  REQUIRE(mat_mul(s.U, s.Uinv) == mat_identity(m.size()));
  REQUIRE(mat_mul(s.V, s.Vinv) == mat_identity(m.empty() ? 0 : m[0].size()));
  // diagonal, non-negative, successive divisibility
  for (std::size_t i = 0; i < s.D.size(); ++i)
    for (std::size_t j = 0; j < s.D[i].size(); ++j)
      if (i != j) REQUIRE(s.D[i][j] == 0);
  for (std::size_t i = 0; i + 1 < s.diag.size(); ++i)
    REQUIRE(s.diag[i + 1] % s.diag[i] == 0);
  // invariant factors match the minor-gcd oracle
  std::vector<Int> nontrivial;
  for (const auto& d : s.diag)
    if (d != 0) nontrivial.push_back(d);
  REQUIRE(nontrivial == oracles::invariant_factors_by_minors(m));
}

}  // namespace

TEST_CASE("smith normal form on pinned examples") {
  SECTION("identity") {
    auto s = smith_normal_form(mat_identity(2));
    REQUIRE(s.D == mat_identity(2));
    REQUIRE(s.U == mat_identity(2));
    REQUIRE(s.V == mat_identity(2));
  }
  SECTION("diag(2,3) has invariant factors 1,6") {
    IntMat m = {{2, 0}, {0, 3}};
    auto s = smith_normal_form(m);
    REQUIRE(s.diag == std::vector<Int>{1, 6});
    check_snf_contract(m);
  }
  SECTION("Pic relations for r=(2,2)") {
    IntMat m = {{2, 0, -1}, {0, 2, -1}};
    auto s = smith_normal_form(m);
    // minor gcd oracle: 1x1 gcd 1, 2x2 minors {4,-2,-2} gcd 2
    REQUIRE(oracles::determinantal_divisor(m, 1) == 1);
    REQUIRE(oracles::determinantal_divisor(m, 2) == 2);
    REQUIRE(s.diag == std::vector<Int>{1, 2});
    auto G = fp_group(3, m);
    REQUIRE(G.invariant_factors() == std::vector<Int>{2});
    REQUIRE(G.free_rank() == 1);
  }
  SECTION("empty and degenerate shapes") {
    check_snf_contract(IntMat{});
    check_snf_contract(IntMat{{0, 0}, {0, 0}});
    check_snf_contract(IntMat{{5}});
  }
}

TEST_CASE("smith normal form contract on random matrices") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 120; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    auto m = random_matrix(rng, dim(rng), dim(rng), -9, 9);
    check_snf_contract(m);
  }
}

TEST_CASE("fp_group structure on pinned examples") {
  SECTION("free of rank 1") {
    auto G = fp_group(1, {});
    REQUIRE(G.free_rank() == 1);
    REQUIRE(G.invariant_factors().empty());
  }
  SECTION("Z + Z/3 from Pic-style relations") {
    auto G = fp_group(3, {{3, 0, -1}, {0, 3, -1}});
    REQUIRE(oracles::invariant_factors_by_minors({{3, 0, -1}, {0, 3, -1}}) ==
            std::vector<Int>{1, 3});
    REQUIRE(G.free_rank() == 1);
    REQUIRE(G.invariant_factors() == std::vector<Int>{3});
  }
  SECTION("(Z/2)^2") {
    auto G = fp_group(2, {{2, 0}, {0, 2}});
    REQUIRE(G.free_rank() == 0);
    REQUIRE(G.invariant_factors() == std::vector<Int>{2, 2});
    REQUIRE(G.order() == 4);
  }
  SECTION("zero generators") {
    auto G = fp_group(0, {});
    REQUIRE(G.is_trivial());
    REQUIRE(G.zero().is_zero());
    REQUIRE(G.enumerate().size() == 1);
  }
}

TEST_CASE("invariant factors do not depend on the presentation") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    auto m = random_matrix(rng, 3, 4, -4, 4);
    auto base = fp_group(4, m).invariant_factors();
    auto base_free = fp_group(4, m).free_rank();

    auto shuffled = m;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    // add a random multiple of one row to another
    std::uniform_int_distribution<int> pick(0, 2), mult(-3, 3);
    int a = pick(rng), b = pick(rng);
    if (a != b) {
      Int q = mult(rng);
      for (std::size_t j = 0; j < 4; ++j) shuffled[a][j] += q * shuffled[b][j];
    }
    auto G = fp_group(4, shuffled);
    REQUIRE(G.invariant_factors() == base);
    REQUIRE(G.free_rank() == base_free);
  }
}

TEST_CASE("element arithmetic and order") {
  auto G = fp_group(2, {{0, 2}});  // Z + Z/2 up to coordinates
  REQUIRE(G.free_rank() == 1);
  REQUIRE(G.invariant_factors() == std::vector<Int>{2});

  SECTION("order of zero is 1") {
    auto o = element_order(G.zero());
    REQUIRE(o.has_value());
    REQUIRE(*o == 1);
  }
  SECTION("torsion generator has order 3 in Z/3 summand") {
    auto H = fp_group(3, {{3, 0, -1}, {0, 3, -1}});
    bool saw_order_3 = false;
    for (std::size_t i = 0; i < H.gen_count(); ++i) {
      auto o = element_order(H.canonical_generator(i));
      if (o.has_value() && *o == 3) saw_order_3 = true;
    }
    REQUIRE(saw_order_3);
  }
  SECTION("free coordinate gives infinite order") {
    auto g = G.element({1, 0});
    bool inf = false;
    // one of the two generators maps onto the free part
    for (std::size_t i = 0; i < 2; ++i)
      if (!element_order(G.canonical_generator(i)).has_value()) inf = true;
    REQUIRE(inf);
    (void)g;
  }
  SECTION("orders divide the exponent of the torsion part") {
    auto H = fp_group(3, {{4, 0, 0}, {0, 6, 0}, {0, 0, 2}});
    Int expnt = 1;
    for (const auto& f : H.invariant_factors()) expnt = lcm_int(expnt, f);
    for (const auto& g : H.enumerate()) {
      auto o = element_order(g);
      REQUIRE(o.has_value());
      REQUIRE(expnt % *o == 0);
    }
  }
}

TEST_CASE("n_torsion") {
  SECTION("torsion of Z is trivial") {
    auto G = fp_group(1, {});
    REQUIRE(n_torsion(G, 5).group.is_trivial());
  }
  SECTION("3-torsion of Z + Z/3") {
    auto G = fp_group(3, {{3, 0, -1}, {0, 3, -1}});
    auto T = n_torsion(G, 3);
    REQUIRE(T.group.invariant_factors() == std::vector<Int>{3});
    REQUIRE(T.group.order() == 3);
    // the embedded generator really has order 3 in G
    auto o = element_order(T.embed[0]);
    REQUIRE(o.has_value());
    REQUIRE(*o == 3);
  }
  SECTION("2-torsion of Z/4 is Z/2 generated by the class of 2") {
    auto G = fp_group(1, {{4}});
    auto T = n_torsion(G, 2);
    REQUIRE(T.group.invariant_factors() == std::vector<Int>{2});
    REQUIRE(T.embed[0] == G.element({2}));
  }
  SECTION("order formula prod gcd(n, d_i)") {
    auto G = fp_group(2, {{4, 0}, {0, 6}});
    for (Int n : {1, 2, 3, 4, 6, 12}) {
      auto T = n_torsion(G, n);
      REQUIRE(T.group.order() == gcd_int(n, 4) * gcd_int(n, 6));
    }
  }
}

TEST_CASE("kernel of a homomorphism") {
  SECTION("zero map has kernel G") {
    auto G = fp_group(2, {{2, 0}});
    auto H = fp_group(1, {});
    Homomorphism f{G, H, IntMat{{0, 0}}};
    auto K = kernel(f);
    REQUIRE(K.group.invariant_factors() == G.invariant_factors());
    REQUIRE(K.group.free_rank() == G.free_rank());
  }
  SECTION("summation Z^2 -> Z has kernel Z") {
    auto G = fp_group(2, {});
    auto H = fp_group(1, {});
    Homomorphism f{G, H, IntMat{{1, 1}}};
    auto K = kernel(f);
    REQUIRE(K.group.free_rank() == 1);
    REQUIRE(K.group.invariant_factors().empty());
    // the embedded generator maps to zero under f
    auto g = K.embed[0];
    REQUIRE(f.apply(g).is_zero());
    REQUIRE(!g.is_zero());
  }
  SECTION("relation violation is reported") {
    auto G = fp_group(1, {{2}});
    auto H = fp_group(1, {});
    Homomorphism f{G, H, IntMat{{1}}};
    REQUIRE_THROWS_AS(kernel(f), Error);
  }
  SECTION("kernel elements exhaust {x : f(x) = 0} on a finite example") {
    auto G = fp_group(2, {{4, 0}, {0, 4}});
    auto H = fp_group(1, {{4}});
    Homomorphism f{G, H, IntMat{{1, 1}}};
    auto K = kernel(f);
    std::set<std::vector<Int>> via_kernel;
    for (const auto& k : K.group.enumerate())
      via_kernel.insert(K.embed_element(k).coords());
    std::set<std::vector<Int>> direct;
    for (const auto& g : G.enumerate())
      if (f.apply(g).is_zero()) direct.insert(g.coords());
    REQUIRE(via_kernel == direct);
  }
}

TEST_CASE("dual characters") {
  SECTION("trivial group has one character") {
    auto A = fp_group(0, {});
    REQUIRE(dual_characters(A).size() == 1);
  }
  SECTION("Z/3 characters take values 0, 1/3, 2/3 on the generator") {
    auto A = fp_group(1, {{3}});
    auto chars = dual_characters(A);
    REQUIRE(chars.size() == 3);
    std::set<std::string> vals;
    for (const auto& c : chars) vals.insert(c.eval(A.element({1})).str());
    REQUIRE(vals == std::set<std::string>{"0", "1/3", "2/3"});
  }
  SECTION("Z/2 x Z/2 has 4 characters valued in {0,1/2}^2") {
    auto A = fp_group(2, {{2, 0}, {0, 2}});
    auto chars = dual_characters(A);
    REQUIRE(chars.size() == 4);
    for (const auto& c : chars)
      for (const auto& g : A.enumerate()) {
        auto v = c.eval(g);
        REQUIRE((v.is_zero() || v == QmodZ(1, 2)));
      }
  }
  SECTION("characters separate points") {
    auto A = fp_group(2, {{4, 0}, {0, 6}});
    auto chars = dual_characters(A);
    REQUIRE(Int(chars.size()) == A.order());
    for (const auto& g : A.enumerate()) {
      if (g.is_zero()) continue;
      bool separated = false;
      for (const auto& c : chars)
        if (!c.eval(g).is_zero()) { separated = true; break; }
      REQUIRE(separated);
    }
  }
}
