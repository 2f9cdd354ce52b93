#pragma once

// Parabolic bundle data on orbifold curves: (rank, splitting type of the
// underlying bundle at weight zero, weight multiset per marked point). On a
// genus-0 base this is the whole desk-scale isomorphism invariant for the
// bundles produced here, which are direct sums of parabolic line bundles.
//
// The two central computations each run along two independent routes that
// are asserted equal: pushforward weights come from monodromy eigenvalue
// exponents and from degree drops of the filtration pieces, and rh_realize
// compares the Tannakian weights against the geometric pushforward.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "orbipar/covers.hpp"
#include "orbipar/error.hpp"
#include "orbipar/orbifold.hpp"
#include "orbipar/rational.hpp"
#include "orbipar/reptheory.hpp"

namespace orbipar {

struct ParabolicLineBundle {
  OrbifoldCurve orbifold;
  PicGroup pic;
  GroupElement cls;
};

struct ParabolicBundleData {
  OrbifoldCurve orbifold;
  std::uint32_t rank = 0;
  std::vector<Int> splitting;               // non-increasing
  std::vector<std::vector<QmodZ>> weights;  // per point, non-decreasing

  ParabolicBundleData() = default;
  ParabolicBundleData(OrbifoldCurve orb, std::uint32_t rk, std::vector<Int> split,
                      std::vector<std::vector<QmodZ>> w)
      : orbifold(std::move(orb)), rank(rk), splitting(std::move(split)), weights(std::move(w)) {
    check(splitting.size() == rank, errc::bad_input, "splitting size must equal the rank");
    check(weights.size() == orbifold.point_count(), errc::bad_input,
          "one weight multiset per marked point");
    for (std::size_t i = 0; i < weights.size(); ++i) {
      check(weights[i].size() == rank, errc::bad_input, "weight multiset size must equal rank");
      for (const auto& wv : weights[i])
        check(Int(orbifold.point(i).order) % wv.den() == 0, errc::denominator_mismatch,
              "weight denominator does not divide the root order");
    }
    normalize();
  }

  void normalize() {
    std::sort(splitting.begin(), splitting.end(), std::greater<Int>());
    for (auto& w : weights) std::sort(w.begin(), w.end());
  }

  Rat par_degree() const {
    Rat out = 0;
    for (const auto& a : splitting) out += Rat(a);
    for (const auto& w : weights) out += sum_of(w);
    return out;
  }

  bool operator==(const ParabolicBundleData& o) const {
    return orbifold == o.orbifold && rank == o.rank && splitting == o.splitting &&
           weights == o.weights;
  }
};

inline ParabolicBundleData direct_sum(const ParabolicBundleData& a, const ParabolicBundleData& b) {
  check(a.orbifold == b.orbifold, errc::orbifold_mismatch, "direct sum of different orbifolds");
  std::vector<Int> split = a.splitting;
  split.insert(split.end(), b.splitting.begin(), b.splitting.end());
  std::vector<std::vector<QmodZ>> w = a.weights;
  for (std::size_t i = 0; i < w.size(); ++i)
    w[i].insert(w[i].end(), b.weights[i].begin(), b.weights[i].end());
  return ParabolicBundleData(a.orbifold, a.rank + b.rank, std::move(split), std::move(w));
}

// rank 1, splitting {d}, weight a_i/r_i from the canonical form d*f + sum a_i N_i
inline ParabolicBundleData line_bundle_data(const ParabolicLineBundle& L) {
  auto [d, a] = L.pic.canonical_form(L.cls);
  std::vector<std::vector<QmodZ>> w;
  for (std::size_t i = 0; i < L.orbifold.point_count(); ++i)
    w.push_back({QmodZ(a[i], L.orbifold.point(i).order)});
  return ParabolicBundleData(L.orbifold, 1, {d}, std::move(w));
}

// Shift every weight at point i by l_i; wraps carry into the splitting type.
// Carries pair weights in non-decreasing order with splitting entries in
// non-increasing order. For the balanced splittings this library produces
// (max - min <= 1) the pairing makes shift(shift(E,l),-l) = E exact.
inline ParabolicBundleData shift(const ParabolicBundleData& E, const std::vector<Rat>& l) {
  check(l.size() == E.orbifold.point_count(), errc::bad_input, "one shift per marked point");
  for (std::size_t i = 0; i < l.size(); ++i)
    check(Int(E.orbifold.point(i).order) % rat_den(l[i]) == 0, errc::denominator_mismatch,
          "shift denominator does not divide the root order at point " + std::to_string(i));

  std::vector<Int> split = E.splitting;  // non-increasing
  std::vector<std::vector<QmodZ>> weights = E.weights;
  for (std::size_t i = 0; i < l.size(); ++i) {
    Int whole = rat_floor(l[i]);
    Rat fl = l[i] - Rat(whole);
    for (auto& s : split) s += whole;
    if (E.rank == 0) continue;
    std::sort(split.begin(), split.end(), std::greater<Int>());
    std::vector<QmodZ>& w = weights[i];  // non-decreasing
    for (std::uint32_t k = 0; k < E.rank; ++k) {
      Rat moved = w[k].as_rat() + fl;
      Int carry = rat_floor(moved);
      w[k] = QmodZ::from_rat(moved);
      split[k] += carry;
    }
    std::sort(w.begin(), w.end());
  }
  return ParabolicBundleData(E.orbifold, E.rank, std::move(split), std::move(weights));
}

struct TensorWeights {
  std::uint32_t rank = 0;
  std::vector<std::vector<QmodZ>> weights;
};

// weight-level convolution: weights add mod 1 over all pairs. The splitting
// type of a tensor product is not determined by the factors' data; full
// tensor computations go through mackey_tensor.
inline TensorWeights tensor_weights(const ParabolicBundleData& E, const ParabolicBundleData& F) {
  check(E.orbifold == F.orbifold, errc::orbifold_mismatch, "tensor of different orbifolds");
  TensorWeights out;
  out.rank = E.rank * F.rank;
  for (std::size_t i = 0; i < E.orbifold.point_count(); ++i) {
    std::vector<QmodZ> w;
    for (const auto& a : E.weights[i])
      for (const auto& b : F.weights[i]) w.push_back(a + b);
    std::sort(w.begin(), w.end());
    // bilinearity of the parabolic degree, modulo the integer carries that
    // the missing splitting type would absorb
    QmodZ lhs = QmodZ::from_rat(sum_of(w));
    QmodZ rhs = QmodZ::from_rat(Rat(F.rank) * sum_of(E.weights[i]) +
                                Rat(E.rank) * sum_of(F.weights[i]));
    internal_check(lhs == rhs, "tensor weight degree is not bilinear mod 1");
    out.weights.push_back(std::move(w));
  }
  return out;
}

// Splitting type of the pushforward of a degree-k line bundle along a
// degree-d map P^1 -> P^1: the unique multiset {a_j} with
// sum max(a_j + m + 1, 0) = max(k + d m + 1, 0) for every m. Solved greedily
// from large m downward through the section-count increments.
inline std::vector<Int> splitting_type(std::uint32_t d, const Int& k) {
  check(d >= 1, errc::bad_input, "cover degree must be >= 1");
  auto h = [&](const Int& m) {
    Int v = k + Int(d) * m + 1;
    return v > 0 ? v : Int(0);
  };
  auto s = [&](const Int& m) { return h(m) - h(m - 1); };  // #{a_j >= -m}

  std::vector<Int> out;
  Int hi = abs(k) + 2;
  Int lo = -(abs(k) + Int(d) + 2);
  for (Int v = hi; v >= lo && Int(out.size()) < Int(d); --v) {
    Int cnt = s(-v) - s(-v - 1);
    internal_check(cnt >= 0, "splitting count negative");
    for (Int c = 0; c < cnt; ++c) out.push_back(v);
  }
  internal_check(out.size() == d, "splitting solver did not place every summand");
  Int total = 0;
  for (const auto& a : out) total += a;
  internal_check(total == k + 1 - Int(d), "splitting violates the Euler characteristic");
  return out;
}

// the parabolic line bundle on the cover's upstairs orbifold whose local
// weights are the character's values on the inertia generators
inline ParabolicLineBundle line_bundle_of_character(const TameCover& cover,
                                                    const Character1D& chi) {
  check(chi.subgroup().same_members(cover.subgroup()), errc::bad_input,
        "character must live on the cover's subgroup");
  const auto& geom = cover.geometry();
  check(geom.genus == 0, errc::unsupported_genus, "upstairs curve has positive genus");
  const auto& G = cover.group();

  std::vector<Int> a(geom.points.size());
  Rat degree_sum = 0;
  for (std::size_t j = 0; j < geom.points.size(); ++j) {
    const auto& p = geom.points[j];
    std::uint32_t t = cover.fibers().reps[p.min_coset];
    std::uint32_t g = cover.monodromy().tuple[p.base_index];
    // inertia generator at the point: t g^ell t^-1, an element of H
    std::uint32_t delta = G.mul(G.mul(t, G.power(g, p.ell)), G.inv(t));
    internal_check(cover.subgroup().contains(delta), "inertia generator not in the subgroup");
    QmodZ w = chi.value_at_parent(delta);
    internal_check(Int(p.s) % w.den() == 0, "inertia weight denominator exceeds residual order");
    a[j] = w.num() * (Int(p.s) / w.den());
    degree_sum += w.as_rat();
  }
  internal_check(rat_den(degree_sum) == 1, "character weights do not sum to an integer");

  ParabolicLineBundle L;
  L.orbifold = geom.upstairs;
  L.pic = picard_group(geom.upstairs);
  L.cls = L.pic.class_of(-rat_num(degree_sum), a);
  return L;
}

// Pushforward of a parabolic line bundle along the cover. Weights at a base
// point are computed twice: from the eigenvalue formula on the orbits of the
// local monodromy, and from the degree drops of the filtration pieces; the
// two multisets must agree.
inline ParabolicBundleData pushforward(const TameCover& cover, const ParabolicLineBundle& L) {
  const auto& geom = cover.geometry();
  check(geom.genus == 0, errc::unsupported_genus, "pushforward needs a genus-0 cover");
  check(L.orbifold == geom.upstairs, errc::orbifold_mismatch,
        "line bundle does not live on the cover's upstairs orbifold");

  auto canonical = L.pic.canonical_form(L.cls);
  const Int& dL = canonical.first;
  const std::vector<Int>& a = canonical.second;
  std::uint32_t d = cover.degree();

  std::vector<std::vector<QmodZ>> weights;
  for (std::size_t i = 0; i < cover.base().point_count(); ++i) {
    std::uint32_t r = cover.base().point(i).order;

    // eigenvalue route: orbit j contributes {(w_j + m) / ell_j : m}
    std::vector<QmodZ> eigen;
    for (std::size_t j = 0; j < geom.points.size(); ++j) {
      const auto& p = geom.points[j];
      if (p.base_index != i) continue;
      for (std::uint32_t m = 0; m < p.ell; ++m)
        eigen.push_back(QmodZ(a[j] + Int(m) * Int(p.s), Int(p.s) * Int(p.ell)));
    }
    std::sort(eigen.begin(), eigen.end());

    // degree-drop route: kappa(k) = deg of the piece at level k/r upstairs
    auto kappa = [&](std::uint32_t k) {
      Int deg = dL;
      for (std::size_t j = 0; j < geom.points.size(); ++j) {
        const auto& p = geom.points[j];
        if (p.base_index != i) continue;
        Int q = Int(k) / Int(p.s);
        Int rho = Int(k) % Int(p.s);
        deg -= q + ((rho > a[j]) ? 1 : 0);
      }
      return deg;
    };
    internal_check(kappa(0) == dL, "level-zero piece degree");
    std::vector<QmodZ> drops;
    for (std::uint32_t k = 0; k < r; ++k) {
      Int mult = kappa(k) - kappa(k + 1);
      internal_check(mult >= 0, "negative weight multiplicity");
      for (Int c = 0; c < mult; ++c) drops.push_back(QmodZ(k, r));
    }
    internal_check(drops.size() == d, "weight multiplicities do not sum to the rank");
    internal_check(drops == eigen, "eigenvalue and degree-drop weights disagree");
    weights.push_back(std::move(eigen));
  }

  ParabolicBundleData out(cover.base(), d, splitting_type(d, dL), std::move(weights));
  internal_check(out.par_degree() == line_bundle_data(L).par_degree(),
                 "pushforward does not preserve the parabolic degree");
  return out;
}

// Realize an induced monomial representation of the cover's group as a
// parabolic bundle: geometric route through the pushforward, Tannakian route
// through local eigenvalue exponents. Their disagreement is a PathMismatch.
inline ParabolicBundleData rh_realize(const TameCover& cover, const MonomialRep& rep) {
  check(rep.group().same_group(cover.group()), errc::group_mismatch,
        "representation of a different group");
  check(rep.provenance().kind == Provenance::Induced, errc::bad_input,
        "rh_realize needs an induced character (monomial) representation");
  const Subgroup& S = *rep.provenance().from;
  const Character1D& chi = *rep.provenance().chi;

  TameCover refined =
      S.same_members(cover.subgroup()) ? cover : TameCover(cover.monodromy(), S);
  check(refined.geometry().genus == 0, errc::unsupported_genus,
        "upstairs curve has positive genus");

  ParabolicBundleData data = pushforward(refined, line_bundle_of_character(refined, chi));

  for (std::size_t i = 0; i < cover.base().point_count(); ++i) {
    auto tannakian = local_exponents(rep, cover.monodromy().tuple[i]);
    check(tannakian == data.weights[i], errc::path_mismatch,
          "Tannakian and pushforward weights disagree at point " +
              cover.base().point(i).label);
  }
  internal_check(data.par_degree() == 0, "realized bundle must have parabolic degree 0");
  return data;
}

// formal sum of pushforward atoms p_*(L_chi), all over one Galois closure
struct Atom {
  TameCover cover;
  Character1D chi;  // on cover.subgroup()
};

struct AtomExpression {
  std::vector<std::pair<Atom, std::uint32_t>> terms;
};

inline ParabolicBundleData realize(const Atom& atom) {
  return rh_realize(atom.cover,
                    induce(atom.cover.group(), atom.cover.subgroup(), atom.chi));
}

inline ParabolicBundleData realize(const AtomExpression& expr) {
  check(!expr.terms.empty(), errc::bad_input, "empty atom expression");
  ParabolicBundleData acc;
  bool first = true;
  for (const auto& [atom, mult] : expr.terms)
    for (std::uint32_t c = 0; c < mult; ++c) {
      auto d = realize(atom);
      acc = first ? d : direct_sum(acc, d);
      first = false;
    }
  return acc;
}

// Mackey tensor of two atoms: one summand atom per double coset. The
// character identity is certified inside mackey_decompose; on top of that,
// whenever every cover involved stays in genus 0, the realized sum is checked
// against the weight-level tensor of the realized factors. (A summand's
// intermediate curve can have positive genus even when both factors' curves
// are rational; the realization check is only defined when it does not.)
inline AtomExpression mackey_tensor(const Atom& a1, const Atom& a2) {
  check(a1.cover.group().same_group(a2.cover.group()) &&
            a1.cover.monodromy().same_monodromy(a2.cover.monodromy()),
        errc::closure_mismatch, "atoms have different Galois closures");
  const auto& G = a1.cover.group();
  auto summands = mackey_decompose(G, a1.cover.subgroup(), a1.chi, a2.cover.subgroup(), a2.chi);

  AtomExpression out;
  bool realizable =
      a1.cover.geometry().genus == 0 && a2.cover.geometry().genus == 0;
  for (const auto& s : summands) {
    Atom atom{TameCover(a1.cover.monodromy(), s.H), s.chi};
    if (atom.cover.geometry().genus != 0) realizable = false;
    out.terms.emplace_back(std::move(atom), 1);
  }

  if (realizable) {
    ParabolicBundleData sum = realize(out);
    TensorWeights tw = tensor_weights(realize(a1), realize(a2));
    internal_check(sum.rank == tw.rank, "Mackey tensor rank bookkeeping");
    internal_check(sum.weights == tw.weights, "Mackey tensor weight multisets disagree");
  }
  return out;
}

// P(E) = Q(E) witness for a finite representation, searched by total degree.
// Primary shape: x^n against a non-negative combination of lower powers with
// the lexicographically least coefficient vector. When no pure power works
// within the bound, fall back to the first integer dependence among the
// multiplicity vectors, split into its positive and negative parts.
struct FiniteRelation {
  bool found = false;
  std::vector<Int> p, q;                      // coefficient of x^k at index k
  std::vector<std::size_t> closure;           // irreducibles appearing in powers <= K
  std::vector<std::vector<Int>> multiplicities;  // v_k for k = 0..K
};

inline std::string polynomial_to_string(const std::vector<Int>& coeffs) {
  std::string out;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    if (coeffs[k] == 0) continue;
    if (!out.empty()) out += " + ";
    if (k == 0) {
      out += coeffs[k].str();
      continue;
    }
    if (coeffs[k] != 1) out += coeffs[k].str() + "*";
    out += (k == 1) ? "x" : ("x^" + std::to_string(k));
  }
  return out.empty() ? "0" : out;
}

namespace detail {
inline bool lex_min_combination(const std::vector<std::vector<Int>>& v, std::size_t n,
                                std::vector<Int>& out) {
  std::size_t t = v[n].size();
  std::vector<Int> rem = v[n];
  out.assign(n, 0);
  // depth-first, smallest coefficient first: the first full solution is the
  // lexicographically least
  std::function<bool(std::size_t)> go = [&](std::size_t k) -> bool {
    if (k == n) {
      for (const auto& x : rem)
        if (x != 0) return false;
      return true;
    }
    Int bound;
    bool bounded = false;
    for (std::size_t i = 0; i < t; ++i)
      if (v[k][i] > 0) {
        Int b = rem[i] / v[k][i];
        if (!bounded || b < bound) { bound = b; bounded = true; }
      }
    internal_check(bounded, "zero multiplicity vector");
    if (bound < 0) bound = -1;
    for (Int c = 0; c <= bound; ++c) {
      if (c > 0)
        for (std::size_t i = 0; i < t; ++i) rem[i] -= v[k][i];
      bool feasible = true;
      for (std::size_t i = 0; i < t; ++i)
        if (rem[i] < 0) { feasible = false; break; }
      if (feasible) {
        out[k] = c;
        if (go(k + 1)) return true;
      }
    }
    // restore
    for (std::size_t i = 0; i < t; ++i) rem[i] += bound * v[k][i];
    out[k] = 0;
    return false;
  };
  return go(0);
}
}  // namespace detail

inline FiniteRelation find_finite_relation(const MonomialRep& R,
                                           const std::vector<ClassFunction>& irred,
                                           std::uint32_t max_power = 6) {
  check(max_power >= 2, errc::bad_input, "relation search needs max power >= 2");
  FiniteRelation out;

  std::vector<Int> dims;
  for (const auto& ir : irred) dims.push_back(ir.values[0].as_integer());

  ClassFunction chi = character(R);
  ClassFunction power = chi;
  power.values.assign(power.values.size(), CycloNumber::integer(1));
  // v_k = multiplicities of R^{(x) k}
  for (std::uint32_t k = 0; k <= max_power; ++k) {
    std::vector<Int> v;
    Int total = 0;
    for (std::size_t i = 0; i < irred.size(); ++i) {
      Int m = inner_product(power, irred[i]);
      check(m >= 0, errc::negative_multiplicity, "negative multiplicity");
      total += m * dims[i];
      v.push_back(m);
    }
    Int expect = 1;
    for (std::uint32_t e = 0; e < k; ++e) expect *= R.dim();
    check(total == expect, errc::incomplete_input, "irreducible list is not complete");
    out.multiplicities.push_back(std::move(v));
    power = power.pointwise_mul(chi);
  }
  for (std::size_t i = 0; i < irred.size(); ++i)
    for (const auto& v : out.multiplicities)
      if (v[i] != 0) {
        out.closure.push_back(i);
        break;
      }

  auto trim = [](std::vector<Int>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };

  // primary search: x^n = sum of lower powers
  for (std::uint32_t n = 2; n <= max_power; ++n) {
    std::vector<Int> c;
    if (detail::lex_min_combination(out.multiplicities, n, c)) {
      out.found = true;
      out.p.assign(n + 1, 0);
      out.p[n] = 1;
      out.q = std::move(c);
      trim(out.q);
      return out;
    }
  }

  // fallback: any integer dependence among v_0..v_n
  for (std::uint32_t n = 1; n <= max_power; ++n) {
    IntMat m(irred.size(), std::vector<Int>(n + 1));
    for (std::size_t i = 0; i < irred.size(); ++i)
      for (std::uint32_t k = 0; k <= n; ++k) m[i][k] = out.multiplicities[k][i];
    auto basis = detail::integer_kernel(m, n + 1);
    if (basis.empty()) continue;
    std::vector<Int> c = basis[0];
    Int g = 0;
    for (const auto& x : c) g = gcd_int(g, x);
    if (g > 1)
      for (auto& x : c) x /= g;
    Int lead = 0;
    for (std::size_t k = c.size(); k-- > 0;)
      if (c[k] != 0) { lead = c[k]; break; }
    if (lead < 0)
      for (auto& x : c) x = -x;
    out.found = true;
    out.p.assign(c.size(), 0);
    out.q.assign(c.size(), 0);
    for (std::size_t k = 0; k < c.size(); ++k)
      (c[k] >= 0 ? out.p[k] : out.q[k]) = abs(c[k]);
    trim(out.p);
    trim(out.q);
    return out;
  }
  return out;  // not found; closure report is still filled in
}

}  // namespace orbipar
