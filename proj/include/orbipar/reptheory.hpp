#pragma once

// Monomial representations: inductions of 1-dimensional characters and what
// can be built from them by tensor and direct sum. Matrices are permutations
// with root-of-unity twists; characters are exact cyclotomic integers.
//
// Convention, used consistently: group words read left to right, induced
// representations live on right cosets H\G with the least-index transversal
// (identity first), and conjugation is chi^g(h) = chi(g^-1 h g).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "orbipar/abgroup.hpp"
#include "orbipar/cyclotomic.hpp"
#include "orbipar/error.hpp"
#include "orbipar/finitegroup.hpp"
#include "orbipar/rational.hpp"

namespace orbipar {

// monomial matrix: e_k -> zeta^{twist[perm[k]]} e_{perm[k]}
struct Monomial {
  std::vector<std::uint32_t> perm;
  std::vector<QmodZ> twist;

  static Monomial identity(std::uint32_t dim) {
    Monomial m;
    m.perm.resize(dim);
    m.twist.assign(dim, QmodZ());
    for (std::uint32_t i = 0; i < dim; ++i) m.perm[i] = i;
    return m;
  }

  std::uint32_t dim() const { return static_cast<std::uint32_t>(perm.size()); }

  // matrix of "this, then next"
  Monomial then(const Monomial& next) const {
    internal_check(dim() == next.dim(), "monomial dimension mismatch");
    Monomial out;
    out.perm.resize(dim());
    out.twist.assign(dim(), QmodZ());
    for (std::uint32_t k = 0; k < dim(); ++k) {
      std::uint32_t j = perm[k];
      std::uint32_t jj = next.perm[j];
      out.perm[k] = jj;
      out.twist[jj] = twist[j] + next.twist[jj];
    }
    return out;
  }

  bool operator==(const Monomial& o) const { return perm == o.perm && twist == o.twist; }
};

// character of a subgroup valued in Q/Z, cached on every member
class Character1D {
 public:
  Character1D() = default;

  // from values on the subgroup's generators; extends along words and
  // verifies the result on the full element set
  Character1D(Subgroup S, const std::vector<QmodZ>& gen_values) : S_(std::move(S)) {
    const auto& g = S_.as_group();
    check(gen_values.size() == g.generators().size(), errc::bad_input,
          "one value per subgroup generator");
    auto vals = extend(S_, gen_values);
    check(vals.has_value(), errc::bad_input, "values do not define a character");
    values_ = std::move(*vals);
  }

  static Character1D trivial(Subgroup S) {
    const auto& g = S.as_group();
    return Character1D(std::move(S), std::vector<QmodZ>(g.generators().size()));
  }

  // from explicit values on every member (indexed like S.as_group())
  static Character1D from_member_values(Subgroup S, std::vector<QmodZ> values) {
    const auto& g = S.as_group();
    check(values.size() == g.order(), errc::bad_input, "one value per member");
    for (std::uint32_t x = 0; x < g.order(); ++x)
      for (auto gen : g.generators())
        check(values[g.mul(x, gen)] == values[x] + values[gen], errc::bad_input,
              "values do not define a character");
    check(values[FiniteGroup::identity].is_zero(), errc::bad_input, "character at identity");
    Character1D c;
    c.S_ = std::move(S);
    c.values_ = std::move(values);
    return c;
  }

  const Subgroup& subgroup() const { return S_; }
  const std::vector<QmodZ>& member_values() const { return values_; }

  QmodZ value_at_sub(std::uint32_t sub_idx) const { return values_[sub_idx]; }
  QmodZ value_at_parent(std::uint32_t parent_idx) const {
    return values_[S_.from_parent(parent_idx)];
  }

  Int denominator_lcm() const {
    Int l = 1;
    for (const auto& v : values_) l = lcm_int(l, v.den());
    return l;
  }

  bool same_values(const Character1D& o) const { return values_ == o.values_; }

 private:
  static std::optional<std::vector<QmodZ>> extend(const Subgroup& S,
                                                  const std::vector<QmodZ>& gen_values) {
    const auto& g = S.as_group();
    std::vector<QmodZ> vals(g.order());
    const auto& tree = g.bfs_tree();
    // bfs order: process elements in an order where parents come first
    std::vector<std::uint32_t> order(g.order());
    for (std::uint32_t i = 0; i < g.order(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      return depth(tree, a) < depth(tree, b);
    });
    for (auto x : order) {
      if (x == FiniteGroup::identity) continue;
      auto [p, gi] = tree[x];
      vals[x] = vals[p] + gen_values[gi];
    }
    for (std::uint32_t x = 0; x < g.order(); ++x)
      for (std::uint32_t gi = 0; gi < g.generators().size(); ++gi) {
        std::uint32_t y = g.mul(x, g.generators()[gi]);
        if (vals[y] != vals[x] + gen_values[gi]) return std::nullopt;
      }
    return vals;
  }

  static std::uint32_t depth(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& tree,
                             std::uint32_t x) {
    std::uint32_t d = 0;
    while (x != FiniteGroup::identity) {
      x = tree[x].first;
      ++d;
    }
    return d;
  }

  Subgroup S_;
  std::vector<QmodZ> values_;
};

class MonomialRep;

struct Provenance {
  enum Kind { Other, Induced, Tensor, Sum } kind = Other;
  // Induced
  std::shared_ptr<const Subgroup> from;
  std::shared_ptr<const Character1D> chi;
  // Tensor / Sum
  std::vector<std::shared_ptr<const MonomialRep>> parts;
};

class MonomialRep {
 public:
  MonomialRep() = default;

  MonomialRep(FiniteGroup G, std::vector<Monomial> gen_images, Provenance prov = {},
              std::uint32_t explicit_dim = 0)
      : G_(std::move(G)), gen_images_(std::move(gen_images)), prov_(std::move(prov)) {
    check(gen_images_.size() == G_.generators().size(), errc::bad_input,
          "one matrix per generator");
    dim_ = gen_images_.empty() ? (explicit_dim ? explicit_dim : 1) : gen_images_[0].dim();
    for (const auto& m : gen_images_)
      check(m.dim() == dim_, errc::bad_input, "generator image dimensions differ");
    verify_multiplicative();
  }

  static MonomialRep trivial(const FiniteGroup& G, std::uint32_t dim = 1) {
    std::vector<Monomial> images(G.generators().size(), Monomial::identity(dim));
    return MonomialRep(G, std::move(images), {}, dim);
  }

  const FiniteGroup& group() const { return G_; }
  std::uint32_t dim() const { return dim_; }
  const std::vector<Monomial>& generator_images() const { return gen_images_; }
  const Provenance& provenance() const { return prov_; }

  // matrix of one element, computed along its word
  Monomial matrix(std::uint32_t elem) const {
    std::vector<std::uint32_t> word;
    const auto& tree = G_.bfs_tree();
    while (elem != FiniteGroup::identity) {
      word.push_back(tree[elem].second);
      elem = tree[elem].first;
    }
    Monomial m = Monomial::identity(dim_);
    for (auto it = word.rbegin(); it != word.rend(); ++it) m = m.then(gen_images_[*it]);
    return m;
  }

  // matrices for every element in one pass over the word tree
  std::vector<Monomial> all_matrices() const {
    std::vector<Monomial> out(G_.order(), Monomial::identity(dim_));
    std::vector<bool> done(G_.order(), false);
    done[FiniteGroup::identity] = true;
    const auto& tree = G_.bfs_tree();
    std::vector<std::uint32_t> order = by_depth(tree);
    for (auto x : order) {
      if (done[x]) continue;
      auto [p, gi] = tree[x];
      out[x] = out[p].then(gen_images_[gi]);
      done[x] = true;
    }
    return out;
  }

 private:
  static std::vector<std::uint32_t> by_depth(
      const std::vector<std::pair<std::uint32_t, std::uint32_t>>& tree) {
    std::vector<std::uint32_t> order(tree.size());
    for (std::uint32_t i = 0; i < tree.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      std::uint32_t da = 0, db = 0, x = a, y = b;
      while (x != FiniteGroup::identity) { x = tree[x].first; ++da; }
      while (y != FiniteGroup::identity) { y = tree[y].first; ++db; }
      return da < db;
    });
    return order;
  }

  void verify_multiplicative() const {
    auto mats = all_matrices();
    for (std::uint32_t x = 0; x < G_.order(); ++x)
      for (std::uint32_t gi = 0; gi < G_.generators().size(); ++gi) {
        std::uint32_t y = G_.mul(x, G_.generators()[gi]);
        internal_check(mats[y] == mats[x].then(gen_images_[gi]),
                       "monomial matrices are not multiplicative");
      }
  }

  FiniteGroup G_;
  std::uint32_t dim_ = 1;
  std::vector<Monomial> gen_images_;
  Provenance prov_;
};

// Ind_S^G of a monomial representation of the subgroup. Basis vectors are
// (coset, inner basis) pairs, flattened coset-major.
inline MonomialRep induce_rep(const FiniteGroup& G, const Subgroup& S, const MonomialRep& theta,
                              Provenance prov = {}) {
  check(G.same_group(S.parent()), errc::group_mismatch, "induce subgroup parent");
  check(theta.group().same_group(S.as_group()), errc::group_mismatch,
        "theta must be a representation of the subgroup");
  auto T = cosets(G, S);
  std::uint32_t blocks = T.count(), dt = theta.dim();
  std::uint32_t dim = blocks * dt;

  std::vector<Monomial> images;
  for (auto g : G.generators()) {
    Monomial m;
    m.perm.resize(dim);
    m.twist.assign(dim, QmodZ());
    auto sigma = T.action_of(G, g);
    for (std::uint32_t k = 0; k < blocks; ++k) {
      std::uint32_t k2 = sigma[k];
      std::uint32_t h = G.mul(G.mul(T.reps[k], g), G.inv(T.reps[k2]));
      Monomial inner = theta.matrix(S.from_parent(h));
      for (std::uint32_t b = 0; b < dt; ++b) {
        std::uint32_t b2 = inner.perm[b];
        m.perm[k * dt + b] = k2 * dt + b2;
        m.twist[k2 * dt + b2] = inner.twist[b2];
      }
    }
    images.push_back(std::move(m));
  }
  return MonomialRep(G, std::move(images), std::move(prov), dim);
}

inline MonomialRep induce(const FiniteGroup& G, const Subgroup& S, const Character1D& chi) {
  check(chi.subgroup().same_members(S), errc::bad_input, "character lives on another subgroup");
  // chi as a 1-dim rep of the subgroup
  std::vector<Monomial> images;
  const auto& sg = S.as_group();
  for (auto gen : sg.generators()) {
    Monomial m = Monomial::identity(1);
    m.twist[0] = chi.value_at_sub(gen);
    images.push_back(std::move(m));
  }
  MonomialRep theta(sg, std::move(images));
  Provenance prov;
  prov.kind = Provenance::Induced;
  prov.from = std::make_shared<Subgroup>(S);
  prov.chi = std::make_shared<Character1D>(chi);
  return induce_rep(G, S, theta, std::move(prov));
}

inline MonomialRep tensor(const MonomialRep& a, const MonomialRep& b) {
  check(a.group().same_group(b.group()), errc::group_mismatch, "tensor of different groups");
  std::uint32_t da = a.dim(), db = b.dim();
  std::vector<Monomial> images;
  for (std::size_t gi = 0; gi < a.group().generators().size(); ++gi) {
    const Monomial& ma = a.generator_images()[gi];
    const Monomial& mb = b.generator_images()[gi];
    Monomial m;
    m.perm.resize(static_cast<std::size_t>(da) * db);
    m.twist.assign(static_cast<std::size_t>(da) * db, QmodZ());
    for (std::uint32_t i = 0; i < da; ++i)
      for (std::uint32_t j = 0; j < db; ++j) {
        std::uint32_t i2 = ma.perm[i], j2 = mb.perm[j];
        m.perm[i * db + j] = i2 * db + j2;
        m.twist[i2 * db + j2] = ma.twist[i2] + mb.twist[j2];
      }
    images.push_back(std::move(m));
  }
  Provenance prov;
  prov.kind = Provenance::Tensor;
  prov.parts = {std::make_shared<MonomialRep>(a), std::make_shared<MonomialRep>(b)};
  return MonomialRep(a.group(), std::move(images), std::move(prov), da * db);
}

inline MonomialRep direct_sum(const std::vector<MonomialRep>& parts) {
  check(!parts.empty(), errc::bad_input, "empty direct sum");
  const FiniteGroup& G = parts[0].group();
  std::uint32_t dim = 0;
  for (const auto& p : parts) {
    check(p.group().same_group(G), errc::group_mismatch, "direct sum of different groups");
    dim += p.dim();
  }
  std::vector<Monomial> images;
  for (std::size_t gi = 0; gi < G.generators().size(); ++gi) {
    Monomial m;
    m.perm.resize(dim);
    m.twist.assign(dim, QmodZ());
    std::uint32_t off = 0;
    for (const auto& p : parts) {
      const Monomial& mp = p.generator_images()[gi];
      for (std::uint32_t i = 0; i < p.dim(); ++i) {
        m.perm[off + i] = off + mp.perm[i];
        m.twist[off + mp.perm[i]] = mp.twist[mp.perm[i]];
      }
      off += p.dim();
    }
    images.push_back(std::move(m));
  }
  Provenance prov;
  prov.kind = Provenance::Sum;
  for (const auto& p : parts) prov.parts.push_back(std::make_shared<MonomialRep>(p));
  return MonomialRep(G, std::move(images), std::move(prov), dim);
}

// exact class function; values indexed by conjugacy class
struct ClassFunction {
  FiniteGroup G;
  std::vector<std::vector<std::uint32_t>> classes;
  std::vector<std::uint32_t> class_of;  // element -> class index
  std::vector<CycloNumber> values;

  const CycloNumber& value_at(std::uint32_t elem) const { return values[class_of[elem]]; }

  ClassFunction pointwise_mul(const ClassFunction& o) const {
    internal_check(G.same_group(o.G), "class function group mismatch");
    ClassFunction out = *this;
    for (std::size_t i = 0; i < values.size(); ++i) out.values[i] = values[i] * o.values[i];
    return out;
  }
  ClassFunction pointwise_add(const ClassFunction& o) const {
    internal_check(G.same_group(o.G), "class function group mismatch");
    ClassFunction out = *this;
    for (std::size_t i = 0; i < values.size(); ++i) out.values[i] = values[i] + o.values[i];
    return out;
  }

  bool operator==(const ClassFunction& o) const {
    if (values.size() != o.values.size()) return false;
    for (std::size_t i = 0; i < values.size(); ++i)
      if (values[i] != o.values[i]) return false;
    return true;
  }
};

namespace detail {
inline std::pair<std::vector<std::vector<std::uint32_t>>, std::vector<std::uint32_t>>
class_partition(const FiniteGroup& G) {
  auto classes = G.conjugacy_classes();
  std::vector<std::uint32_t> class_of(G.order());
  for (std::uint32_t c = 0; c < classes.size(); ++c)
    for (auto x : classes[c]) class_of[x] = c;
  return {classes, class_of};
}

inline std::uint64_t to_u64(const Int& v) { return v.convert_to<std::uint64_t>(); }
}  // namespace detail

// character of a monomial representation: sum of twists over fixed points
inline ClassFunction character(const MonomialRep& R) {
  auto mats = R.all_matrices();
  Int level = 1;
  for (const auto& m : mats)
    for (const auto& t : m.twist) level = lcm_int(level, t.den());
  std::uint64_t N = detail::to_u64(level);

  auto [classes, class_of] = detail::class_partition(R.group());
  auto value_of = [&](std::uint32_t g) {
    CycloNumber v(N);
    const Monomial& m = mats[g];
    for (std::uint32_t k = 0; k < m.dim(); ++k)
      if (m.perm[k] == k) v = v + CycloNumber::root_of_unity(m.twist[k], N);
    return v;
  };

  ClassFunction out;
  out.G = R.group();
  out.classes = classes;
  out.class_of = class_of;
  for (const auto& cls : out.classes) {
    CycloNumber v = value_of(cls[0]);
    for (std::size_t i = 1; i < cls.size(); ++i)
      internal_check(value_of(cls[i]) == v, "character is not constant on a conjugacy class");
    out.values.push_back(std::move(v));
  }
  return out;
}

// character of Ind_S^G chi straight from the coset table
inline ClassFunction induced_character(const FiniteGroup& G, const Subgroup& S,
                                       const Character1D& chi) {
  auto T = cosets(G, S);
  std::uint64_t N = detail::to_u64(chi.denominator_lcm());
  auto [classes, class_of] = detail::class_partition(G);
  ClassFunction out;
  out.G = G;
  out.classes = classes;
  out.class_of = class_of;
  for (const auto& cls : out.classes) {
    std::uint32_t g = cls[0];
    CycloNumber v(N);
    for (std::uint32_t k = 0; k < T.count(); ++k) {
      std::uint32_t u = T.reps[k];
      std::uint32_t c = G.mul(G.mul(u, g), G.inv(u));
      if (S.contains(c)) v = v + CycloNumber::root_of_unity(chi.value_at_parent(c), N);
    }
    out.values.push_back(std::move(v));
  }
  return out;
}

// (1/|G|) sum_g chi(g) conj(psi(g)), certified to be a rational integer
inline Int inner_product(const ClassFunction& chi, const ClassFunction& psi) {
  check(chi.G.same_group(psi.G), errc::group_mismatch, "inner product groups differ");
  CycloNumber acc;
  for (std::size_t c = 0; c < chi.classes.size(); ++c) {
    CycloNumber term = chi.values[c] * psi.values[c].conj();
    acc = acc + term * Int(chi.classes[c].size());
  }
  Int total = acc.as_integer();  // throws NonIntegral when not rational
  Int n = chi.G.order();
  check(total % n == 0, errc::non_integral, "inner product is not an integer");
  return total / n;
}

// eigenvalue exponents of R(g): each cycle of length l with total twist t
// contributes {(t + m)/l : m = 0..l-1}
inline std::vector<QmodZ> local_exponents(const MonomialRep& R, std::uint32_t g) {
  Monomial m = R.matrix(g);
  std::vector<bool> seen(m.dim(), false);
  std::vector<QmodZ> out;
  for (std::uint32_t start = 0; start < m.dim(); ++start) {
    if (seen[start]) continue;
    QmodZ total;
    std::uint32_t len = 0, k = start;
    do {
      seen[k] = true;
      k = m.perm[k];
      total = total + m.twist[k];
      ++len;
    } while (k != start);
    for (std::uint32_t i = 0; i < len; ++i)
      out.push_back(QmodZ(total.num() + Int(i) * total.den(), total.den() * len));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// all homomorphisms S -> Q/Z, ordered by their member value tables
inline std::vector<Character1D> linear_characters(const Subgroup& S) {
  const auto& g = S.as_group();
  const auto& gens = g.generators();
  std::vector<std::uint32_t> orders;
  for (auto x : gens) orders.push_back(g.element_order(x));

  std::vector<Character1D> out;
  std::vector<std::uint32_t> k(gens.size(), 0);
  for (;;) {
    std::vector<QmodZ> vals;
    for (std::size_t i = 0; i < gens.size(); ++i) vals.emplace_back(Int(k[i]), Int(orders[i]));
    try {
      Character1D c(S, vals);
      bool dup = false;
      for (const auto& prev : out)
        if (prev.same_values(c)) { dup = true; break; }
      if (!dup) out.push_back(std::move(c));
    } catch (const Error&) {
      // assignment does not respect the relations; skip
    }
    std::size_t i = 0;
    for (; i < k.size(); ++i) {
      if (++k[i] < orders[i]) break;
      k[i] = 0;
    }
    if (i == k.size()) break;
  }
  std::sort(out.begin(), out.end(), [](const Character1D& a, const Character1D& b) {
    const auto& va = a.member_values();
    const auto& vb = b.member_values();
    return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
  });
  return out;
}

struct MackeySummand {
  Subgroup H;        // H1 intersected with g H2 g^-1
  Character1D chi;   // chi1 * (chi2 conjugated by g)
  std::uint32_t rep; // double coset representative
};

// Ind chi1 (x) Ind chi2 = (+)_{g in H1\G/H2} Ind_{H_g}(chi1 * chi2^g);
// the character identity is verified on construction
inline std::vector<MackeySummand> mackey_decompose(const FiniteGroup& G, const Subgroup& H1,
                                                   const Character1D& chi1, const Subgroup& H2,
                                                   const Character1D& chi2) {
  check(G.same_group(H1.parent()) && G.same_group(H2.parent()), errc::group_mismatch,
        "mackey subgroups");
  check(chi1.subgroup().same_members(H1) && chi2.subgroup().same_members(H2), errc::bad_input,
        "characters must live on the given subgroups");

  std::vector<MackeySummand> out;
  for (auto g : double_cosets(G, H1, H2)) {
    std::vector<std::uint32_t> members;
    for (auto m : H1.members())
      if (H2.contains(G.conjugate(m, g))) members.push_back(m);
    Subgroup Hg(G, members);
    internal_check(Hg.members() == members, "intersection is not a subgroup");
    std::vector<QmodZ> vals(Hg.order());
    for (std::uint32_t i = 0; i < Hg.order(); ++i) {
      std::uint32_t m = Hg.to_parent(i);
      vals[i] = chi1.value_at_parent(m) + chi2.value_at_parent(G.conjugate(m, g));
    }
    out.push_back({Hg, Character1D::from_member_values(Hg, std::move(vals)), g});
  }

  // dimension bookkeeping
  std::uint64_t lhs = static_cast<std::uint64_t>(H1.index_in_parent()) * H2.index_in_parent();
  std::uint64_t rhs = 0;
  for (const auto& s : out) rhs += s.H.index_in_parent();
  internal_check(lhs == rhs, "Mackey dimension count");

  // character identity
  ClassFunction left = induced_character(G, H1, chi1).pointwise_mul(induced_character(G, H2, chi2));
  ClassFunction right = induced_character(G, out[0].H, out[0].chi);
  for (std::size_t i = 1; i < out.size(); ++i)
    right = right.pointwise_add(induced_character(G, out[i].H, out[i].chi));
  internal_check(left == right, "Mackey character identity");
  return out;
}

// multiplicities of R against a complete list of irreducibles
inline std::vector<Int> decompose(const MonomialRep& R, const std::vector<ClassFunction>& irred) {
  ClassFunction chi = character(R);
  std::vector<Int> mult;
  Int total = 0;
  for (const auto& ir : irred) {
    Int m = inner_product(chi, ir);
    check(m >= 0, errc::negative_multiplicity, "negative multiplicity");
    Int d = ir.values[0].as_integer();
    total += m * d;
    mult.push_back(m);
  }
  check(total == R.dim(), errc::incomplete_input, "irreducible list is not complete");
  return mult;
}

// Irreducible monomial representations found by inducing linear characters
// from every subgroup. Complete for every group in which each irreducible is
// monomial; completeness is certified by sum of squared dimensions.
inline std::vector<MonomialRep> monomial_irreducible_reps(const FiniteGroup& G) {
  std::vector<MonomialRep> reps;
  std::vector<ClassFunction> chars;
  for (const auto& H : all_subgroups(G)) {
    for (const auto& chi : linear_characters(H)) {
      auto cf = induced_character(G, H, chi);
      CycloNumber norm;
      for (std::size_t c = 0; c < cf.classes.size(); ++c)
        norm = norm + cf.values[c] * cf.values[c].conj() * Int(cf.classes[c].size());
      if (norm.as_integer() != Int(G.order())) continue;  // not irreducible
      bool dup = false;
      for (const auto& prev : chars)
        if (prev == cf) { dup = true; break; }
      if (dup) continue;
      reps.push_back(induce(G, H, chi));
      chars.push_back(std::move(cf));
    }
  }
  std::uint64_t sum_sq = 0;
  for (const auto& r : reps) sum_sq += static_cast<std::uint64_t>(r.dim()) * r.dim();
  check(sum_sq == G.order(), errc::incomplete_input,
        "group has non-monomial irreducibles; list incomplete");
  std::sort(reps.begin(), reps.end(), [](const MonomialRep& a, const MonomialRep& b) {
    return a.dim() < b.dim();
  });
  return reps;
}

// Wigner-Mackey little groups for a split extension A x| H: one induced
// representation per (orbit of H on the characters of A, irreducible of the
// stabilizer). Completeness and pairwise orthogonality are certified.
inline std::vector<MonomialRep> little_groups_irreducibles(
    const SemidirectProduct& sd,
    const std::function<std::vector<MonomialRep>(const Subgroup&)>& stabilizer_irreducibles) {
  const auto& be = sd.backend();
  auto chars = dual_characters(sd.A);

  // H acts on characters by chi -> chi o act(h)^-1
  auto act_on_char = [&](std::uint32_t h, const AbelianCharacter& chi) {
    std::vector<QmodZ> vals(sd.A.gen_count());
    const IntMat& m = be.act_inv[h];
    for (std::size_t i = 0; i < sd.A.gen_count(); ++i) {
      std::vector<Int> e(sd.A.gen_count(), 0);
      e[i] = 1;
      vals[i] = chi.eval(sd.A.element_from_canonical(mat_apply(m, e)));
    }
    return AbelianCharacter(sd.A, std::move(vals));
  };
  auto char_key = [](const AbelianCharacter& c) {
    std::vector<std::pair<Int, Int>> key;
    for (const auto& v : c.gen_values()) key.emplace_back(v.num(), v.den());
    return key;
  };

  std::set<std::vector<std::pair<Int, Int>>> used;
  std::vector<MonomialRep> out;
  for (const auto& chi : chars) {
    if (used.count(char_key(chi))) continue;
    // orbit and stabilizer
    std::vector<std::uint32_t> stab;
    for (std::uint32_t h = 0; h < sd.H.order(); ++h) {
      auto moved = act_on_char(h, chi);
      used.insert(char_key(moved));
      if (char_key(moved) == char_key(chi)) stab.push_back(h);
    }
    Subgroup H_chi(sd.H, stab);
    internal_check(H_chi.order() == stab.size(), "stabilizer is not a subgroup");

    // the little group A x| H_chi inside G
    std::vector<std::uint32_t> little_gens;
    for (std::uint32_t a = 1; a < be.a_count; ++a) little_gens.push_back(sd.index_of(a, 0));
    for (auto h : stab) little_gens.push_back(sd.index_of(0, h));
    Subgroup G_chi(sd.group, little_gens);
    internal_check(G_chi.order() == be.a_count * H_chi.order(), "little group order");

    for (const auto& rho : stabilizer_irreducibles(H_chi)) {
      check(rho.group().same_group(H_chi.as_group()), errc::incomplete_input,
            "stabilizer representation lives on the wrong group");
      // theta = (chi extended to the little group) (x) (rho inflated)
      std::vector<Monomial> images;
      const auto& lg = G_chi.as_group();
      for (auto gen : lg.generators()) {
        std::uint32_t parent = G_chi.to_parent(gen);
        std::uint32_t a = sd.a_part(parent), h = sd.h_part(parent);
        Monomial m = rho.matrix(H_chi.from_parent(h));
        QmodZ tw = chi.eval(sd.a_element(a));
        for (auto& t : m.twist) t = t + tw;
        images.push_back(std::move(m));
      }
      Provenance prov;
      if (rho.dim() == 1) {
        // a 1-dimensional theta is a character of the little group
        std::vector<QmodZ> gen_vals;
        for (const auto& m : images) gen_vals.push_back(m.twist[0]);
        prov.kind = Provenance::Induced;
        prov.from = std::make_shared<Subgroup>(G_chi);
        prov.chi = std::make_shared<Character1D>(G_chi, gen_vals);
      }
      MonomialRep theta(lg, std::move(images));
      out.push_back(induce_rep(sd.group, G_chi, theta, std::move(prov)));
    }
  }

  std::uint64_t sum_sq = 0;
  for (const auto& r : out) sum_sq += static_cast<std::uint64_t>(r.dim()) * r.dim();
  check(sum_sq == sd.group.order(), errc::incomplete_input,
        "little groups output incomplete: sum of squared dimensions is off");
  std::vector<ClassFunction> cfs;
  for (const auto& r : out) cfs.push_back(character(r));
  for (std::size_t i = 0; i < cfs.size(); ++i)
    for (std::size_t j = i + 1; j < cfs.size(); ++j)
      internal_check(inner_product(cfs[i], cfs[j]) == 0, "little groups output not orthogonal");
  return out;
}

}  // namespace orbipar
