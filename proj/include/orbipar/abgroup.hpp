#pragma once

// Finitely presented abelian groups in Smith-normal-form coordinates.
// A group is Z^n / (row lattice of a relation matrix); elements carry
// canonical coordinates with every torsion coordinate reduced into
// [0, invariant factor), so equality is plain coordinate comparison.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbipar/error.hpp"
#include "orbipar/rational.hpp"

namespace orbipar {

using IntMat = std::vector<std::vector<Int>>;

inline IntMat mat_identity(std::size_t n) {
  IntMat m(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline std::size_t mat_rows(const IntMat& m) { return m.size(); }
inline std::size_t mat_cols(const IntMat& m) { return m.empty() ? 0 : m[0].size(); }

inline IntMat mat_mul(const IntMat& a, const IntMat& b) {
  std::size_t r = mat_rows(a), k = mat_cols(a), c = mat_cols(b);
  check(k == mat_rows(b), errc::bad_input, "matrix product shape");
  IntMat out(r, std::vector<Int>(c, 0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < c; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

inline std::vector<Int> mat_apply(const IntMat& a, const std::vector<Int>& x) {
  std::size_t r = mat_rows(a), k = mat_cols(a);
  check(k == x.size(), errc::bad_input, "matrix-vector shape");
  std::vector<Int> out(r, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t t = 0; t < k; ++t)
      if (a[i][t] != 0) out[i] += a[i][t] * x[t];
  return out;
}

inline IntMat mat_transpose(const IntMat& m) {
  IntMat out(mat_cols(m), std::vector<Int>(mat_rows(m), 0));
  for (std::size_t i = 0; i < mat_rows(m); ++i)
    for (std::size_t j = 0; j < mat_cols(m); ++j) out[j][i] = m[i][j];
  return out;
}

struct SmithNormalForm {
  IntMat U, D, V;        // U * input * V = D, U and V unimodular
  IntMat Uinv, Vinv;
  std::size_t rank = 0;
  std::vector<Int> diag;  // positive diagonal entries d_1 | d_2 | ...
};

// Pivot choice: smallest absolute value among nonzero entries of the working
// submatrix, scanned row-major. Deterministic, so canonical coordinates are
// stable across platforms.
inline SmithNormalForm smith_normal_form(const IntMat& input) {
  std::size_t m = mat_rows(input), n = mat_cols(input);
  SmithNormalForm s;
  s.D = input;
  s.U = mat_identity(m);
  s.Uinv = mat_identity(m);
  s.V = mat_identity(n);
  s.Vinv = mat_identity(n);
  IntMat& D = s.D;

  auto row_sub = [&](std::size_t i, std::size_t k, const Int& q) {
    // row_i -= q * row_k
    for (std::size_t j = 0; j < n; ++j) D[i][j] -= q * D[k][j];
    for (std::size_t j = 0; j < m; ++j) s.U[i][j] -= q * s.U[k][j];
    for (std::size_t j = 0; j < m; ++j) s.Uinv[j][k] += q * s.Uinv[j][i];
  };
  auto col_sub = [&](std::size_t j, std::size_t k, const Int& q) {
    // col_j -= q * col_k
    for (std::size_t i = 0; i < m; ++i) D[i][j] -= q * D[i][k];
    for (std::size_t i = 0; i < n; ++i) s.V[i][j] -= q * s.V[i][k];
    for (std::size_t i = 0; i < n; ++i) s.Vinv[k][i] += q * s.Vinv[j][i];
  };
  auto row_swap = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap(D[a], D[b]);
    std::swap(s.U[a], s.U[b]);
    for (std::size_t i = 0; i < m; ++i) std::swap(s.Uinv[i][a], s.Uinv[i][b]);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m; ++i) std::swap(D[i][a], D[i][b]);
    for (std::size_t i = 0; i < n; ++i) std::swap(s.V[i][a], s.V[i][b]);
    std::swap(s.Vinv[a], s.Vinv[b]);
  };

  std::size_t bound = std::min(m, n);
  for (std::size_t k = 0; k < bound; ++k) {
    for (;;) {
      // locate pivot
      bool found = false;
      std::size_t pi = k, pj = k;
      Int best = 0;
      for (std::size_t i = k; i < m; ++i)
        for (std::size_t j = k; j < n; ++j) {
          if (D[i][j] == 0) continue;
          Int a = abs(D[i][j]);
          if (!found || a < best) {
            found = true;
            best = a;
            pi = i;
            pj = j;
          }
        }
      if (!found) { k = bound; break; }  // remaining submatrix is zero
      row_swap(k, pi);
      col_swap(k, pj);

      bool clean = true;
      for (std::size_t i = k + 1; i < m; ++i) {
        if (D[i][k] == 0) continue;
        Int q = D[i][k] / D[k][k];
        row_sub(i, k, q);
        if (D[i][k] != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (D[k][j] == 0) continue;
        Int q = D[k][j] / D[k][k];
        col_sub(j, k, q);
        if (D[k][j] != 0) clean = false;
      }
      if (!clean) continue;

      // enforce d_k | every remaining entry
      bool divisible = true;
      for (std::size_t i = k + 1; i < m && divisible; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          if (D[i][j] % D[k][k] != 0) {
            row_sub(k, i, Int(-1));  // row_k += row_i
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (k == bound) break;
  }

  for (std::size_t k = 0; k < bound; ++k) {
    if (D[k][k] < 0) {
      for (std::size_t j = 0; j < n; ++j) D[k][j] = -D[k][j];
      for (std::size_t j = 0; j < m; ++j) s.U[k][j] = -s.U[k][j];
      for (std::size_t j = 0; j < m; ++j) s.Uinv[j][k] = -s.Uinv[j][k];
    }
    if (D[k][k] != 0) {
      s.diag.push_back(D[k][k]);
      ++s.rank;
    }
  }
  return s;
}

class FpAbelianGroup;
FpAbelianGroup fp_group(std::size_t generator_count, const IntMat& relations);

namespace detail {
struct FpAbelianGroupData {
  std::size_t gen_count = 0;
  IntMat relations;
  SmithNormalForm snf;
  IntMat canonical_map;   // V^T: generator coords -> canonical coords
  IntMat canonical_lift;  // (V^T)^-1: canonical coords -> generator coords
  std::vector<Int> diag;  // length rank
  std::size_t rank = 0;
  std::size_t free_rank = 0;
  std::vector<Int> invariant_factors;  // diag entries > 1
  Int torsion_order = 1;
};
}  // namespace detail

class GroupElement;

class FpAbelianGroup {
 public:
  FpAbelianGroup() = default;

  std::size_t gen_count() const { return d_->gen_count; }
  const IntMat& relations() const { return d_->relations; }
  const SmithNormalForm& snf() const { return d_->snf; }
  const std::vector<Int>& invariant_factors() const { return d_->invariant_factors; }
  std::size_t free_rank() const { return d_->free_rank; }
  std::size_t torsion_rank() const { return d_->rank; }
  const std::vector<Int>& diag() const { return d_->diag; }
  bool is_finite() const { return d_->free_rank == 0; }
  const Int& torsion_order() const { return d_->torsion_order; }
  Int order() const {
    check(is_finite(), errc::infinite_group, "order of an infinite group");
    return d_->torsion_order;
  }
  bool is_trivial() const { return is_finite() && d_->torsion_order == 1; }

  bool same_group(const FpAbelianGroup& o) const { return d_ == o.d_; }

  std::vector<Int> reduce(std::vector<Int> y) const {
    check(y.size() == gen_count(), errc::bad_input, "coordinate length");
    for (std::size_t i = 0; i < d_->rank; ++i) y[i] = mod_floor(y[i], d_->diag[i]);
    return y;
  }

  GroupElement element(const std::vector<Int>& generator_coords) const;
  GroupElement element_from_canonical(std::vector<Int> canonical) const;
  GroupElement zero() const;
  GroupElement canonical_generator(std::size_t i) const;

  std::vector<Int> generator_coords(const GroupElement& g) const;

  // All elements of a finite group, odometer order over canonical coordinates.
  std::vector<GroupElement> enumerate() const;

  std::string structure_string() const {
    std::string out;
    for (std::size_t i = 0; i < free_rank(); ++i) out += out.empty() ? "Z" : " + Z";
    for (const auto& f : invariant_factors())
      out += (out.empty() ? "Z/" : " + Z/") + f.str();
    if (out.empty()) out = "0";
    return out;
  }

 private:
  friend FpAbelianGroup fp_group(std::size_t, const IntMat&);
  explicit FpAbelianGroup(std::shared_ptr<const detail::FpAbelianGroupData> d) : d_(std::move(d)) {}
  std::shared_ptr<const detail::FpAbelianGroupData> d_;
};

class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(FpAbelianGroup parent, std::vector<Int> canonical)
      : parent_(std::move(parent)), coords_(std::move(canonical)) {}

  const FpAbelianGroup& parent() const { return parent_; }
  const std::vector<Int>& coords() const { return coords_; }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (c != 0) return false;
    return true;
  }

  GroupElement operator+(const GroupElement& o) const {
    check(parent_.same_group(o.parent_), errc::group_mismatch, "element addition");
    std::vector<Int> y = coords_;
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += o.coords_[i];
    return GroupElement(parent_, parent_.reduce(std::move(y)));
  }
  GroupElement operator-(const GroupElement& o) const { return *this + (-o); }
  GroupElement operator-() const {
    std::vector<Int> y = coords_;
    for (auto& c : y) c = -c;
    return GroupElement(parent_, parent_.reduce(std::move(y)));
  }
  GroupElement operator*(const Int& k) const {
    std::vector<Int> y = coords_;
    for (auto& c : y) c *= k;
    return GroupElement(parent_, parent_.reduce(std::move(y)));
  }

  bool operator==(const GroupElement& o) const {
    return parent_.same_group(o.parent_) && coords_ == o.coords_;
  }
  bool operator!=(const GroupElement& o) const { return !(*this == o); }
  bool operator<(const GroupElement& o) const { return coords_ < o.coords_; }

 private:
  FpAbelianGroup parent_;
  std::vector<Int> coords_;
};

inline FpAbelianGroup fp_group(std::size_t generator_count, const IntMat& relations) {
  auto d = std::make_shared<detail::FpAbelianGroupData>();
  d->gen_count = generator_count;
  d->relations = relations;
  for (const auto& row : relations)
    check(row.size() == generator_count, errc::bad_input, "relation row length");
  if (relations.empty()) {
    d->snf.U = mat_identity(0);
    d->snf.Uinv = mat_identity(0);
    d->snf.V = mat_identity(generator_count);
    d->snf.Vinv = mat_identity(generator_count);
    d->snf.D = IntMat{};
  } else {
    d->snf = smith_normal_form(relations);
  }
  // group = coker(R^T); transposing U R V = D shows x -> V^T x maps the
  // quotient onto Z^n / diag lattice
  d->canonical_map = mat_transpose(d->snf.V);
  d->canonical_lift = mat_transpose(d->snf.Vinv);
  d->diag = d->snf.diag;
  d->rank = d->snf.rank;
  d->free_rank = generator_count - d->rank;
  for (const auto& f : d->diag) {
    d->torsion_order *= f;
    if (f > 1) d->invariant_factors.push_back(f);
  }
  return FpAbelianGroup(std::move(d));
}

inline GroupElement FpAbelianGroup::element(const std::vector<Int>& generator_coords) const {
  return element_from_canonical(mat_apply(d_->canonical_map, generator_coords));
}

inline GroupElement FpAbelianGroup::element_from_canonical(std::vector<Int> canonical) const {
  return GroupElement(*this, reduce(std::move(canonical)));
}

inline GroupElement FpAbelianGroup::zero() const {
  return GroupElement(*this, std::vector<Int>(gen_count(), 0));
}

inline GroupElement FpAbelianGroup::canonical_generator(std::size_t i) const {
  std::vector<Int> y(gen_count(), 0);
  y[i] = 1;
  return element_from_canonical(std::move(y));
}

inline std::vector<Int> FpAbelianGroup::generator_coords(const GroupElement& g) const {
  check(same_group(g.parent()), errc::group_mismatch, "generator_coords");
  return mat_apply(d_->canonical_lift, g.coords());
}

inline std::vector<GroupElement> FpAbelianGroup::enumerate() const {
  check(is_finite(), errc::infinite_group, "enumerate infinite group");
  check(torsion_order() <= 200000, errc::order_bound, "enumerate: group too large");
  std::vector<GroupElement> out;
  std::vector<Int> y(gen_count(), 0);
  for (;;) {
    out.push_back(GroupElement(*this, y));
    std::size_t i = 0;
    for (; i < d_->rank; ++i) {
      y[i] += 1;
      if (y[i] < d_->diag[i]) break;
      y[i] = 0;
    }
    if (i == d_->rank) break;
  }
  return out;
}

// least n >= 1 with n*g = 0, or nullopt when g has infinite order
inline std::optional<Int> element_order(const GroupElement& g) {
  const auto& G = g.parent();
  for (std::size_t i = G.torsion_rank(); i < G.gen_count(); ++i)
    if (g.coords()[i] != 0) return std::nullopt;
  Int n = 1;
  for (std::size_t i = 0; i < G.torsion_rank(); ++i) {
    const Int& d = G.diag()[i];
    const Int& c = g.coords()[i];
    if (c != 0) n = lcm_int(n, d / gcd_int(d, c));
  }
  return n;
}

// A subgroup presented on its own generators, each expressed in the parent.
struct EmbeddedSubgroup {
  FpAbelianGroup group;
  std::vector<GroupElement> embed;  // image of each canonical generator

  GroupElement embed_element(const GroupElement& g) const {
    check(group.same_group(g.parent()), errc::group_mismatch, "embed_element");
    check(!embed.empty() || g.parent().gen_count() == 0, errc::bad_input, "embedding");
    GroupElement out = embed.empty() ? GroupElement() : embed[0].parent().zero();
    for (std::size_t i = 0; i < embed.size(); ++i) out = out + embed[i] * g.coords()[i];
    return out;
  }
};

namespace detail {
// Present the subgroup generated by raw_gens with the given relation rows,
// returning canonical generators embedded back into the parent.
inline EmbeddedSubgroup make_embedded(const FpAbelianGroup& parent,
                                      const std::vector<GroupElement>& raw_gens,
                                      const IntMat& relations) {
  EmbeddedSubgroup out;
  out.group = fp_group(raw_gens.size(), relations);
  // canonical generator i of the subgroup corresponds to generator coords
  // (V^T)^-1 e_i over the raw generators
  const auto lift = mat_transpose(out.group.snf().Vinv);
  for (std::size_t i = 0; i < raw_gens.size(); ++i) {
    std::vector<Int> e(raw_gens.size(), 0);
    e[i] = 1;
    auto x = mat_apply(lift, e);
    GroupElement img = parent.zero();
    for (std::size_t j = 0; j < raw_gens.size(); ++j) img = img + raw_gens[j] * x[j];
    out.embed.push_back(img);
  }
  return out;
}
}  // namespace detail

// subgroup {g : n*g = 0}; order is prod gcd(n, d_i) over invariant factors
inline EmbeddedSubgroup n_torsion(const FpAbelianGroup& G, const Int& n) {
  check(n >= 1, errc::bad_input, "n_torsion needs n >= 1");
  std::vector<GroupElement> raw;
  std::vector<Int> orders;
  for (std::size_t i = 0; i < G.torsion_rank(); ++i) {
    Int g = gcd_int(n, G.diag()[i]);
    if (g > 1) {
      std::vector<Int> y(G.gen_count(), 0);
      y[i] = G.diag()[i] / g;
      raw.push_back(G.element_from_canonical(std::move(y)));
      orders.push_back(g);
    }
  }
  IntMat rel(orders.size(), std::vector<Int>(orders.size(), 0));
  for (std::size_t i = 0; i < orders.size(); ++i) rel[i][i] = orders[i];
  return detail::make_embedded(G, raw, rel);
}

// homomorphism in canonical coordinates: x -> matrix * x
struct Homomorphism {
  FpAbelianGroup from;
  FpAbelianGroup to;
  IntMat matrix;  // to.gen_count x from.gen_count

  GroupElement apply(const GroupElement& g) const {
    check(from.same_group(g.parent()), errc::group_mismatch, "hom apply");
    return to.element_from_canonical(mat_apply(matrix, g.coords()));
  }
};

namespace detail {
// columns spanning {x in Z^cols : A x = 0}; cols is explicit so zero-row
// systems keep their shape
inline std::vector<std::vector<Int>> integer_kernel(const IntMat& A, std::size_t cols) {
  std::vector<std::vector<Int>> basis;
  if (A.empty()) {
    for (std::size_t j = 0; j < cols; ++j) {
      std::vector<Int> col(cols, 0);
      col[j] = 1;
      basis.push_back(std::move(col));
    }
    return basis;
  }
  check(mat_cols(A) == cols, errc::bad_input, "integer_kernel shape");
  auto s = smith_normal_form(A);
  for (std::size_t j = s.rank; j < cols; ++j) {
    std::vector<Int> col(cols);
    for (std::size_t i = 0; i < cols; ++i) col[i] = s.V[i][j];
    basis.push_back(std::move(col));
  }
  return basis;
}

// columns generating the lattice of canonical coordinate vectors that are
// zero in the group (torsion multiples; free coordinates admit none)
inline IntMat zero_lattice(const FpAbelianGroup& G) {
  IntMat cols(G.gen_count(), std::vector<Int>(G.torsion_rank(), 0));
  for (std::size_t i = 0; i < G.torsion_rank(); ++i) cols[i][i] = G.diag()[i];
  return cols;
}
}  // namespace detail

inline EmbeddedSubgroup kernel(const Homomorphism& f) {
  const auto& G = f.from;
  const auto& H = f.to;
  check(mat_rows(f.matrix) == H.gen_count() && (mat_cols(f.matrix) == G.gen_count()),
        errc::bad_input, "hom matrix shape");
  // the matrix must kill every relation of G
  for (std::size_t i = 0; i < G.torsion_rank(); ++i) {
    std::vector<Int> y(G.gen_count(), 0);
    y[i] = G.diag()[i];
    check(H.element_from_canonical(mat_apply(f.matrix, y)).is_zero(), errc::relation_violation,
          "homomorphism does not kill relation " + std::to_string(i));
  }

  std::size_t nG = G.gen_count(), nH = H.gen_count();
  IntMat latH = detail::zero_lattice(H);
  std::size_t kH = H.torsion_rank();
  // solve M x + latH z = 0
  IntMat A(nH, std::vector<Int>(nG + kH, 0));
  for (std::size_t i = 0; i < nH; ++i) {
    for (std::size_t j = 0; j < nG; ++j) A[i][j] = f.matrix[i][j];
    for (std::size_t j = 0; j < kH; ++j) A[i][nG + j] = latH[i][j];
  }
  auto sol = detail::integer_kernel(A, nG + kH);
  std::vector<std::vector<Int>> gens_x;
  for (const auto& v : sol) gens_x.emplace_back(v.begin(), v.begin() + nG);

  // relations among the x generators: combinations landing in G's zero lattice
  IntMat latG = detail::zero_lattice(G);
  std::size_t kG = G.torsion_rank();
  IntMat B(nG, std::vector<Int>(gens_x.size() + kG, 0));
  for (std::size_t i = 0; i < nG; ++i) {
    for (std::size_t j = 0; j < gens_x.size(); ++j) B[i][j] = gens_x[j][i];
    for (std::size_t j = 0; j < kG; ++j) B[i][gens_x.size() + j] = latG[i][j];
  }
  auto rel_sol = detail::integer_kernel(B, gens_x.size() + kG);
  IntMat relations;
  for (const auto& v : rel_sol)
    relations.emplace_back(v.begin(), v.begin() + gens_x.size());

  std::vector<GroupElement> raw;
  for (const auto& x : gens_x) raw.push_back(G.element_from_canonical(x));
  return detail::make_embedded(G, raw, relations);
}

// character of a finite abelian group, valued in Q/Z
class AbelianCharacter {
 public:
  AbelianCharacter() = default;
  AbelianCharacter(FpAbelianGroup A, std::vector<QmodZ> gen_values)
      : A_(std::move(A)), values_(std::move(gen_values)) {
    check(values_.size() == A_.gen_count(), errc::bad_input, "character value count");
  }

  const FpAbelianGroup& group() const { return A_; }
  const std::vector<QmodZ>& gen_values() const { return values_; }

  QmodZ eval(const GroupElement& g) const {
    check(A_.same_group(g.parent()), errc::group_mismatch, "character eval");
    QmodZ v;
    for (std::size_t i = 0; i < values_.size(); ++i) v = v + values_[i] * g.coords()[i];
    return v;
  }

  bool operator==(const AbelianCharacter& o) const { return values_ == o.values_; }

 private:
  FpAbelianGroup A_;
  std::vector<QmodZ> values_;
};

// all |A| characters of a finite group, odometer order over the torsion
// coordinates; they are pairwise distinct and separate points
inline std::vector<AbelianCharacter> dual_characters(const FpAbelianGroup& A) {
  check(A.is_finite(), errc::infinite_group, "dual_characters of infinite group");
  check(A.torsion_order() <= 200000, errc::order_bound, "dual_characters: group too large");
  std::vector<AbelianCharacter> out;
  std::vector<Int> k(A.torsion_rank(), 0);
  for (;;) {
    std::vector<QmodZ> vals(A.gen_count());
    for (std::size_t i = 0; i < A.torsion_rank(); ++i) vals[i] = QmodZ(k[i], A.diag()[i]);
    out.emplace_back(A, std::move(vals));
    std::size_t i = 0;
    for (; i < k.size(); ++i) {
      k[i] += 1;
      if (k[i] < A.diag()[i]) break;
      k[i] = 0;
    }
    if (i == k.size()) break;
  }
  return out;
}

}  // namespace orbipar
