#pragma once

// Orbifold curves: a genus-0 base with labeled marked points and root
// orders. The Picard group of the associated root stack is presented on the
// canonical roots N_i and the hyperplane class f with relations r_i N_i = f;
// every class has a unique normal form d*f + sum a_i N_i with 0 <= a_i < r_i.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "orbipar/abgroup.hpp"
#include "orbipar/error.hpp"
#include "orbipar/rational.hpp"

namespace orbipar {

struct OrbifoldPoint {
  std::string label;
  std::uint32_t order = 1;

  bool operator==(const OrbifoldPoint& o) const { return label == o.label && order == o.order; }
};

class OrbifoldCurve {
 public:
  OrbifoldCurve() = default;
  OrbifoldCurve(int genus, std::vector<OrbifoldPoint> points)
      : genus_(genus), points_(std::move(points)) {
    check(genus_ >= 0, errc::bad_input, "negative genus");
    std::set<std::string> labels;
    for (const auto& p : points_) {
      check(p.order >= 1, errc::bad_input, "root order must be >= 1");
      check(labels.insert(p.label).second, errc::bad_input, "duplicate point label " + p.label);
    }
  }

  int genus() const { return genus_; }
  std::size_t point_count() const { return points_.size(); }
  const std::vector<OrbifoldPoint>& points() const { return points_; }
  const OrbifoldPoint& point(std::size_t i) const { return points_[i]; }

  std::size_t index_of(const std::string& label) const {
    for (std::size_t i = 0; i < points_.size(); ++i)
      if (points_[i].label == label) return i;
    fail(errc::bad_input, "no marked point labeled " + label);
  }
  bool has_label(const std::string& label) const {
    for (const auto& p : points_)
      if (p.label == label) return true;
    return false;
  }

  bool operator==(const OrbifoldCurve& o) const {
    return genus_ == o.genus_ && points_ == o.points_;
  }

 private:
  int genus_ = 0;
  std::vector<OrbifoldPoint> points_;
};

// <x_1..x_n | x_i^{r_i}, x_1 x_2 ... x_n>
struct PolygonalPresentation {
  std::vector<std::string> labels;
  std::vector<std::uint32_t> orders;

  FpAbelianGroup abelianization() const {
    std::size_t n = orders.size();
    IntMat rel;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Int> row(n, 0);
      row[i] = orders[i];
      rel.push_back(std::move(row));
    }
    rel.emplace_back(n, Int(1));  // product relation
    return fp_group(n, rel);
  }

  // abelianization tensored with Z/m
  FpAbelianGroup abelianization_mod(const Int& m) const {
    std::size_t n = orders.size();
    IntMat rel;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Int> row(n, 0);
      row[i] = orders[i];
      rel.push_back(std::move(row));
    }
    rel.emplace_back(n, Int(1));
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Int> row(n, 0);
      row[i] = m;
      rel.push_back(std::move(row));
    }
    return fp_group(n, rel);
  }
};

inline PolygonalPresentation polygonal_presentation(const OrbifoldCurve& orb) {
  check(orb.genus() == 0, errc::unsupported_genus, "polygonal presentation needs genus 0");
  PolygonalPresentation p;
  for (const auto& pt : orb.points()) {
    p.labels.push_back(pt.label);
    p.orders.push_back(pt.order);
  }
  return p;
}

class PicGroup {
 public:
  PicGroup() = default;

  const OrbifoldCurve& orbifold() const { return orb_; }
  const FpAbelianGroup& group() const { return group_; }
  std::size_t point_count() const { return orb_.point_count(); }

  // index of the generator N_i / the hyperplane class f
  std::size_t root_generator(std::size_t i) const { return i; }
  std::size_t hyperplane_generator() const { return orb_.point_count(); }

  GroupElement class_of(const Int& d, const std::vector<Int>& a) const {
    check(a.size() == orb_.point_count(), errc::bad_input, "one coefficient per marked point");
    std::vector<Int> x(orb_.point_count() + 1);
    for (std::size_t i = 0; i < a.size(); ++i) x[i] = a[i];
    x[orb_.point_count()] = d;
    return group_.element(x);
  }

  GroupElement hyperplane_class() const {
    return class_of(1, std::vector<Int>(orb_.point_count(), 0));
  }
  GroupElement root_class(std::size_t i) const {
    std::vector<Int> a(orb_.point_count(), 0);
    a[i] = 1;
    return class_of(0, a);
  }

  // unique (d, a) with c = d*f + sum a_i N_i and 0 <= a_i < r_i
  std::pair<Int, std::vector<Int>> canonical_form(const GroupElement& c) const {
    check(group_.same_group(c.parent()), errc::group_mismatch, "canonical_form");
    auto x = group_.generator_coords(c);
    std::size_t n = orb_.point_count();
    std::vector<Int> a(n);
    Int d = x[n];
    for (std::size_t i = 0; i < n; ++i) {
      Int r = orb_.point(i).order;
      a[i] = mod_floor(x[i], r);
      d += (x[i] - a[i]) / r;
    }
    return {d, a};
  }

  // deg f = 1, deg N_i = 1/r_i (forced by r_i N_i = f)
  Rat degree(const GroupElement& c) const {
    check(group_.same_group(c.parent()), errc::group_mismatch, "degree");
    Rat out = 0;
    for (std::size_t j = 0; j < functional_.size(); ++j)
      out += functional_[j] * Rat(c.coords()[j]);
    return out;
  }

  // Pic / <f>; its invariant factors are the multiset {r_i > 1}
  FpAbelianGroup quotient_by_hyperplane() const {
    IntMat rel = relations_;
    std::vector<Int> row(orb_.point_count() + 1, 0);
    row[orb_.point_count()] = 1;
    rel.push_back(std::move(row));
    return fp_group(orb_.point_count() + 1, rel);
  }

  // kernel of the degree map
  EmbeddedSubgroup degree_zero_part() const {
    Int L = 1;
    for (const auto& p : orb_.points()) L = lcm_int(L, Int(p.order));
    FpAbelianGroup Z = fp_group(1, {});
    IntMat m(1, std::vector<Int>(group_.gen_count(), 0));
    for (std::size_t j = 0; j < functional_.size(); ++j) {
      Rat scaled = functional_[j] * Rat(L);
      internal_check(rat_den(scaled) == 1, "degree functional denominator");
      m[0][j] = rat_num(scaled);
    }
    return kernel(Homomorphism{group_, Z, std::move(m)});
  }

 private:
  friend PicGroup picard_group(const OrbifoldCurve&);

  OrbifoldCurve orb_;
  FpAbelianGroup group_;
  IntMat relations_;
  std::vector<Rat> functional_;  // degree on canonical coordinates
};

inline PicGroup picard_group(const OrbifoldCurve& orb) {
  check(orb.genus() == 0, errc::unsupported_genus, "Picard presentation needs genus 0");
  PicGroup pic;
  pic.orb_ = orb;
  std::size_t n = orb.point_count();
  IntMat rel;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Int> row(n + 1, 0);
    row[i] = orb.point(i).order;
    row[n] = -1;
    rel.push_back(std::move(row));
  }
  pic.relations_ = rel;
  pic.group_ = fp_group(n + 1, rel);

  // degree in generator coordinates, transported to canonical ones
  std::vector<Rat> delta(n + 1);
  for (std::size_t i = 0; i < n; ++i) delta[i] = Rat(1, orb.point(i).order);
  delta[n] = 1;
  const IntMat lift = mat_transpose(pic.group_.snf().Vinv);
  pic.functional_.assign(n + 1, Rat(0));
  for (std::size_t j = 0; j < n + 1; ++j)
    for (std::size_t i = 0; i < n + 1; ++i) pic.functional_[j] += delta[i] * Rat(lift[i][j]);
  return pic;
}

// n-torsion of Pic^0, embedded into the Picard group
struct PicTorsion {
  PicGroup pic;
  EmbeddedSubgroup degree_zero;  // inside pic.group()
  EmbeddedSubgroup torsion;      // generators embedded directly into pic.group()
};

inline PicTorsion pic_zero_torsion(const OrbifoldCurve& orb, const Int& n) {
  check(n >= 1, errc::bad_input, "torsion level must be >= 1");
  PicTorsion out;
  out.pic = picard_group(orb);
  out.degree_zero = out.pic.degree_zero_part();
  auto t = n_torsion(out.degree_zero.group, n);
  out.torsion.group = t.group;
  for (const auto& g : t.embed) out.torsion.embed.push_back(out.degree_zero.embed_element(g));
  return out;
}

}  // namespace orbipar
