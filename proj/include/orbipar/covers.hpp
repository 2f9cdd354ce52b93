#pragma once

// Tame covers of an orbifold curve, encoded as monodromy tuples: one group
// element per marked point, product one, generating the group. A cover is the
// coset space H\G with its right monodromy action; its geometry (upstairs
// marked points, residual orders, Riemann-Hurwitz genus) comes from the
// orbits of the tuple entries on the fiber.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "orbipar/error.hpp"
#include "orbipar/finitegroup.hpp"
#include "orbipar/orbifold.hpp"

namespace orbipar {

struct MonodromyTuple {
  OrbifoldCurve base;
  FiniteGroup group;
  std::vector<std::uint32_t> tuple;

  bool same_monodromy(const MonodromyTuple& o) const {
    return base == o.base && group.same_group(o.group) && tuple == o.tuple;
  }
};

inline MonodromyTuple validate_monodromy(const OrbifoldCurve& base, const FiniteGroup& group,
                                         const std::vector<std::uint32_t>& tuple) {
  check(tuple.size() == base.point_count(), errc::bad_input,
        "tuple length must match the number of marked points");
  for (auto g : tuple) check(g < group.order(), errc::bad_input, "tuple entry out of range");

  std::uint32_t prod = FiniteGroup::identity;
  for (auto g : tuple) prod = group.mul(prod, g);
  check(prod == FiniteGroup::identity, errc::product_not_one,
        "monodromy product is not the identity");

  for (std::size_t i = 0; i < tuple.size(); ++i) {
    std::uint32_t o = group.element_order(tuple[i]);
    check(base.point(i).order % o == 0, errc::order_violation,
          "order of entry " + std::to_string(i) + " does not divide the root order");
  }

  Subgroup generated(group, tuple);
  check(generated.order() == group.order(), errc::not_generating,
        "tuple does not generate the group");
  return MonodromyTuple{base, group, tuple};
}

struct UpstairsPoint {
  std::string label;       // "(base-label,minimal coset)"
  std::size_t base_index;  // alpha
  std::uint32_t ell;       // orbit length = ramification over the coarse base
  std::uint32_t s;         // residual orbifold order, s * ell = r
  std::uint32_t min_coset;
  std::vector<std::uint32_t> orbit;  // cosets, ascending
};

struct CoverGeometry {
  OrbifoldCurve upstairs;
  std::vector<UpstairsPoint> points;
  std::uint32_t degree = 1;
  int genus = 0;
};

class TameCover {
 public:
  TameCover() = default;

  TameCover(MonodromyTuple mono, Subgroup H) : mono_(std::move(mono)), H_(std::move(H)) {
    check(mono_.group.same_group(H_.parent()), errc::group_mismatch,
          "subgroup of a different group");
    fibers_ = cosets(mono_.group, H_);
    for (auto g : mono_.tuple) fiber_action_.push_back(fibers_.action_of(mono_.group, g));

    // connectedness: the tuple generates, so the action is transitive
    std::vector<bool> seen(fibers_.count(), false);
    std::vector<std::uint32_t> work{0};
    seen[0] = true;
    for (std::size_t i = 0; i < work.size(); ++i)
      for (const auto& sigma : fiber_action_)
        if (!seen[sigma[work[i]]]) {
          seen[sigma[work[i]]] = true;
          work.push_back(sigma[work[i]]);
        }
    internal_check(work.size() == fibers_.count(), "cover is not connected");

    build_geometry();
  }

  const MonodromyTuple& monodromy() const { return mono_; }
  const OrbifoldCurve& base() const { return mono_.base; }
  const FiniteGroup& group() const { return mono_.group; }
  const Subgroup& subgroup() const { return H_; }
  const CosetTable& fibers() const { return fibers_; }
  std::uint32_t degree() const { return fibers_.count(); }
  const std::vector<std::uint32_t>& fiber_action(std::size_t i) const { return fiber_action_[i]; }
  const CoverGeometry& geometry() const { return geometry_; }

  bool is_galois() const { return H_.order() == 1 || H_.is_normal(); }

 private:
  void build_geometry() {
    geometry_.degree = degree();
    std::vector<OrbifoldPoint> up_points;
    for (std::size_t i = 0; i < mono_.tuple.size(); ++i) {
      const auto& sigma = fiber_action_[i];
      std::uint32_t r = mono_.base.point(i).order;
      std::vector<bool> seen(sigma.size(), false);
      std::uint32_t ell_sum = 0;
      for (std::uint32_t c = 0; c < sigma.size(); ++c) {
        if (seen[c]) continue;
        UpstairsPoint p;
        p.base_index = i;
        p.min_coset = c;
        std::uint32_t k = c;
        do {
          seen[k] = true;
          p.orbit.push_back(k);
          k = sigma[k];
        } while (k != c);
        std::sort(p.orbit.begin(), p.orbit.end());
        p.ell = static_cast<std::uint32_t>(p.orbit.size());
        internal_check(r % p.ell == 0, "orbit length does not divide the root order");
        p.s = r / p.ell;
        p.label = "(" + mono_.base.point(i).label + "," + std::to_string(p.min_coset) + ")";
        ell_sum += p.ell;
        up_points.push_back({p.label, p.s});
        geometry_.points.push_back(std::move(p));
      }
      internal_check(ell_sum == degree(), "fiber does not sum to the degree");
    }
    // Riemann-Hurwitz over a genus-0 base
    long long rhs = -2LL * degree();
    for (const auto& p : geometry_.points) rhs += p.ell - 1;
    internal_check((rhs + 2) % 2 == 0, "Riemann-Hurwitz parity");
    int genus = static_cast<int>((rhs + 2) / 2);
    internal_check(genus >= 0, "negative genus upstairs");
    geometry_.genus = genus;
    geometry_.upstairs = OrbifoldCurve(genus, std::move(up_points));
  }

  MonodromyTuple mono_;
  Subgroup H_;
  CosetTable fibers_;
  std::vector<std::vector<std::uint32_t>> fiber_action_;
  CoverGeometry geometry_;
};

inline CoverGeometry cover_geometry(const TameCover& cover) { return cover.geometry(); }

// Enlarge root orders on the base (existing labels must be enriched to a
// multiple of their current order; new labels get identity monodromy).
inline TameCover extend_orbifold(const TameCover& cover,
                                 const std::vector<std::pair<std::string, std::uint32_t>>& orders) {
  const auto& base = cover.base();
  std::vector<OrbifoldPoint> points = base.points();
  std::vector<std::uint32_t> tuple = cover.monodromy().tuple;
  for (const auto& [label, new_order] : orders) {
    check(new_order >= 1, errc::bad_input, "enrichment order must be >= 1");
    if (base.has_label(label)) {
      std::size_t i = base.index_of(label);
      check(new_order % points[i].order == 0, errc::incompatible_enrichment,
            "new order at " + label + " is not a multiple of the current one");
      points[i].order = new_order;
    } else {
      points.push_back({label, new_order});
      tuple.push_back(FiniteGroup::identity);
    }
  }
  OrbifoldCurve enriched(base.genus(), std::move(points));
  return TameCover(validate_monodromy(enriched, cover.group(), tuple), cover.subgroup());
}

// Deck transformations of a cover with H normal: G/H acting on the fiber by
// left translation, hence on the upstairs marked points.
struct DeckAction {
  QuotientGroup deck;
  // point_perms[q][j] = image of upstairs point j under deck element q
  std::vector<std::vector<std::uint32_t>> point_perms;
  // coset_perms[q][c] = image coset of c
  std::vector<std::vector<std::uint32_t>> coset_perms;
};

inline DeckAction deck_action_on_points(const TameCover& cover) {
  const auto& G = cover.group();
  const auto& H = cover.subgroup();
  check(H.is_normal(), errc::not_normal, "deck action needs a normal subgroup");
  DeckAction out;
  out.deck = quotient_group(G, H);
  const auto& geom = cover.geometry();

  // coset -> upstairs point, per base point
  std::map<std::pair<std::size_t, std::uint32_t>, std::uint32_t> point_at;
  for (std::uint32_t j = 0; j < geom.points.size(); ++j)
    for (auto c : geom.points[j].orbit) point_at[{geom.points[j].base_index, c}] = j;

  for (std::uint32_t q = 0; q < out.deck.group.order(); ++q) {
    std::uint32_t n = out.deck.table.reps[q];
    std::vector<std::uint32_t> cperm(cover.degree());
    for (std::uint32_t c = 0; c < cover.degree(); ++c)
      cperm[c] = cover.fibers().coset_of[G.mul(n, cover.fibers().reps[c])];
    std::vector<std::uint32_t> pperm(geom.points.size());
    for (std::uint32_t j = 0; j < geom.points.size(); ++j) {
      std::uint32_t c2 = cperm[geom.points[j].min_coset];
      auto it = point_at.find({geom.points[j].base_index, c2});
      internal_check(it != point_at.end(), "deck image of a point is missing");
      pperm[j] = it->second;
      internal_check(geom.points[it->second].s == geom.points[j].s &&
                         geom.points[it->second].ell == geom.points[j].ell,
                     "deck action does not preserve ramification data");
    }
    out.coset_perms.push_back(std::move(cperm));
    out.point_perms.push_back(std::move(pperm));
  }
  return out;
}

}  // namespace orbipar
