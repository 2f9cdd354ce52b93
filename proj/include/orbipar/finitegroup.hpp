#pragma once

// Concrete finite groups with dense element indices. The identity is always
// index 0; multiplication reads "a then b" (left-to-right word composition),
// and every derived structure (coset actions, induced representations) uses
// that same convention. Higher modules speak only in indices.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <queue>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "orbipar/abgroup.hpp"
#include "orbipar/error.hpp"

namespace orbipar {

namespace detail {

struct VecHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v) {
      h ^= x + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct GroupBackend {
  std::uint32_t n = 0;
  std::vector<std::uint32_t> gens;
  std::vector<std::uint32_t> inv;
  // (parent element, generator position) reaching each element; identity has
  // parent 0 and generator position UINT32_MAX
  std::vector<std::pair<std::uint32_t, std::uint32_t>> bfs;
  std::vector<std::uint32_t> table;  // n*n multiplication table when small
  std::string label;

  virtual std::uint32_t compose(std::uint32_t a, std::uint32_t b) const = 0;
  virtual ~GroupBackend() = default;

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return table.empty() ? compose(a, b) : table[static_cast<std::size_t>(a) * n + b];
  }

  static constexpr std::uint32_t kTableLimit = 2048;

  void finalize_table() {
    if (n > kTableLimit) return;
    table.resize(static_cast<std::size_t>(n) * n);
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        table[static_cast<std::size_t>(a) * n + b] = compose(a, b);
  }

  void finalize_bfs() {
    bfs.assign(n, {0, UINT32_MAX});
    std::vector<bool> seen(n, false);
    seen[0] = true;
    std::queue<std::uint32_t> q;
    q.push(0);
    std::uint32_t reached = 1;
    while (!q.empty()) {
      std::uint32_t x = q.front();
      q.pop();
      for (std::uint32_t gi = 0; gi < gens.size(); ++gi) {
        std::uint32_t y = mul(x, gens[gi]);
        if (!seen[y]) {
          seen[y] = true;
          bfs[y] = {x, gi};
          q.push(y);
          ++reached;
        }
      }
    }
    check(reached == n, errc::not_generating, "generators do not reach every element");
  }

  void finalize_inverses() {
    inv.assign(n, 0);
    for (std::uint32_t a = 0; a < n; ++a) {
      bool found = false;
      for (std::uint32_t b = 0; b < n; ++b)
        if (mul(a, b) == 0 && mul(b, a) == 0) {
          inv[a] = b;
          found = true;
          break;
        }
      internal_check(found, "element without inverse");
    }
  }
};

struct PermBackend : GroupBackend {
  std::uint32_t degree = 0;
  std::vector<std::uint32_t> images;  // n * degree

  std::vector<std::uint32_t> perm_of(std::uint32_t i) const {
    auto it = images.begin() + static_cast<std::size_t>(i) * degree;
    return std::vector<std::uint32_t>(it, it + degree);
  }

  std::unordered_map<std::vector<std::uint32_t>, std::uint32_t, VecHash> index;

  std::uint32_t compose(std::uint32_t a, std::uint32_t b) const override {
    // a then b
    std::vector<std::uint32_t> p(degree);
    const auto* pa = images.data() + static_cast<std::size_t>(a) * degree;
    const auto* pb = images.data() + static_cast<std::size_t>(b) * degree;
    for (std::uint32_t x = 0; x < degree; ++x) p[x] = pb[pa[x]];
    auto it = index.find(p);
    internal_check(it != index.end(), "closure is not closed");
    return it->second;
  }
};

struct SemidirectBackend : GroupBackend {
  FpAbelianGroup A;
  std::uint32_t a_count = 0, h_count = 0;
  std::vector<std::vector<Int>> a_coords;  // canonical coords per A index
  std::map<std::vector<Int>, std::uint32_t> a_index;
  std::shared_ptr<const GroupBackend> H;
  std::vector<IntMat> act;      // reduced action matrix per H element
  std::vector<IntMat> act_inv;  // action of h^{-1}

  std::uint32_t pack(std::uint32_t a, std::uint32_t h) const { return a * h_count + h; }
  std::uint32_t a_part(std::uint32_t g) const { return g / h_count; }
  std::uint32_t h_part(std::uint32_t g) const { return g % h_count; }

  std::uint32_t apply_action(const IntMat& m, std::uint32_t a) const {
    auto y = A.reduce(mat_apply(m, a_coords[a]));
    auto it = a_index.find(y);
    internal_check(it != a_index.end(), "action left the group");
    return it->second;
  }

  std::uint32_t compose(std::uint32_t x, std::uint32_t y) const override {
    // (a,h)(a',h') = (a + h.a', hh')
    std::uint32_t a = a_part(x), h = h_part(x), a2 = a_part(y), h2 = h_part(y);
    std::uint32_t moved = apply_action(act[h], a2);
    std::vector<Int> sum = a_coords[a];
    const auto& mc = a_coords[moved];
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += mc[i];
    auto it = a_index.find(A.reduce(std::move(sum)));
    internal_check(it != a_index.end(), "semidirect closure");
    return pack(it->second, H->mul(h, h2));
  }
};

struct SubgroupBackend : GroupBackend {
  std::shared_ptr<const GroupBackend> parent;
  std::vector<std::uint32_t> to_parent;
  std::vector<std::uint32_t> from_parent;  // UINT32_MAX outside

  std::uint32_t compose(std::uint32_t a, std::uint32_t b) const override {
    std::uint32_t p = parent->mul(to_parent[a], to_parent[b]);
    internal_check(from_parent[p] != UINT32_MAX, "subgroup not closed");
    return from_parent[p];
  }
};

struct QuotientBackend : GroupBackend {
  std::shared_ptr<const GroupBackend> parent;
  std::vector<std::uint32_t> reps;      // coset representatives
  std::vector<std::uint32_t> coset_of;  // parent element -> coset

  std::uint32_t compose(std::uint32_t a, std::uint32_t b) const override {
    return coset_of[parent->mul(reps[a], reps[b])];
  }
};

}  // namespace detail

class FiniteGroup {
 public:
  FiniteGroup() = default;
  explicit FiniteGroup(std::shared_ptr<const detail::GroupBackend> b) : b_(std::move(b)) {}

  static constexpr std::uint32_t identity = 0;

  std::uint32_t order() const { return b_->n; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return b_->mul(a, b); }
  std::uint32_t inv(std::uint32_t a) const { return b_->inv[a]; }
  const std::vector<std::uint32_t>& generators() const { return b_->gens; }
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& bfs_tree() const { return b_->bfs; }
  const std::string& label() const { return b_->label; }

  bool same_group(const FiniteGroup& o) const { return b_ == o.b_; }
  const std::shared_ptr<const detail::GroupBackend>& backend() const { return b_; }

  std::uint32_t conjugate(std::uint32_t x, std::uint32_t by) const {
    return mul(mul(inv(by), x), by);
  }

  std::uint32_t element_order(std::uint32_t g) const {
    std::uint32_t x = g, k = 1;
    while (x != identity) {
      x = mul(x, g);
      ++k;
      internal_check(k <= order(), "element order exceeds group order");
    }
    return k;
  }

  std::uint32_t power(std::uint32_t g, std::uint32_t e) const {
    std::uint32_t x = identity;
    for (std::uint32_t i = 0; i < e; ++i) x = mul(x, g);
    return x;
  }

  bool is_abelian() const {
    for (std::uint32_t a = 0; a < order(); ++a)
      for (std::uint32_t b = a + 1; b < order(); ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  // classes ordered by least member, members ascending
  std::vector<std::vector<std::uint32_t>> conjugacy_classes() const {
    std::vector<bool> seen(order(), false);
    std::vector<std::vector<std::uint32_t>> classes;
    for (std::uint32_t i = 0; i < order(); ++i) {
      if (seen[i]) continue;
      std::set<std::uint32_t> cls;
      for (std::uint32_t g = 0; g < order(); ++g) cls.insert(conjugate(i, g));
      classes.emplace_back(cls.begin(), cls.end());
      for (auto x : cls) seen[x] = true;
    }
    return classes;
  }

 private:
  std::shared_ptr<const detail::GroupBackend> b_;
};

// closure of the generators under composition, breadth-first word order with
// ties broken by generator index
inline FiniteGroup group_from_permutations(std::uint32_t degree,
                                           const std::vector<std::vector<std::uint32_t>>& gens,
                                           std::uint32_t order_cap = 10000) {
  auto b = std::make_shared<detail::PermBackend>();
  b->degree = degree;
  b->label = "perm(" + std::to_string(degree) + ")";
  for (const auto& g : gens) {
    check(g.size() == degree, errc::bad_input, "generator degree mismatch");
    std::vector<bool> hit(degree, false);
    for (auto x : g) {
      check(x < degree && !hit[x], errc::bad_input, "generator is not a bijection");
      hit[x] = true;
    }
  }

  std::vector<std::uint32_t> idperm(degree);
  for (std::uint32_t i = 0; i < degree; ++i) idperm[i] = i;
  std::vector<std::vector<std::uint32_t>> elems{idperm};
  b->index[idperm] = 0;

  for (std::uint32_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      std::vector<std::uint32_t> p(degree);
      for (std::uint32_t x = 0; x < degree; ++x) p[x] = g[elems[head][x]];
      if (b->index.emplace(p, static_cast<std::uint32_t>(elems.size())).second) {
        elems.push_back(std::move(p));
        check(elems.size() <= order_cap, errc::order_bound, "closure exceeds order cap");
      }
    }
  }

  b->n = static_cast<std::uint32_t>(elems.size());
  b->images.reserve(static_cast<std::size_t>(b->n) * degree);
  for (const auto& e : elems) b->images.insert(b->images.end(), e.begin(), e.end());
  for (const auto& g : gens) b->gens.push_back(b->index.at(g));

  b->inv.resize(b->n);
  for (std::uint32_t i = 0; i < b->n; ++i) {
    std::vector<std::uint32_t> q(degree);
    for (std::uint32_t x = 0; x < degree; ++x) q[elems[i][x]] = x;
    b->inv[i] = b->index.at(q);
  }
  b->finalize_table();
  b->finalize_bfs();
  return FiniteGroup(std::move(b));
}

class Subgroup {
 public:
  Subgroup() = default;

  Subgroup(FiniteGroup parent, std::vector<std::uint32_t> generators)
      : parent_(std::move(parent)), gens_(std::move(generators)) {
    for (auto g : gens_) check(g < parent_.order(), errc::bad_input, "subgroup generator index");
    // closure
    std::set<std::uint32_t> mem{FiniteGroup::identity};
    std::vector<std::uint32_t> work{FiniteGroup::identity};
    for (auto g : gens_)
      if (mem.insert(g).second) work.push_back(g);
    for (std::size_t i = 0; i < work.size(); ++i)
      for (auto g : gens_) {
        std::uint32_t y = parent_.mul(work[i], g);
        if (mem.insert(y).second) work.push_back(y);
      }
    members_.assign(mem.begin(), mem.end());
    build_group();
  }

  const FiniteGroup& parent() const { return parent_; }
  const std::vector<std::uint32_t>& members() const { return members_; }
  const std::vector<std::uint32_t>& generators() const { return gens_; }
  std::uint32_t order() const { return static_cast<std::uint32_t>(members_.size()); }
  std::uint32_t index_in_parent() const { return parent_.order() / order(); }

  bool contains(std::uint32_t parent_idx) const {
    return std::binary_search(members_.begin(), members_.end(), parent_idx);
  }

  // the subgroup as a group of its own; element i is members()[i]
  const FiniteGroup& as_group() const { return group_; }
  std::uint32_t to_parent(std::uint32_t sub_idx) const { return members_[sub_idx]; }
  std::uint32_t from_parent(std::uint32_t parent_idx) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), parent_idx);
    check(it != members_.end() && *it == parent_idx, errc::bad_input, "not a subgroup member");
    return static_cast<std::uint32_t>(it - members_.begin());
  }

  bool is_normal() const {
    for (std::uint32_t g = 0; g < parent_.order(); ++g)
      for (auto h : members_)
        if (!contains(parent_.conjugate(h, g))) return false;
    return true;
  }

  bool same_members(const Subgroup& o) const {
    return parent_.same_group(o.parent_) && members_ == o.members_;
  }

 private:
  void build_group() {
    auto b = std::make_shared<detail::SubgroupBackend>();
    b->parent = parent_.backend();
    b->n = order();
    b->label = "subgroup";
    b->to_parent = members_;
    b->from_parent.assign(parent_.order(), UINT32_MAX);
    for (std::uint32_t i = 0; i < members_.size(); ++i) b->from_parent[members_[i]] = i;
    internal_check(members_[0] == FiniteGroup::identity, "identity must be least member");
    for (auto g : gens_) b->gens.push_back(b->from_parent[g]);
    b->inv.resize(b->n);
    for (std::uint32_t i = 0; i < b->n; ++i) {
      std::uint32_t pi = parent_.inv(members_[i]);
      internal_check(b->from_parent[pi] != UINT32_MAX, "subgroup not inverse-closed");
      b->inv[i] = b->from_parent[pi];
    }
    b->finalize_table();
    b->finalize_bfs();
    group_ = FiniteGroup(std::move(b));
  }

  FiniteGroup parent_;
  std::vector<std::uint32_t> members_;
  std::vector<std::uint32_t> gens_;
  FiniteGroup group_;
};

// Right cosets H\G. Representatives are the least element of each coset, so
// the identity coset comes first; G acts on cosets on the right.
struct CosetTable {
  std::vector<std::uint32_t> reps;
  std::vector<std::uint32_t> coset_of;

  std::uint32_t count() const { return static_cast<std::uint32_t>(reps.size()); }

  std::vector<std::uint32_t> action_of(const FiniteGroup& G, std::uint32_t g) const {
    std::vector<std::uint32_t> sigma(reps.size());
    for (std::uint32_t k = 0; k < reps.size(); ++k) sigma[k] = coset_of[G.mul(reps[k], g)];
    return sigma;
  }
};

inline CosetTable cosets(const FiniteGroup& G, const Subgroup& H) {
  check(G.same_group(H.parent()), errc::group_mismatch, "cosets");
  CosetTable t;
  t.coset_of.assign(G.order(), UINT32_MAX);
  for (std::uint32_t g = 0; g < G.order(); ++g) {
    if (t.coset_of[g] != UINT32_MAX) continue;
    std::uint32_t idx = t.count();
    t.reps.push_back(g);
    for (auto h : H.members()) t.coset_of[G.mul(h, g)] = idx;
  }
  internal_check(t.count() * H.order() == G.order(), "Lagrange");
  return t;
}

// one representative per double coset H1 g H2, least element per coset
inline std::vector<std::uint32_t> double_cosets(const FiniteGroup& G, const Subgroup& H1,
                                                const Subgroup& H2) {
  check(G.same_group(H1.parent()) && G.same_group(H2.parent()), errc::group_mismatch,
        "double_cosets");
  std::vector<bool> seen(G.order(), false);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t g = 0; g < G.order(); ++g) {
    if (seen[g]) continue;
    reps.push_back(g);
    for (auto a : H1.members())
      for (auto b : H2.members()) seen[G.mul(G.mul(a, g), b)] = true;
  }
  return reps;
}

struct QuotientGroup {
  FiniteGroup group;
  CosetTable table;  // over the parent
};

inline QuotientGroup quotient_group(const FiniteGroup& G, const Subgroup& N) {
  check(N.is_normal(), errc::not_normal, "quotient by a non-normal subgroup");
  auto t = cosets(G, N);
  auto b = std::make_shared<detail::QuotientBackend>();
  b->parent = G.backend();
  b->n = t.count();
  b->label = "quotient";
  b->reps = t.reps;
  b->coset_of = t.coset_of;
  for (auto g : G.generators()) b->gens.push_back(t.coset_of[g]);
  b->inv.resize(b->n);
  for (std::uint32_t i = 0; i < b->n; ++i) b->inv[i] = t.coset_of[G.inv(t.reps[i])];
  b->finalize_table();
  b->finalize_bfs();
  QuotientGroup q;
  q.group = FiniteGroup(std::move(b));
  q.table = std::move(t);
  return q;
}

// split extension A x| H with H acting through automorphism matrices on the
// canonical coordinates of A; element (a,h) has index a_idx*|H| + h_idx
struct SemidirectProduct {
  FiniteGroup group;
  FpAbelianGroup A;
  FiniteGroup H;
  std::vector<IntMat> action_on_gens;  // one matrix per H generator
  Subgroup A_sub;
  Subgroup H_sub;

  std::uint32_t index_of(std::uint32_t a_idx, std::uint32_t h_idx) const {
    return a_idx * H.order() + h_idx;
  }
  std::uint32_t a_part(std::uint32_t g) const { return g / H.order(); }
  std::uint32_t h_part(std::uint32_t g) const { return g % H.order(); }

  const detail::SemidirectBackend& backend() const {
    return static_cast<const detail::SemidirectBackend&>(*group.backend());
  }

  // A's elements in index order (odometer over canonical coordinates)
  const std::vector<std::vector<Int>>& a_coords() const { return backend().a_coords; }

  GroupElement a_element(std::uint32_t a_idx) const {
    return A.element_from_canonical(a_coords()[a_idx]);
  }
};

inline SemidirectProduct semidirect_product(const FpAbelianGroup& A, const FiniteGroup& H,
                                            const std::vector<IntMat>& action) {
  check(A.is_finite(), errc::bad_input, "semidirect needs finite A");
  check(action.size() == H.generators().size(), errc::not_an_action,
        "one action matrix per H generator");

  auto b = std::make_shared<detail::SemidirectBackend>();
  b->A = A;
  b->H = H.backend();
  b->label = "semidirect";
  auto elems = A.enumerate();
  b->a_count = static_cast<std::uint32_t>(elems.size());
  b->h_count = H.order();
  b->n = b->a_count * b->h_count;
  check(b->n <= 10000, errc::order_bound, "semidirect order cap");
  for (std::uint32_t i = 0; i < elems.size(); ++i) {
    b->a_coords.push_back(elems[i].coords());
    b->a_index[elems[i].coords()] = i;
  }

  auto reduce_matrix = [&](const IntMat& m) {
    check(mat_rows(m) == A.gen_count() && (A.gen_count() == 0 || mat_cols(m) == A.gen_count()),
          errc::not_an_action, "action matrix shape");
    IntMat out = m;
    return out;
  };
  auto matrices_equal_on_A = [&](const IntMat& x, const IntMat& y) {
    for (std::size_t j = 0; j < A.gen_count(); ++j) {
      std::vector<Int> e(A.gen_count(), 0);
      e[j] = 1;
      if (A.reduce(mat_apply(x, e)) != A.reduce(mat_apply(y, e))) return false;
    }
    return true;
  };

  // each generator image must permute A
  for (const auto& m : action) {
    auto mm = reduce_matrix(m);
    std::set<std::vector<Int>> img;
    for (const auto& c : b->a_coords) img.insert(A.reduce(mat_apply(mm, c)));
    check(img.size() == b->a_count, errc::not_an_action, "action matrix is not an automorphism");
  }

  // extend to all of H along the BFS tree, then verify the extension is a
  // homomorphism (this is where a relation violation of H surfaces)
  b->act.assign(b->h_count, IntMat{});
  b->act[0] = mat_identity(A.gen_count());
  std::vector<std::uint32_t> order_by_depth;  // BFS order
  {
    std::vector<bool> done(b->h_count, false);
    done[0] = true;
    std::queue<std::uint32_t> q;
    q.push(0);
    while (!q.empty()) {
      std::uint32_t x = q.front();
      q.pop();
      for (std::uint32_t gi = 0; gi < H.generators().size(); ++gi) {
        std::uint32_t y = H.mul(x, H.generators()[gi]);
        if (!done[y]) {
          done[y] = true;
          b->act[y] = mat_mul(b->act[x], action[gi]);
          q.push(y);
        }
      }
    }
    for (bool d : done) check(d, errc::not_an_action, "H generators do not generate H");
  }
  for (std::uint32_t x = 0; x < b->h_count; ++x)
    for (std::uint32_t gi = 0; gi < H.generators().size(); ++gi) {
      std::uint32_t y = H.mul(x, H.generators()[gi]);
      check(matrices_equal_on_A(b->act[y], mat_mul(b->act[x], action[gi])), errc::not_an_action,
            "action does not respect H relations");
    }
  b->act_inv.resize(b->h_count);
  for (std::uint32_t h = 0; h < b->h_count; ++h) {
    std::uint32_t hi = 0;
    for (std::uint32_t c = 0; c < b->h_count; ++c)
      if (H.mul(h, c) == 0) { hi = c; break; }
    b->act_inv[h] = b->act[hi];
  }

  // generators: canonical generators of A (nontrivial coordinates), then H's
  for (std::size_t i = 0; i < A.torsion_rank(); ++i) {
    if (A.diag()[i] <= 1) continue;
    std::vector<Int> y(A.gen_count(), 0);
    y[i] = 1;
    b->gens.push_back(b->a_index.at(y) * b->h_count + 0);
  }
  for (auto hg : H.generators()) b->gens.push_back(0 * b->h_count + hg);

  b->inv.resize(b->n);
  for (std::uint32_t g = 0; g < b->n; ++g) {
    std::uint32_t a = g / b->h_count, h = g % b->h_count;
    std::uint32_t hinv = 0;
    for (std::uint32_t c = 0; c < b->h_count; ++c)
      if (H.mul(h, c) == 0) { hinv = c; break; }
    // (a,h)^-1 = (-(h^-1 . a), h^-1)
    auto moved = b->apply_action(b->act[hinv], a);
    std::vector<Int> neg = b->a_coords[moved];
    for (auto& c : neg) c = -c;
    b->inv[g] = b->a_index.at(A.reduce(std::move(neg))) * b->h_count + hinv;
  }
  b->finalize_table();
  b->finalize_bfs();

  SemidirectProduct out;
  out.group = FiniteGroup(b);
  out.A = A;
  out.H = H;
  out.action_on_gens = action;
  std::vector<std::uint32_t> a_gens, h_gens;
  for (std::uint32_t i = 1; i < b->a_count; ++i) a_gens.push_back(i * b->h_count);
  for (std::uint32_t h = 1; h < b->h_count; ++h) h_gens.push_back(h);
  out.A_sub = Subgroup(out.group, a_gens);
  out.H_sub = Subgroup(out.group, h_gens);
  internal_check(out.A_sub.order() == b->a_count && out.H_sub.order() == b->h_count,
                 "semidirect embeddings");
  return out;
}

// All subgroups, found by extending each known subgroup's generating set by
// one element and closing. Generating sets stay short (one chain step each),
// which keeps downstream character enumeration cheap. Ordered by
// (order, member list).
inline std::vector<Subgroup> all_subgroups(const FiniteGroup& G) {
  std::map<std::vector<std::uint32_t>, Subgroup> found;
  std::vector<Subgroup> work;
  Subgroup trivial(G, {});
  found.emplace(trivial.members(), trivial);
  work.push_back(trivial);
  for (std::size_t i = 0; i < work.size(); ++i) {
    Subgroup s = work[i];
    for (std::uint32_t g = 0; g < G.order(); ++g) {
      if (s.contains(g)) continue;
      std::vector<std::uint32_t> gens = s.generators();
      gens.push_back(g);
      Subgroup t(G, gens);
      if (found.emplace(t.members(), t).second) work.push_back(t);
    }
  }
  std::vector<Subgroup> out;
  for (auto& [mem, s] : found) out.push_back(s);
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members() < b.members();
  });
  return out;
}

// brute-force isomorphism test for small groups: map generators of a to
// same-order elements of b, extend along the word tree, verify
inline bool isomorphic_small(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return false;
  std::uint32_t n = a.order();
  const auto& gens = a.generators();
  std::vector<std::uint32_t> img(gens.size(), 0);
  std::vector<std::uint32_t> phi(n);

  auto try_extend = [&]() -> bool {
    std::vector<bool> def(n, false);
    phi[0] = 0;
    def[0] = true;
    std::queue<std::uint32_t> q;
    q.push(0);
    while (!q.empty()) {
      std::uint32_t x = q.front();
      q.pop();
      for (std::uint32_t gi = 0; gi < gens.size(); ++gi) {
        std::uint32_t y = a.mul(x, gens[gi]);
        std::uint32_t fy = b.mul(phi[x], img[gi]);
        if (!def[y]) {
          def[y] = true;
          phi[y] = fy;
          q.push(y);
        } else if (phi[y] != fy) {
          return false;
        }
      }
    }
    for (bool d : def)
      if (!d) return false;
    std::vector<bool> hit(n, false);
    for (auto v : phi) {
      if (hit[v]) return false;
      hit[v] = true;
    }
    for (std::uint32_t x = 0; x < n; ++x)
      for (std::uint32_t gi = 0; gi < gens.size(); ++gi)
        if (phi[a.mul(x, gens[gi])] != b.mul(phi[x], img[gi])) return false;
    return true;
  };

  std::vector<std::vector<std::uint32_t>> candidates(gens.size());
  for (std::uint32_t gi = 0; gi < gens.size(); ++gi) {
    std::uint32_t o = a.element_order(gens[gi]);
    for (std::uint32_t y = 0; y < n; ++y)
      if (b.element_order(y) == o) candidates[gi].push_back(y);
    if (candidates[gi].empty()) return false;
  }
  std::vector<std::uint32_t> pos(gens.size(), 0);
  if (gens.empty()) return n == 1;
  for (;;) {
    for (std::uint32_t gi = 0; gi < gens.size(); ++gi) img[gi] = candidates[gi][pos[gi]];
    if (try_extend()) return true;
    std::size_t i = 0;
    for (; i < pos.size(); ++i) {
      if (++pos[i] < candidates[i].size()) break;
      pos[i] = 0;
    }
    if (i == pos.size()) return false;
  }
}

}  // namespace orbipar
