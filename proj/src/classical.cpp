#include "joinalg/classical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace joinalg {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

void number_classes(PointClasses& pc, DisjointSets& sets) {
  const std::size_t n = pc.levels * pc.left_size * pc.right_size;
  std::vector<std::size_t> id_of_root(n, n);
  pc.class_of.assign(n, 0);
  pc.classes = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t root = sets.find(i);
    if (id_of_root[root] == n) id_of_root[root] = pc.classes++;
    pc.class_of[i] = id_of_root[root];
  }
}

/// Representative point of every class.
std::vector<std::size_t> representatives(const PointClasses& pc) {
  std::vector<std::size_t> rep(pc.classes, pc.class_of.size());
  for (std::size_t i = 0; i < pc.class_of.size(); ++i) {
    if (rep[pc.class_of[i]] == pc.class_of.size()) rep[pc.class_of[i]] = i;
  }
  return rep;
}

}  // namespace

FiniteGSet::FiniteGSet(FiniteGroup group, std::vector<std::vector<std::size_t>> action)
    : group_(std::move(group)), action_(std::move(action)) {
  const std::size_t n = action_.size();
  const std::size_t order = group_.order();
  for (const auto& row : action_) {
    if (row.size() != order) throw MalformedInput("action table rows must have one entry per group element");
    for (auto y : row) {
      if (y >= n) throw MalformedInput("action table entry out of range");
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (action_[x][group_.identity()] != x) {
      throw MalformedInput("identity does not act trivially on point " + std::to_string(x));
    }
    for (std::size_t g = 0; g < order; ++g) {
      for (std::size_t h = 0; h < order; ++h) {
        if (action_[action_[x][g]][h] != action_[x][group_.mul(g, h)]) {
          throw MalformedInput("(x·g)·h != x·(gh) at x=" + std::to_string(x) + ", g=" + std::to_string(g) +
                               ", h=" + std::to_string(h));
        }
      }
    }
  }
}

FiniteGSet FiniteGSet::regular(const FiniteGroup& g) { return FiniteGSet(g, g.table()); }

FiniteGSet FiniteGSet::trivial(const FiniteGroup& g, std::size_t size) {
  std::vector<std::vector<std::size_t>> action(size, std::vector<std::size_t>(g.order()));
  for (std::size_t x = 0; x < size; ++x) std::fill(action[x].begin(), action[x].end(), x);
  return FiniteGSet(g, std::move(action));
}

FiniteGSet FiniteGSet::disjoint_union(const FiniteGSet& a, const FiniteGSet& b) {
  if (a.group().table() != b.group().table()) throw PreconditionFailed("disjoint union needs the same group");
  auto action = a.table();
  for (const auto& row : b.table()) {
    std::vector<std::size_t> shifted = row;
    for (auto& y : shifted) y += a.size();
    action.push_back(std::move(shifted));
  }
  return FiniteGSet(a.group(), std::move(action));
}

bool is_free(const FiniteGSet& x) {
  for (std::size_t p = 0; p < x.size(); ++p) {
    for (std::size_t g = 0; g < x.group().order(); ++g) {
      if (g != x.group().identity() && x.act(p, g) == p) return false;
    }
  }
  return true;
}

std::vector<FiniteGSet> enumerate_actions(const FiniteGroup& g, std::size_t size) {
  std::vector<std::size_t> identity_perm(size);
  std::iota(identity_perm.begin(), identity_perm.end(), 0);
  std::vector<std::vector<std::size_t>> perms;
  {
    std::vector<std::size_t> p = identity_perm;
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }

  std::vector<FiniteGSet> out;
  const std::size_t order = g.order();
  std::vector<std::size_t> choice(order, 0);
  std::vector<std::size_t> others;
  for (std::size_t e = 0; e < order; ++e) {
    if (e != g.identity()) others.push_back(e);
  }
  // Odometer over one permutation per non-identity element.
  while (true) {
    std::vector<std::vector<std::size_t>> action(size, std::vector<std::size_t>(order));
    for (std::size_t x = 0; x < size; ++x) {
      action[x][g.identity()] = x;
      for (std::size_t k = 0; k < others.size(); ++k) action[x][others[k]] = perms[choice[k]][x];
    }
    bool valid = true;
    for (std::size_t x = 0; x < size && valid; ++x) {
      for (std::size_t a = 0; a < order && valid; ++a) {
        for (std::size_t b = 0; b < order; ++b) {
          if (action[action[x][a]][b] != action[x][g.mul(a, b)]) {
            valid = false;
            break;
          }
        }
      }
    }
    if (valid) out.emplace_back(g, std::move(action));

    std::size_t k = others.size();
    while (k > 0) {
      --k;
      if (++choice[k] < perms.size()) break;
      choice[k] = 0;
      if (k == 0) return out;
    }
    if (others.empty()) return out;
  }
}

ComoduleAlgebra fun_comodule(const FiniteGSet& x) {
  const std::size_t n = x.size();
  const std::size_t order = x.group().order();
  std::vector<std::string> points;
  for (std::size_t p = 0; p < n; ++p) points.push_back("x" + std::to_string(p));
  Matrix delta(n * order, n);
  // δ(δ_y) = Σ_{x·g = y} δ_x ⊗ δ_g
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t g = 0; g < order; ++g) delta(p * order + g, x.act(p, g)) = 1;
  }
  return ComoduleAlgebra{function_algebra(points), function_hopf(x.group()), std::move(delta)};
}

std::array<std::size_t, 3> PointClasses::point(std::size_t i) const {
  return {i / (left_size * right_size), (i / right_size) % left_size, i % right_size};
}

PointClasses discrete_join(std::size_t left_size, std::size_t right_size, std::size_t m) {
  if (m == 0) throw PreconditionFailed("chain resolution must be at least 1");
  PointClasses pc{m + 1, left_size, right_size, {}, 0};
  DisjointSets sets(pc.levels * left_size * right_size);
  for (std::size_t x = 0; x < left_size; ++x) {
    for (std::size_t y = 0; y < right_size; ++y) {
      sets.unite(pc.index(0, x, y), pc.index(0, 0, y));
      sets.unite(pc.index(m, x, y), pc.index(m, x, 0));
    }
  }
  number_classes(pc, sets);
  return pc;
}

PointClasses gauged_join(const FiniteGSet& x, std::size_t m) {
  if (m == 0) throw PreconditionFailed("chain resolution must be at least 1");
  const FiniteGroup& g = x.group();
  const std::size_t n = x.size();
  const std::size_t order = g.order();
  PointClasses pc{m + 1, n, order, {}, 0};
  DisjointSets sets(pc.levels * n * order);
  // At level m, (x, h) joins the class of the first point with the same x·h.
  std::vector<std::size_t> first_with_product(n, pc.class_of.size());
  std::vector<bool> seen(n, false);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t h = 0; h < order; ++h) {
      sets.unite(pc.index(0, p, h), pc.index(0, 0, h));
      const std::size_t product = x.act(p, h);
      if (!seen[product]) {
        seen[product] = true;
        first_with_product[product] = pc.index(m, p, h);
      }
      sets.unite(pc.index(m, p, h), first_with_product[product]);
    }
  }
  number_classes(pc, sets);
  return pc;
}

JoinMapCheck check_join_map(const FiniteGSet& x, std::size_t m, const PointMap& map) {
  const FiniteGroup& g = x.group();
  JoinMapCheck out;
  out.join = discrete_join(x.size(), g.order(), m);
  out.gauged = gauged_join(x, m);

  const std::size_t none = out.gauged.classes;
  out.class_map.assign(out.join.classes, none);
  out.well_defined = true;
  for (std::size_t i = 0; i < out.join.class_of.size(); ++i) {
    const auto [t, p, h] = out.join.point(i);
    const auto [t2, p2, h2] = map(t, p, h);
    const std::size_t target = out.gauged.class_of[out.gauged.index(t2, p2, h2)];
    std::size_t& slot = out.class_map[out.join.class_of[i]];
    if (slot == none) {
      slot = target;
    } else if (slot != target) {
      out.well_defined = false;
    }
  }
  if (!out.well_defined) return out;

  std::vector<std::size_t> sorted = out.class_map;
  std::sort(sorted.begin(), sorted.end());
  out.bijective = out.join.classes == out.gauged.classes &&
                  std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();

  // [(t,x,y)]k = [(t, x·k, y·k)] on the join, [(t,x,h)]k = [(t, x, hk)] on the gauged side.
  out.equivariant = true;
  const std::vector<std::size_t> reps = representatives(out.join);
  for (std::size_t c = 0; c < out.join.classes && out.equivariant; ++c) {
    const auto [t, p, h] = out.join.point(reps[c]);
    const auto [t2, p2, h2] = map(t, p, h);
    for (std::size_t k = 0; k < g.order(); ++k) {
      const std::size_t moved = out.join.class_of[out.join.index(t, x.act(p, k), g.mul(h, k))];
      const std::size_t moved_image = out.gauged.class_of[out.gauged.index(t2, p2, g.mul(h2, k))];
      if (out.class_map[moved] != moved_image) {
        out.equivariant = false;
        break;
      }
    }
  }
  return out;
}

JoinMapCheck gauged_join_iso(const FiniteGSet& x, std::size_t m) {
  const FiniteGroup& g = x.group();
  return check_join_map(x, m, [&](std::size_t t, std::size_t p, std::size_t h) {
    return std::array<std::size_t, 3>{t, x.act(p, g.inv(h)), h};
  });
}

JoinFusionCheck fun_of_join_vs_fusion(std::size_t left_size, std::size_t right_size, std::size_t m) {
  std::vector<std::string> xs, ys;
  for (std::size_t i = 0; i < left_size; ++i) xs.push_back("x" + std::to_string(i));
  for (std::size_t i = 0; i < right_size; ++i) ys.push_back("y" + std::to_string(i));

  JoinFusionCheck out;
  out.join = discrete_join(left_size, right_size, m);
  out.fusion = build_fusion(ChainInterval::make(m).ends, function_algebra(xs), function_algebra(ys));
  const std::size_t n = out.join.class_of.size();
  const std::size_t points = out.join.classes;
  out.pullback = Matrix(n, points);
  for (std::size_t i = 0; i < n; ++i) out.pullback(i, out.join.class_of[i]) = 1;

  const Subalgebra& carrier = out.fusion.carrier;
  out.isomorphism = Matrix(carrier.subspace.dim(), points);
  bool lands = true;
  for (std::size_t c = 0; c < points && lands; ++c) {
    auto coords = carrier.subspace.coordinates(out.pullback.column(c));
    if (coords) {
      out.isomorphism.set_column(c, *coords);
    } else {
      lands = false;
    }
  }
  out.report.add("lands_in_fusion", lands);
  out.report.add("bijective", lands && points == carrier.subspace.dim() && rank(out.isomorphism) == points,
                 "points = " + std::to_string(points) + ", dim fusion = " + std::to_string(carrier.subspace.dim()));
  out.report.add("unital", out.pullback.apply(Vector(points, Scalar(1))) == out.fusion.ambient.unit());
  bool multiplicative = true;
  for (std::size_t c = 0; c < points && multiplicative; ++c) {
    for (std::size_t d = 0; d < points; ++d) {
      Vector lhs = c == d ? out.pullback.column(c) : Vector(n);
      if (lhs != out.fusion.ambient.multiply(out.pullback.column(c), out.pullback.column(d))) {
        multiplicative = false;
        break;
      }
    }
  }
  out.report.add("multiplicative", multiplicative);
  out.report.add("point_count_formula",
                 points == right_size + (m - 1) * left_size * right_size + left_size);
  return out;
}

namespace {

DiagonalFreeness diagonal_freeness_impl(const FiniteGSet& x, std::size_t m, const StrongConnection* supplied) {
  if (!is_free(x)) throw PreconditionFailed("the action on X is not free");
  const FiniteGroup& g = x.group();
  DiagonalFreeness out;
  out.gauged = gauged_join(x, m);
  out.action_free = true;
  const std::vector<std::size_t> reps = representatives(out.gauged);
  for (std::size_t c = 0; c < out.gauged.classes && out.action_free; ++c) {
    const auto [t, p, h] = out.gauged.point(reps[c]);
    for (std::size_t k = 0; k < g.order(); ++k) {
      if (k == g.identity()) continue;
      if (out.gauged.class_of[out.gauged.index(t, p, g.mul(h, k))] == c) {
        out.action_free = false;
        break;
      }
    }
  }
  const EquivariantFusion ef = build_equivariant_fusion(ChainInterval::make(m).ends, fun_comodule(x));
  if (!ef.report.ok()) throw ConstructionError("equivariant fusion failed its checks");
  if (supplied == nullptr) {
    out.fusion_principality = is_principal(ef.comodule);
  } else {
    out.fusion_principality.principal = check_strong_connection(ef.comodule, *supplied).ok();
    out.fusion_principality.solve.feasible = out.fusion_principality.principal;
    out.fusion_principality.solve.connection = *supplied;
  }
  return out;
}

}  // namespace

DiagonalFreeness diagonal_join_freeness(const FiniteGSet& x, std::size_t m) {
  return diagonal_freeness_impl(x, m, nullptr);
}

DiagonalFreeness diagonal_join_freeness(const FiniteGSet& x, std::size_t m, const StrongConnection& fusion_connection) {
  return diagonal_freeness_impl(x, m, &fusion_connection);
}

}  // namespace joinalg
