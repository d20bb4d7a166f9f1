#ifndef JOINALG_CLASSICAL_HPP
#define JOINALG_CLASSICAL_HPP

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

#include "joinalg/fusion.hpp"
#include "joinalg/group.hpp"

namespace joinalg {

/// Finite set with a right action of a finite group; action[x][g] = x·g.
class FiniteGSet {
 public:
  FiniteGSet() = default;
  /// Throws MalformedInput unless x·e = x and (x·g)·h = x·(gh) for all x, g, h.
  FiniteGSet(FiniteGroup group, std::vector<std::vector<std::size_t>> action);

  /// G acting on itself by right multiplication.
  static FiniteGSet regular(const FiniteGroup& g);
  static FiniteGSet trivial(const FiniteGroup& g, std::size_t size);
  static FiniteGSet disjoint_union(const FiniteGSet& a, const FiniteGSet& b);

  const FiniteGroup& group() const { return group_; }
  std::size_t size() const { return action_.size(); }
  std::size_t act(std::size_t x, std::size_t g) const { return action_[x][g]; }
  const std::vector<std::vector<std::size_t>>& table() const { return action_; }

 private:
  FiniteGroup group_;
  std::vector<std::vector<std::size_t>> action_;
};

/// x·g = x only for g = e, checked over all pairs.
bool is_free(const FiniteGSet& x);

/// Every right action of `g` on {0, ..., size - 1}. The order is fixed:
/// permutations for successive group elements vary lexicographically.
std::vector<FiniteGSet> enumerate_actions(const FiniteGroup& g, std::size_t size);

/// Fun(X) over Fun(G) with δ(f)(x, g) = f(x·g).
ComoduleAlgebra fun_comodule(const FiniteGSet& x);

/// Points (t, x, y) of {0..m}×X×Y and the class each one belongs to.
/// Class numbers follow the first appearance of a class in index order.
struct PointClasses {
  std::size_t levels = 0;
  std::size_t left_size = 0;
  std::size_t right_size = 0;
  std::vector<std::size_t> class_of;
  std::size_t classes = 0;

  std::size_t index(std::size_t t, std::size_t x, std::size_t y) const {
    return (t * left_size + x) * right_size + y;
  }
  std::array<std::size_t, 3> point(std::size_t index) const;
};

/// X∗Y over the chain: X collapsed at level 0, Y collapsed at level m.
PointClasses discrete_join(std::size_t left_size, std::size_t right_size, std::size_t m);

/// {0..m}×X×G with (0,x,h) ~ (0,x',h) and (m,x,h) ~ (m,x',h') when xh = x'h'.
PointClasses gauged_join(const FiniteGSet& x, std::size_t m);

struct JoinMapCheck {
  PointClasses join;
  PointClasses gauged;
  /// Join class -> gauged class; meaningful only when well_defined.
  std::vector<std::size_t> class_map;
  bool well_defined = false;
  bool bijective = false;
  bool equivariant = false;

  bool verdict() const { return well_defined && bijective && equivariant; }
};

using PointMap = std::function<std::array<std::size_t, 3>(std::size_t t, std::size_t x, std::size_t h)>;

/// Checks a point-level map from X∗G (diagonal action) to the gauged join
/// (action on the G coordinate) for well-definedness on classes, bijectivity
/// and equivariance over every group element.
JoinMapCheck check_join_map(const FiniteGSet& x, std::size_t m, const PointMap& map);

/// The map [(t, x, h)] ↦ [(t, x·h⁻¹, h)].
JoinMapCheck gauged_join_iso(const FiniteGSet& x, std::size_t m);

struct JoinFusionCheck {
  PointClasses join;
  FusionAlgebra fusion;
  /// Fun(X∗Y) -> C⊗Fun(X)⊗Fun(Y), f ↦ f∘class.
  Matrix pullback;
  /// The same map in carrier coordinates (dim carrier x points).
  Matrix isomorphism;
  Report report;
};

JoinFusionCheck fun_of_join_vs_fusion(std::size_t left_size, std::size_t right_size, std::size_t m);

struct DiagonalFreeness {
  PointClasses gauged;
  bool action_free = false;
  Principality fusion_principality;

  bool verdict() const { return action_free && fusion_principality.principal; }
};

/// Throws PreconditionFailed if the action on x is not free.
DiagonalFreeness diagonal_join_freeness(const FiniteGSet& x, std::size_t m);
/// Same, but principality of the fusion is witnessed by a supplied
/// connection rather than solved for.
DiagonalFreeness diagonal_join_freeness(const FiniteGSet& x, std::size_t m, const StrongConnection& fusion_connection);

}  // namespace joinalg

#endif  // JOINALG_CLASSICAL_HPP
