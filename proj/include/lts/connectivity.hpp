#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "lts/abelian_group.hpp"

namespace lts {

class GradedLTS;
class StandardEmbedding;

/// The two supports and their inverse-closed extensions ±Σ¹, ±Σ⁰.
struct SupportData {
  AbelianGroup group;
  std::vector<GroupElement> sigma1;
  std::vector<GroupElement> sigma0;
  std::set<GroupElement> pm_sigma1;
  std::set<GroupElement> pm_sigma0;

  static SupportData from_sets(AbelianGroup group, std::vector<GroupElement> sigma1, std::vector<GroupElement> sigma0);
  static SupportData from(const GradedLTS& e, const StandardEmbedding& emb);

  bool in_sigma1(const GroupElement& g) const;
};

/// A connection g_1, ..., g_{2n+1}: g_1 = g, odd partial products in ±Σ¹,
/// even partial products in ±Σ⁰ (identity excluded), final product h or h⁻¹.
using Connection = std::vector<GroupElement>;

/// Reachable odd partial products from g, with parent links for witnesses.
class ConnectionTree {
 public:
  /// Throws std::invalid_argument if g is not in Σ¹.
  ConnectionTree(const SupportData& sup, const GroupElement& g);

  const GroupElement& root() const noexcept { return root_; }
  /// The set R(g), in canonical order.
  std::set<GroupElement> reached() const;
  bool reaches(const GroupElement& q) const { return parent_.contains(q); }
  /// Shortest sequence g_1..g_{2n+1} whose full product is q.
  std::optional<Connection> path_to(const GroupElement& q) const;

 private:
  struct Link {
    GroupElement previous;
    GroupElement a;
    GroupElement b;
  };
  GroupElement root_;
  std::map<GroupElement, std::optional<Link>> parent_;
};

std::set<GroupElement> connection_closure(const SupportData& sup, const GroupElement& g);
/// Throws std::invalid_argument if g or h is outside Σ¹.
bool are_connected(const SupportData& sup, const GroupElement& g, const GroupElement& h);
/// A connection from g to h, if one exists.
std::optional<Connection> connection_witness(const SupportData& sup, const GroupElement& g, const GroupElement& h);

struct ConnectionClass {
  GroupElement representative;            ///< least member
  std::vector<GroupElement> members;      ///< canonical order
  std::map<GroupElement, Connection> witnesses;  ///< representative -> member, for members != representative

  bool contains(const GroupElement& g) const;
};

/// Partition of Σ¹ into connection classes sorted by representative.
/// Rechecks reflexivity, symmetry, transitivity and inverse closure on all
/// pairs; throws EquivalenceFailure with a witness on failure.
std::vector<ConnectionClass> connection_classes(const SupportData& sup);

}  // namespace lts
