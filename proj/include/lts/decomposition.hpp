#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lts/connectivity.hpp"
#include "lts/embedding.hpp"
#include "lts/triple_system.hpp"

namespace lts {

/// The subtriple I_[g] = E_{1,[g]} ⊕ V_[g] attached to a connection class.
struct ClassIdeal {
  ConnectionClass cls;
  Subspace core;    ///< span of {E_h, E_k, E_(hk)^-1}, h in [g], k in [g] ∪ {1}
  Subspace vertex;  ///< ⊕_{h in [g]} E_h
  Subspace total;   ///< core + vertex
  bool subsystem = false;
  bool ideal = false;
};

/// Vanishing of all products between two distinct class ideals, checked on
/// basis triples in every slot arrangement and both orders.
struct OrthogonalityEntry {
  std::size_t first = 0;
  std::size_t second = 0;
  std::size_t products_checked = 0;
  bool holds = true;
  std::optional<ProductWitness> witness;
};

/// Why a system fails to be simple. Reports never assert simplicity.
struct Obstruction {
  std::string kind;  ///< zero_product, proper_class_ideal, multiple_classes, not_tight, probe_ideal
  std::string detail;
  std::optional<Subspace> witness;
};

struct ObstructionOptions {
  std::size_t random_probes = 16;
  std::uint64_t seed = 0;
};

struct DecompositionReport {
  SupportData supports;
  std::vector<ConnectionClass> classes;
  Subspace identity_component;  ///< E_1
  Subspace tight_span;          ///< span of {E_g, E_h, E_(gh)^-1}, g in Σ¹, h in Σ¹ ∪ {1}
  Subspace U;                   ///< greedy complement of tight_span in E_1
  std::vector<ClassIdeal> ideals;
  std::vector<OrthogonalityEntry> orthogonality;
  bool spans = false;  ///< U + Σ I = E
  bool tight = false;
  Subspace annihilator;
  bool pairwise_intersections_zero = false;
  bool corollary_applies = false;    ///< tight and Ann = 0
  std::optional<bool> direct_sum;    ///< set only when the corollary applies
  std::vector<Obstruction> obstructions;

  /// Every attached certificate holds.
  bool certified() const;
};

Subspace class_core_span(const GradedLTS& e, const ConnectionClass& cls);
/// Throws IdealCertificateFailure with a witness product if the result is
/// not a subsystem or not an ideal.
ClassIdeal class_ideal(const GradedLTS& e, const ConnectionClass& cls);

DecompositionReport decompose(const GradedLTS& e, const StandardEmbedding& emb, const ObstructionOptions& options = {});

/// One tuple of degrees satisfying a statement's hypotheses.
struct LemmaInstance {
  std::vector<GroupElement> degrees;
  std::string detail;
};

struct LemmaResult {
  std::string id;
  std::string statement;
  std::size_t checked = 0;     ///< degree tuples satisfying the hypotheses
  std::size_t nonvacuous = 0;  ///< premise holds (implications) or every factor is nonzero (vanishing)
  std::size_t failures = 0;
  std::optional<LemmaInstance> example;
  std::vector<LemmaInstance> failure_examples;  ///< first few only
};

struct LemmaReport {
  std::vector<LemmaResult> results;
  bool all_hold() const;
};

/// Exhaustive check of the structural vanishing and membership statements
/// relating connections to products in E and in the standard embedding.
LemmaReport verify_structure_lemmas(const GradedLTS& e, const StandardEmbedding& emb, const SupportData& sup,
                                    const std::vector<ConnectionClass>& classes);

/// Contrapositive certificates only; an empty list means no obstruction found.
std::vector<Obstruction> simplicity_obstruction(const GradedLTS& e, const DecompositionReport& report,
                                                const ObstructionOptions& options = {});

}  // namespace lts
