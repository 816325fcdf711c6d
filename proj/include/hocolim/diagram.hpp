#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hocolim/simplicial.hpp"

namespace hocolim {

/// Chain complex with a strict right action by chain automorphisms:
/// action[g] ∘ action[h] = action[h g].
struct GModuleComplex {
  ComplexPtr complex;
  GroupPtr group;
  std::vector<GradedMap> action;  // indexed by group element

  /// Description of the first failure (not a chain map, identity law, or
  /// the pair (g, h) breaking the composition law).
  std::optional<std::string> check() const;
};

/// A free module R^rank with matrices ρ(g) satisfying ρ(g)ρ(h) = ρ(hg).
struct LocalSystem {
  GroupPtr group;
  RingSpec ring;
  std::size_t rank = 0;
  std::vector<Matrix> action;

  std::optional<std::string> check() const;
  /// The contragredient system g ↦ ρ(g^{-1})^T.
  LocalSystem dual() const;
};

/// Diagram of chain complexes over a simplicial base: a complex per vertex
/// and a map F̂(σ) : F(σ_0) → F(σ_n) of degree n-1 per nondegenerate σ.
class KomDiagram {
 public:
  KomDiagram(BasePtr base, std::vector<ComplexPtr> vertex_complexes);

  const SimplicialBase& base() const { return *base_; }
  const BasePtr& base_ptr() const { return base_; }
  const RingSpec& ring() const { return ring_; }
  const ComplexPtr& vertex_complex(std::size_t v) const { return vertices_.at(v); }
  const ComplexPtr& source(int dim, std::size_t id) const;
  const ComplexPtr& target(int dim, std::size_t id) const;
  /// Lowest degree carrying a generator in any vertex complex.
  int min_degree() const;
  int max_degree() const;

  void set_map(int dim, std::size_t id, GradedMap m);
  const GradedMap* stored(int dim, std::size_t id) const;
  const std::map<std::pair<int, std::size_t>, GradedMap>& stored_maps() const { return maps_; }
  /// Nondegenerate simplices of dimension >= 2 without a stored map count as 0.
  void set_higher_default_zero(bool v) { higher_default_zero_ = v; }
  bool higher_default_zero() const { return higher_default_zero_; }

  enum class Kind { stored, identity, zero, missing };
  struct Lookup {
    Kind kind;
    const GradedMap* map;  // for stored and identity
  };
  /// F̂ with the degenerate convention: s_0 of a vertex gives the identity,
  /// other degenerate simplices give 0.
  Lookup lookup(int dim, std::size_t id) const;
  /// F̂ as a concrete map; throws std::out_of_range if missing.
  GradedMap hat(int dim, std::size_t id) const;

 private:
  BasePtr base_;
  RingSpec ring_;
  std::vector<ComplexPtr> vertices_;
  std::vector<GradedMap> identities_;
  std::map<std::pair<int, std::size_t>, GradedMap> maps_;
  bool higher_default_zero_ = false;
};

struct DiagramViolation {
  int dim;
  std::size_t id;
  std::string label;
  int degree;       // source chain degree of the first nonzero residual block
  Matrix residual;  // that block
};

struct MissingMap {
  int dim;
  std::size_t id;
  std::string label;
};

struct DiagramReport {
  std::vector<DiagramViolation> violations;
  std::vector<MissingMap> missing;
  bool ok() const { return violations.empty() && missing.empty(); }
};

/// Σ_{0<ℓ<n} (-1)^{n-ℓ+1} (F̂(d_ℓ σ) - F̂(σ_{ℓ..n}) ∘ F̂(σ_{0..ℓ})), the
/// right-hand side of the structure equation at σ. Throws std::out_of_range
/// on missing data.
GradedMap structure_rhs(const KomDiagram& d, int n, std::size_t id);
/// ∂F̂(σ) + (-1)^n F̂(σ)∂ - structure_rhs(σ).
GradedMap structure_residual(const KomDiagram& d, int n, std::size_t id);

/// Checks every nondegenerate simplex of dimension 1..max_dim (default: the
/// base truncation).
DiagramReport validate_diagram(const KomDiagram& d, std::optional<int> max_dim = std::nullopt);

KomDiagram constant_diagram(BasePtr base, ComplexPtr c);
KomDiagram constant_diagram(BasePtr base, RingSpec ring);

/// Diagram over the nerve: edge (g) ↦ action[g], higher maps 0. Throws
/// PreconditionError naming the failure if the action is not a representation.
KomDiagram from_strict_action(const GModuleComplex& m, int truncation);

struct CompletionCertificate {
  int dim;
  std::size_t id;
  std::string label;
  std::string reason;
};

struct CompletionResult {
  std::optional<KomDiagram> diagram;
  std::optional<CompletionCertificate> certificate;
};

/// Fills missing F̂(σ) dimension by dimension (simplex id order within a
/// dimension) by solving the structure equation.
CompletionResult complete_diagram(const KomDiagram& partial, std::optional<int> max_dim = std::nullopt);

}  // namespace hocolim
