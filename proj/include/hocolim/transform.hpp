#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hocolim/hocolim.hpp"

namespace hocolim {

/// Ḡ(σ;i) : F_0(σ_0) → F_1(σ_n) of degree n, for nondegenerate σ and
/// 0 <= i <= n. Degenerate σ give 0.
class NatTransformation {
 public:
  /// Both diagrams must live on the same base object.
  NatTransformation(KomDiagram source, KomDiagram target);

  const KomDiagram& source() const { return source_; }
  const KomDiagram& target() const { return target_; }
  const SimplicialBase& base() const { return source_.base(); }

  void set(int dim, std::size_t id, int i, GradedMap m);
  const GradedMap* stored(int dim, std::size_t id, int i) const;
  /// Missing components of dimension >= 1 count as 0.
  void set_higher_default_zero(bool v) { higher_default_zero_ = v; }
  bool has(int dim, std::size_t id, int i) const;
  /// Ḡ(σ;i); throws std::out_of_range if missing.
  GradedMap bar(int dim, std::size_t id, int i) const;
  /// Σ_i (-1)^i Ḡ(σ;i).
  GradedMap summed(int dim, std::size_t id) const;

  /// Identity on a diagram: Ḡ(v;0) = id, higher components 0.
  static NatTransformation identity(const KomDiagram& d);

 private:
  KomDiagram source_;
  KomDiagram target_;
  std::map<std::tuple<int, std::size_t, int>, GradedMap> maps_;
  bool higher_default_zero_ = false;
};

/// G(σ) : F_0(σ_0) → F_1(σ_n) of degree n for every simplex, degenerate ones
/// included (they default to 0 in dimension >= 1).
class SummedNatTransformation {
 public:
  SummedNatTransformation(KomDiagram source, KomDiagram target);

  const KomDiagram& source() const { return source_; }
  const KomDiagram& target() const { return target_; }
  const SimplicialBase& base() const { return source_.base(); }

  void set(int dim, std::size_t id, GradedMap m);
  void set_higher_default_zero(bool v) { higher_default_zero_ = v; }
  bool has(int dim, std::size_t id) const;
  GradedMap map(int dim, std::size_t id) const;

  static SummedNatTransformation identity(const KomDiagram& d);
  /// G(σ) = Σ_i (-1)^i Ḡ(σ;i) up to the base truncation.
  static SummedNatTransformation from(const NatTransformation& t);

 private:
  KomDiagram source_;
  KomDiagram target_;
  std::map<std::pair<int, std::size_t>, GradedMap> maps_;
  bool higher_default_zero_ = false;
};

struct TransformationViolation {
  int dim;
  std::size_t id;
  std::string label;
  int degree;
  Matrix residual;
};

struct TransformationReport {
  std::vector<TransformationViolation> violations;
  std::vector<MissingMap> missing;
  bool ok() const { return violations.empty() && missing.empty(); }
};

/// Residual of the alternating-sum equation at a nondegenerate σ.
GradedMap nat_residual(const NatTransformation& t, int dim, std::size_t id);
/// Residual of the summed equation at any σ.
GradedMap summed_residual(const SummedNatTransformation& t, int dim, std::size_t id);

/// Checks dimensions 0..max_dim (default: the base truncation).
TransformationReport validate_nat_trans(const NatTransformation& t, std::optional<int> max_dim = std::nullopt);
TransformationReport validate_nat_trans(const SummedNatTransformation& t, std::optional<int> max_dim = std::nullopt);

/// f_G : hocolim F_0 → hocolim F_1 on the thin complexes h0, h1 (same window).
GradedMap induced_map(const NatTransformation& t, const HocolimComplex& h0, const HocolimComplex& h1);
/// Γ on the fat complexes h0, h1 (same window).
GradedMap induced_map_summed(const SummedNatTransformation& t, const HocolimComplex& h0, const HocolimComplex& h1);

/// Pullback α ↦ α ∘ f of a cochain along a degree-0 map.
Cochain pullback(const GradedMap& f, const Cochain& alpha);

struct HomotopySearch {
  enum class Status { found, infeasible, inconclusive };
  Status status;
  std::optional<GradedMap> homotopy;     // found
  std::optional<int> certificate_degree;  // infeasible: g - f is nonzero on H_degree
};

/// h of degree 1 with ∂h + h∂ = g - f on source degrees [lo, hi].
HomotopySearch find_chain_homotopy(const GradedMap& f, const GradedMap& g, int lo, int hi);

/// Restriction of a diagram over Δ^k × C to {a} × C.
KomDiagram restrict_to_vertex(const KomDiagram& h, int a);
/// Ḡ(σ;i) = Ĥ(a^{i+1} b^{n+1-i}, s_i σ) for a diagram over Δ^k × C, a < b.
NatTransformation extract_transformation(const KomDiagram& h, int a, int b);

/// Partial diagram over Δ^k × C (k = layers.size() - 1): layer a on {a} × C,
/// vertex_maps[{a, b}][v] on the edge (a,b) × s_0 v, and F_b(e) ∘ G_ab(v) on
/// each diagonal edge (a,b) × e. Higher simplices are left for completion.
KomDiagram product_skeleton(const std::vector<KomDiagram>& layers,
                            const std::map<std::pair<int, int>, std::vector<GradedMap>>& vertex_maps,
                            std::optional<int> truncation = std::nullopt);

struct TransformationCompletion {
  std::optional<NatTransformation> transformation;
  std::optional<CompletionCertificate> certificate;
};

/// Builds the Δ¹ × C skeleton from vertex components and completes it.
TransformationCompletion complete_transformation(const KomDiagram& f0, const KomDiagram& f1,
                                                 const std::vector<GradedMap>& vertex_maps,
                                                 std::optional<int> max_dim = std::nullopt);

}  // namespace hocolim
