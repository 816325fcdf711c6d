#pragma once

#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hocolim/diagram.hpp"

namespace hocolim {

enum class Flavor { thin, fat };

/// [σ] ⊗ x with x the index-th generator of F(σ_0) in chain degree.
struct HocolimGenerator {
  int dim;
  std::size_t simplex;
  int chain_degree;
  std::size_t index;
};

/// Homotopy colimit (thin: nondegenerate simplices only; fat: all simplices)
/// materialized in total degrees [lo - 1, hi + 1]. Homology and cohomology
/// are exact for degrees in [lo, hi].
class HocolimComplex {
 public:
  HocolimComplex(const KomDiagram& d, int lo, int hi, Flavor flavor);

  const KomDiagram& diagram() const { return diagram_; }
  Flavor flavor() const { return flavor_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  const ChainComplex& complex() const { return *complex_; }
  const ComplexPtr& complex_ptr() const { return complex_; }
  const RingSpec& ring() const { return complex_->ring(); }

  const std::vector<HocolimGenerator>& generators(int total_degree) const;
  std::optional<std::size_t> position(int total_degree, int dim, std::size_t simplex, std::size_t index) const;
  /// Filtration level (simplex dimension) of a generator.
  int filtration(int total_degree, std::size_t pos) const { return generators(total_degree).at(pos).dim; }

  /// ∂([σ]⊗x) as a sparse vector in total degree dim + chain_degree - 1.
  SparseColumn boundary(const HocolimGenerator& g) const;

 private:
  bool included(int dim, std::size_t simplex) const;

  KomDiagram diagram_;
  Flavor flavor_;
  int lo_;
  int hi_;
  std::vector<std::vector<HocolimGenerator>> gens_;  // index t - (lo - 1)
  std::vector<std::unordered_map<std::size_t, std::size_t>> offsets_;  // per t: key dim*stride+simplex → first position
  std::size_t stride_ = 0;
  ComplexPtr complex_;
};

/// Smallest base truncation that build_hocolim needs for the window.
int required_truncation(const KomDiagram& d, int hi);

/// Throws PreconditionError if the diagram fails validation or if the base
/// truncation is below required_truncation (the message names it).
HocolimComplex build_hocolim(const KomDiagram& d, int lo, int hi);
HocolimComplex build_fat_hocolim(const KomDiagram& d, int lo, int hi);

HomologySummary hypercohomology(const HocolimComplex& h, int lo, int hi);
HomologySummary hypercohomology(const HocolimComplex& h);
HomologySummary hocolim_homology(const HocolimComplex& h, int lo, int hi);

/// Ring-valued function on the generators of one total degree.
struct Cochain {
  int degree = 0;
  std::vector<Scalar> values;
};

Cochain zero_cochain(const HocolimComplex& h, int degree);
/// δα = α ∘ ∂, of degree + 1.
Cochain coboundary(const HocolimComplex& h, const Cochain& alpha);
bool is_cocycle(const HocolimComplex& h, const Cochain& alpha);

/// β ∈ C^n(hocolim I_R) acting on α ∈ C^m(hocolim F):
/// (β·α)([σ]⊗x) = α([σ_{0..k-n}]⊗x) · β([σ_{k-n..k}]⊗1).
Cochain cochain_product(const HocolimComplex& unit, const Cochain& beta, const HocolimComplex& h, const Cochain& alpha);

/// Over a field: class of β·α in the cohomology basis of degree n + m.
/// Throws PreconditionError if either input is not a cocycle.
std::vector<Scalar> module_action_on_cohomology(const HocolimComplex& unit, const Cochain& beta,
                                                const HocolimComplex& h, const Cochain& alpha);
/// Over a field: matrix of α ↦ β·α from H^m to H^{m+n} in the bases of
/// cohomology_basis.
Matrix action_matrix(const HocolimComplex& unit, const Cochain& beta, const HocolimComplex& h, int m);

/// Cochain of a cohomology basis element.
Cochain cohomology_representative(const HocolimComplex& h, int degree, std::size_t k);

/// [σ]⊗1 ↦ (-1)^{binom(n+1,2)} σ from hocolim of a constant unit diagram
/// (built with lo = 0) to normalized chains truncated at hi + 1.
struct RealizationCheck {
  GradedMap map;
  bool chain_map = false;
  bool isomorphism = false;
};
RealizationCheck realization_comparison(const HocolimComplex& h);

struct QuotientReport {
  GradedMap pi;
  bool chain_map = false;
  struct Degree {
    int degree;
    HomologyGroup fat;
    HomologyGroup thin;
    std::size_t induced_rank;  // over the fraction field for Z
    bool isomorphism;
  };
  std::vector<Degree> degrees;
  bool all_isomorphisms() const;
};

/// Π : fat → thin kills degenerate generators.
QuotientReport quotient_comparison(const HocolimComplex& fat, const HocolimComplex& thin);

/// E¹ of the fat hocolim over a field: row complexes indexed by simplex
/// dimension p for each fiber degree q, generators [σ]⊗h with h running over
/// a homology basis of F(σ_0).
struct FatE1Report {
  bool subcomplex = true;  // d¹ of degenerate generators stays degenerate
  bool acyclic = true;     // degenerate part has zero homology for p < top
  std::map<std::pair<int, int>, std::size_t> degenerate_homology;  // (p, q) → dim
  std::map<std::pair<int, int>, std::size_t> generators;           // (p, q) → count (all)
  std::map<std::pair<int, int>, std::size_t> degenerate_generators;
};
FatE1Report fat_e1_degenerate_check(const KomDiagram& d, int max_p);

struct SpectralSequencePage {
  int r;
  std::map<std::pair<int, int>, std::size_t> dims;  // (p, q)
  /// d_r : E_{p,q} → E_{p-r, q+r-1}, keyed by source.
  std::map<std::pair<int, int>, Matrix> differentials;
  /// Σ_{p+q=t} dim E_{p,q}
  std::size_t total(int t) const;
};

/// Pages r = 1..r_max of the filtration by simplex dimension, restricted to
/// total degrees in [h.lo, h.hi]. Field coefficients only.
std::vector<SpectralSequencePage> spectral_sequence(const HocolimComplex& h, int r_max);
/// A page past which all differentials vanish.
int infinity_page(const HocolimComplex& h);

/// Cohomology of the normalized inhomogeneous bar cochains C^p(G; M) with
/// the left action g·m = ρ(g^{-1}) m.
HomologySummary group_cohomology_local(const LocalSystem& m, int lo, int hi);

/// Fiber homology H_q(C) of a G-module complex as a local system (field only).
LocalSystem homology_local_system(const GModuleComplex& m, int q);

}  // namespace hocolim
