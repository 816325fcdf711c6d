#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hocolim/linalg.hpp"

namespace hocolim {

/// Raised when an operation is handed input that fails its validator.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Bounded free chain complex, homologically graded, with named generators.
/// ∂_j : C_j → C_{j-1} is stored for j in [lo, hi + 1]; all other degrees are 0.
class ChainComplex {
 public:
  ChainComplex() = default;
  /// generators[i] lists the names in degree lo + i; differentials start at 0.
  ChainComplex(RingSpec ring, int lo, std::vector<std::vector<std::string>> generators);
  /// Empty complex concentrated nowhere.
  static ChainComplex zero(RingSpec ring);
  /// The ring itself in degree `degree`, one generator named `name`.
  static ChainComplex unit(RingSpec ring, int degree = 0, const std::string& name = "1");

  const RingSpec& ring() const { return ring_; }
  int lo() const { return lo_; }
  /// lo - 1 when empty.
  int hi() const { return lo_ + static_cast<int>(generators_.size()) - 1; }
  std::size_t rank(int j) const;
  std::size_t total_rank() const;
  const std::vector<std::string>& generators(int j) const;
  std::optional<std::size_t> index_of(int j, const std::string& name) const;

  /// rank(j-1) x rank(j); a 0-sized matrix outside the stored range.
  const Matrix& differential(int j) const;
  void set_differential(int j, Matrix d);

  /// Degrees raised by k; differential multiplied by (-1)^k.
  ChainComplex shifted(int k) const;
  /// D_m = Hom(C_{-m}, R) with ∂^D_m = (∂_{-m+1})^T.
  ChainComplex dual() const;
  /// Same generators and differentials, coefficients reread in `ring`
  /// (integral entries only; Z → F_p reduces).
  ChainComplex change_ring(RingSpec ring) const;

  friend bool operator==(const ChainComplex& a, const ChainComplex& b);

 private:
  RingSpec ring_;
  int lo_ = 0;
  std::vector<std::vector<std::string>> generators_;
  std::vector<Matrix> differentials_;  // index j - lo for j in [lo, hi + 1]
  Matrix empty_;
};

using ComplexPtr = std::shared_ptr<const ChainComplex>;

struct ComplexViolation {
  int degree;  // ∂_{degree-1} ∘ ∂_degree ≠ 0
  std::size_t row;
  std::size_t col;
  Scalar value;
};

std::optional<ComplexViolation> verify_complex(const ChainComplex& c);

/// Map of degree k: component(j) : source_j → target_{j+k}.
class GradedMap {
 public:
  GradedMap() = default;
  GradedMap(ComplexPtr source, ComplexPtr target, int degree);

  static GradedMap identity(ComplexPtr c);
  static GradedMap zero(ComplexPtr source, ComplexPtr target, int degree);

  const ComplexPtr& source() const { return source_; }
  const ComplexPtr& target() const { return target_; }
  int degree() const { return degree_; }
  const RingSpec& ring() const { return source_->ring(); }

  /// target.rank(j+k) x source.rank(j); zero outside the source range.
  const Matrix& component(int j) const;
  void set_component(int j, Matrix m);
  bool is_zero() const;

  GradedMap negated() const;
  GradedMap scaled(const Scalar& s) const;
  friend GradedMap operator+(const GradedMap& a, const GradedMap& b);
  friend GradedMap operator-(const GradedMap& a, const GradedMap& b);
  friend bool operator==(const GradedMap& a, const GradedMap& b);
  /// (g ∘ f); requires f.target compatible with g.source.
  friend GradedMap compose(const GradedMap& g, const GradedMap& f);

  /// ∂ ∘ f as a map of degree k - 1.
  GradedMap post_differential() const;
  /// f ∘ ∂ as a map of degree k - 1.
  GradedMap pre_differential() const;

 private:
  ComplexPtr source_;
  ComplexPtr target_;
  int degree_ = 0;
  std::vector<Matrix> components_;  // index j - source.lo
  std::vector<Matrix> outside_;     // zero blocks handed out for other degrees
};

/// True when the complexes have the same ring and ranks in every degree.
bool same_shape(const ChainComplex& a, const ChainComplex& b);

struct ChainMapViolation {
  int degree;  // source degree j where ∂ f_j ≠ f_{j-1} ∂
  std::size_t row;
  std::size_t col;
  Scalar d_after_f;
  Scalar f_after_d;
};

std::optional<ChainMapViolation> verify_chain_map(const GradedMap& f);

/// Cone_n = D_n ⊕ C_{n-1}, ∂ = [[∂_D, f], [0, -∂_C]]. Generators are
/// prefixed "t:" (target) and "s:" (source).
ChainComplex mapping_cone(const GradedMap& f);

struct HomologyGroup {
  std::size_t free_rank = 0;
  std::vector<Scalar> torsion;  // invariant factors > 1, each dividing the next
  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

struct HomologySummary {
  RingSpec ring;
  int lo = 0;
  std::vector<HomologyGroup> groups;  // degree lo + i

  int hi() const { return lo + static_cast<int>(groups.size()) - 1; }
  const HomologyGroup& at(int j) const;
  /// "Z", "Z/3", "F2^2", "Z + Z/2", "0".
  std::string describe(int j) const;
  friend bool operator==(const HomologySummary&, const HomologySummary&) = default;
};

/// H_j for j in [lo, hi]; defaults to the complex's own range.
HomologySummary homology(const ChainComplex& c);
HomologySummary homology(const ChainComplex& c, int lo, int hi);
/// H^j = H_{-j}(dual), j in [lo, hi].
HomologySummary cohomology(const ChainComplex& c);
HomologySummary cohomology(const ChainComplex& c, int lo, int hi);

/// Over a field: H_j as cycles modulo boundaries.
Subquotient homology_basis(const ChainComplex& c, int j);
/// Over a field: H^j as cocycles (in C_j^* coordinates) modulo coboundaries.
Subquotient cohomology_basis(const ChainComplex& c, int j);

/// Over a field: rank of H_j(f) for a degree-0 chain map.
std::size_t induced_homology_rank(const GradedMap& f, int j);

}  // namespace hocolim

namespace hocolim {

/// Some X of degree k from source to target with ∂∘X + sign·X∘∂ = rhs, where
/// rhs has degree k - 1; nullopt if no solution exists over the ring. With a
/// window, the equation is imposed only on source degrees inside it.
std::optional<GradedMap> solve_commutator(const ComplexPtr& source, const ComplexPtr& target, int k, int sign,
                                          const GradedMap& rhs,
                                          std::optional<std::pair<int, int>> window = std::nullopt);

}  // namespace hocolim
