#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hocolim/complexes.hpp"

namespace hocolim {

/// Simplicial (or semi-simplicial) set known up to a truncation dimension.
/// Simplices of each dimension are numbered 0..count(dim)-1.
class SimplicialBase {
 public:
  virtual ~SimplicialBase() = default;

  virtual int truncation() const = 0;
  /// Number of dim-simplices, degenerate ones included.
  virtual std::size_t count(int dim) const = 0;
  /// d_i, 0 <= i <= dim.
  virtual std::size_t face(int dim, std::size_t id, int i) const = 0;
  virtual bool has_degeneracies() const = 0;
  /// s_j : dim -> dim + 1, 0 <= j <= dim; requires dim < truncation.
  virtual std::size_t degeneracy(int dim, std::size_t id, int j) const = 0;
  virtual bool is_nondegenerate(int dim, std::size_t id) const = 0;
  virtual std::string label(int dim, std::size_t id) const = 0;
  virtual std::optional<std::size_t> find(int dim, const std::string& label) const;
  virtual std::vector<std::size_t> nondegenerate(int dim) const;

  /// True if the simplex lies in the image of s_j.
  bool in_image_of_degeneracy(int dim, std::size_t id, int j) const;
  /// σ_{i0,...,ik} for strictly increasing indices in [0, dim].
  std::size_t sub_simplex(int dim, std::size_t id, const std::vector<int>& indices) const;
  /// σ_{0..k}
  std::size_t front(int dim, std::size_t id, int k) const;
  /// σ_{k..dim}
  std::size_t back(int dim, std::size_t id, int k) const;
  /// The k-th vertex.
  std::size_t vertex(int dim, std::size_t id, int k) const;

  /// Checks d_i d_j = d_{j-1} d_i and, with degeneracies, the mixed
  /// identities on every simplex. Returns a description of the first failure.
  std::optional<std::string> check_identities() const;
};

using BasePtr = std::shared_ptr<const SimplicialBase>;

/// Finitely many nondegenerate simplices with explicit faces. Simplices are
/// stored in Eilenberg-Zilber form: a nondegenerate root plus a monotone
/// surjection. Degenerate labels read "root^0012" (the surjection's values).
class FiniteSimplicialSet : public SimplicialBase {
 public:
  explicit FiniteSimplicialSet(int truncation, bool degeneracies = true);

  void add_vertex(const std::string& name);
  /// faces[i] is the label of d_i (possibly degenerate, "v^00").
  void add_simplex(int dim, const std::string& name, const std::vector<std::string>& faces);
  /// Builds all tables and verifies the simplicial identities; throws
  /// std::invalid_argument on failure.
  void finalize();

  int truncation() const override { return truncation_; }
  std::size_t count(int dim) const override;
  std::size_t face(int dim, std::size_t id, int i) const override;
  bool has_degeneracies() const override { return degeneracies_; }
  std::size_t degeneracy(int dim, std::size_t id, int j) const override;
  bool is_nondegenerate(int dim, std::size_t id) const override;
  std::string label(int dim, std::size_t id) const override;
  std::optional<std::size_t> find(int dim, const std::string& label) const override;

 private:
  struct Key {
    int root_dim;
    std::size_t root;
    std::vector<int> eta;
    auto operator<=>(const Key&) const = default;
  };
  struct Root {
    std::string name;
    std::vector<Key> faces;
  };

  Key parse_key(const std::string& label) const;
  Key face_of_key(const Key& k, int i) const;
  void require_finalized() const;

  int truncation_;
  bool degeneracies_;
  bool finalized_ = false;
  std::vector<std::vector<Root>> roots_;
  std::vector<std::map<std::string, std::size_t>> root_index_;
  std::vector<std::vector<Key>> all_;
  std::vector<std::map<Key, std::size_t>> index_;
  std::vector<std::vector<std::size_t>> faces_;  // [dim][id * (dim + 1) + i]
  std::vector<std::vector<std::size_t>> degens_;
};

/// Δ^n; simplices are nondecreasing vertex sequences, labelled "0012".
class StandardSimplex : public SimplicialBase {
 public:
  StandardSimplex(int n, int truncation);

  int n() const { return n_; }
  int truncation() const override { return truncation_; }
  std::size_t count(int dim) const override;
  std::size_t face(int dim, std::size_t id, int i) const override;
  bool has_degeneracies() const override { return true; }
  std::size_t degeneracy(int dim, std::size_t id, int j) const override;
  bool is_nondegenerate(int dim, std::size_t id) const override;
  std::string label(int dim, std::size_t id) const override;
  std::optional<std::size_t> find(int dim, const std::string& label) const override;

  const std::vector<int>& sequence(int dim, std::size_t id) const { return simplices_.at(dim).at(id); }
  std::size_t id_of(const std::vector<int>& seq) const;

 private:
  int n_;
  int truncation_;
  std::vector<std::vector<std::vector<int>>> simplices_;
  std::vector<std::map<std::vector<int>, std::size_t>> index_;
};

/// Finite group by multiplication table; mul(a, b) is the product ab.
class GroupTable {
 public:
  GroupTable(std::vector<std::string> names, std::vector<std::vector<std::size_t>> table, std::size_t identity);
  static GroupTable cyclic(std::size_t n);

  std::size_t order() const { return names_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  const std::string& name(std::size_t a) const { return names_.at(a); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }
  std::optional<std::size_t> find(const std::string& name) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_;
  std::vector<std::size_t> inverse_;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

/// Nerve of a finite group, stored implicitly. A p-simplex is a tuple
/// (g_p, ..., g_1); d_0 drops g_1, d_p drops g_p and d_i replaces
/// (g_{i+1}, g_i) by the product g_i g_{i+1}. Labels are "g_p/.../g_1"
/// and "*" for the vertex.
class GroupNerve : public SimplicialBase {
 public:
  GroupNerve(GroupPtr group, int truncation);

  const GroupTable& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  int truncation() const override { return truncation_; }
  std::size_t count(int dim) const override;
  std::size_t face(int dim, std::size_t id, int i) const override;
  bool has_degeneracies() const override { return true; }
  std::size_t degeneracy(int dim, std::size_t id, int j) const override;
  bool is_nondegenerate(int dim, std::size_t id) const override;
  std::string label(int dim, std::size_t id) const override;
  std::optional<std::size_t> find(int dim, const std::string& label) const override;
  std::vector<std::size_t> nondegenerate(int dim) const override;

  /// Entries g_1..g_p (index 0 holds g_1).
  std::vector<std::size_t> tuple(int dim, std::size_t id) const;
  std::size_t encode(const std::vector<std::size_t>& tuple) const;

 private:
  GroupPtr group_;
  int truncation_;
};

/// Δ^k × S: a simplex is a pair (a, b) of equal-dimension simplices.
/// Truncated at S's truncation unless a smaller one is requested.
class ProductWithSimplex : public SimplicialBase {
 public:
  ProductWithSimplex(int k, BasePtr s, std::optional<int> truncation = std::nullopt);

  const StandardSimplex& simplex() const { return delta_; }
  const SimplicialBase& factor() const { return *s_; }
  const BasePtr& factor_ptr() const { return s_; }
  int truncation() const override { return truncation_; }
  std::size_t count(int dim) const override;
  std::size_t face(int dim, std::size_t id, int i) const override;
  bool has_degeneracies() const override { return true; }
  std::size_t degeneracy(int dim, std::size_t id, int j) const override;
  bool is_nondegenerate(int dim, std::size_t id) const override;
  std::string label(int dim, std::size_t id) const override;

  std::size_t pair(int dim, std::size_t a, std::size_t b) const;
  std::size_t first(int dim, std::size_t id) const { return id / s_->count(dim); }
  std::size_t second(int dim, std::size_t id) const { return id % s_->count(dim); }

 private:
  StandardSimplex delta_;
  BasePtr s_;
  int truncation_;
};

BasePtr standard_simplex(int n, int truncation);
BasePtr nerve_of_group(GroupPtr g, int truncation);
BasePtr product_with_delta(int k, BasePtr s, std::optional<int> truncation = std::nullopt);
/// Three vertices, three edges.
BasePtr boundary_of_triangle(int truncation);
/// One vertex v, one edge e with both faces v.
BasePtr simplicial_circle(int truncation);

/// One generator per nondegenerate simplex (every simplex of a semi-simplicial
/// base), ∂σ = Σ (-1)^i d_i σ with degenerate faces dropped; degrees 0..max_dim.
ChainComplex normalized_chains(const SimplicialBase& s, RingSpec ring, std::optional<int> max_dim = std::nullopt);

}  // namespace hocolim
