#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "hocolim/oracles.hpp"
#include "hocolim/transform.hpp"

namespace hocolim::io {

/// Malformed input: bad JSON, wrong shapes, unresolved names.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed input whose mathematical objects fail a validator.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation that has no answer (no solution, or an oracle mismatch).
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sparse blocks of a graded map: source degree → (row, col, value), sorted
/// by column then row, zeros dropped.
using Triples = std::vector<std::tuple<std::size_t, std::size_t, Scalar>>;
using SparseBlocks = std::map<int, Triples>;

struct BaseSpec {
  enum class Kind { nerve, simplex };
  Kind kind = Kind::simplex;
  std::string group;  // nerve
  int n = 0;          // simplex
};

struct DiagramSpec {
  enum class Kind { constant, strict, coherent };
  Kind kind = Kind::constant;
  BaseSpec base;
  std::string vertex;                           // one complex for every vertex
  std::map<std::string, std::string> vertices;  // coherent: vertex label → complex
  std::map<std::string, SparseBlocks> action;   // strict: element → map
  std::map<std::string, SparseBlocks> maps;     // coherent: simplex key → map
  bool higher_zero = false;
  bool complete = false;
};

struct GSetSpec {
  std::string group;
  std::vector<std::vector<std::string>> cells;
  std::vector<std::vector<std::vector<std::size_t>>> faces;
  std::map<std::string, std::vector<std::vector<std::size_t>>> action;  // element → per-dimension permutation
};

struct TransformationSpec {
  std::string source;
  std::string target;
  std::map<std::string, SparseBlocks> vertex_maps;  // vertex label → degree-0 map
};

struct Instance {
  std::string description;
  RingSpec ring;
  std::map<std::string, ComplexPtr> complexes;
  std::map<std::string, GroupPtr> groups;
  std::map<std::string, DiagramSpec> diagrams;
  std::map<std::string, GSetSpec> gsets;
  std::map<std::string, TransformationSpec> transformations;
  nlohmann::json requests = nlohmann::json::array();
};

Instance parse_instance(const nlohmann::json& j);
Instance parse_instance_text(const std::string& text);
/// Canonical form: sorted keys, normalized scalars, column-major triples.
nlohmann::json serialize(const Instance& inst);

/// Concrete objects for one instance at a fixed base truncation. Diagrams on
/// the same base descriptor share one base object.
class Workspace {
 public:
  Workspace(const Instance& inst, int truncation);

  const Instance& instance() const { return inst_; }
  int truncation() const { return truncation_; }

  BasePtr base(const BaseSpec& b);
  /// Validated (and completed when requested); throws ValidationError or
  /// InfeasibleError.
  KomDiagram diagram(const std::string& name);
  GModuleComplex strict_module(const std::string& name);
  GSemiSimplicialSet gset(const std::string& name);
  /// Completed from the vertex maps; throws InfeasibleError on an obstruction.
  NatTransformation transformation(const std::string& name);

 private:
  KomDiagram raw_diagram(const std::string& name);

  const Instance& inst_;
  int truncation_;
  std::map<std::tuple<int, std::string, int>, BasePtr> bases_;
  std::map<std::string, KomDiagram> diagrams_;
};

std::string scalar_text(const Scalar& v);

}  // namespace hocolim::io
