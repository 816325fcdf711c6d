#include "hocolim/simplicial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hocolim {

std::optional<std::size_t> SimplicialBase::find(int dim, const std::string& l) const {
  if (dim < 0 || dim > truncation()) return std::nullopt;
  for (std::size_t id = 0; id < count(dim); ++id) {
    if (label(dim, id) == l) return id;
  }
  return std::nullopt;
}

std::vector<std::size_t> SimplicialBase::nondegenerate(int dim) const {
  std::vector<std::size_t> out;
  if (dim < 0 || dim > truncation()) return out;
  for (std::size_t id = 0; id < count(dim); ++id) {
    if (is_nondegenerate(dim, id)) out.push_back(id);
  }
  return out;
}

bool SimplicialBase::in_image_of_degeneracy(int dim, std::size_t id, int j) const {
  if (!has_degeneracies() || dim == 0) return false;
  return degeneracy(dim - 1, face(dim, id, j), j) == id;
}

std::size_t SimplicialBase::sub_simplex(int dim, std::size_t id, const std::vector<int>& indices) const {
  std::vector<bool> keep(dim + 1, false);
  int prev = -1;
  for (int i : indices) {
    if (i <= prev || i > dim) throw std::invalid_argument("sub_simplex: indices must increase within [0, dim]");
    keep[i] = true;
    prev = i;
  }
  int d = dim;
  for (int i = dim; i >= 0; --i) {
    if (!keep[i]) {
      id = face(d, id, i);
      --d;
    }
  }
  return id;
}

std::size_t SimplicialBase::front(int dim, std::size_t id, int k) const {
  for (int d = dim; d > k; --d) id = face(d, id, d);
  return id;
}

std::size_t SimplicialBase::back(int dim, std::size_t id, int k) const {
  for (int d = dim; d > dim - k; --d) id = face(d, id, 0);
  return id;
}

std::size_t SimplicialBase::vertex(int dim, std::size_t id, int k) const { return back(k, front(dim, id, k), k); }

std::optional<std::string> SimplicialBase::check_identities() const {
  auto where = [&](int dim, std::size_t id) { return "simplex " + label(dim, id) + " (dim " + std::to_string(dim) + ")"; };
  for (int dim = 2; dim <= truncation(); ++dim) {
    for (std::size_t id = 0; id < count(dim); ++id) {
      for (int j = 1; j <= dim; ++j) {
        for (int i = 0; i < j; ++i) {
          if (face(dim - 1, face(dim, id, j), i) != face(dim - 1, face(dim, id, i), j - 1)) {
            return "d" + std::to_string(i) + "d" + std::to_string(j) + " identity fails on " + where(dim, id);
          }
        }
      }
    }
  }
  if (!has_degeneracies()) return std::nullopt;
  for (int dim = 0; dim < truncation(); ++dim) {
    for (std::size_t id = 0; id < count(dim); ++id) {
      for (int j = 0; j <= dim; ++j) {
        const std::size_t x = degeneracy(dim, id, j);
        for (int i = 0; i <= dim + 1; ++i) {
          std::size_t expect;
          if (i < j) {
            expect = degeneracy(dim - 1, face(dim, id, i), j - 1);
          } else if (i == j || i == j + 1) {
            expect = id;
          } else {
            expect = degeneracy(dim - 1, face(dim, id, i - 1), j);
          }
          if (face(dim + 1, x, i) != expect) {
            return "d" + std::to_string(i) + "s" + std::to_string(j) + " identity fails on " + where(dim, id);
          }
        }
        if (dim + 2 <= truncation()) {
          for (int i = 0; i <= j; ++i) {
            if (degeneracy(dim + 1, x, i) != degeneracy(dim + 1, degeneracy(dim, id, i), j + 1)) {
              return "s" + std::to_string(i) + "s" + std::to_string(j) + " identity fails on " + where(dim, id);
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

FiniteSimplicialSet::FiniteSimplicialSet(int truncation, bool degeneracies)
    : truncation_(truncation), degeneracies_(degeneracies) {
  if (truncation < 0) throw std::invalid_argument("FiniteSimplicialSet: negative truncation");
  roots_.resize(truncation + 1);
  root_index_.resize(truncation + 1);
}

void FiniteSimplicialSet::add_vertex(const std::string& name) { add_simplex(0, name, {}); }

FiniteSimplicialSet::Key FiniteSimplicialSet::parse_key(const std::string& label) const {
  std::string root = label;
  std::vector<int> eta;
  const auto caret = label.find('^');
  if (caret != std::string::npos) {
    root = label.substr(0, caret);
    for (char ch : label.substr(caret + 1)) {
      if (ch < '0' || ch > '9') throw std::invalid_argument("bad degenerate label '" + label + "'");
      eta.push_back(ch - '0');
    }
  }
  for (int m = 0; m <= truncation_; ++m) {
    auto it = root_index_[m].find(root);
    if (it == root_index_[m].end()) continue;
    if (eta.empty()) {
      eta.resize(m + 1);
      std::iota(eta.begin(), eta.end(), 0);
    }
    bool ok = !eta.empty() && eta.front() == 0 && eta.back() == m;
    for (std::size_t i = 1; ok && i < eta.size(); ++i) ok = eta[i] == eta[i - 1] || eta[i] == eta[i - 1] + 1;
    if (!ok) throw std::invalid_argument("label '" + label + "' does not describe a monotone surjection");
    if (!degeneracies_ && static_cast<int>(eta.size()) != m + 1) {
      throw std::invalid_argument("degenerate face '" + label + "' in a semi-simplicial set");
    }
    return Key{m, it->second, eta};
  }
  throw std::invalid_argument("unknown simplex '" + root + "'");
}

void FiniteSimplicialSet::add_simplex(int dim, const std::string& name, const std::vector<std::string>& faces) {
  if (finalized_) throw std::logic_error("FiniteSimplicialSet already finalized");
  if (dim < 0 || dim > truncation_) throw std::invalid_argument("simplex '" + name + "' above truncation");
  if (static_cast<int>(faces.size()) != (dim == 0 ? 0 : dim + 1)) {
    throw std::invalid_argument("simplex '" + name + "' needs " + std::to_string(dim + 1) + " faces");
  }
  if (name.empty() || name.find('^') != std::string::npos) throw std::invalid_argument("bad simplex name '" + name + "'");
  for (const auto& idx : root_index_) {
    if (idx.count(name)) throw std::invalid_argument("duplicate simplex name '" + name + "'");
  }
  Root r{name, {}};
  for (const auto& f : faces) {
    Key k = parse_key(f);
    if (static_cast<int>(k.eta.size()) != dim) {
      throw std::invalid_argument("face '" + f + "' of '" + name + "' has the wrong dimension");
    }
    r.faces.push_back(std::move(k));
  }
  root_index_[dim][name] = roots_[dim].size();
  roots_[dim].push_back(std::move(r));
}

FiniteSimplicialSet::Key FiniteSimplicialSet::face_of_key(const Key& k, int i) const {
  std::vector<int> eta = k.eta;
  const int v = eta[i];
  eta.erase(eta.begin() + i);
  if (std::find(eta.begin(), eta.end(), v) != eta.end()) return Key{k.root_dim, k.root, eta};
  for (auto& e : eta) {
    if (e > v) --e;
  }
  const Key& rf = roots_[k.root_dim][k.root].faces[v];
  std::vector<int> composed;
  for (int e : eta) composed.push_back(rf.eta[e]);
  return Key{rf.root_dim, rf.root, composed};
}

void FiniteSimplicialSet::finalize() {
  if (finalized_) return;
  all_.assign(truncation_ + 1, {});
  index_.assign(truncation_ + 1, {});
  for (int n = 0; n <= truncation_; ++n) {
    for (int m = 0; m <= n; ++m) {
      if (!degeneracies_ && m != n) continue;
      // monotone surjections [n] -> [m]: choose which of the n steps increase
      std::vector<std::vector<int>> etas;
      std::vector<int> steps(n, 0);
      std::fill(steps.end() - m, steps.end(), 1);
      do {
        std::vector<int> eta{0};
        for (int s : steps) eta.push_back(eta.back() + s);
        etas.push_back(eta);
      } while (std::next_permutation(steps.begin(), steps.end()));
      std::sort(etas.begin(), etas.end());
      for (std::size_t r = 0; r < roots_[m].size(); ++r) {
        for (const auto& eta : etas) {
          Key k{m, r, eta};
          index_[n][k] = all_[n].size();
          all_[n].push_back(std::move(k));
        }
      }
    }
  }
  faces_.assign(truncation_ + 1, {});
  degens_.assign(truncation_ + 1, {});
  for (int n = 1; n <= truncation_; ++n) {
    for (const Key& k : all_[n]) {
      for (int i = 0; i <= n; ++i) faces_[n].push_back(index_[n - 1].at(face_of_key(k, i)));
    }
  }
  if (degeneracies_) {
    for (int n = 0; n < truncation_; ++n) {
      for (const Key& k : all_[n]) {
        for (int j = 0; j <= n; ++j) {
          std::vector<int> eta = k.eta;
          eta.insert(eta.begin() + j, eta[j]);
          degens_[n].push_back(index_[n + 1].at(Key{k.root_dim, k.root, eta}));
        }
      }
    }
  }
  finalized_ = true;
  if (auto err = check_identities()) {
    finalized_ = false;
    throw std::invalid_argument("simplicial identities violated: " + *err);
  }
}

void FiniteSimplicialSet::require_finalized() const {
  if (!finalized_) throw std::logic_error("FiniteSimplicialSet used before finalize()");
}

std::size_t FiniteSimplicialSet::count(int dim) const {
  require_finalized();
  if (dim < 0 || dim > truncation_) return 0;
  return all_[dim].size();
}

std::size_t FiniteSimplicialSet::face(int dim, std::size_t id, int i) const {
  require_finalized();
  return faces_.at(dim).at(id * (dim + 1) + i);
}

std::size_t FiniteSimplicialSet::degeneracy(int dim, std::size_t id, int j) const {
  require_finalized();
  if (!degeneracies_) throw std::logic_error("semi-simplicial set has no degeneracies");
  if (dim >= truncation_) throw std::out_of_range("degeneracy above truncation");
  return degens_.at(dim).at(id * (dim + 1) + j);
}

bool FiniteSimplicialSet::is_nondegenerate(int dim, std::size_t id) const {
  require_finalized();
  return all_.at(dim).at(id).root_dim == dim;
}

std::string FiniteSimplicialSet::label(int dim, std::size_t id) const {
  require_finalized();
  const Key& k = all_.at(dim).at(id);
  std::string out = roots_[k.root_dim][k.root].name;
  if (k.root_dim == dim) return out;
  out += '^';
  for (int e : k.eta) out += static_cast<char>('0' + e);
  return out;
}

std::optional<std::size_t> FiniteSimplicialSet::find(int dim, const std::string& l) const {
  require_finalized();
  if (dim < 0 || dim > truncation_) return std::nullopt;
  try {
    Key k = parse_key(l);
    auto it = index_[dim].find(k);
    if (it == index_[dim].end()) return std::nullopt;
    return it->second;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

// ---------------------------------------------------------------------------

StandardSimplex::StandardSimplex(int n, int truncation) : n_(n), truncation_(truncation) {
  if (n < 0 || truncation < 0) throw std::invalid_argument("StandardSimplex: negative dimension");
  simplices_.resize(truncation + 1);
  index_.resize(truncation + 1);
  for (int k = 0; k <= truncation; ++k) {
    std::vector<int> seq(k + 1, 0);
    while (true) {
      index_[k][seq] = simplices_[k].size();
      simplices_[k].push_back(seq);
      int pos = k;
      while (pos >= 0 && seq[pos] == n) --pos;
      if (pos < 0) break;
      ++seq[pos];
      for (int q = pos + 1; q <= k; ++q) seq[q] = seq[pos];
    }
  }
}

std::size_t StandardSimplex::count(int dim) const {
  if (dim < 0 || dim > truncation_) return 0;
  return simplices_[dim].size();
}

std::size_t StandardSimplex::id_of(const std::vector<int>& seq) const {
  return index_.at(seq.size() - 1).at(seq);
}

std::size_t StandardSimplex::face(int dim, std::size_t id, int i) const {
  std::vector<int> seq = simplices_.at(dim).at(id);
  seq.erase(seq.begin() + i);
  return id_of(seq);
}

std::size_t StandardSimplex::degeneracy(int dim, std::size_t id, int j) const {
  if (dim >= truncation_) throw std::out_of_range("degeneracy above truncation");
  std::vector<int> seq = simplices_.at(dim).at(id);
  seq.insert(seq.begin() + j, seq[j]);
  return id_of(seq);
}

bool StandardSimplex::is_nondegenerate(int dim, std::size_t id) const {
  const auto& seq = simplices_.at(dim).at(id);
  return std::adjacent_find(seq.begin(), seq.end()) == seq.end();
}

std::string StandardSimplex::label(int dim, std::size_t id) const {
  std::string out;
  for (int v : simplices_.at(dim).at(id)) {
    if (n_ > 9 && !out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

std::optional<std::size_t> StandardSimplex::find(int dim, const std::string& l) const {
  if (dim < 0 || dim > truncation_) return std::nullopt;
  std::vector<int> seq;
  if (n_ > 9) {
    std::stringstream ss(l);
    std::string part;
    while (std::getline(ss, part, ',')) seq.push_back(std::stoi(part));
  } else {
    for (char ch : l) seq.push_back(ch - '0');
  }
  if (static_cast<int>(seq.size()) != dim + 1) return std::nullopt;
  auto it = index_[dim].find(seq);
  if (it == index_[dim].end()) return std::nullopt;
  return it->second;
}

// ---------------------------------------------------------------------------

GroupTable::GroupTable(std::vector<std::string> names, std::vector<std::vector<std::size_t>> table, std::size_t identity)
    : names_(std::move(names)), table_(std::move(table)), identity_(identity) {
  const std::size_t n = names_.size();
  if (n == 0) throw std::invalid_argument("group: empty element list");
  if (identity_ >= n) throw std::invalid_argument("group: identity out of range");
  if (table_.size() != n) throw std::invalid_argument("group: table must be " + std::to_string(n) + "x" + std::to_string(n));
  for (const auto& row : table_) {
    if (row.size() != n) throw std::invalid_argument("group: table must be square");
    for (auto v : row) {
      if (v >= n) throw std::invalid_argument("group: table entry out of range");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (table_[identity_][a] != a || table_[a][identity_] != a) {
      throw std::invalid_argument("group: identity law fails at " + names_[a]);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
          throw std::invalid_argument("group: associativity fails at (" + names_[a] + ", " + names_[b] + ", " +
                                      names_[c] + ")");
        }
      }
    }
  }
  inverse_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
    }
    if (inverse_[a] == n) throw std::invalid_argument("group: " + names_[a] + " has no inverse");
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (names_[a] == names_[b]) throw std::invalid_argument("group: duplicate element name " + names_[a]);
    }
  }
}

GroupTable GroupTable::cyclic(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0) names.push_back("e");
    else if (i == 1) names.push_back("a");
    else names.push_back("a" + std::to_string(i));
  }
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  return GroupTable(std::move(names), std::move(table), 0);
}

std::optional<std::size_t> GroupTable::find(const std::string& name) const {
  for (std::size_t a = 0; a < names_.size(); ++a) {
    if (names_[a] == name) return a;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

GroupNerve::GroupNerve(GroupPtr group, int truncation) : group_(std::move(group)), truncation_(truncation) {
  if (truncation < 0) throw std::invalid_argument("GroupNerve: negative truncation");
  double total = 1;
  for (int p = 0; p < truncation; ++p) total *= static_cast<double>(group_->order());
  if (total > 1e8) throw std::invalid_argument("GroupNerve: truncation too large to index");
}

std::size_t GroupNerve::count(int dim) const {
  if (dim < 0 || dim > truncation_) return 0;
  std::size_t c = 1;
  for (int p = 0; p < dim; ++p) c *= group_->order();
  return c;
}

std::vector<std::size_t> GroupNerve::tuple(int dim, std::size_t id) const {
  std::vector<std::size_t> t(dim);
  const std::size_t n = group_->order();
  for (int i = 0; i < dim; ++i) {
    t[i] = id % n;
    id /= n;
  }
  return t;
}

std::size_t GroupNerve::encode(const std::vector<std::size_t>& t) const {
  std::size_t id = 0;
  for (std::size_t i = t.size(); i-- > 0;) id = id * group_->order() + t[i];
  return id;
}

std::size_t GroupNerve::face(int dim, std::size_t id, int i) const {
  std::vector<std::size_t> t = tuple(dim, id);
  if (i == 0) {
    t.erase(t.begin());
  } else if (i == dim) {
    t.pop_back();
  } else {
    t[i - 1] = group_->mul(t[i - 1], t[i]);
    t.erase(t.begin() + i);
  }
  return encode(t);
}

std::size_t GroupNerve::degeneracy(int dim, std::size_t id, int j) const {
  if (dim >= truncation_) throw std::out_of_range("degeneracy above truncation");
  std::vector<std::size_t> t = tuple(dim, id);
  t.insert(t.begin() + j, group_->identity());
  return encode(t);
}

bool GroupNerve::is_nondegenerate(int dim, std::size_t id) const {
  for (auto g : tuple(dim, id)) {
    if (g == group_->identity()) return false;
  }
  return true;
}

std::string GroupNerve::label(int dim, std::size_t id) const {
  if (dim == 0) return "*";
  const auto t = tuple(dim, id);
  std::string out;
  for (std::size_t i = t.size(); i-- > 0;) {
    out += group_->name(t[i]);
    if (i) out += '/';
  }
  return out;
}

std::optional<std::size_t> GroupNerve::find(int dim, const std::string& l) const {
  if (dim < 0 || dim > truncation_) return std::nullopt;
  if (dim == 0) return l == "*" ? std::optional<std::size_t>(0) : std::nullopt;
  std::vector<std::size_t> t;
  std::stringstream ss(l);
  std::string part;
  while (std::getline(ss, part, '/')) {
    auto g = group_->find(part);
    if (!g) return std::nullopt;
    t.push_back(*g);
  }
  if (static_cast<int>(t.size()) != dim) return std::nullopt;
  std::reverse(t.begin(), t.end());
  return encode(t);
}

std::vector<std::size_t> GroupNerve::nondegenerate(int dim) const {
  std::vector<std::size_t> out;
  if (dim < 0 || dim > truncation_) return out;
  const std::size_t n = group_->order();
  std::vector<std::size_t> others;
  for (std::size_t g = 0; g < n; ++g) {
    if (g != group_->identity()) others.push_back(g);
  }
  if (others.empty() && dim > 0) return out;
  std::vector<std::size_t> digits(dim, 0);
  while (true) {
    std::vector<std::size_t> t(dim);
    for (int i = 0; i < dim; ++i) t[i] = others[digits[i]];
    out.push_back(encode(t));
    int pos = 0;
    while (pos < dim && ++digits[pos] == others.size()) digits[pos++] = 0;
    if (pos == dim) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

ProductWithSimplex::ProductWithSimplex(int k, BasePtr s, std::optional<int> truncation)
    : delta_(k, truncation.value_or(s->truncation())), s_(std::move(s)), truncation_(truncation.value_or(s_->truncation())) {
  if (k < 0) throw std::invalid_argument("product_with_delta: negative k");
  if (truncation_ > s_->truncation()) {
    throw std::invalid_argument("product_with_delta: truncation " + std::to_string(truncation_) +
                                " exceeds the factor's truncation " + std::to_string(s_->truncation()));
  }
  if (!s_->has_degeneracies()) throw std::invalid_argument("product_with_delta needs a simplicial (not semi-simplicial) factor");
}

std::size_t ProductWithSimplex::count(int dim) const {
  if (dim < 0 || dim > truncation_) return 0;
  return delta_.count(dim) * s_->count(dim);
}

std::size_t ProductWithSimplex::pair(int dim, std::size_t a, std::size_t b) const { return a * s_->count(dim) + b; }

std::size_t ProductWithSimplex::face(int dim, std::size_t id, int i) const {
  return pair(dim - 1, delta_.face(dim, first(dim, id), i), s_->face(dim, second(dim, id), i));
}

std::size_t ProductWithSimplex::degeneracy(int dim, std::size_t id, int j) const {
  if (dim >= truncation_) throw std::out_of_range("degeneracy above truncation");
  return pair(dim + 1, delta_.degeneracy(dim, first(dim, id), j), s_->degeneracy(dim, second(dim, id), j));
}

bool ProductWithSimplex::is_nondegenerate(int dim, std::size_t id) const {
  const std::size_t a = first(dim, id);
  const std::size_t b = second(dim, id);
  const auto& seq = delta_.sequence(dim, a);
  for (int j = 0; j < dim; ++j) {
    if (seq[j] == seq[j + 1] && s_->in_image_of_degeneracy(dim, b, j)) return false;
  }
  return true;
}

std::string ProductWithSimplex::label(int dim, std::size_t id) const {
  return "(" + delta_.label(dim, first(dim, id)) + "," + s_->label(dim, second(dim, id)) + ")";
}

// ---------------------------------------------------------------------------

BasePtr standard_simplex(int n, int truncation) { return std::make_shared<StandardSimplex>(n, truncation); }

BasePtr nerve_of_group(GroupPtr g, int truncation) { return std::make_shared<GroupNerve>(std::move(g), truncation); }

BasePtr product_with_delta(int k, BasePtr s, std::optional<int> truncation) {
  return std::make_shared<ProductWithSimplex>(k, std::move(s), truncation);
}

BasePtr boundary_of_triangle(int truncation) {
  auto s = std::make_shared<FiniteSimplicialSet>(truncation);
  s->add_vertex("0");
  s->add_vertex("1");
  s->add_vertex("2");
  s->add_simplex(1, "01", {"1", "0"});
  s->add_simplex(1, "02", {"2", "0"});
  s->add_simplex(1, "12", {"2", "1"});
  s->finalize();
  return s;
}

BasePtr simplicial_circle(int truncation) {
  auto s = std::make_shared<FiniteSimplicialSet>(truncation);
  s->add_vertex("v");
  s->add_simplex(1, "e", {"v", "v"});
  s->finalize();
  return s;
}

ChainComplex normalized_chains(const SimplicialBase& s, RingSpec ring, std::optional<int> max_dim) {
  const int top = max_dim.value_or(s.truncation());
  if (top > s.truncation()) throw std::invalid_argument("normalized_chains: max_dim above truncation");
  std::vector<std::vector<std::size_t>> cells(top + 1);
  std::vector<std::map<std::size_t, std::size_t>> pos(top + 1);
  std::vector<std::vector<std::string>> names(top + 1);
  for (int d = 0; d <= top; ++d) {
    cells[d] = s.nondegenerate(d);
    for (std::size_t i = 0; i < cells[d].size(); ++i) {
      pos[d][cells[d][i]] = i;
      names[d].push_back(s.label(d, cells[d][i]));
    }
  }
  ChainComplex c(ring, 0, names);
  for (int d = 1; d <= top; ++d) {
    Matrix m(ring, cells[d - 1].size(), cells[d].size());
    for (std::size_t col = 0; col < cells[d].size(); ++col) {
      for (int i = 0; i <= d; ++i) {
        auto it = pos[d - 1].find(s.face(d, cells[d][col], i));
        if (it == pos[d - 1].end()) continue;
        m.add_to(it->second, col, Scalar(i % 2 == 0 ? 1 : -1));
      }
    }
    c.set_differential(d, std::move(m));
  }
  return c;
}

}  // namespace hocolim
