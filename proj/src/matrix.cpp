#include "hocolim/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hocolim {

namespace {

void check_same_ring(const Matrix& a, const Matrix& b, const char* op) {
  if (a.ring() != b.ring()) {
    throw std::invalid_argument(std::string(op) + ": ring mismatch (" + a.ring().name() +
                                " vs " + b.ring().name() + ")");
  }
}

}  // namespace

Matrix::Matrix(RingSpec ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), columns_(cols) {}

Matrix Matrix::identity(RingSpec ring, std::size_t n) {
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.columns_[i].push_back({i, Scalar(1)});
  return m;
}

Matrix Matrix::from_rows(RingSpec ring, const std::vector<std::vector<long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(ring, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged matrix literal");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, Scalar(rows[i][j]));
  }
  return m;
}

Matrix Matrix::from_dense(RingSpec ring, std::size_t rows, std::size_t cols,
                          const std::vector<std::vector<Scalar>>& dense_rows) {
  Matrix m(ring, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, dense_rows.at(i).at(j));
  }
  return m;
}

Matrix Matrix::column_vector(RingSpec ring, const std::vector<Scalar>& values) {
  Matrix m(ring, values.size(), 1);
  m.columns_[0] = to_sparse(ring, values);
  return m;
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols()) throw std::out_of_range("Matrix::at");
  const auto& col = columns_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const Entry& e, std::size_t row) { return e.row < row; });
  if (it != col.end() && it->row == r) return it->value;
  return Scalar(0);
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v) {
  if (r >= rows_ || c >= cols()) throw std::out_of_range("Matrix::set");
  Scalar value = ring_.normalize(v);
  auto& col = columns_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const Entry& e, std::size_t row) { return e.row < row; });
  if (it != col.end() && it->row == r) {
    if (value == 0) {
      col.erase(it);
    } else {
      it->value = value;
    }
  } else if (value != 0) {
    col.insert(it, Entry{r, value});
  }
}

void Matrix::add_to(std::size_t r, std::size_t c, const Scalar& v) { set(r, c, at(r, c) + v); }

void Matrix::set_column(std::size_t c, SparseColumn col) {
  if (c >= cols()) throw std::out_of_range("Matrix::set_column");
  for (auto& e : col) {
    if (e.row >= rows_) throw std::out_of_range("Matrix::set_column row");
    e.value = ring_.normalize(e.value);
  }
  std::sort(col.begin(), col.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
  col.erase(std::remove_if(col.begin(), col.end(), [](const Entry& e) { return e.value == 0; }),
            col.end());
  columns_[c] = std::move(col);
}

std::size_t Matrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

bool Matrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
}

Matrix Matrix::transpose() const {
  Matrix t(ring_, cols(), rows_);
  for (std::size_t c = 0; c < cols(); ++c) {
    for (const auto& e : columns_[c]) t.columns_[e.row].push_back({c, e.value});
  }
  return t;
}

Matrix Matrix::negated() const { return scaled(Scalar(-1)); }

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix m(ring_, rows_, cols());
  const Scalar factor = ring_.normalize(s);
  if (factor == 0) return m;
  for (std::size_t c = 0; c < cols(); ++c) {
    for (const auto& e : columns_[c]) {
      Scalar v = ring_.mul(factor, e.value);
      if (v != 0) m.columns_[c].push_back({e.row, v});
    }
  }
  return m;
}

Matrix Matrix::column_range(std::size_t first, std::size_t count) const {
  if (first + count > cols()) throw std::out_of_range("Matrix::column_range");
  Matrix m(ring_, rows_, count);
  for (std::size_t c = 0; c < count; ++c) m.columns_[c] = columns_[first + c];
  return m;
}

std::vector<std::vector<Scalar>> Matrix::to_dense() const {
  std::vector<std::vector<Scalar>> d(rows_, std::vector<Scalar>(cols(), Scalar(0)));
  for (std::size_t c = 0; c < cols(); ++c) {
    for (const auto& e : columns_[c]) d[e.row][c] = e.value;
  }
  return d;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  check_same_ring(a, b, "multiply");
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("multiply: dimension mismatch " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " * " + std::to_string(b.rows()) +
                                "x" + std::to_string(b.cols()));
  }
  Matrix m(a.ring(), a.rows(), b.cols());
  std::vector<Scalar> acc(a.rows());
  std::vector<char> touched(a.rows(), 0);
  std::vector<std::size_t> rows_hit;
  for (std::size_t j = 0; j < b.cols(); ++j) {
    rows_hit.clear();
    for (const auto& be : b.columns_[j]) {
      for (const auto& ae : a.columns_[be.row]) {
        if (!touched[ae.row]) {
          touched[ae.row] = 1;
          acc[ae.row] = 0;
          rows_hit.push_back(ae.row);
        }
        acc[ae.row] += ae.value * be.value;
      }
    }
    std::sort(rows_hit.begin(), rows_hit.end());
    auto& out = m.columns_[j];
    for (std::size_t r : rows_hit) {
      touched[r] = 0;
      Scalar v = a.ring().normalize(acc[r]);
      if (v != 0) out.push_back({r, v});
    }
  }
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  check_same_ring(a, b, "add");
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("add: dimension mismatch");
  }
  Matrix m = a;
  for (std::size_t c = 0; c < b.cols(); ++c) axpy(a.ring(), Scalar(1), b.columns_[c], m.columns_[c]);
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  check_same_ring(a, b, "subtract");
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("subtract: dimension mismatch");
  }
  Matrix m = a;
  for (std::size_t c = 0; c < b.cols(); ++c) axpy(a.ring(), Scalar(-1), b.columns_[c], m.columns_[c]);
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.ring() != b.ring() || a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    const auto& x = a.columns_[c];
    const auto& y = b.columns_[c];
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].row != y[i].row || x[i].value != y[i].value) return false;
    }
  }
  return true;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  auto d = to_dense();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < d[i].size(); ++j) {
      if (j) os << " ";
      os << d[i][j].get_str();
    }
  }
  os << "] (" << rows_ << "x" << cols() << " over " << ring_.name() << ")";
  return os.str();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  check_same_ring(a, b, "hstack");
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
  Matrix m(a.ring(), a.rows(), a.cols() + b.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) m.set_column(c, a.column(c));
  for (std::size_t c = 0; c < b.cols(); ++c) m.set_column(a.cols() + c, b.column(c));
  return m;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  check_same_ring(a, b, "vstack");
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
  Matrix m(a.ring(), a.rows() + b.rows(), a.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    SparseColumn col = a.column(c);
    for (const auto& e : b.column(c)) col.push_back({a.rows() + e.row, e.value});
    m.set_column(c, std::move(col));
  }
  return m;
}

void axpy(const RingSpec& ring, const Scalar& s, const SparseColumn& x, SparseColumn& y) {
  if (s == 0 || x.empty()) return;
  SparseColumn out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].row < y[j].row)) {
      Scalar v = ring.mul(s, x[i].value);
      if (v != 0) out.push_back({x[i].row, v});
      ++i;
    } else if (i == x.size() || y[j].row < x[i].row) {
      out.push_back(std::move(y[j]));
      ++j;
    } else {
      Scalar v = ring.normalize(y[j].value + s * x[i].value);
      if (v != 0) out.push_back({y[j].row, v});
      ++i;
      ++j;
    }
  }
  y = std::move(out);
}

std::vector<Scalar> to_dense(const SparseColumn& col, std::size_t n) {
  std::vector<Scalar> d(n, Scalar(0));
  for (const auto& e : col) d.at(e.row) = e.value;
  return d;
}

SparseColumn to_sparse(const RingSpec& ring, const std::vector<Scalar>& dense) {
  SparseColumn col;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    Scalar v = ring.normalize(dense[i]);
    if (v != 0) col.push_back({i, v});
  }
  return col;
}

}  // namespace hocolim
