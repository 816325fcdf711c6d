#include "hocolim/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace hocolim {

namespace {

using IntRows = std::vector<std::vector<mpz_class>>;

IntRows dense_integers(const Matrix& a) {
  IntRows d(a.rows(), std::vector<mpz_class>(a.cols(), 0));
  for (std::size_t c = 0; c < a.cols(); ++c) {
    for (const auto& e : a.column(c)) d[e.row][c] = e.value.get_num();
  }
  return d;
}

Matrix from_integers(RingSpec ring, const IntRows& d, std::size_t rows, std::size_t cols) {
  Matrix m(ring, rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    SparseColumn col;
    for (std::size_t r = 0; r < rows; ++r) {
      if (d[r][c] != 0) col.push_back({r, Scalar(d[r][c])});
    }
    m.set_column(c, std::move(col));
  }
  return m;
}

// Row/column operations mirrored into the transforms.
struct IntegerSmith {
  IntRows a;
  IntRows left;   // rows x rows
  IntRows right;  // cols x cols
  std::size_t m;
  std::size_t n;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    std::swap(left[i], left[j]);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : right) std::swap(row[i], row[j]);
  }
  // row_i -= q * row_j
  void sub_row(std::size_t i, std::size_t j, const mpz_class& q) {
    for (std::size_t c = 0; c < n; ++c) {
      if (a[j][c] != 0) a[i][c] -= q * a[j][c];
    }
    for (std::size_t c = 0; c < m; ++c) {
      if (left[j][c] != 0) left[i][c] -= q * left[j][c];
    }
  }
  // col_i -= q * col_j
  void sub_col(std::size_t i, std::size_t j, const mpz_class& q) {
    for (std::size_t r = 0; r < m; ++r) {
      if (a[r][j] != 0) a[r][i] -= q * a[r][j];
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (right[r][j] != 0) right[r][i] -= q * right[r][j];
    }
  }
  void negate_row(std::size_t i) {
    for (auto& v : a[i]) v = -v;
    for (auto& v : left[i]) v = -v;
  }

  // Moves the smallest nonzero |entry| of row t / column t to (t, t).
  bool pivot_from_cross(std::size_t t) {
    std::size_t best_r = t, best_c = t;
    mpz_class best = 0;
    for (std::size_t r = t; r < m; ++r) {
      if (a[r][t] != 0 && (best == 0 || abs(a[r][t]) < best)) {
        best = abs(a[r][t]);
        best_r = r;
        best_c = t;
      }
    }
    for (std::size_t c = t; c < n; ++c) {
      if (a[t][c] != 0 && (best == 0 || abs(a[t][c]) < best)) {
        best = abs(a[t][c]);
        best_r = t;
        best_c = c;
      }
    }
    if (best == 0) return false;
    swap_rows(t, best_r);
    swap_cols(t, best_c);
    return true;
  }

  std::vector<mpz_class> run() {
    std::vector<mpz_class> diag;
    const std::size_t limit = std::min(m, n);
    for (std::size_t t = 0; t < limit; ++t) {
      // minimal-absolute-value pivot in the trailing block
      std::size_t pr = m, pc = n;
      mpz_class best = 0;
      for (std::size_t r = t; r < m; ++r) {
        for (std::size_t c = t; c < n; ++c) {
          if (a[r][c] != 0 && (best == 0 || abs(a[r][c]) < best)) {
            best = abs(a[r][c]);
            pr = r;
            pc = c;
          }
        }
      }
      if (best == 0) break;
      swap_rows(t, pr);
      swap_cols(t, pc);
      while (true) {
        bool clean = true;
        for (std::size_t r = t + 1; r < m; ++r) {
          if (a[r][t] == 0) continue;
          mpz_class q;
          mpz_fdiv_q(q.get_mpz_t(), a[r][t].get_mpz_t(), a[t][t].get_mpz_t());
          sub_row(r, t, q);
          if (a[r][t] != 0) clean = false;
        }
        for (std::size_t c = t + 1; c < n; ++c) {
          if (a[t][c] == 0) continue;
          mpz_class q;
          mpz_fdiv_q(q.get_mpz_t(), a[t][c].get_mpz_t(), a[t][t].get_mpz_t());
          sub_col(c, t, q);
          if (a[t][c] != 0) clean = false;
        }
        if (!clean) {
          pivot_from_cross(t);
          continue;
        }
        // divisibility of the trailing block by the pivot
        bool divisible = true;
        for (std::size_t r = t + 1; r < m && divisible; ++r) {
          for (std::size_t c = t + 1; c < n; ++c) {
            if (a[r][c] != 0 && !mpz_divisible_p(a[r][c].get_mpz_t(), a[t][t].get_mpz_t())) {
              // row_t += row_r brings the offending entry into row t
              sub_row(t, r, mpz_class(-1));
              divisible = false;
              break;
            }
          }
        }
        if (divisible) break;
      }
      if (a[t][t] < 0) negate_row(t);
      diag.push_back(a[t][t]);
    }
    return diag;
  }
};

SmithDecomposition integer_smith(const Matrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  IntegerSmith s{dense_integers(a), {}, {}, m, n};
  s.left.assign(m, std::vector<mpz_class>(m, 0));
  for (std::size_t i = 0; i < m; ++i) s.left[i][i] = 1;
  s.right.assign(n, std::vector<mpz_class>(n, 0));
  for (std::size_t i = 0; i < n; ++i) s.right[i][i] = 1;
  auto diag = s.run();
  SmithDecomposition out;
  for (auto& d : diag) out.diagonal.emplace_back(d);
  out.left = from_integers(a.ring(), s.left, m, m);
  out.right = from_integers(a.ring(), s.right, n, n);
  return out;
}

// Full-pivoting Gauss-Jordan over a field; pivots scaled to 1.
SmithDecomposition field_smith(const Matrix& input) {
  const RingSpec& ring = input.ring();
  const std::size_t m = input.rows();
  const std::size_t n = input.cols();
  auto a = input.to_dense();
  std::vector<std::vector<Scalar>> left(m, std::vector<Scalar>(m, Scalar(0)));
  std::vector<std::vector<Scalar>> right(n, std::vector<Scalar>(n, Scalar(0)));
  for (std::size_t i = 0; i < m; ++i) left[i][i] = 1;
  for (std::size_t i = 0; i < n; ++i) right[i][i] = 1;

  SmithDecomposition out;
  const std::size_t limit = std::min(m, n);
  for (std::size_t t = 0; t < limit; ++t) {
    std::size_t pr = m, pc = n;
    for (std::size_t c = t; c < n && pr == m; ++c) {
      for (std::size_t r = t; r < m; ++r) {
        if (a[r][c] != 0) {
          pr = r;
          pc = c;
          break;
        }
      }
    }
    if (pr == m) break;
    std::swap(a[t], a[pr]);
    std::swap(left[t], left[pr]);
    for (auto& row : a) std::swap(row[t], row[pc]);
    for (auto& row : right) std::swap(row[t], row[pc]);

    const Scalar inv = ring.inverse(a[t][t]);
    for (auto& v : a[t]) v = ring.mul(v, inv);
    for (auto& v : left[t]) v = ring.mul(v, inv);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == t || a[r][t] == 0) continue;
      const Scalar f = a[r][t];
      for (std::size_t c = 0; c < n; ++c) a[r][c] = ring.sub(a[r][c], ring.mul(f, a[t][c]));
      for (std::size_t c = 0; c < m; ++c) left[r][c] = ring.sub(left[r][c], ring.mul(f, left[t][c]));
    }
    for (std::size_t c = t + 1; c < n; ++c) {
      if (a[t][c] == 0) continue;
      const Scalar f = a[t][c];
      a[t][c] = 0;
      for (std::size_t r = 0; r < n; ++r) right[r][c] = ring.sub(right[r][c], ring.mul(f, right[r][t]));
    }
    out.diagonal.emplace_back(1);
  }
  out.left = Matrix::from_dense(ring, m, m, left);
  out.right = Matrix::from_dense(ring, n, n, right);
  return out;
}

}  // namespace

Matrix SmithDecomposition::diagonal_matrix(std::size_t rows, std::size_t cols) const {
  Matrix d(left.ring(), rows, cols);
  for (std::size_t i = 0; i < diagonal.size(); ++i) d.set(i, i, diagonal[i]);
  return d;
}

SmithDecomposition smith_normal_form(const Matrix& a) {
  if (a.ring().kind() == RingKind::integers) return integer_smith(a);
  return field_smith(a);
}

ColumnReducer::ColumnReducer(const Matrix& a, bool track_transform)
    : ring_(a.ring()), rows_(a.rows()), cols_(a.cols()), track_(track_transform) {
  if (!ring_.is_field()) throw std::invalid_argument("ColumnReducer requires a field");
  pivot_of_row_.assign(rows_, -1);
  reduced_.resize(cols_);
  if (track_) transform_.resize(cols_);
  for (std::size_t j = 0; j < cols_; ++j) {
    SparseColumn comb;
    if (track_) comb.push_back({j, Scalar(1)});
    SparseColumn col = a.column(j);
    while (!col.empty()) {
      const Entry& low = col.back();
      const long k = pivot_of_row_[low.row];
      if (k < 0) break;
      const auto& pivot = reduced_[k];
      const Scalar factor = ring_.neg(ring_.mul(low.value, ring_.inverse(pivot.back().value)));
      axpy(ring_, factor, pivot, col);
      if (track_) axpy(ring_, factor, transform_[k], comb);
    }
    if (!col.empty()) {
      pivot_of_row_[col.back().row] = static_cast<long>(j);
      pivot_columns_.push_back(j);
    }
    reduced_[j] = std::move(col);
    if (track_) transform_[j] = std::move(comb);
  }
}

Matrix ColumnReducer::kernel() const {
  if (!track_) throw std::logic_error("ColumnReducer::kernel needs the tracked transform");
  std::vector<std::size_t> zero_cols;
  for (std::size_t j = 0; j < cols_; ++j) {
    if (reduced_[j].empty()) zero_cols.push_back(j);
  }
  Matrix k(ring_, cols_, zero_cols.size());
  for (std::size_t i = 0; i < zero_cols.size(); ++i) k.set_column(i, transform_[zero_cols[i]]);
  return k;
}

SparseColumn ColumnReducer::reduce(SparseColumn b, SparseColumn* combination) const {
  while (!b.empty()) {
    const Entry& low = b.back();
    const long k = pivot_of_row_[low.row];
    if (k < 0) break;
    const auto& pivot = reduced_[k];
    const Scalar factor = ring_.mul(low.value, ring_.inverse(pivot.back().value));
    axpy(ring_, ring_.neg(factor), pivot, b);
    if (combination) axpy(ring_, factor, transform_[k], *combination);
  }
  return b;
}

std::optional<SparseColumn> ColumnReducer::solve(const SparseColumn& b) const {
  if (!track_) throw std::logic_error("ColumnReducer::solve needs the tracked transform");
  SparseColumn x;
  SparseColumn rest = reduce(b, &x);
  if (!rest.empty()) return std::nullopt;
  return x;
}

bool ColumnReducer::in_span(const SparseColumn& b) const { return reduce(b, nullptr).empty(); }

std::optional<Matrix> solve_linear(const Matrix& a, const Matrix& b) {
  if (a.ring() != b.ring()) throw std::invalid_argument("solve_linear: ring mismatch");
  if (a.rows() != b.rows()) {
    throw std::invalid_argument("solve_linear: a has " + std::to_string(a.rows()) +
                                " rows but b has " + std::to_string(b.rows()));
  }
  const RingSpec& ring = a.ring();
  Matrix x(ring, a.cols(), b.cols());
  if (ring.is_field()) {
    ColumnReducer reducer(a);
    for (std::size_t c = 0; c < b.cols(); ++c) {
      auto sol = reducer.solve(b.column(c));
      if (!sol) return std::nullopt;
      x.set_column(c, std::move(*sol));
    }
    return x;
  }
  // Over Z: left*a*right = D, so a x = b  <=>  D y = left b with x = right y.
  const SmithDecomposition snf = smith_normal_form(a);
  const Matrix c = snf.left * b;
  Matrix y(ring, a.cols(), b.cols());
  for (std::size_t col = 0; col < b.cols(); ++col) {
    SparseColumn ycol;
    for (const auto& e : c.column(col)) {
      if (e.row >= snf.rank()) return std::nullopt;
      const mpz_class& d = snf.diagonal[e.row].get_num();
      const mpz_class& v = e.value.get_num();
      if (!mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t())) return std::nullopt;
      mpz_class q;
      mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
      ycol.push_back({e.row, Scalar(q)});
    }
    y.set_column(col, std::move(ycol));
  }
  return snf.right * y;
}

Matrix kernel_basis(const Matrix& a) {
  if (a.ring().is_field()) return ColumnReducer(a).kernel();
  const SmithDecomposition snf = smith_normal_form(a);
  const std::size_t r = snf.rank();
  return snf.right.column_range(r, a.cols() - r);
}

std::size_t rank(const Matrix& a) {
  if (a.ring().is_field()) return ColumnReducer(a, false).rank();
  return smith_normal_form(a).rank();
}

std::size_t span_dimension(const Matrix& columns) { return ColumnReducer(columns, false).rank(); }

}  // namespace hocolim

namespace hocolim {

namespace {

Matrix pick_representatives(const Matrix& z_span, const Matrix& b_span) {
  const Matrix joined = hstack(b_span, z_span);
  ColumnReducer r(joined, false);
  std::vector<std::size_t> picked;
  for (std::size_t c : r.pivot_columns()) {
    if (c >= b_span.cols()) picked.push_back(c - b_span.cols());
  }
  Matrix reps(z_span.ring(), z_span.rows(), picked.size());
  for (std::size_t i = 0; i < picked.size(); ++i) reps.set_column(i, z_span.column(picked[i]));
  return reps;
}

}  // namespace

Subquotient::Subquotient(const Matrix& z_span, const Matrix& b_span)
    : b_cols_(b_span.cols()),
      representatives_(pick_representatives(z_span, b_span)),
      b_reducer_(b_span, false),
      full_reducer_(hstack(b_span, representatives_)) {}

std::optional<std::vector<Scalar>> Subquotient::coordinates(const SparseColumn& v) const {
  auto x = full_reducer_.solve(v);
  if (!x) return std::nullopt;
  std::vector<Scalar> coords(dimension(), Scalar(0));
  for (const auto& e : *x) {
    if (e.row >= b_cols_) coords[e.row - b_cols_] = e.value;
  }
  return coords;
}

bool Subquotient::is_trivial(const SparseColumn& v) const { return b_reducer_.in_span(v); }

}  // namespace hocolim
