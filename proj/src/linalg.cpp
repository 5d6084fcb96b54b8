#include "splitalg/linalg.hpp"

#include <algorithm>

#include "ring_detail.hpp"
#include "splitalg/univar.hpp"

namespace splitalg {

Matrix make_matrix(RingHandle R, size_t rows, size_t cols) {
  Matrix m{std::move(R), rows, cols, {}};
  m.a.assign(rows * cols, m.ring->zero());
  return m;
}

Matrix identity_matrix(RingHandle R, size_t n) {
  Matrix m = make_matrix(std::move(R), n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = m.ring->one();
  return m;
}

Matrix mat_mul(const Matrix& x, const Matrix& y) {
  check_internal(x.cols == y.rows && same_ring(x.ring, y.ring),
                 "matrix product shape mismatch");
  Matrix out = make_matrix(x.ring, x.rows, y.cols);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t k = 0; k < x.cols; ++k) {
      if (x.ring->is_zero(x.at(i, k))) continue;
      for (size_t j = 0; j < y.cols; ++j)
        out.at(i, j) = x.ring->add(out.at(i, j), x.ring->mul(x.at(i, k), y.at(k, j)));
    }
  return out;
}

// ---- field elimination ------------------------------------------------------

std::vector<size_t> rref_in_place(Matrix& m) {
  const RingHandle& F = m.ring;
  check_internal(F->is_field(), "row reduction needs field coefficients");
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t col = 0; col < m.cols && row < m.rows; ++col) {
    size_t sel = row;
    while (sel < m.rows && F->is_zero(m.at(sel, col))) ++sel;
    if (sel == m.rows) continue;
    if (sel != row)
      for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
    RingElem piv_inv = F->inv(m.at(row, col));
    for (size_t j = col; j < m.cols; ++j)
      m.at(row, j) = F->mul(piv_inv, m.at(row, j));
    for (size_t i = 0; i < m.rows; ++i) {
      if (i == row || F->is_zero(m.at(i, col))) continue;
      RingElem factor = m.at(i, col);
      for (size_t j = col; j < m.cols; ++j)
        m.at(i, j) = F->sub(m.at(i, j), F->mul(factor, m.at(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

Matrix field_kernel(const Matrix& input) {
  Matrix m = input;
  std::vector<size_t> pivots = rref_in_place(m);
  const RingHandle& F = m.ring;
  std::vector<bool> is_pivot(m.cols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<size_t> free_cols;
  for (size_t c = 0; c < m.cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix ker = make_matrix(F, m.cols, free_cols.size());
  for (size_t k = 0; k < free_cols.size(); ++k) {
    size_t fc = free_cols[k];
    ker.at(fc, k) = F->one();
    for (size_t r = 0; r < pivots.size(); ++r)
      ker.at(pivots[r], k) = F->neg(m.at(r, fc));
  }
  return ker;
}

std::optional<std::vector<RingElem>> field_solve(const Matrix& m,
                                                 const std::vector<RingElem>& b) {
  check_internal(b.size() == m.rows, "right-hand side length mismatch");
  Matrix aug = make_matrix(m.ring, m.rows, m.cols + 1);
  for (size_t i = 0; i < m.rows; ++i) {
    for (size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  std::vector<size_t> pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;
  std::vector<RingElem> x(m.cols, m.ring->zero());
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, m.cols);
  return x;
}

// ---- integer kernels ----------------------------------------------------------

namespace {

using ZRow = std::vector<mpz_class>;

// Column reduction of w with the same unimodular operations mirrored on u.
// Returns the number of pivot columns; columns >= that count are zero in w.
size_t column_reduce(std::vector<ZRow>& w, std::vector<ZRow>& u) {
  size_t rows = w.size();
  size_t cols = rows ? w[0].size() : (u.empty() ? 0 : u[0].size());
  auto swap_cols = [&](std::vector<ZRow>& m, size_t x, size_t y) {
    for (auto& row : m) std::swap(row[x], row[y]);
  };
  auto axpy_col = [&](std::vector<ZRow>& m, size_t dst, const mpz_class& q, size_t src) {
    for (auto& row : m) row[dst] -= q * row[src];
  };
  size_t pc = 0;
  for (size_t i = 0; i < rows && pc < cols; ++i) {
    for (;;) {
      size_t best = cols;
      for (size_t j = pc; j < cols; ++j) {
        if (w[i][j] == 0) continue;
        if (best == cols ||
            mpz_cmpabs(w[i][j].get_mpz_t(), w[i][best].get_mpz_t()) < 0)
          best = j;
      }
      if (best == cols) break;  // row has no pivot among active columns
      if (best != pc) {
        swap_cols(w, best, pc);
        swap_cols(u, best, pc);
      }
      bool clean = true;
      for (size_t j = pc + 1; j < cols; ++j) {
        if (w[i][j] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), w[i][j].get_mpz_t(), w[i][pc].get_mpz_t());
        if (q != 0) {
          axpy_col(w, j, q, pc);
          axpy_col(u, j, q, pc);
        }
        if (w[i][j] != 0) clean = false;
      }
      if (clean) {
        if (w[i][pc] < 0) {
          for (auto& row : w) row[pc] = -row[pc];
          for (auto& row : u) row[pc] = -row[pc];
        }
        ++pc;
        break;
      }
    }
  }
  return pc;
}

std::vector<ZRow> to_int_rows(const Matrix& m) {
  std::vector<ZRow> w(m.rows, ZRow(m.cols));
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j) w[i][j] = m.at(i, j).as_int();
  return w;
}

}  // namespace

Matrix integer_kernel(const Matrix& m) {
  check_internal(m.ring->kind() == RingKind::Integers, "integer kernel needs Z entries");
  std::vector<ZRow> w = to_int_rows(m);
  std::vector<ZRow> u(m.cols, ZRow(m.cols, 0));
  for (size_t j = 0; j < m.cols; ++j) u[j][j] = 1;
  size_t pc = column_reduce(w, u);
  Matrix ker = make_matrix(m.ring, m.cols, m.cols - pc);
  for (size_t i = 0; i < m.cols; ++i)
    for (size_t j = pc; j < m.cols; ++j)
      ker.at(i, j - pc) = RingElem(m.ring, u[i][j]);
  return ker;
}

namespace {

// Canonical Howell-normalized generating set of the row module spanned by
// rows over Z/m.  Preserves the module; output rows have strictly increasing
// pivot columns, pivot entries dividing m, and reduced entries above pivots.
std::vector<ZRow> howell_rows(std::vector<ZRow> rows, const mpz_class& m) {
  if (rows.empty()) return rows;
  size_t n = rows[0].size();
  auto reduce_row = [&](ZRow& r) {
    for (auto& x : r) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  };
  auto is_zero_row = [&](const ZRow& r) {
    return std::all_of(r.begin(), r.end(), [](const mpz_class& x) { return x == 0; });
  };
  for (auto& r : rows) reduce_row(r);

  std::vector<ZRow> queue;
  for (auto& r : rows)
    if (!is_zero_row(r)) queue.push_back(std::move(r));
  std::vector<ZRow> out;
  std::vector<size_t> pivot_col;

  for (size_t c = 0; c < n; ++c) {
    std::vector<ZRow> sel, rest;
    for (auto& r : queue)
      (r[c] != 0 ? sel : rest).push_back(std::move(r));
    queue = std::move(rest);
    if (sel.empty()) continue;
    ZRow acc = std::move(sel[0]);
    for (size_t k = 1; k < sel.size(); ++k) {
      ZRow& r = sel[k];
      mpz_class g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), acc[c].get_mpz_t(),
                 r[c].get_mpz_t());
      mpz_class ca = r[c] / g, cb = acc[c] / g;
      ZRow merged(n), killed(n);
      for (size_t j = 0; j < n; ++j) {
        merged[j] = s * acc[j] + t * r[j];
        killed[j] = ca * acc[j] - cb * r[j];
      }
      reduce_row(merged);
      reduce_row(killed);
      acc = std::move(merged);
      if (!is_zero_row(killed)) queue.push_back(std::move(killed));
    }
    // normalize the pivot to gcd(acc[c], m); keep the annihilator multiple
    mpz_class d, s, t;
    mpz_gcdext(d.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), acc[c].get_mpz_t(),
               m.get_mpz_t());
    ZRow norm(n), ann(n);
    mpz_class mult = m / d;
    for (size_t j = 0; j < n; ++j) {
      norm[j] = s * acc[j];
      ann[j] = mult * acc[j];
    }
    reduce_row(norm);
    reduce_row(ann);
    check_internal(norm[c] == d, "pivot normalization failed");
    if (!is_zero_row(ann)) queue.push_back(std::move(ann));
    out.push_back(std::move(norm));
    pivot_col.push_back(c);
  }

  // reduce entries above each pivot into [0, pivot)
  for (size_t i = 0; i < out.size(); ++i) {
    const mpz_class& d = out[i][pivot_col[i]];
    for (size_t j = 0; j < i; ++j) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), out[j][pivot_col[i]].get_mpz_t(), d.get_mpz_t());
      if (q == 0) continue;
      for (size_t k = 0; k < n; ++k) out[j][k] -= q * out[i][k];
      reduce_row(out[j]);
    }
  }
  return out;
}

}  // namespace

Matrix zmod_kernel(const Matrix& m) {
  check_internal(m.ring->kind() == RingKind::IntegersMod, "Z/m kernel needs Zmod entries");
  const mpz_class& mod = m.ring->modulus_int();
  // integer kernel of [M | m I]: x parts of its basis generate the kernel mod m
  Matrix lifted = make_matrix(Ring::integers(), m.rows, m.cols + m.rows);
  for (size_t i = 0; i < m.rows; ++i) {
    for (size_t j = 0; j < m.cols; ++j)
      lifted.at(i, j) = Ring::integers()->from_int(m.at(i, j).as_int());
    lifted.at(i, m.cols + i) = Ring::integers()->from_int(mod);
  }
  Matrix zker = integer_kernel(lifted);
  std::vector<ZRow> gens;
  for (size_t j = 0; j < zker.cols; ++j) {
    ZRow g(m.cols);
    for (size_t i = 0; i < m.cols; ++i) g[i] = zker.at(i, j).as_int();
    gens.push_back(std::move(g));
  }
  std::vector<ZRow> canon = howell_rows(std::move(gens), mod);
  Matrix ker = make_matrix(m.ring, m.cols, canon.size());
  for (size_t j = 0; j < canon.size(); ++j)
    for (size_t i = 0; i < m.cols; ++i)
      ker.at(i, j) = m.ring->from_int(canon[j][i]);
  return ker;
}

// ---- exact division and determinants --------------------------------------------

RingElem exact_div_elem(const RingHandle& R, const RingElem& a, const RingElem& b) {
  if (R->is_zero(b)) fail(Err::NotDivisible, "division by zero");
  if (R->is_zero(a)) return a;
  if (R->is_field()) return R->mul(a, R->inv(b));
  switch (R->kind()) {
    case RingKind::Integers: {
      mpz_class q, r;
      mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.as_int().get_mpz_t(),
                  b.as_int().get_mpz_t());
      if (r != 0)
        fail(Err::NotDivisible, a.str() + " is not divisible by " + b.str());
      return RingElem(R, q);
    }
    case RingKind::PolyRing: {
      const RingHandle& S = R->base();
      RingElem rem = a;
      MultiPoly::Terms quot;
      const auto& bt = b.as_poly().terms;
      check_internal(!bt.empty(), "zero divisor slipped past the zero check");
      const auto& [bm, bc] = *bt.begin();
      while (!R->is_zero(rem)) {
        const auto& [rm, rc] = *rem.as_poly().terms.begin();
        std::vector<int> qm(rm.size());
        for (size_t i = 0; i < qm.size(); ++i) {
          qm[i] = rm[i] - bm[i];
          if (qm[i] < 0)
            fail(Err::NotDivisible, "leading monomial not divisible");
        }
        RingElem qc = exact_div_elem(S, rc, bc);
        MultiPoly::Terms single;
        single.emplace(qm, qc);
        RingElem qterm = detail::make_poly_elem(R, S, std::move(single));
        quot.emplace(std::move(qm), std::move(qc));
        rem = R->sub(rem, R->mul(qterm, b));
      }
      return detail::make_poly_elem(R, S, std::move(quot));
    }
    default:
      fail(Err::NotDivisible, "no exact division for " + R->spec_string());
  }
}

namespace {

// Fraction-free Bareiss determinant over an integral domain.
RingElem bareiss_det(const RingHandle& R, Matrix m) {
  size_t n = m.rows;
  if (n == 0) return R->one();
  bool negate = false;
  RingElem prev = R->one();
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t sel = k;
    while (sel < n && R->is_zero(m.at(sel, k))) ++sel;
    if (sel == n) return R->zero();
    if (sel != k) {
      for (size_t j = 0; j < n; ++j) std::swap(m.at(sel, j), m.at(k, j));
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        RingElem num = R->sub(R->mul(m.at(k, k), m.at(i, j)),
                              R->mul(m.at(i, k), m.at(k, j)));
        m.at(i, j) = exact_div_elem(R, num, prev);
      }
    prev = m.at(k, k);
  }
  RingElem det = m.at(n - 1, n - 1);
  return negate ? R->neg(det) : det;
}

}  // namespace

RingElem det_exact(const Matrix& m) {
  check_internal(m.rows == m.cols, "determinant of a non-square matrix");
  const RingHandle& R = m.ring;
  if (R->is_field() || R->is_integral_domain()) return bareiss_det(R, m);
  switch (R->kind()) {
    case RingKind::IntegersMod: {
      Matrix lifted = make_matrix(Ring::integers(), m.rows, m.cols);
      for (size_t i = 0; i < m.a.size(); ++i)
        lifted.a[i] = RingElem(lifted.ring, m.a[i].as_int());
      return R->from_int(det_exact(lifted).as_int());
    }
    case RingKind::QuotientRing: {
      const RingHandle& P = R->inner_poly();
      Matrix lifted = make_matrix(P, m.rows, m.cols);
      for (size_t i = 0; i < m.a.size(); ++i)
        lifted.a[i] = detail::polyring_from_dense(P, detail::payload_to_dense(*R, m.a[i]));
      return R->embed(det_exact(lifted));
    }
    case RingKind::Product: {
      std::vector<RingElem> parts;
      for (size_t f = 0; f < R->factors().size(); ++f) {
        Matrix comp = make_matrix(R->factors()[f], m.rows, m.cols);
        for (size_t i = 0; i < m.a.size(); ++i)
          comp.a[i] = m.a[i].as_prod().parts[f];
        parts.push_back(det_exact(comp));
      }
      return R->tuple(std::move(parts));
    }
    default:
      fail(Err::UnsupportedBaseRing,
           "no exact determinant over " + R->spec_string());
  }
}

}  // namespace splitalg
