#include "bhk/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

namespace bhk {

namespace {

void add_row_multiple(IntMatrix& M, std::size_t dst, std::size_t src, const Int& q) {
  for (std::size_t j = 0; j < M.cols(); ++j) M(dst, j) -= q * M(src, j);
}

void add_col_multiple(IntMatrix& M, std::size_t dst, std::size_t src, const Int& q) {
  for (std::size_t i = 0; i < M.rows(); ++i) M(i, dst) -= q * M(i, src);
}

void negate_row(IntMatrix& M, std::size_t r) {
  for (std::size_t j = 0; j < M.cols(); ++j) M(r, j) = -M(r, j);
}

Int tdiv(const Int& a, const Int& b) {
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

#ifndef NDEBUG
bool unimodular(const IntMatrix& M) {
  Int d = determinant(M);
  return d == 1 || d == -1;
}
#endif

}  // namespace

IntVector SmithForm::diagonal() const {
  IntVector d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

SmithForm smith_normal_form(const IntMatrix& A) {
  const std::size_t m = A.rows();
  const std::size_t n = A.cols();
  IntMatrix D = A;
  IntMatrix U = IntMatrix::identity(m);
  IntMatrix V = IntMatrix::identity(n);

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Smallest nonzero entry of the trailing block goes to (t, t).
    auto bring_min_to_pivot = [&]() {
      bool found = false;
      std::size_t bi = t, bj = t;
      Int best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (D(i, j) == 0) continue;
          Int a = abs(D(i, j));
          if (!found || a < best) {
            found = true;
            best = a;
            bi = i;
            bj = j;
          }
        }
      if (!found) return false;
      D.swap_rows(t, bi);
      U.swap_rows(t, bi);
      D.swap_cols(t, bj);
      V.swap_cols(t, bj);
      return true;
    };
    if (!bring_min_to_pivot()) break;

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        Int q = tdiv(D(i, t), D(t, t));
        add_row_multiple(D, i, t, q);
        add_row_multiple(U, i, t, q);
        if (D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        Int q = tdiv(D(t, j), D(t, t));
        add_col_multiple(D, j, t, q);
        add_col_multiple(V, j, t, q);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A smaller remainder now sits in row or column t.
        bring_min_to_pivot();
        continue;
      }
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != 0) {
            for (std::size_t c = 0; c < n; ++c) D(t, c) += D(i, c);
            for (std::size_t c = 0; c < m; ++c) U(t, c) += U(i, c);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (D(t, t) < 0) {
      negate_row(D, t);
      negate_row(U, t);
    }
  }
#ifndef NDEBUG
  assert(U * A * V == D);
  if (U.square() && V.square()) assert(unimodular(U) && unimodular(V));
#endif
  return {std::move(U), std::move(D), std::move(V)};
}

std::size_t HermiteForm::rank() const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < H.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < H.cols(); ++j)
      if (H(i, j) != 0) zero = false;
    if (!zero) r = i + 1;
  }
  return r;
}

HermiteForm hermite_normal_form(const IntMatrix& A) {
  const std::size_t m = A.rows();
  const std::size_t n = A.cols();
  IntMatrix H = A;
  IntMatrix U = IntMatrix::identity(m);
  std::size_t p = 0;
  for (std::size_t col = 0; col < n && p < m; ++col) {
    for (;;) {
      std::size_t best = m;
      for (std::size_t i = p; i < m; ++i)
        if (H(i, col) != 0 && (best == m || abs(H(i, col)) < abs(H(best, col)))) best = i;
      if (best == m) break;
      H.swap_rows(p, best);
      U.swap_rows(p, best);
      bool clean = true;
      for (std::size_t i = p + 1; i < m; ++i) {
        if (H(i, col) == 0) continue;
        Int q = tdiv(H(i, col), H(p, col));
        add_row_multiple(H, i, p, q);
        add_row_multiple(U, i, p, q);
        if (H(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (H(p, col) == 0) continue;
    if (H(p, col) < 0) {
      negate_row(H, p);
      negate_row(U, p);
    }
    for (std::size_t i = 0; i < p; ++i) {
      Int q = fdiv(H(i, col), H(p, col));
      if (q == 0) continue;
      add_row_multiple(H, i, p, q);
      add_row_multiple(U, i, p, q);
    }
    ++p;
  }
#ifndef NDEBUG
  assert(U * A == H);
  assert(unimodular(U));
#endif
  return {std::move(H), std::move(U)};
}

namespace {

/// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& M, std::size_t col_limit) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < col_limit && r < M.rows(); ++c) {
    std::size_t piv = M.rows();
    for (std::size_t i = r; i < M.rows(); ++i)
      if (M(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv == M.rows()) continue;
    M.swap_rows(r, piv);
    Rat inv = 1 / M(r, c);
    for (std::size_t j = c; j < M.cols(); ++j) M(r, j) *= inv;
    for (std::size_t i = 0; i < M.rows(); ++i) {
      if (i == r || M(i, c) == 0) continue;
      Rat f = M(i, c);
      for (std::size_t j = c; j < M.cols(); ++j)
        if (M(r, j) != 0) M(i, j) -= f * M(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rat_rank(const RatMatrix& A) {
  if (A.cols() > kSparseColumnThreshold) return rat_rank(SparseMatrix::from_dense(A));
  RatMatrix M = A;
  // Forward elimination only.
  std::size_t r = 0;
  for (std::size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
    std::size_t piv = M.rows();
    for (std::size_t i = r; i < M.rows(); ++i)
      if (M(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv == M.rows()) continue;
    M.swap_rows(r, piv);
    for (std::size_t i = r + 1; i < M.rows(); ++i) {
      if (M(i, c) == 0) continue;
      Rat f = M(i, c) / M(r, c);
      for (std::size_t j = c; j < M.cols(); ++j)
        if (M(r, j) != 0) M(i, j) -= f * M(r, j);
    }
    ++r;
  }
  return r;
}

std::size_t rat_rank(const SparseMatrix& A) {
  // Incremental row reduction against a pivot table. Each stored pivot row is
  // normalized so its leading coefficient is 1.
  std::unordered_map<std::size_t, SparseMatrix::Row> pivots;
  pivots.reserve(std::min(A.rows(), A.cols()));

  // Process short rows first; they cause less fill-in.
  std::vector<std::size_t> order(A.rows());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return A.row(a).size() < A.row(b).size(); });

  SparseMatrix::Row work, next;
  for (std::size_t idx : order) {
    work = A.row(idx);
    while (!work.empty()) {
      auto it = pivots.find(work.front().first);
      if (it == pivots.end()) break;
      const auto& prow = it->second;
      Rat factor = work.front().second;
      // work := work - factor * prow, merging two sorted sparse rows.
      next.clear();
      std::size_t a = 0, b = 0;
      while (a < work.size() || b < prow.size()) {
        if (b == prow.size() || (a < work.size() && work[a].first < prow[b].first)) {
          next.push_back(std::move(work[a++]));
        } else if (a == work.size() || prow[b].first < work[a].first) {
          next.emplace_back(prow[b].first, -factor * prow[b].second);
          ++b;
        } else {
          Rat v = work[a].second - factor * prow[b].second;
          if (v != 0) next.emplace_back(work[a].first, std::move(v));
          ++a;
          ++b;
        }
      }
      std::swap(work, next);
    }
    if (work.empty()) continue;
    Rat inv = 1 / work.front().second;
    for (auto& e : work) e.second *= inv;
    std::size_t lead = work.front().first;
    pivots.emplace(lead, std::move(work));
    work = {};
  }
  return pivots.size();
}

std::optional<RatVector> rat_solve(const RatMatrix& A, const RatVector& b) {
  if (A.rows() != b.size()) throw std::invalid_argument("rat_solve: shape mismatch");
  RatMatrix M(A.rows(), A.cols() + 1);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) M(i, j) = A(i, j);
    M(i, A.cols()) = b[i];
  }
  auto pivots = rref(M, A.cols());
  for (std::size_t i = pivots.size(); i < M.rows(); ++i)
    if (M(i, A.cols()) != 0) return std::nullopt;
  RatVector x(A.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = M(r, A.cols());
  return x;
}

Rat determinant(const RatMatrix& A) {
  if (!A.square()) throw std::invalid_argument("determinant of non-square matrix");
  RatMatrix M = A;
  Rat det = 1;
  for (std::size_t c = 0; c < M.cols(); ++c) {
    std::size_t piv = M.rows();
    for (std::size_t i = c; i < M.rows(); ++i)
      if (M(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv == M.rows()) return 0;
    if (piv != c) {
      M.swap_rows(c, piv);
      det = -det;
    }
    det *= M(c, c);
    for (std::size_t i = c + 1; i < M.rows(); ++i) {
      if (M(i, c) == 0) continue;
      Rat f = M(i, c) / M(c, c);
      for (std::size_t j = c; j < M.cols(); ++j) M(i, j) -= f * M(c, j);
    }
  }
  return det;
}

Int determinant(const IntMatrix& A) {
  // Bareiss fraction-free elimination.
  if (!A.square()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = A.rows();
  if (n == 0) return 1;
  IntMatrix M = A;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M(k, k) == 0) {
      std::size_t piv = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (M(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv == n) return 0;
      M.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = M(i, j) * M(k, k) - M(i, k) * M(k, j);
        mpz_divexact(M(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = M(k, k);
  }
  return sign * M(n - 1, n - 1);
}

RatMatrix inverse(const RatMatrix& A) {
  if (!A.square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = A.rows();
  RatMatrix M(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) M(i, j) = A(i, j);
    M(i, n + i) = 1;
  }
  auto pivots = rref(M, n);
  if (pivots.size() != n) throw std::domain_error("singular matrix");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = M(i, n + j);
  return inv;
}

}  // namespace bhk
