#include "bhk/matrix.hpp"

#include <algorithm>
#include <map>

namespace bhk {

RatMatrix to_rat(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

void SparseMatrix::add(std::size_t i, std::size_t j, const Rat& value) {
  if (i >= rows_.size() || j >= cols_) throw std::out_of_range("sparse matrix index");
  if (value != 0) rows_[i].emplace_back(j, value);
}

void SparseMatrix::finalize() {
  for (auto& row : rows_) {
    std::sort(row.begin(), row.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    Row merged;
    merged.reserve(row.size());
    for (auto& e : row) {
      if (!merged.empty() && merged.back().first == e.first)
        merged.back().second += e.second;
      else
        merged.push_back(std::move(e));
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(), [](const Entry& e) { return e.second == 0; }),
                 merged.end());
    row = std::move(merged);
  }
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

RatMatrix SparseMatrix::to_dense() const {
  RatMatrix d(rows(), cols_);
  for (std::size_t i = 0; i < rows(); ++i)
    for (const auto& [j, v] : rows_[i]) d(i, j) += v;
  return d;
}

SparseMatrix SparseMatrix::from_dense(const RatMatrix& m) {
  SparseMatrix s(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) s.rows_[i].emplace_back(j, m(i, j));
  return s;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("sparse product: shape mismatch");
  SparseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::map<std::size_t, Rat> acc;
    for (const auto& [k, aik] : a.row(i))
      for (const auto& [j, bkj] : b.row(k)) acc[j] += aik * bkj;
    for (auto& [j, v] : acc)
      if (v != 0) c.rows_[i].emplace_back(j, std::move(v));
  }
  return c;
}

}  // namespace bhk
