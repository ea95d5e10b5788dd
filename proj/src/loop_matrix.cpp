#include "coxtoda/loop_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace coxtoda {

LoopMatrix LoopMatrix::identity(int size) {
  LoopMatrix m(size);
  for (int i = 0; i < size; ++i) m.at(i, i) = MultiLaurent(Rational(1));
  return m;
}

LoopMatrix LoopMatrix::operator*(const LoopMatrix& o) const {
  if (size_ != o.size_) throw std::invalid_argument("size mismatch");
  LoopMatrix out(size_);
  for (int i = 0; i < size_; ++i)
    for (int k = 0; k < size_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < size_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        out.at(i, j) += at(i, k) * o.at(k, j);
      }
    }
  return out;
}

namespace {

MultiLaurent minor_det(const LoopMatrix& m, const std::vector<int>& rows,
                       const std::vector<int>& cols) {
  const size_t k = rows.size();
  if (k == 0) return MultiLaurent(Rational(1));
  if (k == 1) return m.at(rows[0], cols[0]);
  MultiLaurent total;
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (size_t j = 0; j < k; ++j) {
    const MultiLaurent& pivot = m.at(rows[0], cols[j]);
    if (pivot.is_zero()) continue;
    std::vector<int> sub_cols;
    for (size_t l = 0; l < k; ++l)
      if (l != j) sub_cols.push_back(cols[l]);
    MultiLaurent sub = minor_det(m, sub_rows, sub_cols);
    if (j % 2 == 0)
      total += pivot * sub;
    else
      total = total - pivot * sub;
  }
  return total;
}

}  // namespace

MultiLaurent LoopMatrix::det() const {
  std::vector<int> idx(size_);
  for (int i = 0; i < size_; ++i) idx[i] = i;
  return minor_det(*this, idx, idx);
}

MultiLaurent LoopMatrix::trace() const {
  MultiLaurent t;
  for (int i = 0; i < size_; ++i) t += at(i, i);
  return t;
}

std::string LoopMatrix::str() const {
  std::ostringstream out;
  for (int i = 0; i < size_; ++i) {
    out << "[ ";
    for (int j = 0; j < size_; ++j) {
      out << at(i, j).str();
      if (j + 1 < size_) out << ", ";
    }
    out << " ]\n";
  }
  return out.str();
}

LoopMatrix LoopMatrix::one_param(int size, int letter, const MultiLaurent& t) {
  if (letter == 0) throw std::out_of_range("letter must be nonzero");
  const int i = (letter > 0 ? letter : -letter) - 1;
  if (i < 0 || i >= size) throw std::out_of_range("root index out of range");
  LoopMatrix m = identity(size);
  if (i >= 1) {
    if (letter > 0)
      m.at(i - 1, i) = t;
    else
      m.at(i, i - 1) = t;
  } else {
    if (letter > 0)
      m.at(size - 1, 0) = t * MultiLaurent::variable(kLoopVar, 1);
    else
      m.at(0, size - 1) = t * MultiLaurent::variable(kLoopVar, -1);
  }
  return m;
}

LoopMatrix LoopMatrix::reflection_rep(int size, int index) {
  MultiLaurent one(Rational(1)), minus_one(Rational(-1));
  return one_param(size, index + 1, one) *
         one_param(size, -(index + 1), minus_one) *
         one_param(size, index + 1, one);
}

LoopMatrix LoopMatrix::embed_sl2(int size, int index,
                                 const std::array<MultiLaurent, 4>& m) {
  const MultiLaurent& a = m[0];
  const MultiLaurent& b = m[1];
  const MultiLaurent& c = m[2];
  const MultiLaurent& d = m[3];
  if (a * d - b * c != MultiLaurent(Rational(1)))
    throw std::invalid_argument("embed_sl2 requires determinant 1");
  if (index < 0 || index >= size)
    throw std::out_of_range("embedding index out of range");
  LoopMatrix out = identity(size);
  if (index >= 1) {
    out.at(index - 1, index - 1) = a;
    out.at(index - 1, index) = b;
    out.at(index, index - 1) = c;
    out.at(index, index) = d;
  } else {
    out.at(0, 0) = d;
    out.at(0, size - 1) = c * MultiLaurent::variable(kLoopVar, -1);
    out.at(size - 1, 0) = b * MultiLaurent::variable(kLoopVar, 1);
    out.at(size - 1, size - 1) = a;
  }
  return out;
}

MultiLaurent LoopMatrix::fundamental_char(int k) const {
  if (k < 1 || k > size_) throw std::out_of_range("character index out of range");
  MultiLaurent total;
  std::vector<int> subset(k);
  // Iterate over k-subsets of {0..size-1} in lexicographic order.
  for (int i = 0; i < k; ++i) subset[i] = i;
  for (;;) {
    total += minor_det(*this, subset, subset);
    int i = k - 1;
    while (i >= 0 && subset[i] == size_ - k + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
  return total;
}

}  // namespace coxtoda
