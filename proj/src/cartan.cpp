#include "coxtoda/cartan.hpp"

#include <algorithm>
#include <stdexcept>

namespace coxtoda {

ValidationResult validate_gcm(const IntMatrix& matrix) {
  const size_t n = matrix.size();
  for (const auto& row : matrix)
    if (row.size() != n) return {false, "matrix is not square"};
  for (size_t i = 0; i < n; ++i)
    if (matrix[i][i] != 2)
      return {false, "axiom (1): C_" + std::to_string(i) + "," +
                         std::to_string(i) + " != 2"};
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (i != j && matrix[i][j] > 0)
        return {false, "axiom (2): C_" + std::to_string(i) + "," +
                           std::to_string(j) + " > 0"};
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if ((matrix[i][j] == 0) != (matrix[j][i] == 0))
        return {false, "axiom (3): C_" + std::to_string(i) + "," +
                           std::to_string(j) + " = 0 but C_" +
                           std::to_string(j) + "," + std::to_string(i) +
                           " != 0"};
  return {true, ""};
}

std::optional<std::vector<Rational>> symmetrizer(const IntMatrix& matrix) {
  const size_t n = matrix.size();
  // Propagate d along the Dynkin graph: d_j = d_i C_ij / C_ji on each edge.
  std::vector<Rational> d(n, Rational(0));
  for (size_t start = 0; start < n; ++start) {
    if (d[start] != 0) continue;
    d[start] = 1;
    std::vector<size_t> queue = {start};
    while (!queue.empty()) {
      size_t i = queue.back();
      queue.pop_back();
      for (size_t j = 0; j < n; ++j) {
        if (i == j || matrix[i][j] == 0) continue;
        Rational dj = d[i] * Rational(matrix[i][j]) / Rational(matrix[j][i]);
        if (d[j] == 0) {
          d[j] = dj;
          queue.push_back(j);
        } else if (d[j] != dj) {
          return std::nullopt;
        }
      }
    }
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (d[i] * matrix[i][j] != d[j] * matrix[j][i]) return std::nullopt;
  Rational mn = *std::min_element(d.begin(), d.end());
  for (auto& x : d) x /= mn;
  return d;
}

CartanData CartanData::finite(const IntMatrix& matrix) {
  auto v = validate_gcm(matrix);
  if (!v.ok) throw std::invalid_argument("invalid GCM: " + v.message);
  auto d = symmetrizer(matrix);
  if (!d) throw std::invalid_argument("matrix is not symmetrizable");
  CartanData c;
  c.kind_ = Kind::Finite;
  c.matrix_ = matrix;
  c.symmetrizers_ = std::move(*d);
  return c;
}

CartanData CartanData::affine_extend(const CartanData& fin,
                                     const std::vector<long>& theta) {
  if (fin.is_affine())
    throw std::invalid_argument("affine_extend expects finite input");
  const int r = fin.size();
  if (static_cast<int>(theta.size()) != r)
    throw std::invalid_argument("theta has wrong length");

  // Rescale the symmetrizer so <theta, theta> = 2, making d_0 = 1.
  Rational norm(0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      norm += Rational(theta[i]) * Rational(theta[j]) * fin.d(i) *
              Rational(fin.entry(i, j));
  if (norm <= 0) throw std::invalid_argument("theta is not a root direction");
  std::vector<Rational> d(r);
  for (int i = 0; i < r; ++i) d[i] = fin.d(i) * Rational(2) / norm;

  IntMatrix ext(r + 1, std::vector<long>(r + 1, 0));
  ext[0][0] = 2;
  for (int k = 0; k < r; ++k) {
    long ck0 = 0;
    for (int j = 0; j < r; ++j) ck0 -= theta[j] * fin.entry(k, j);
    ext[k + 1][0] = ck0;
    Rational c0i(0);
    for (int j = 0; j < r; ++j)
      c0i -= d[j] * Rational(theta[j]) * Rational(fin.entry(j, k));
    if (c0i.get_den() != 1)
      throw std::invalid_argument("extension entry is not integral; wrong theta");
    ext[0][k + 1] = c0i.get_num().get_si();
    for (int j = 0; j < r; ++j) ext[k + 1][j + 1] = fin.entry(k, j);
  }

  auto v = validate_gcm(ext);
  if (!v.ok)
    throw std::invalid_argument("extension is not a GCM (" + v.message +
                                "); wrong theta");
  for (int i = 0; i <= r; ++i) {
    long s = ext[i][0];
    for (int j = 0; j < r; ++j) s += ext[i][j + 1] * theta[j];
    if (s != 0)
      throw std::invalid_argument("marks are not in the kernel; wrong theta");
  }

  CartanData c;
  c.kind_ = Kind::Affine;
  c.matrix_ = std::move(ext);
  c.symmetrizers_.push_back(Rational(1));
  for (int i = 0; i < r; ++i) c.symmetrizers_.push_back(d[i]);
  c.marks_.push_back(1);
  c.marks_.insert(c.marks_.end(), theta.begin(), theta.end());
  c.finite_part_ = std::make_shared<CartanData>(fin);
  return c;
}

CartanData CartanData::finite_a(int n) {
  if (n < 1) throw std::invalid_argument("A_n requires n >= 1");
  IntMatrix m(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) {
    m[i][i] = 2;
    if (i + 1 < n) {
      m[i][i + 1] = -1;
      m[i + 1][i] = -1;
    }
  }
  return finite(m);
}

CartanData CartanData::affine_a(int n) {
  return affine_extend(finite_a(n), std::vector<long>(n, 1));
}

CartanData CartanData::by_name(const std::string& name) {
  if (name.size() >= 2 && (name[0] == 'A' || name[0] == 'a')) {
    int n = std::stoi(name.substr(1));
    if (n >= 1 && n <= 8) return affine_a(n);
  }
  throw std::invalid_argument("unknown type name: " + name +
                              " (expected A1..A8)");
}

const CartanData& CartanData::finite_part() const {
  if (!finite_part_) throw std::logic_error("finite data has no finite_part");
  return *finite_part_;
}

}  // namespace coxtoda
