#ifndef COXTODA_CARTAN_HPP
#define COXTODA_CARTAN_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coxtoda/rational.hpp"

namespace coxtoda {

using IntMatrix = std::vector<std::vector<long>>;

struct ValidationResult {
  bool ok = true;
  std::string message;
};

// Axioms: (1) C_ii = 2, (2) C_ij <= 0 for i != j, (3) C_ij = 0 iff C_ji = 0.
ValidationResult validate_gcm(const IntMatrix& matrix);

// Positive rational d with d_i C_ij = d_j C_ji, normalized so min d_i = 1.
// Empty optional when the matrix is not symmetrizable.
std::optional<std::vector<Rational>> symmetrizer(const IntMatrix& matrix);

/*
  Generalized Cartan matrix together with its symmetrizers and, in the
  affine case, the marks of the highest root (index 0 carrying the
  convention theta_0 = 1) and the underlying finite data.
*/
class CartanData {
 public:
  enum class Kind { Finite, Affine };

  static CartanData finite(const IntMatrix& matrix);
  // theta: coefficients of the highest root over the finite simple roots.
  static CartanData affine_extend(const CartanData& fin,
                                  const std::vector<long>& theta);
  static CartanData finite_a(int n);
  static CartanData affine_a(int n);
  // "A1".."A8" -> the untwisted affine extension A_n^(1).
  static CartanData by_name(const std::string& name);

  Kind kind() const { return kind_; }
  bool is_affine() const { return kind_ == Kind::Affine; }
  int size() const { return static_cast<int>(matrix_.size()); }
  // Finite rank r; for affine data the indices run over 0..r.
  int rank() const { return is_affine() ? size() - 1 : size(); }
  const IntMatrix& matrix() const { return matrix_; }
  long entry(int i, int j) const { return matrix_[i][j]; }
  const std::vector<Rational>& symmetrizers() const { return symmetrizers_; }
  const Rational& d(int i) const { return symmetrizers_[i]; }
  const std::vector<long>& marks() const { return marks_; }
  long mark(int i) const { return marks_[i]; }
  const CartanData& finite_part() const;

 private:
  CartanData() = default;

  Kind kind_ = Kind::Finite;
  IntMatrix matrix_;
  std::vector<Rational> symmetrizers_;
  std::vector<long> marks_;  // affine: indexed 0..r with marks_[0] = 1
  std::shared_ptr<const CartanData> finite_part_;
};

}  // namespace coxtoda

#endif
