#ifndef COXTODA_LOOP_MATRIX_HPP
#define COXTODA_LOOP_MATRIX_HPP

#include <array>
#include <string>
#include <vector>

#include "coxtoda/laurent.hpp"

namespace coxtoda {

// Name of the loop variable throughout the library.
inline const std::string kLoopVar = "z";

/*
  Element of the polynomial loop group of SL_{n+1} in the defining
  representation: a square matrix of Laurent polynomials in the coordinate
  variables and z.  The affine generator is realized as e_0 = z E_{n+1,1}.
*/
class LoopMatrix {
 public:
  LoopMatrix(int size) : size_(size), e_(size * size) {}
  static LoopMatrix identity(int size);

  int size() const { return size_; }
  const MultiLaurent& at(int i, int j) const { return e_[i * size_ + j]; }
  MultiLaurent& at(int i, int j) { return e_[i * size_ + j]; }

  LoopMatrix operator*(const LoopMatrix& o) const;
  bool operator==(const LoopMatrix& o) const {
    return size_ == o.size_ && e_ == o.e_;
  }

  MultiLaurent det() const;
  MultiLaurent trace() const;
  std::string str() const;

  // x_i(t) for letter = +(i+1), x_{-i}(t) for letter = -(i+1); index 0 maps
  // to the z-graded corner entries.
  static LoopMatrix one_param(int size, int letter, const MultiLaurent& t);

  // s-bar_i = x_i(1) x_{-i}(-1) x_i(1).
  static LoopMatrix reflection_rep(int size, int index);

  // phi_i: SL_2 placed in rows/columns (i, i+1) for i >= 1; for i = 0 the
  // entries wrap around the corners with the z-grading.
  static LoopMatrix embed_sl2(int size, int index,
                              const std::array<MultiLaurent, 4>& m);

  // Sum of principal k x k minors (character of the k-th exterior power).
  MultiLaurent fundamental_char(int k) const;

 private:
  int size_;
  std::vector<MultiLaurent> e_;
};

}  // namespace coxtoda

#endif
