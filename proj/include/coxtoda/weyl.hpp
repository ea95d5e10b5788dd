#ifndef COXTODA_WEYL_HPP
#define COXTODA_WEYL_HPP

#include <optional>
#include <vector>

#include "coxtoda/cartan.hpp"
#include "coxtoda/rational.hpp"

namespace coxtoda {

// Weight of the finite algebra, coordinates over the fundamental weights
// omega_1..omega_r.  The i-th coordinate is the pairing <lambda | h_i>.
using Weight = std::vector<Rational>;

// Permutation of {0..r}, listing the reflection indices in word order.
using Permutation = std::vector<int>;

bool is_permutation(const Permutation& perm, int size);

// True iff i appears before k in the word s_{perm(0)} ... s_{perm(r)}.
bool order_before(int i, int k, const Permutation& perm);

// alpha_i in the fundamental-weight basis; index 0 gives -theta.
Weight simple_root(int i, const CartanData& affine);

// Simple reflection s_i; s_0 acts as s_theta with alpha_0 = -theta.
Weight reflect(const Weight& lambda, int i, const CartanData& affine);

// mu = -sum_{k != 0} (theta_k + sum_{j >_sigma k} theta_j C_kj) omega_k.
Weight mu_weight(const Permutation& sigma, const CartanData& affine);

struct MuChainReport {
  Weight mu;
  // partials[j] = s_{sigma(j)} ... s_{sigma(r)}(mu), for j = r down to 0.
  std::vector<Weight> partials;   // indexed by j
  std::vector<Weight> expected;   // mu + sum_{k >= j} theta_sigma(k) alpha_sigma(k)
  bool ok = false;
};

// Applies the reflection chain of the mu-fixing lemma and verifies each
// intermediate weight against its closed form.
MuChainReport check_mu_fixed(const Permutation& sigma,
                             const CartanData& affine);

struct WeylWord {
  std::vector<int> letters;  // reflection indices
  bool is_coxeter(int size) const;
};

WeylWord coxeter_word(const Permutation& perm);

/*
  Shuffle of a reduced word for u (stored negative) and one for v (stored
  positive); letter i is encoded as +-(i+1) so index 0 keeps its sign.
*/
struct DoubleReducedWord {
  std::vector<int> letters;

  static int encode(int index, bool positive) {
    return positive ? index + 1 : -(index + 1);
  }
  static int decode_index(int letter) {
    return (letter > 0 ? letter : -letter) - 1;
  }

  WeylWord u_word() const;  // negative letters, in order
  WeylWord v_word() const;  // positive letters, in order
  std::optional<Permutation> sigma(int size) const;  // from v, if Coxeter
  std::optional<Permutation> tau(int size) const;    // from u, if Coxeter

  // pattern: zeros pick the next letter of u, ones the next letter of v.
  static DoubleReducedWord shuffle(const WeylWord& u, const WeylWord& v,
                                   const std::vector<int>& pattern);
  // The unshuffled word of the reduced-coordinate formulas: v first, then u.
  static DoubleReducedWord unshuffled(const Permutation& sigma,
                                      const Permutation& tau);
};

}  // namespace coxtoda

#endif
