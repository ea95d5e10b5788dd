#include "coxtoda/weyl.hpp"

#include <algorithm>
#include <stdexcept>

namespace coxtoda {

bool is_permutation(const Permutation& perm, int size) {
  if (static_cast<int>(perm.size()) != size) return false;
  std::vector<bool> seen(size, false);
  for (int x : perm) {
    if (x < 0 || x >= size || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

bool order_before(int i, int k, const Permutation& perm) {
  auto pos = [&](int x) {
    auto it = std::find(perm.begin(), perm.end(), x);
    if (it == perm.end())
      throw std::invalid_argument("index not in permutation");
    return it - perm.begin();
  };
  return pos(i) < pos(k);
}

static void require_affine(const CartanData& data) {
  if (!data.is_affine())
    throw std::invalid_argument("operation requires affine Cartan data");
}

Weight simple_root(int i, const CartanData& affine) {
  require_affine(affine);
  const int r = affine.rank();
  const CartanData& fin = affine.finite_part();
  Weight alpha(r, Rational(0));
  if (i >= 1 && i <= r) {
    // alpha_i = sum_k C_ki omega_k over the finite matrix.
    for (int k = 0; k < r; ++k) alpha[k] = Rational(fin.entry(k, i - 1));
    return alpha;
  }
  if (i == 0) {
    // alpha_0 is read as -theta = -sum theta_i alpha_i.
    for (int j = 1; j <= r; ++j) {
      Weight a = simple_root(j, affine);
      for (int k = 0; k < r; ++k) alpha[k] -= Rational(affine.mark(j)) * a[k];
    }
    return alpha;
  }
  throw std::out_of_range("root index out of range");
}

Weight reflect(const Weight& lambda, int i, const CartanData& affine) {
  require_affine(affine);
  const int r = affine.rank();
  if (static_cast<int>(lambda.size()) != r)
    throw std::invalid_argument("weight has wrong length");
  if (i < 0 || i > r) throw std::out_of_range("reflection index out of range");
  Rational pairing(0);
  if (i >= 1) {
    pairing = lambda[i - 1];
  } else {
    // <lambda | h_0> = -<lambda | h_theta> = -sum_k d_k theta_k lambda_k.
    for (int k = 1; k <= r; ++k)
      pairing -= affine.d(k) * Rational(affine.mark(k)) * lambda[k - 1];
  }
  Weight alpha = simple_root(i, affine);
  Weight out = lambda;
  for (int k = 0; k < r; ++k) out[k] -= pairing * alpha[k];
  return out;
}

Weight mu_weight(const Permutation& sigma, const CartanData& affine) {
  require_affine(affine);
  const int r = affine.rank();
  if (!is_permutation(sigma, r + 1))
    throw std::invalid_argument("sigma is not a permutation of {0..r}");
  Weight mu(r, Rational(0));
  for (int k = 1; k <= r; ++k) {
    Rational coeff(affine.mark(k));
    for (int j = 0; j <= r; ++j) {
      if (j == k || !order_before(k, j, sigma)) continue;
      coeff += Rational(affine.mark(j)) * Rational(affine.entry(k, j));
    }
    mu[k - 1] = -coeff;
  }
  return mu;
}

MuChainReport check_mu_fixed(const Permutation& sigma,
                             const CartanData& affine) {
  require_affine(affine);
  const int r = affine.rank();
  MuChainReport report;
  report.mu = mu_weight(sigma, affine);

  report.partials.assign(r + 1, Weight());
  report.expected.assign(r + 1, Weight());
  Weight w = report.mu;
  Weight expected = report.mu;
  report.ok = true;
  for (int j = r; j >= 0; --j) {
    w = reflect(w, sigma[j], affine);
    Weight alpha = simple_root(sigma[j], affine);
    for (int k = 0; k < r; ++k)
      expected[k] += Rational(affine.mark(sigma[j])) * alpha[k];
    report.partials[j] = w;
    report.expected[j] = expected;
    if (w != expected) report.ok = false;
  }
  if (w != report.mu) report.ok = false;
  return report;
}

bool WeylWord::is_coxeter(int size) const {
  if (static_cast<int>(letters.size()) != size) return false;
  std::vector<bool> seen(size, false);
  for (int i : letters) {
    if (i < 0 || i >= size || seen[i]) return false;
    seen[i] = true;
  }
  return true;
}

WeylWord coxeter_word(const Permutation& perm) {
  return WeylWord{perm};
}

WeylWord DoubleReducedWord::u_word() const {
  WeylWord w;
  for (int l : letters)
    if (l < 0) w.letters.push_back(decode_index(l));
  return w;
}

WeylWord DoubleReducedWord::v_word() const {
  WeylWord w;
  for (int l : letters)
    if (l > 0) w.letters.push_back(decode_index(l));
  return w;
}

std::optional<Permutation> DoubleReducedWord::sigma(int size) const {
  WeylWord v = v_word();
  if (!v.is_coxeter(size)) return std::nullopt;
  return v.letters;
}

std::optional<Permutation> DoubleReducedWord::tau(int size) const {
  WeylWord u = u_word();
  if (!u.is_coxeter(size)) return std::nullopt;
  return u.letters;
}

DoubleReducedWord DoubleReducedWord::shuffle(const WeylWord& u,
                                             const WeylWord& v,
                                             const std::vector<int>& pattern) {
  if (pattern.size() != u.letters.size() + v.letters.size())
    throw std::invalid_argument("pattern length mismatch");
  DoubleReducedWord w;
  size_t iu = 0, iv = 0;
  for (int bit : pattern) {
    if (bit == 0) {
      if (iu >= u.letters.size())
        throw std::invalid_argument("pattern has too many zeros");
      w.letters.push_back(encode(u.letters[iu++], false));
    } else if (bit == 1) {
      if (iv >= v.letters.size())
        throw std::invalid_argument("pattern has too many ones");
      w.letters.push_back(encode(v.letters[iv++], true));
    } else {
      throw std::invalid_argument("pattern entries must be 0 or 1");
    }
  }
  return w;
}

DoubleReducedWord DoubleReducedWord::unshuffled(const Permutation& sigma,
                                                const Permutation& tau) {
  DoubleReducedWord w;
  for (int i : sigma) w.letters.push_back(encode(i, true));
  for (int i : tau) w.letters.push_back(encode(i, false));
  return w;
}

}  // namespace coxtoda
