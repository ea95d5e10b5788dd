#include <doctest.h>

#include <random>

#include "coxtoda/loop_matrix.hpp"

using coxtoda::kLoopVar;
using coxtoda::LoopMatrix;
using coxtoda::MultiLaurent;
using coxtoda::Rational;

namespace {

// Random product of one-parameter factors with rational parameters,
// returned together with its inverse (the reversed word with negated
// parameters); always has determinant 1.
std::pair<LoopMatrix, LoopMatrix> random_word_matrix(int size, int length,
                                                     std::mt19937& rng) {
  std::uniform_int_distribution<int> idx(0, size - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  std::uniform_int_distribution<int> num(-3, 3);
  auto g = LoopMatrix::identity(size);
  auto ginv = LoopMatrix::identity(size);
  for (int k = 0; k < length; ++k) {
    int letter = (idx(rng) + 1) * (sgn(rng) ? 1 : -1);
    Rational c(num(rng));
    g = g * LoopMatrix::one_param(size, letter, MultiLaurent(c));
    ginv = LoopMatrix::one_param(size, letter, MultiLaurent(-c)) * ginv;
  }
  return {g, ginv};
}

}  // namespace

TEST_CASE("one-parameter subgroups") {
  auto t = MultiLaurent::variable("t");
  // Letter +(i+1) encodes x_i, so letter 2 is x_1(t) in SL_3: identity
  // plus t in entry (1,2) (1-based).
  auto x1 = LoopMatrix::one_param(3, 2, t);
  CHECK(x1.at(0, 1) == t);
  CHECK(x1.at(0, 0) == MultiLaurent(1));
  CHECK(x1.at(1, 0).is_zero());
  // x_{-1}(t): transposed position.
  auto xm1 = LoopMatrix::one_param(3, -2, t);
  CHECK(xm1.at(1, 0) == t);
  // x_0(t) = I + t z E_{n+1,1}; x_{-0}(t) = I + t z^-1 E_{1,n+1}.
  auto z = MultiLaurent::variable(kLoopVar);
  auto e0 = LoopMatrix::one_param(3, 1, t);
  CHECK(e0.at(2, 0) == t * z);
  auto f0 = LoopMatrix::one_param(3, -1, t);
  CHECK(f0.at(0, 2) == t * z.inverse());
  // One-parameter property: x_i(a) x_i(b) = x_i(a+b).
  auto a = MultiLaurent::variable("a");
  auto b = MultiLaurent::variable("b");
  CHECK(LoopMatrix::one_param(3, 2, a) * LoopMatrix::one_param(3, 2, b) ==
        LoopMatrix::one_param(3, 2, a + b));
  // Determinant 1 in all cases.
  CHECK(e0.det() == MultiLaurent(1));
  CHECK(f0.det() == MultiLaurent(1));
  CHECK(x1.det() == MultiLaurent(1));
}

TEST_CASE("reflection representative") {
  // s-bar_1 in SL_2 is [[0,1],[-1,0]], oracle by hand.
  auto s = LoopMatrix::reflection_rep(2, 1);
  CHECK(s.at(0, 0).is_zero());
  CHECK(s.at(0, 1) == MultiLaurent(1));
  CHECK(s.at(1, 0) == MultiLaurent(-1));
  CHECK(s.at(1, 1).is_zero());
  // s-bar^2 = -I on the invariant plane, so s-bar^4 = I.
  auto s4 = s * s * s * s;
  CHECK(s4 == LoopMatrix::identity(2));
  // The affine reflection involves z; its fourth power is still I.
  auto s0 = LoopMatrix::reflection_rep(3, 0);
  CHECK(s0 * s0 * s0 * s0 == LoopMatrix::identity(3));
  CHECK(s0.det() == MultiLaurent(1));
}

TEST_CASE("embed_sl2 matches products of one-parameter factors") {
  // phi_i(x(t)) for the unipotent upper 2x2 equals x_i(t).
  auto t = MultiLaurent::variable("t");
  std::array<MultiLaurent, 4> upper = {MultiLaurent(1), t, MultiLaurent(),
                                       MultiLaurent(1)};
  for (int i = 0; i <= 2; ++i) {
    auto emb = LoopMatrix::embed_sl2(3, i, upper);
    CHECK(emb == LoopMatrix::one_param(3, i + 1, t));
  }
  // Determinant of the SL_2 argument is enforced.
  std::array<MultiLaurent, 4> bad = {MultiLaurent(1), MultiLaurent(),
                                     MultiLaurent(), MultiLaurent(2)};
  CHECK_THROWS_AS(LoopMatrix::embed_sl2(3, 1, bad), std::invalid_argument);
  // embed_sl2 is a homomorphism at index 0: product of images is the image
  // of the product.
  auto A = MultiLaurent::variable("A");
  std::array<MultiLaurent, 4> h = {A, MultiLaurent(), MultiLaurent(),
                                   A.inverse()};
  auto g1 = LoopMatrix::embed_sl2(3, 0, h);
  auto g2 = LoopMatrix::embed_sl2(3, 0, upper);
  std::array<MultiLaurent, 4> prod = {A, A * t, MultiLaurent(), A.inverse()};
  CHECK(g1 * g2 == LoopMatrix::embed_sl2(3, 0, prod));
}

TEST_CASE("fundamental characters") {
  // Diagonal matrix diag(a, b, (ab)^-1): char_1 is the trace, char_2 the
  // sum of pairwise products, char_3 = det = 1.
  auto a = MultiLaurent::variable("a");
  auto b = MultiLaurent::variable("b");
  auto g = LoopMatrix::identity(3);
  g.at(0, 0) = a;
  g.at(1, 1) = b;
  g.at(2, 2) = (a * b).inverse();
  CHECK(g.fundamental_char(1) == a + b + (a * b).inverse());
  CHECK(g.fundamental_char(2) == a * b + b.inverse() + a.inverse());
  CHECK(g.fundamental_char(3) == MultiLaurent(1));
  CHECK(g.fundamental_char(1) == g.trace());
}

TEST_CASE("character duality and conjugation invariance") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 5; ++trial) {
    auto [g, ginv] = random_word_matrix(3, 6, rng);
    CHECK(g.det() == MultiLaurent(1));
    CHECK(g * ginv == LoopMatrix::identity(3));
    // Exterior-power duality: char_k(g) = char_{n+1-k}(g^-1) det(g).
    for (int k = 1; k <= 2; ++k)
      CHECK(g.fundamental_char(k) == ginv.fundamental_char(3 - k) * g.det());
    CHECK(g.fundamental_char(3) == g.det());
    // Conjugation invariance: char_k(h g h^-1) = char_k(g).
    auto h = LoopMatrix::one_param(3, 2, MultiLaurent(Rational(2)));
    auto hinv = LoopMatrix::one_param(3, 2, MultiLaurent(Rational(-2)));
    auto conj = h * g * hinv;
    for (int k = 1; k <= 3; ++k)
      CHECK(conj.fundamental_char(k) == g.fundamental_char(k));
  }
}
