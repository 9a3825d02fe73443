#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ncsphere/freealg.hpp"

using namespace ncs;

namespace {

FreeElt z(int k) { return FreeElt::gen(static_cast<GenId>(k)); }
ParamScalar lam(int k) { return ParamScalar::lambda(k); }
std::array<ParamScalar, 4> symbolic() { return {lam(0), lam(1), lam(2), lam(3)}; }

FreeElt random_elt(std::mt19937& rng, int max_deg = 3) {
  FreeElt e;
  int terms = 1 + static_cast<int>(rng() % 4);
  for (int t = 0; t < terms; ++t) {
    Word w;
    int d = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
    for (int k = 0; k < d; ++k) w.push_back(static_cast<GenId>(rng() % 4));
    ParamScalar c(GaussRat(Rat(static_cast<long>(rng() % 7) - 3), Rat(static_cast<long>(rng() % 3) - 1)));
    if (rng() % 2) c *= lam(static_cast<int>(rng() % 4));
    e.add_term(w, c);
  }
  return e;
}

}  // namespace

TEST_CASE("free products") {
  CHECK(z(0) * z(1) == FreeElt::monomial(word({0, 1})));
  FreeElt lhs = (z(0) + z(1)) * (z(0) - z(1));
  FreeElt rhs = z(0) * z(0) - z(0) * z(1) + z(1) * z(0) - z(1) * z(1);
  CHECK(lhs == rhs);
  CHECK(lhs.degree() == 2);
  CHECK(lhs.is_homogeneous());
  std::mt19937 rng(1);
  for (int t = 0; t < 40; ++t) {
    FreeElt a = random_elt(rng), b = random_elt(rng), c = random_elt(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(FreeElt(1) * a == a);
    CHECK(a * FreeElt(1) == a);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("central symbols move to the front") {
  GenId x = kFirstCentralId;
  FreeElt xs = FreeElt::gen(x);
  CHECK(z(1) * xs == xs * z(1));
  CHECK((z(2) * xs * z(0)).terms().begin()->first == word({x, 2, 0}));
}

TEST_CASE("adjoint with z* = λz") {
  auto l = symbolic();
  CHECK(adjoint(z(1), l) == lam(1) * z(1));
  CHECK(adjoint(z(0) * z(1), l) == (lam(0) * lam(1)) * (z(1) * z(0)));
  CHECK(adjoint(FreeElt(ParamScalar::i()), l) == FreeElt(-ParamScalar::i()));
  std::mt19937 rng(2);
  for (int t = 0; t < 40; ++t) {
    FreeElt a = random_elt(rng), b = random_elt(rng);
    CHECK(adjoint(adjoint(a, l), l) == a);
    CHECK(adjoint(a * b, l) == adjoint(b, l) * adjoint(a, l));
  }
}

TEST_CASE("Pauli expansion") {
  ParamScalar i = ParamScalar::i();
  const auto& p = pauli_basis();
  MatFree u = z(0) * p[0];
  for (int j = 1; j <= 3; ++j) u += (FreeElt(i) * z(j)) * p[static_cast<std::size_t>(j)];
  auto c = pauli_expand(u);
  CHECK(c[0] == z(0));
  CHECK(c[1] == i * z(1));
  CHECK(c[2] == i * z(2));
  CHECK(c[3] == i * z(3));

  auto ci = pauli_expand(MatFree::identity(2));
  CHECK(ci[0] == FreeElt(1));
  CHECK(ci[1].is_zero());
  CHECK(ci[2].is_zero());
  CHECK(ci[3].is_zero());

  auto c12 = pauli_expand(p[1] * p[2]);
  CHECK(c12[0].is_zero());
  CHECK(c12[1].is_zero());
  CHECK(c12[2].is_zero());
  CHECK(c12[3] == FreeElt(i));

  std::mt19937 rng(3);
  for (int t = 0; t < 20; ++t) {
    MatFree m(2);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t s = 0; s < 2; ++s) m(r, s) = random_elt(rng);
    CHECK(pauli_reconstruct(pauli_expand(m)) == m);
  }
  CHECK_THROWS_AS(pauli_expand(MatFree::identity(3)), DomainError);
}

TEST_CASE("Pauli relations") {
  const auto& p = pauli_basis();
  FreeElt i(ParamScalar::i());
  CHECK(p[1] * p[2] == i * p[3]);
  CHECK(p[2] * p[3] == i * p[1]);
  CHECK(p[3] * p[1] == i * p[2]);
  for (std::size_t k = 1; k < 4; ++k) {
    CHECK(p[k] * p[k] == MatFree::identity(2));
    CHECK(p[k].trace().is_zero());
  }
}

TEST_CASE("matrix products") {
  GenId x = 4, y = 5, ys = 6;
  FreeElt X = FreeElt::gen(x), Y = FreeElt::gen(y), Ys = FreeElt::gen(ys);
  MatFree s(2);
  s(0, 0) = X;
  s(0, 1) = Y;
  s(1, 0) = Ys;
  s(1, 1) = -X;
  MatFree s2 = s * s;
  CHECK(s2(0, 0) == X * X + Y * Ys);
  CHECK(s2(0, 1) == X * Y - Y * X);
  CHECK(s2(1, 0) == Ys * X - X * Ys);
  CHECK(s2(1, 1) == Ys * Y + X * X);
  CHECK(MatFree::identity(2) * s == s);
  CHECK_THROWS_AS(mat_mul(s, MatFree::identity(3)), DomainError);
}

TEST_CASE("U U* at the commutative point, entrywise") {
  ParamScalar i = ParamScalar::i();
  const auto& p = pauli_basis();
  MatFree u = z(0) * p[0];
  for (int j = 1; j <= 3; ++j) u += (FreeElt(i) * z(j)) * p[static_cast<std::size_t>(j)];
  std::array<ParamScalar, 4> one{1, 1, 1, 1};
  MatFree us = u.adjoint(Involution::from_lambda(one));
  MatFree prod = u * us;
  // hand expansion with U = [[z0+i z3, i z1+z2],[i z1-z2, z0-i z3]]
  FreeElt a = z(0) + i * z(3), b = i * z(1) + z(2), c = i * z(1) - z(2), d = z(0) - i * z(3);
  FreeElt as = z(0) - i * z(3), bs = -i * z(1) + z(2), cs = -i * z(1) - z(2), ds = z(0) + i * z(3);
  CHECK(prod(0, 0) == a * as + b * bs);
  CHECK(prod(0, 1) == a * cs + b * ds);
  CHECK(prod(1, 0) == c * as + d * bs);
  CHECK(prod(1, 1) == c * cs + d * ds);
}

TEST_CASE("Clifford systems") {
  for (int dim = 1; dim <= 3; ++dim) {
    auto g = clifford_generators(dim);
    CHECK(g.size() == static_cast<std::size_t>(dim));
    std::size_t n = g[0].dim();
    for (std::size_t j = 0; j < g.size(); ++j)
      for (std::size_t k = 0; k < g.size(); ++k) {
        MatFree ac = g[j] * g[k] + g[k] * g[j];
        MatFree expect = j == k ? FreeElt(2) * MatFree::identity(n) : MatFree(n);
        CHECK(ac == expect);
      }
  }
  CHECK_THROWS_AS(clifford_generators(4), DomainError);

  // s = Σ x_j γ_j squares to Σ x_j² with commuting x (central ids)
  auto g = clifford_generators(3);
  MatFree s(2);
  FreeElt sum;
  for (std::size_t j = 0; j < 3; ++j) {
    FreeElt xj = FreeElt::gen(static_cast<GenId>(kFirstCentralId + j));
    s += xj * g[j];
    sum += xj * xj;
  }
  CHECK(s * s == sum * MatFree::identity(2));

  // U = x0 + iΣ x_j σ_j has UU* = U*U = Σ x_μ² for self-adjoint commuting x
  FreeElt i(ParamScalar::i());
  FreeElt x0 = FreeElt::gen(kFirstCentralId + 3);
  MatFree u = x0 * MatFree::identity(2);
  for (std::size_t j = 0; j < 3; ++j) u += (i * FreeElt::gen(static_cast<GenId>(kFirstCentralId + j))) * g[j];
  MatFree us = u.adjoint(Involution());
  CHECK(u * us == (sum + x0 * x0) * MatFree::identity(2));
  CHECK(us * u == (sum + x0 * x0) * MatFree::identity(2));
}

TEST_CASE("tensor elements") {
  TensorElt a = TensorElt::pure({z(0), z(1)});
  TensorElt b = TensorElt::pure({z(2), z(3) + z(0)});
  TensorElt c = TensorElt::pure({z(1) * z(1), FreeElt(lam(2))});
  CHECK((a * b) * c == a * (b * c));
  CHECK(a.flip().flip() == a);
  CHECK(a.flip() == TensorElt::pure({z(1), z(0)}));
  CHECK(tensor(a, b).factors() == 4);
  CHECK_THROWS_AS(tensor(tensor(a, b), a), DomainError);
  CHECK(a.to_string() == "z0⊗z1");
}

TEST_CASE("canonical rendering") {
  FreeElt e = (lam(0) * lam(1)) * (z(0) * z(1)) - z(1) * z(0);
  CHECK(e.to_string() == "(λ0*λ1)·z0.z1 + (-1)·z1.z0");
  CHECK(FreeElt().to_string() == "0");
}
