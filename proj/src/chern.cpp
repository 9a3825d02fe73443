#include "ncsphere/chern.hpp"

#include "ncsphere/errors.hpp"
#include "ncsphere/sphere.hpp"

namespace ncs {

Alphabet star_alphabet() {
  Alphabet a;
  for (int mu = 0; mu < 4; ++mu) a.name(star_id(mu), "z*" + std::to_string(mu));
  return a;
}

MatTensor::MatTensor(std::size_t n, std::size_t factors)
    : n_(n), k_(factors), entries_(n * n, TensorElt(factors)) {}

MatTensor MatTensor::lift(const MatFree& m) {
  MatTensor r(m.dim(), 1);
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) r(i, j) = TensorElt::pure({m(i, j)});
  return r;
}

MatTensor& MatTensor::operator+=(const MatTensor& o) {
  if (n_ != o.n_ || k_ != o.k_) throw DomainError("matrix tensor shape mismatch in sum");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

MatTensor& MatTensor::operator-=(const MatTensor& o) {
  if (n_ != o.n_ || k_ != o.k_) throw DomainError("matrix tensor shape mismatch in difference");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

bool operator==(const MatTensor& a, const MatTensor& b) {
  return a.n_ == b.n_ && a.k_ == b.k_ && a.entries_ == b.entries_;
}

TensorElt MatTensor::trace() const {
  TensorElt t(k_);
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

MatTensor ocirc(const MatTensor& a, const MatTensor& b) {
  if (a.dim() != b.dim()) throw DomainError("matrix dimension mismatch in ocirc product");
  std::size_t n = a.dim();
  MatTensor r(n, a.factors() + b.factors());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) r(i, j) += tensor(a(i, k), b(k, j));
  return r;
}

MatTensor ocirc(const MatFree& a, const MatFree& b) { return ocirc(MatTensor::lift(a), MatTensor::lift(b)); }

FreeElt ch0(const MatFree& s) { return s.trace(); }

TensorElt ch1(const MatFree& u, const MatFree& ustar) {
  TensorElt t = (ocirc(u, ustar) - ocirc(ustar, u)).trace();
  return t * ParamScalar(GaussRat(Rat(1, 2)));
}

UnitaryPair pauli_unitary() {
  const auto& p = pauli_basis();
  FreeElt i(ParamScalar::i());
  UnitaryPair r{FreeElt::gen(0) * p[0], FreeElt::gen(star_id(0)) * p[0]};
  for (int j = 1; j <= 3; ++j) {
    r.u += (i * FreeElt::gen(static_cast<GenId>(j))) * p[static_cast<std::size_t>(j)];
    r.ustar -= (i * FreeElt::gen(star_id(j))) * p[static_cast<std::size_t>(j)];
  }
  return r;
}

TensorElt expected_ch1() {
  TensorElt t(2);
  for (int mu = 0; mu < 4; ++mu) {
    FreeElt z = FreeElt::gen(static_cast<GenId>(mu)), zs = FreeElt::gen(star_id(mu));
    t += TensorElt::pure({z, zs});
    t -= TensorElt::pure({zs, z});
  }
  return t;
}

TensorElt impose_adjoint(const TensorElt& t, const std::array<ParamScalar, 4>& lambda) {
  std::map<GenId, FreeElt> images;
  for (int mu = 0; mu < 4; ++mu)
    images[star_id(mu)] = lambda[static_cast<std::size_t>(mu)] * FreeElt::gen(static_cast<GenId>(mu));
  return t.substitute(images);
}

Alphabet TwoSphereRigidity::alphabet() const {
  Alphabet a;
  a.name(x, "x").name(y, "y").name(ystar, "y*");
  return a;
}

TwoSphereRigidity two_sphere_rigidity() {
  using R = TwoSphereRigidity;
  FreeElt x = FreeElt::gen(R::x), y = FreeElt::gen(R::y), ys = FreeElt::gen(R::ystar);
  R r{MatFree(2), MatFree(2), {}, false, false};
  r.s(0, 0) = x;
  r.s(0, 1) = y;
  r.s(1, 0) = ys;
  r.s(1, 1) = -x;
  r.square_minus_one = r.s * r.s - MatFree::identity(2);
  r.derived = {x * y - y * x, ys * x - x * ys, y * ys - ys * y, x * x + y * ys - FreeElt(1)};
  const auto& m = r.square_minus_one;
  r.spans_match = same_span({m(0, 0), m(0, 1), m(1, 0), m(1, 1)},
                            {r.derived[0], r.derived[1], r.derived[2], r.derived[3]});
  r.trace_free = ch0(r.s).is_zero();
  return r;
}

FuzzyCasimir fuzzy_casimir(int n) {
  using Rows = std::vector<std::vector<GaussRat>>;
  std::array<MatFree, 3> spins{MatFree(1), MatFree(1), MatFree(1)};
  const GaussRat i = GaussRat::i();
  switch (n) {
    case 1:
      break;
    case 2: {
      const auto& p = pauli_basis();
      spins = {p[1], p[2], p[3]};
      break;
    }
    case 3: {
      // 2L_k with (L_k)_ab = −i ε_kab.
      auto eps = [](int a, int b, int c) { return (a - b) * (b - c) * (c - a) / 2; };
      for (int k = 0; k < 3; ++k) {
        Rows rows(3, std::vector<GaussRat>(3));
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b) rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
              i * GaussRat(-2 * eps(k, a, b));
        spins[static_cast<std::size_t>(k)] = MatFree::constant(rows);
      }
      break;
    }
    default:
      throw DomainError("fuzzy sphere matrices are provided for n = 1, 2, 3 only");
  }

  auto dim = static_cast<std::size_t>(n);
  FreeElt z0 = FreeElt::gen(kFirstCentralId);
  FuzzyCasimir r;
  r.n = n;
  r.casimir = MatFree(dim);
  for (std::size_t k = 0; k < 3; ++k) {
    r.z[k] = z0 * spins[k];
    r.casimir += r.z[k] * r.z[k];
  }
  r.casimir_matches = r.casimir == (FreeElt(static_cast<long>(n * n - 1)) * z0 * z0) * MatFree::identity(dim);

  r.commutators_match = true;
  FreeElt two_i(ParamScalar(GaussRat(Rat(0), Rat(2))));
  for (std::size_t a = 0; a < 3; ++a) {
    std::size_t b = (a + 1) % 3, c = (a + 2) % 3;
    MatFree comm = spins[a] * spins[b] - spins[b] * spins[a];
    if (!(comm == two_i * spins[c])) r.commutators_match = false;
  }
  return r;
}

}  // namespace ncs
