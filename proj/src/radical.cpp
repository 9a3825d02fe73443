#include "ncsphere/radical.hpp"


namespace ncs {

std::shared_ptr<const RadicalRing> RadicalRing::make(std::array<ParamScalar, 4> squares,
                                                     ParamScalar product) {
  for (const auto& s : squares)
    if (s.is_zero()) throw DomainError("radical ring with a vanishing radicand");
  ParamScalar all = squares[0] * squares[1] * squares[2] * squares[3];
  if (!(product * product == all))
    throw DomainError("product of square roots is inconsistent with the radicands");
  return std::shared_ptr<const RadicalRing>(new RadicalRing(std::move(squares), std::move(product)));
}

RadicalElt RadicalElt::root(const Ring& ring, int mu) {
  RadicalElt r(ring);
  if (mu == 0) {
    const auto& s = ring->squares();
    r.coeffs_[0b111] = ring->product() / (s[1] * s[2] * s[3]);
  } else {
    r.coeffs_[1u << (mu - 1)] = ParamScalar(1);
  }
  return r;
}

RadicalElt RadicalElt::root_product(const Ring& ring, unsigned mask) {
  RadicalElt r(ring, ParamScalar(1));
  for (int mu = 0; mu < 4; ++mu)
    if (mask & (1u << mu)) r *= root(ring, mu);
  return r;
}

bool RadicalElt::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool RadicalElt::is_pure() const {
  int nonzero = 0;
  for (const auto& c : coeffs_) nonzero += c.is_zero() ? 0 : 1;
  return nonzero <= 1;
}

RadicalElt RadicalElt::operator-() const {
  RadicalElt r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

RadicalElt& RadicalElt::operator+=(const RadicalElt& o) {
  for (std::size_t m = 0; m < 8; ++m) coeffs_[m] += o.coeffs_[m];
  return *this;
}

RadicalElt& RadicalElt::operator-=(const RadicalElt& o) {
  for (std::size_t m = 0; m < 8; ++m) coeffs_[m] -= o.coeffs_[m];
  return *this;
}

RadicalElt& RadicalElt::operator*=(const ParamScalar& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

RadicalElt& RadicalElt::operator*=(const RadicalElt& o) {
  std::array<ParamScalar, 8> out{};
  const auto& s = ring_->squares();
  for (unsigned a = 0; a < 8; ++a) {
    if (coeffs_[a].is_zero()) continue;
    for (unsigned b = 0; b < 8; ++b) {
      if (o.coeffs_[b].is_zero()) continue;
      ParamScalar c = coeffs_[a] * o.coeffs_[b];
      unsigned both = a & b;
      for (unsigned k = 0; k < 3; ++k)
        if (both & (1u << k)) c *= s[k + 1];
      out[a ^ b] += c;
    }
  }
  coeffs_ = std::move(out);
  return *this;
}

bool operator==(const RadicalElt& a, const RadicalElt& b) {
  for (std::size_t m = 0; m < 8; ++m)
    if (!(a.coeffs_[m] == b.coeffs_[m])) return false;
  return true;
}

std::string RadicalElt::to_string() const {
  std::string out;
  for (unsigned m = 0; m < 8; ++m) {
    if (coeffs_[m].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[m].to_string() + ")";
    for (unsigned k = 0; k < 3; ++k)
      if (m & (1u << k)) out += "·√s" + std::to_string(k + 1);
  }
  return out.empty() ? "0" : out;
}

}  // namespace ncs
