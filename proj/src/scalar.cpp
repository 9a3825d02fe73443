#include "ncsphere/scalar.hpp"

#include <sstream>

namespace ncs {

Rat parse_rat(std::string_view text) {
  std::string s(text);
  auto first = s.find_first_not_of(" \t");
  auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) throw DomainError("empty rational literal");
  s = s.substr(first, last - first + 1);
  Rat r;
  if (r.set_str(s, 10) != 0) throw DomainError("malformed rational literal '" + s + "'");
  if (sgn(r.get_den()) == 0) throw DomainError("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& r) { return r.get_str(10); }

GaussRat GaussRat::inverse() const {
  Rat n = norm();
  if (sgn(n) == 0) throw DomainError("division by zero Gaussian rational");
  return GaussRat(re_ / n, -im_ / n);
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rat r = re_ * o.re_ - im_ * o.im_;
  Rat i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

std::string GaussRat::to_string() const {
  if (sgn(im_) == 0) return rat_to_string(re_);
  std::string imag = (im_ == 1) ? "i" : (im_ == -1 ? "-i" : rat_to_string(im_) + "*i");
  if (sgn(re_) == 0) return imag;
  std::string out = rat_to_string(re_);
  if (sgn(im_) > 0) out += "+";
  return out + imag;
}

std::size_t GaussRat::hash() const {
  std::hash<std::string> h;
  return h(re_.get_str(16)) * 31u ^ h(im_.get_str(16));
}

std::ostream& operator<<(std::ostream& os, const GaussRat& g) {
  return os << g.to_string();
}

UnitCirclePoint::UnitCirclePoint(GaussRat value) : value_(std::move(value)) {
  if (value_.norm() != 1)
    throw DomainError("not on the unit circle: " + value_.to_string());
}

UnitCirclePoint UnitCirclePoint::from_pythagorean(const Integer& p, const Integer& q) {
  if (sgn(p) == 0 && sgn(q) == 0)
    throw DomainError("Pythagorean pair (0,0) does not define a point");
  Integer d = p * p + q * q;
  Rat re(Integer(p * p - q * q), d);
  Rat im(Integer(2 * p * q), d);
  re.canonicalize();
  im.canonicalize();
  return UnitCirclePoint(GaussRat(re, im), Trusted{});
}

namespace circle {

int half(const GaussRat& u) {
  int si = sgn(u.im());
  if (si > 0) return 0;
  if (si < 0) return 1;
  return sgn(u.re()) >= 0 ? 0 : 1;
}

int cross_sign(const GaussRat& u, const GaussRat& v) {
  // Im(u * conj(v)) = u.im*v.re - u.re*v.im
  Rat c = u.im() * v.re() - u.re() * v.im();
  return sgn(c);
}

std::strong_ordering compare_angle(const GaussRat& u, const GaussRat& v) {
  int hu = half(u), hv = half(v);
  if (hu != hv) return hu <=> hv;
  // Same half plane: u before v iff v is counter-clockwise from u.
  int c = cross_sign(v, u);
  if (c > 0) return std::strong_ordering::less;
  if (c < 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace circle

}  // namespace ncs
