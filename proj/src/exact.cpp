#include "superdq/exact.hpp"

#include <sstream>
#include <stdexcept>

namespace superdq {

QI QI::from_double(double re, double im) {
  // mpq from double is exact
  return QI(mpq_class(re), mpq_class(im));
}

QI& QI::operator+=(const QI& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

QI& QI::operator-=(const QI& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

QI& QI::operator*=(const QI& o) {
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = r;
  im_ = i;
  return *this;
}

QI& QI::operator/=(const QI& o) {
  mpq_class d = o.re_ * o.re_ + o.im_ * o.im_;
  if (sgn(d) == 0) throw std::domain_error("QI division by zero");
  mpq_class r = (re_ * o.re_ + im_ * o.im_) / d;
  mpq_class i = (im_ * o.re_ - re_ * o.im_) / d;
  re_ = r;
  im_ = i;
  return *this;
}

std::string QI::str() const {
  std::ostringstream os;
  if (sgn(im_) == 0) {
    os << re_;
  } else if (sgn(re_) == 0) {
    os << im_ << "i";
  } else {
    os << "(" << re_ << (sgn(im_) > 0 ? "+" : "") << im_ << "i)";
  }
  return os.str();
}

QI pow(const QI& base, int e) { return ipow(base, e); }

}  // namespace superdq
