#include "wres/gauss.hpp"

#include "wres/scalar.hpp"

namespace wres {

namespace {

std::string rat_str(const Rational& q) { return q.get_str(); }

}  // namespace

std::string GaussRational::str() const {
  if (is_real()) return rat_str(re_);
  if (sgn(re_) == 0) {
    if (im_ == 1) return "i";
    if (im_ == -1) return "-i";
    return rat_str(im_) + "*i";
  }
  std::string out = "(" + rat_str(re_);
  if (sgn(im_) > 0) out += "+";
  if (im_ == 1) {
    out += "i";
  } else if (im_ == -1) {
    out += "-i";
  } else {
    out += rat_str(im_) + "*i";
  }
  return out + ")";
}

GaussRational parse_gauss(const std::string& text) {
  ScalarExpr e = parse_scalar(text);
  if (e.is_zero()) return GaussRational();
  if (e.terms().size() != 1 || !e.terms().begin()->first.is_one())
    throw std::invalid_argument("not a Gaussian rational: " + text);
  return e.terms().begin()->second;
}

}  // namespace wres
