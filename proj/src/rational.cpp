#include "crext/rational.hpp"

namespace crext {

std::string to_string(const Rational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_string(const GaussianRational& z) {
  if (z.im == 0) return to_string(z.re);
  std::string imag;
  if (z.im == 1) {
    imag = "i";
  } else if (z.im == -1) {
    imag = "-i";
  } else {
    imag = to_string(z.im) + "i";
  }
  if (z.re == 0) return imag;
  std::string out = to_string(z.re);
  if (imag[0] != '-') out += "+";
  return out + imag;
}

}  // namespace crext
