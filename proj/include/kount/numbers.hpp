#pragma once

// Exact arithmetic scalar types used throughout the library.
//
// Counting-matrix entries are 2^{|x ∩ y|} - 1 and characteristic-polynomial
// coefficients are minors of such matrices, so every exact path works over
// arbitrary-precision integers and rationals.  Floating point appears only
// in the spectral module.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace kount {

// Values stay inline (no heap) up to 512 bits, which covers the minors that
// show up in desk-scale eliminations almost all the time.
using Int = boost::multiprecision::number<
    boost::multiprecision::cpp_int_backend<512, 0, boost::multiprecision::signed_magnitude,
                                           boost::multiprecision::unchecked>>;
using Rat = boost::multiprecision::number<boost::multiprecision::rational_adaptor<
    boost::multiprecision::cpp_int_backend<512, 0, boost::multiprecision::signed_magnitude,
                                           boost::multiprecision::unchecked>>>;

inline Int numerator(const Rat& r) { return Int(boost::multiprecision::numerator(r)); }
inline Int denominator(const Rat& r) { return Int(boost::multiprecision::denominator(r)); }

inline std::string to_decimal(const Int& v) { return v.str(); }

// Rationals render as "p" when integral and "p/q" (q > 0, reduced) otherwise.
inline std::string to_decimal(const Rat& v) {
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

inline Int parse_int(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  try {
    return Int(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad integer literal: " + s);
  }
}

inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_int(s));
  Int p = parse_int(s.substr(0, slash));
  Int q = parse_int(s.substr(slash + 1));
  if (q == 0) throw std::invalid_argument("zero denominator: " + s);
  return Rat(p) / Rat(q);
}

inline double to_double(const Int& v) { return v.convert_to<double>(); }
inline double to_double(const Rat& v) { return v.convert_to<double>(); }

}  // namespace kount
