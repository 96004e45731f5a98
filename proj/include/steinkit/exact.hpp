// Exact integer / rational scalars used throughout the library.
//
// Everything downstream (linking forms, characteristic polynomials, PL
// crossing counts, gradings) is computed over these types; no floating
// point appears anywhere in the library.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace steinkit {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// Canonical text form: integers bare, otherwise "p/q" in lowest terms.
inline std::string rat_str(const Rat& r) {
  if (is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline int sign_of(const Int& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }
inline int sign_of(const Rat& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }

// Error with a stable machine-readable code ("CellCollision", ...) next to
// the human message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

}  // namespace steinkit
