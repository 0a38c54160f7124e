#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace loctrop {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses "p", "+p", "-p" or "p/q" with q > 0 implied by normalization.
// No whitespace, no floating point.
inline Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  std::size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') {
    neg = (s[i] == '-');
    ++i;
  }
  std::string num, den;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') num.push_back(s[i++]);
  if (num.empty()) throw ParseError("malformed rational literal: " + s);
  if (i < s.size()) {
    if (s[i] != '/') throw ParseError("malformed rational literal: " + s);
    ++i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') den.push_back(s[i++]);
    if (den.empty() || i != s.size())
      throw ParseError("malformed rational literal: " + s);
  }
  Int n(num);
  Int d = den.empty() ? Int(1) : Int(den);
  if (d == 0) throw ParseError("zero denominator: " + s);
  if (neg) n = -n;
  return Rat(n, d);
}

inline std::string rat_to_string(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

// Clears denominators and divides by the gcd; sign convention: first nonzero
// entry positive.  Zero vector maps to itself.
inline std::vector<Int> primitive_vector(const std::vector<Rat>& v) {
  Int lcm_den = 1;
  for (const Rat& x : v) lcm_den = lcm(lcm_den, denominator(x));
  std::vector<Int> out(v.size());
  Int g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = numerator(v[i]) * (lcm_den / denominator(v[i]));
    g = gcd(g, out[i]);
  }
  if (g == 0) return out;
  int sign = 0;
  for (const Int& x : out) {
    if (x != 0) {
      sign = x > 0 ? 1 : -1;
      break;
    }
  }
  for (Int& x : out) x /= (sign < 0 ? -g : g);
  return out;
}

inline std::vector<Int> primitive_vector(const std::vector<Int>& v) {
  std::vector<Rat> r(v.begin(), v.end());
  return primitive_vector(r);
}

}  // namespace loctrop
