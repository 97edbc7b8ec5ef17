#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace qcoring {

// Exact rational scalar. mpq_class keeps gcd(num, den) = 1 and den > 0 as long
// as every value entering arithmetic is canonical, so the only place that needs
// care is parsing.
using Rat = mpq_class;

using Vec = std::vector<Rat>;

inline Rat rat_parse(const std::string& s) {
  mpq_class q;
  if (s.empty() || q.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational '" + s + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational '" + s + "'");
  q.canonicalize();
  return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

// mpq_class(n, d) does not reduce; every fraction built from raw integer parts
// must pass through here.
inline Rat rat_frac(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Vec vec_zero(size_t n) { return Vec(n, Rat(0)); }

inline Vec basis_vec(size_t n, size_t i) {
  Vec v(n, Rat(0));
  v.at(i) = 1;
  return v;
}

inline bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_add: dimension mismatch");
  Vec r(a);
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec_sub: dimension mismatch");
  Vec r(a);
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

inline Vec vec_scale(const Rat& c, const Vec& a) {
  Vec r(a);
  for (auto& x : r) x *= c;
  return r;
}

}  // namespace qcoring
