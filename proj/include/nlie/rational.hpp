#ifndef NLIE_RATIONAL_HPP
#define NLIE_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace nlie {

// Exact rational scalar. mpq_class keeps values canonical (reduced,
// positive denominator) after canonicalize().
using Rat = mpq_class;

using Vec = std::vector<Rat>;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p" or "p/q" (q > 0 after canonicalization).
inline Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  if (r.get_den() == 0)
    throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

/// Renders "p" when the denominator is 1, else "p/q".
inline std::string rat_to_string(const Rat& r) {
  return r.get_str();
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

}  // namespace nlie

#endif
