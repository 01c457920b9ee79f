#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace orbitfn {

// Arbitrary-precision integers and rationals; all lattice geometry is done
// exactly in these types and converted to double only at the numerics edge.
using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<long long>;
using IntMat = std::vector<IntVec>;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

inline Int to_int(long long v) { return Int(static_cast<long>(v)); }

inline Rat make_rat(long long num, long long den = 1) {
  Rat r(to_int(num), to_int(den));
  r.canonicalize();
  return r;
}

inline Rat to_rat(long long v) { return Rat(to_int(v)); }

/// Largest integer not exceeding r.
inline Int rat_floor(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

/// r - floor(r), always in [0, 1).
inline Rat frac_part(const Rat& r) { return r - Rat(rat_floor(r)); }

inline bool is_integral(const Rat& r) { return r.get_den() == 1; }

inline double to_double(const Rat& r) { return r.get_d(); }

std::string rat_to_string(const Rat& r);

RatVec to_rat_vec(const IntVec& v);

}  // namespace orbitfn
