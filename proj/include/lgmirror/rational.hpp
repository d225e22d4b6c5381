#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace lgm {

using Q = mpq_class;
using Z = mpz_class;
using QVec = std::vector<Q>;
using IVec = std::vector<int>;

Q make_q(long num, long den = 1);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Q& x);
Q parse_q(const std::string& s);

Z floor_q(const Q& x);
// x - floor(x), in [0,1).
Q frac(const Q& x);
bool is_integer(const Q& x);

QVec frac(const QVec& v);
bool all_integer(const QVec& v);
std::vector<std::string> to_strings(const QVec& v);

}  // namespace lgm
