#include "lgmirror/rational.hpp"

#include <stdexcept>

namespace lgm {

Q make_q(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Q r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Q& x) { return x.get_str(); }

Q parse_q(const std::string& s) {
  Q r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

Z floor_q(const Q& x) {
  Z r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

Q frac(const Q& x) { return x - Q(floor_q(x)); }

bool is_integer(const Q& x) { return x.get_den() == 1; }

QVec frac(const QVec& v) {
  QVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(frac(x));
  return out;
}

bool all_integer(const QVec& v) {
  for (const auto& x : v)
    if (!is_integer(x)) return false;
  return true;
}

std::vector<std::string> to_strings(const QVec& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

}  // namespace lgm
