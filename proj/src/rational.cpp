#include "bhk/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace bhk {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

namespace {

bool valid_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

Int parse_int(std::string_view s) {
  std::string digits(s.front() == '+' ? s.substr(1) : s);
  return Int(digits, 10);
}

}  // namespace

Rat parse_rat(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!valid_integer_literal(num)) throw ParseError("malformed rational \"" + std::string(text) + "\"");
  if (slash == std::string_view::npos) return Rat(parse_int(num));
  std::string_view den = text.substr(slash + 1);
  if (!valid_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw ParseError("malformed rational \"" + std::string(text) + "\"");
  Int d = parse_int(den);
  if (d == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  return make_rat(parse_int(num), d);
}

std::string to_string(const Int& z) { return z.get_str(); }

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool is_integer(const Rat& r) { return r.get_den() == 1; }

Int floor(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Int ceil(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Rat frac(const Rat& r) { return r - Rat(floor(r)); }

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Int common_denominator(const RatVector& v) {
  Int l = 1;
  for (const auto& x : v) l = lcm(l, x.get_den());
  return l;
}

std::string to_string(const RatVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += to_string(v[i]);
  }
  return out + ")";
}

bool RatVectorLess::operator()(const RatVector& a, const RatVector& b) const {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool IntVectorLess::operator()(const IntVector& a, const IntVector& b) const {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

RatVector to_rat(const IntVector& v) { return RatVector(v.begin(), v.end()); }

Rat dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

long to_long(const Int& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer out of machine range: " + z.get_str());
  return z.get_si();
}

}  // namespace bhk
