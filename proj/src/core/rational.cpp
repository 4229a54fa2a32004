#include "rcip/core.hpp"

#include <cctype>

namespace rcip {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational frac(long num, long den) { return make_rational(Integer(num), Integer(den)); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  auto parse_int = [&](const std::string& t) {
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw std::invalid_argument("bad rational literal: " + s);
    for (std::size_t k = i; k < t.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(t[k])))
        throw std::invalid_argument("bad rational literal: " + s);
    return Integer(t[0] == '+' ? t.substr(1) : t, 10);
  };

  if (auto slash = s.find('/'); slash != std::string::npos) {
    return make_rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    if (frac.empty()) frac = "0";
    Integer w = parse_int(whole);
    Integer f = parse_int(frac);
    if (frac[0] == '-' || frac[0] == '+') throw std::invalid_argument("bad rational literal: " + s);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    Rational r = make_rational(f, den);
    Rational abs_w(abs(w));
    Rational v = abs_w + r;
    return negative ? Rational(-v) : v;
  }
  return Rational(parse_int(s));
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Integer floor(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

std::optional<Rational> exact_sqrt(const Rational& s) {
  if (sgn(s) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(s.get_num_mpz_t()) || !mpz_perfect_square_p(s.get_den_mpz_t()))
    return std::nullopt;
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), s.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), s.get_den_mpz_t());
  return make_rational(n, d);
}

namespace {

// floor(sqrt(s) * 2^bits * den) as an integer, plus the scale used.
std::pair<Integer, Integer> scaled_isqrt(const Rational& s, unsigned bits) {
  if (sgn(s) < 0) throw std::domain_error("square root of a negative rational");
  // sqrt(p/q) = sqrt(p*q)/q
  Integer pq = s.get_num() * s.get_den();
  Integer scale_factor;
  mpz_ui_pow_ui(scale_factor.get_mpz_t(), 2, bits);
  Integer radicand = pq * scale_factor * scale_factor;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
  return {root, Integer(s.get_den() * scale_factor)};
}

}  // namespace

Rational sqrt_lower(const Rational& s, unsigned bits) {
  if (auto e = exact_sqrt(s)) return *e;
  auto [root, den] = scaled_isqrt(s, bits);
  return make_rational(root, den);
}

Rational sqrt_upper(const Rational& s, unsigned bits) {
  if (auto e = exact_sqrt(s)) return *e;
  auto [root, den] = scaled_isqrt(s, bits);
  return make_rational(root + 1, den);
}

RationalVector to_rational(const LatticePoint& p) {
  RationalVector v;
  v.reserve(p.size());
  for (auto x : p) v.emplace_back(static_cast<long>(x));
  return v;
}

}  // namespace rcip
