#include "lieortho/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace lieortho {

Polynomial::Polynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  normalize();
}

Polynomial Polynomial::constant(const Rational &c) { return Polynomial({c}); }

Polynomial Polynomial::linear_factor(const Rational &root) {
  return Polynomial({-root, Rational(1)});
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero())
    coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational Polynomial::leading() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational Polynomial::evaluate(const Rational &t) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * t + *it;
  return acc;
}

Matrix Polynomial::evaluate(const Matrix &m) const {
  if (!m.is_square())
    throw DimensionError("polynomial evaluation needs a square matrix");
  const std::size_t n = m.rows();
  Matrix acc(n, n);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * m;
    for (std::size_t i = 0; i < n; ++i)
      acc(i, i) += *it;
  }
  return acc;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial &divisor) const {
  if (divisor.is_zero())
    throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = coeffs_;
  const int dd = divisor.degree();
  if (degree() < dd)
    return {Polynomial(), *this};
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1));
  const Rational lead = divisor.leading();
  for (int k = degree(); k >= dd; --k) {
    const Rational c = rem[static_cast<std::size_t>(k)] / lead;
    quot[static_cast<std::size_t>(k - dd)] = c;
    if (c.is_zero())
      continue;
    for (int i = 0; i <= dd; ++i)
      rem[static_cast<std::size_t>(k - dd + i)] -=
          c * divisor.coeffs_[static_cast<std::size_t>(i)];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::string Polynomial::str(const std::string &var) const {
  if (coeffs_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational &c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero())
      continue;
    const bool neg = c.sign() < 0;
    const Rational mag = abs(c);
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (k == 0 || !mag.is_one())
      os << mag;
    if (k >= 1)
      os << var;
    if (k >= 2)
      os << '^' << k;
  }
  return os.str();
}

Polynomial operator+(const Polynomial &a, const Polynomial &b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = a.coefficient(i) + b.coefficient(i);
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial &a, const Polynomial &b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = a.coefficient(i) - b.coefficient(i);
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
  if (a.is_zero() || b.is_zero())
    return Polynomial();
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial pow(const Polynomial &p, std::size_t k) {
  Polynomial acc = Polynomial::constant(1);
  for (std::size_t i = 0; i < k; ++i)
    acc = acc * p;
  return acc;
}

namespace {

mpz_class pollard_brent(const mpz_class &n) {
  if (mpz_even_p(n.get_mpz_t()))
    return 2;
  for (unsigned long c = 1;; ++c) {
    mpz_class y = 2, x, q = 1, g = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto f = [&](const mpz_class &v) -> mpz_class {
      mpz_class out = v * v + c;
      mpz_mod(out.get_mpz_t(), out.get_mpz_t(), n.get_mpz_t());
      return out;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i)
        y = f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        const unsigned long lim = std::min(m, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          y = f(y);
          mpz_class d = x - y;
          q = q * abs(d);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        mpz_class d = x - ys;
        d = abs(d);
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n)
      return g;
  }
}

void factor_into(const mpz_class &n, std::map<mpz_class, unsigned> &out) {
  if (n == 1)
    return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    ++out[n];
    return;
  }
  const mpz_class d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

std::vector<mpz_class> divisors_of(const mpz_class &n) {
  std::vector<mpz_class> divs{1};
  for (const auto &[p, e] : factor_integer(n)) {
    const std::size_t base = divs.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i)
        divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

// Integer coefficients of c * p with c > 0 chosen so that the result is a
// primitive integer polynomial.
std::vector<mpz_class> primitive_integer_coefficients(const Polynomial &p) {
  mpz_class l = 1;
  for (const auto &c : p.coefficients())
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.value().get_den_mpz_t());
  std::vector<mpz_class> z;
  z.reserve(p.coefficients().size());
  mpz_class g = 0;
  for (const auto &c : p.coefficients()) {
    mpz_class v = c.value().get_num() * (l / c.value().get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    z.push_back(std::move(v));
  }
  for (auto &v : z)
    v /= g;
  return z;
}

mpz_class evaluate_integer(const std::vector<mpz_class> &z, long t) {
  mpz_class acc = 0;
  for (auto it = z.rbegin(); it != z.rend(); ++it)
    acc = acc * t + *it;
  return acc;
}

} // namespace

std::vector<std::pair<mpz_class, unsigned>> factor_integer(const mpz_class &n) {
  if (n == 0)
    throw std::invalid_argument("cannot factor zero");
  mpz_class m = abs(n);
  std::map<mpz_class, unsigned> out;
  for (unsigned long p = 2; p < 1000 && m > 1; ++p) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      ++out[mpz_class(p)];
      m /= p;
    }
  }
  factor_into(m, out);
  return {out.begin(), out.end()};
}

RationalRoots rational_roots(const Polynomial &p) {
  if (p.is_zero())
    throw std::invalid_argument("rational_roots of the zero polynomial");
  RationalRoots result;
  Polynomial rest = p;

  auto strip = [&](const Rational &r) {
    std::size_t mult = 0;
    const Polynomial factor = Polynomial::linear_factor(r);
    while (rest.degree() >= 1 && rest.evaluate(r).is_zero()) {
      rest = rest.divmod(factor).first;
      ++mult;
    }
    if (mult > 0)
      result.roots.push_back({r, mult});
  };

  strip(Rational(0));
  if (rest.degree() >= 1) {
    const auto z = primitive_integer_coefficients(rest);
    const mpz_class f1 = evaluate_integer(z, 1);
    const mpz_class fm1 = evaluate_integer(z, -1);
    const auto numerators = divisors_of(z.front());
    const auto denominators = divisors_of(z.back());
    std::vector<Rational> candidates;
    for (const auto &q : denominators)
      for (const auto &a : numerators) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t());
        if (g != 1)
          continue;
        for (int s : {1, -1}) {
          const mpz_class num = s * a;
          // f = (q t - num) g with g integral, so (q - num) | f(1) and
          // (q + num) | f(-1).
          const mpz_class d1 = q - num;
          const mpz_class dm1 = q + num;
          if (f1 != 0 && d1 != 0 && !mpz_divisible_p(f1.get_mpz_t(), d1.get_mpz_t()))
            continue;
          if (fm1 != 0 && dm1 != 0 && !mpz_divisible_p(fm1.get_mpz_t(), dm1.get_mpz_t()))
            continue;
          candidates.emplace_back(num, q);
        }
      }
    std::sort(candidates.begin(), candidates.end(), std::greater<>());
    for (const auto &c : candidates) {
      if (rest.degree() < 1)
        break;
      strip(c);
    }
  }
  std::sort(result.roots.begin(), result.roots.end(),
            [](const auto &a, const auto &b) { return a.root > b.root; });
  result.remainder = rest;
  return result;
}

} // namespace lieortho
