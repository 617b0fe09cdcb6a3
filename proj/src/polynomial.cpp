#include "mapbij/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace mapbij
{

Integer binomial(int n, int k)
{
  if (k < 0 || k > n)
    return 0;
  Integer r = 1;
  for (int i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

Integer power(Integer const &base, int exponent)
{
  Integer r = 1;
  for (int i = 0; i < exponent; ++i)
    r *= base;
  return r;
}

UnivariatePolynomial::UnivariatePolynomial(std::vector<Integer> coefficients)
  : _coeffs(std::move(coefficients))
{
  trim();
}

Integer UnivariatePolynomial::coefficient(int i) const
{
  if (i < 0 || i >= static_cast<int>(_coeffs.size()))
    return 0;
  return _coeffs[i];
}

void UnivariatePolynomial::add(int i, Integer const &c)
{
  if (i >= static_cast<int>(_coeffs.size()))
    _coeffs.resize(i + 1);
  _coeffs[i] += c;
  trim();
}

void UnivariatePolynomial::trim()
{
  while (!_coeffs.empty() && _coeffs.back() == 0)
    _coeffs.pop_back();
}

void BivariatePolynomial::add(int i, int j, Integer const &c)
{
  if (c == 0)
    return;
  auto [it, inserted] = _terms.emplace(Exponents{i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      _terms.erase(it);
  }
}

Integer BivariatePolynomial::coefficient(int i, int j) const
{
  auto it = _terms.find({i, j});
  return it == _terms.end() ? Integer(0) : it->second;
}

Integer BivariatePolynomial::evaluate(Integer const &x, Integer const &y) const
{
  Integer sum = 0;
  for (auto const &[ij, c] : _terms)
    sum += c * power(x, ij.first) * power(y, ij.second);
  return sum;
}

UnivariatePolynomial BivariatePolynomial::at_y(Integer const &y0) const
{
  UnivariatePolynomial p;
  for (auto const &[ij, c] : _terms)
    p.add(ij.first, c * power(y0, ij.second));
  return p;
}

UnivariatePolynomial BivariatePolynomial::shifted_at_y(Integer const &y0) const
{
  UnivariatePolynomial p;
  for (auto const &[ij, c] : _terms) {
    Integer scaled = c * power(y0, ij.second);
    for (int k = 0; k <= ij.first; ++k)
      p.add(k, scaled * binomial(ij.first, k));
  }
  return p;
}

UnivariatePolynomial BivariatePolynomial::at_x(Integer const &x0) const
{
  UnivariatePolynomial p;
  for (auto const &[ij, c] : _terms)
    p.add(ij.second, c * power(x0, ij.first));
  return p;
}

BivariatePolynomial &BivariatePolynomial::operator+=(BivariatePolynomial const &o)
{
  for (auto const &[ij, c] : o._terms)
    add(ij.first, ij.second, c);
  return *this;
}

std::string BivariatePolynomial::to_string() const
{
  if (_terms.empty())
    return "0";

  std::vector<std::pair<Exponents, Integer>> sorted(_terms.begin(), _terms.end());
  std::sort(sorted.begin(), sorted.end(), [](auto const &a, auto const &b) {
    int da = a.first.first + a.first.second;
    int db = b.first.first + b.first.second;
    if (da != db)
      return da > db;
    return a.first.first > b.first.first;
  });

  std::ostringstream out;
  bool first = true;
  for (auto const &[ij, c] : sorted) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;

    bool constant = ij.first == 0 && ij.second == 0;
    if (mag != 1 || constant)
      out << mag;
    auto factor = [&](char var, int e) {
      if (e == 0)
        return;
      out << var;
      if (e > 1)
        out << '^' << e;
    };
    factor('x', ij.first);
    factor('y', ij.second);
  }
  return out.str();
}

} // namespace mapbij
