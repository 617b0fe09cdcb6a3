#ifndef GUARD_MAPBIJ_POLYNOMIAL_HPP
#define GUARD_MAPBIJ_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mapbij
{

using Integer = boost::multiprecision::cpp_int;

// Dense coefficient list, index = exponent.
class UnivariatePolynomial
{
public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<Integer> coefficients);

  std::vector<Integer> const &coefficients() const { return _coeffs; }
  Integer coefficient(int i) const;
  int degree() const { return static_cast<int>(_coeffs.size()) - 1; }

  void add(int i, Integer const &c);

  friend bool operator==(UnivariatePolynomial const &, UnivariatePolynomial const &) = default;

private:
  void trim();

  std::vector<Integer> _coeffs;
};

// Sparse polynomial in x and y with exact integer coefficients.
class BivariatePolynomial
{
public:
  using Exponents = std::pair<int, int>;

  void add(int i, int j, Integer const &c);
  Integer coefficient(int i, int j) const;
  std::map<Exponents, Integer> const &terms() const { return _terms; }
  bool is_zero() const { return _terms.empty(); }

  Integer evaluate(Integer const &x, Integer const &y) const;

  // P(x, y0) and P(1 + x, y0) as polynomials in x.
  UnivariatePolynomial at_y(Integer const &y0) const;
  UnivariatePolynomial shifted_at_y(Integer const &y0) const;
  // P(x0, y) as a polynomial in y.
  UnivariatePolynomial at_x(Integer const &x0) const;

  BivariatePolynomial &operator+=(BivariatePolynomial const &o);

  // Descending total degree, then descending power of x: "x^2 + x + y".
  std::string to_string() const;

  friend bool operator==(BivariatePolynomial const &, BivariatePolynomial const &) = default;

private:
  std::map<Exponents, Integer> _terms;
};

Integer binomial(int n, int k);

Integer power(Integer const &base, int exponent);

} // namespace mapbij

#endif // GUARD_MAPBIJ_POLYNOMIAL_HPP
