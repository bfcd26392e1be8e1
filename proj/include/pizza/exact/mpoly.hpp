#pragma once

#include <map>
#include <vector>

#include "pizza/exact/rational.hpp"
#include "pizza/exact/upoly.hpp"

namespace pizza::exact {

// Sparse multivariate polynomial over Q with a fixed number of variables. Only used for
// elimination (norms of polynomials with algebraic coefficients).
class MPoly {
 public:
  using Monomial = std::vector<unsigned>;

  explicit MPoly(std::size_t nvars = 0) : nvars_(nvars) {}
  static MPoly constant(std::size_t nvars, const Rational& c);
  static MPoly variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  void add_term(const Monomial& m, const Rational& c);
  unsigned degree_in(std::size_t var) const;
  // Coefficient of var^k, as a polynomial in the same variable set (var no longer occurs).
  MPoly coeff_in(std::size_t var, unsigned k) const;

  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator-(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly operator-() const;

  // Interprets a polynomial in variable 0 only as a QPoly.
  QPoly to_univariate() const;

 private:
  std::size_t nvars_;
  std::map<Monomial, Rational> terms_;
};

// Division-free determinant (Berkowitz). Ring must provide +, -, * and construction of
// zero/one through the supplied values.
template <class Ring>
Ring berkowitz_det(const std::vector<std::vector<Ring>>& a, const Ring& zero, const Ring& one) {
  const std::size_t n = a.size();
  if (n == 0) return one;
  // Characteristic polynomial coefficient vector of the trailing principal submatrix.
  std::vector<Ring> cp{one, zero - a[n - 1][n - 1]};
  for (std::size_t kk = n - 1; kk-- > 0;) {
    const std::size_t m = n - 1 - kk;  // size of the trailing block
    std::vector<Ring> t;
    t.reserve(m + 2);
    t.push_back(one);
    t.push_back(zero - a[kk][kk]);
    // vec = C, then repeatedly M * vec
    std::vector<Ring> vec(m, zero);
    for (std::size_t i = 0; i < m; ++i) vec[i] = a[kk + 1 + i][kk];
    for (std::size_t j = 0; j < m; ++j) {
      Ring s = zero;
      for (std::size_t i = 0; i < m; ++i) s = s + a[kk][kk + 1 + i] * vec[i];
      t.push_back(zero - s);
      if (j + 1 < m) {
        std::vector<Ring> next(m, zero);
        for (std::size_t r = 0; r < m; ++r)
          for (std::size_t c = 0; c < m; ++c) next[r] = next[r] + a[kk + 1 + r][kk + 1 + c] * vec[c];
        vec = std::move(next);
      }
    }
    std::vector<Ring> ncp(m + 2, zero);
    for (std::size_t i = 0; i < m + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, m); ++j) ncp[i] = ncp[i] + t[i - j] * cp[j];
    cp = std::move(ncp);
  }
  return (n % 2 == 0) ? cp[n] : zero - cp[n];
}

// Resultant via the Sylvester determinant; a and b are coefficient lists (index = degree)
// with nonzero leading entries.
template <class Ring>
Ring sylvester_resultant(const std::vector<Ring>& a, const std::vector<Ring>& b, const Ring& zero,
                         const Ring& one) {
  const std::size_t da = a.size() - 1, db = b.size() - 1;
  const std::size_t n = da + db;
  if (n == 0) return one;
  std::vector<std::vector<Ring>> m(n, std::vector<Ring>(n, zero));
  for (std::size_t r = 0; r < db; ++r)
    for (std::size_t i = 0; i <= da; ++i) m[r][r + i] = a[da - i];
  for (std::size_t r = 0; r < da; ++r)
    for (std::size_t i = 0; i <= db; ++i) m[db + r][r + i] = b[db - i];
  return berkowitz_det(m, zero, one);
}

}  // namespace pizza::exact
