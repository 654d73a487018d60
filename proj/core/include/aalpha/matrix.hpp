#ifndef AALPHA_MATRIX_HPP
#define AALPHA_MATRIX_HPP

#include <vector>

#include "aalpha/digraph.hpp"
#include "aalpha/rational.hpp"

namespace aalpha {

/// Dense square matrix over exact rationals, row-major.
class RationalMatrix {
 public:
  explicit RationalMatrix(int order) : order_(order), a_(static_cast<size_t>(order) * order) {}

  int order() const { return order_; }
  Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * order_ + j]; }
  const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * order_ + j]; }

  static RationalMatrix identity(int order);
  Rational trace() const;
  RationalMatrix multiply(const RationalMatrix& rhs) const;

  bool operator==(const RationalMatrix&) const = default;

 private:
  int order_;
  std::vector<Rational> a_;
};

/// Dense square matrix over binary64, row-major.
class FloatMatrix {
 public:
  explicit FloatMatrix(int order) : order_(order), a_(static_cast<size_t>(order) * order, 0.0) {}

  int order() const { return order_; }
  double& at(int i, int j) { return a_[static_cast<size_t>(i) * order_ + j]; }
  double at(int i, int j) const { return a_[static_cast<size_t>(i) * order_ + j]; }
  double trace() const;

 private:
  int order_;
  std::vector<double> a_;
};

/// alpha*D+ + (1-alpha)*A, exact. Requires alpha in [0, 1).
RationalMatrix build_a_alpha(const Digraph& g, const Rational& alpha);

/// Same matrix with entries rounded to binary64.
FloatMatrix build_a_alpha_float(const Digraph& g, const Rational& alpha);

/// The diagonal block of A_alpha(g) induced by `vertices` (in the given
/// order). Diagonal entries carry the outdegrees of g as a whole.
FloatMatrix a_alpha_block(const Digraph& g, const Rational& alpha, const std::vector<int>& vertices);

/// Fraction-free Gaussian elimination; exact.
Rational bareiss_determinant(const RationalMatrix& m);

}  // namespace aalpha

#endif
