#pragma once

#include <string>
#include <vector>

#include "rszeta/mpoly.hpp"

namespace rszeta {

// Power series in a formal variable X (standing for q^{-s}) truncated after
// X^order, with polynomial coefficients. Arithmetic never looks past order.
class TruncSeries {
public:
  TruncSeries(VarCtxPtr ctx, int order);
  // coeffs.size() must be order + 1.
  TruncSeries(VarCtxPtr ctx, std::vector<MPoly> coeffs);

  static TruncSeries one(VarCtxPtr ctx, int order);
  // c * X^degree (zero if degree > order).
  static TruncSeries monomial(VarCtxPtr ctx, int order, int degree, const MPoly& c);

  int order() const { return order_; }
  const VarCtxPtr& ctx() const { return ctx_; }
  const MPoly& operator[](int degree) const { return coeffs_.at(static_cast<std::size_t>(degree)); }
  const std::vector<MPoly>& coeffs() const { return coeffs_; }

  // Adds c * X^degree; silently drops degrees beyond order.
  void add_term(int degree, const MPoly& c);

  TruncSeries& operator+=(const TruncSeries& other);
  TruncSeries& operator-=(const TruncSeries& other);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  TruncSeries& operator*=(const TruncSeries& other) { return *this = *this * other; }

  bool operator==(const TruncSeries& other) const;

  // Multiplicative inverse; the constant coefficient must be the polynomial 1.
  TruncSeries inverse() const;

  // Coefficient-wise specialization.
  TruncSeries specialize(const Assignment& assignment) const;

  std::string to_string() const;

private:
  void check_compatible(const TruncSeries& other, const char* op) const;

  VarCtxPtr ctx_;
  int order_;
  std::vector<MPoly> coeffs_;
};

} // namespace rszeta
