#include "rszeta/series.hpp"

#include <sstream>

#include "rszeta/errors.hpp"

namespace rszeta {

TruncSeries::TruncSeries(VarCtxPtr ctx, int order) : ctx_(std::move(ctx)), order_(order) {
  if (order_ < 0) {
    throw UsageError("TruncSeries: negative truncation order");
  }
  coeffs_.assign(static_cast<std::size_t>(order_) + 1, MPoly(ctx_));
}

TruncSeries::TruncSeries(VarCtxPtr ctx, std::vector<MPoly> coeffs)
    : ctx_(std::move(ctx)), order_(static_cast<int>(coeffs.size()) - 1), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw UsageError("TruncSeries: need at least the constant coefficient");
  }
  for (const MPoly& c : coeffs_) {
    if (!same_ctx(c.ctx(), ctx_)) {
      throw UsageError("TruncSeries: coefficient has a different variable context");
    }
  }
}

TruncSeries TruncSeries::one(VarCtxPtr ctx, int order) {
  TruncSeries s(std::move(ctx), order);
  s.coeffs_[0] = MPoly::constant(s.ctx_, 1);
  return s;
}

TruncSeries TruncSeries::monomial(VarCtxPtr ctx, int order, int degree, const MPoly& c) {
  TruncSeries s(std::move(ctx), order);
  s.add_term(degree, c);
  return s;
}

void TruncSeries::add_term(int degree, const MPoly& c) {
  if (degree < 0) {
    throw UsageError("TruncSeries::add_term: negative degree");
  }
  if (degree <= order_) {
    coeffs_[static_cast<std::size_t>(degree)] += c;
  }
}

void TruncSeries::check_compatible(const TruncSeries& other, const char* op) const {
  if (order_ != other.order_) {
    throw UsageError(std::string("TruncSeries ") + op + ": truncation orders differ (" +
                     std::to_string(order_) + " vs " + std::to_string(other.order_) + ")");
  }
  if (!same_ctx(ctx_, other.ctx_)) {
    throw UsageError(std::string("TruncSeries ") + op + ": mismatched variable contexts");
  }
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& other) {
  check_compatible(other, "add");
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    coeffs_[d] += other.coeffs_[d];
  }
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& other) {
  check_compatible(other, "sub");
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    coeffs_[d] -= other.coeffs_[d];
  }
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  a.check_compatible(b, "mul");
  TruncSeries out(a.ctx_, a.order_);
  for (int i = 0; i <= a.order_; ++i) {
    const MPoly& ai = a.coeffs_[static_cast<std::size_t>(i)];
    if (ai.is_zero()) {
      continue;
    }
    for (int j = 0; i + j <= a.order_; ++j) {
      const MPoly& bj = b.coeffs_[static_cast<std::size_t>(j)];
      if (!bj.is_zero()) {
        out.coeffs_[static_cast<std::size_t>(i + j)] += ai * bj;
      }
    }
  }
  return out;
}

bool TruncSeries::operator==(const TruncSeries& other) const {
  return order_ == other.order_ && same_ctx(ctx_, other.ctx_) && coeffs_ == other.coeffs_;
}

TruncSeries TruncSeries::inverse() const {
  const MPoly& c0 = coeffs_[0];
  if (!(c0.is_constant() && c0.constant_term() == 1)) {
    throw InversionError("TruncSeries::inverse: constant term must be 1, got " + c0.to_string());
  }
  // b_0 = 1, b_d = -sum_{i=1..d} a_i b_{d-i}.
  TruncSeries out(ctx_, order_);
  out.coeffs_[0] = MPoly::constant(ctx_, 1);
  for (int d = 1; d <= order_; ++d) {
    MPoly acc(ctx_);
    for (int i = 1; i <= d; ++i) {
      const MPoly& ai = coeffs_[static_cast<std::size_t>(i)];
      if (!ai.is_zero()) {
        acc += ai * out.coeffs_[static_cast<std::size_t>(d - i)];
      }
    }
    out.coeffs_[static_cast<std::size_t>(d)] = -acc;
  }
  return out;
}

TruncSeries TruncSeries::specialize(const Assignment& assignment) const {
  std::vector<MPoly> out;
  out.reserve(coeffs_.size());
  for (const MPoly& c : coeffs_) {
    out.push_back(c.specialize(assignment));
  }
  return TruncSeries(ctx_, std::move(out));
}

std::string TruncSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int d = 0; d <= order_; ++d) {
    const MPoly& c = coeffs_[static_cast<std::size_t>(d)];
    if (c.is_zero()) {
      continue;
    }
    os << (first ? "" : " + ") << '(' << c.to_string() << ')';
    if (d > 0) {
      os << "*X^" << d;
    }
    first = false;
  }
  os << " + O(X^" << order_ + 1 << ')';
  return first ? "0 + O(X^" + std::to_string(order_ + 1) + ")" : os.str();
}

} // namespace rszeta
