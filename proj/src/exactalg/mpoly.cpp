#include "rszeta/mpoly.hpp"

#include <sstream>
#include <utility>

#include "rszeta/errors.hpp"

namespace rszeta {

VarCtx::VarCtx(std::vector<std::string> names, std::optional<std::size_t> laurent_slot)
    : names_(std::move(names)), laurent_slot_(laurent_slot) {
  if (laurent_slot_ && *laurent_slot_ >= names_.size()) {
    throw UsageError("VarCtx: Laurent slot out of range");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    for (std::size_t j = i + 1; j < names_.size(); ++j) {
      if (names_[i] == names_[j]) {
        throw UsageError("VarCtx: duplicate variable name '" + names_[i] + "'");
      }
    }
  }
}

std::shared_ptr<const VarCtx> VarCtx::rankin_selberg(int r, int m) {
  if (r < 0 || m < 0) {
    throw UsageError("VarCtx::rankin_selberg: negative rank");
  }
  std::vector<std::string> names;
  for (int i = 1; i <= r; ++i) {
    names.push_back("x" + std::to_string(i));
  }
  for (int j = 1; j <= m; ++j) {
    names.push_back("y" + std::to_string(j));
  }
  names.emplace_back("v");
  const std::size_t v_slot = names.size() - 1;
  return std::make_shared<const VarCtx>(std::move(names), v_slot);
}

std::optional<std::size_t> VarCtx::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) {
      return i;
    }
  }
  return std::nullopt;
}

bool same_ctx(const VarCtxPtr& a, const VarCtxPtr& b) {
  return a == b || (a && b && *a == *b);
}

Assignment assignment_by_name(const VarCtx& ctx, const std::map<std::string, Rat>& values) {
  Assignment out;
  for (const auto& [name, value] : values) {
    auto slot = ctx.index_of(name);
    if (!slot) {
      throw UsageError("assignment_by_name: unknown variable '" + name + "'");
    }
    out.emplace(*slot, value);
  }
  return out;
}

MPoly::MPoly(VarCtxPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) {
    throw UsageError("MPoly: null variable context");
  }
}

MPoly MPoly::constant(VarCtxPtr ctx, const Rat& value) {
  MPoly p(std::move(ctx));
  p.add_term(Exponents(p.ctx_->size(), 0), value);
  return p;
}

MPoly MPoly::variable(VarCtxPtr ctx, std::size_t slot, int power) {
  if (slot >= ctx->size()) {
    throw UsageError("MPoly::variable: slot out of range");
  }
  Exponents e(ctx->size(), 0);
  e[slot] = power;
  return monomial(std::move(ctx), std::move(e));
}

MPoly MPoly::monomial(VarCtxPtr ctx, Exponents exponents, const Rat& coeff) {
  MPoly p(std::move(ctx));
  p.check_exponents(exponents);
  p.add_term(exponents, coeff);
  return p;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) {
    return true;
  }
  if (terms_.size() > 1) {
    return false;
  }
  for (int e : terms_.begin()->first) {
    if (e != 0) {
      return false;
    }
  }
  return true;
}

Rat MPoly::constant_term() const { return coefficient(Exponents(ctx_->size(), 0)); }

Rat MPoly::coefficient(const Exponents& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? Rat(0) : it->second;
}

void MPoly::check_ctx(const MPoly& other, const char* op) const {
  if (!same_ctx(ctx_, other.ctx_)) {
    throw UsageError(std::string("MPoly ") + op + ": mismatched variable contexts");
  }
}

void MPoly::check_exponents(const Exponents& exponents) const {
  if (exponents.size() != ctx_->size()) {
    throw UsageError("MPoly: exponent vector has wrong length");
  }
  const auto laurent = ctx_->laurent_slot();
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0 && (!laurent || *laurent != i)) {
      throw UsageError("MPoly: negative exponent on non-Laurent variable " + ctx_->name(i));
    }
  }
}

void MPoly::add_term(const Exponents& exponents, const Rat& coeff) {
  if (coeff == 0) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(exponents, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) {
      terms_.erase(it);
    }
  }
}

MPoly& MPoly::operator+=(const MPoly& other) {
  check_ctx(other, "add");
  for (const auto& [e, c] : other.terms_) {
    add_term(e, c);
  }
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  check_ctx(other, "sub");
  for (const auto& [e, c] : other.terms_) {
    add_term(e, -c);
  }
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.check_ctx(b, "mul");
  MPoly out(a.ctx_);
  const std::size_t width = a.ctx_->size();
  MPoly::Exponents e(width);
  Rat c;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < width; ++i) {
        e[i] = ea[i] + eb[i];
      }
      c = ca * cb;
      out.add_term(e, c);
    }
  }
  return out;
}

MPoly& MPoly::operator*=(const MPoly& other) {
  *this = *this * other;
  return *this;
}

MPoly& MPoly::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) {
    c *= scalar;
  }
  return *this;
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [e, c] : out.terms_) {
    c = -c;
  }
  return out;
}

bool MPoly::operator==(const MPoly& other) const {
  return same_ctx(ctx_, other.ctx_) && terms_ == other.terms_;
}

MPoly MPoly::pow(unsigned exponent) const {
  MPoly result = constant(ctx_, 1);
  MPoly square = *this;
  while (exponent != 0) {
    if (exponent & 1U) {
      result *= square;
    }
    exponent >>= 1U;
    if (exponent != 0) {
      square *= square;
    }
  }
  return result;
}

MPoly MPoly::specialize(const Assignment& assignment) const {
  for (const auto& [slot, value] : assignment) {
    if (slot >= ctx_->size()) {
      throw UsageError("MPoly::specialize: slot out of range");
    }
  }
  MPoly out(ctx_);
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    Rat coeff = c;
    for (const auto& [slot, value] : assignment) {
      if (e[slot] == 0) {
        continue;
      }
      if (value == 0 && e[slot] < 0) {
        throw EvaluationError("MPoly::specialize: division by zero at variable " +
                              ctx_->name(slot));
      }
      coeff *= rszeta::pow(value, e[slot]);
      rest[slot] = 0;
    }
    out.add_term(rest, coeff);
  }
  return out;
}

Rat MPoly::evaluate(const Assignment& assignment) const {
  MPoly p = specialize(assignment);
  if (!p.is_constant()) {
    throw EvaluationError("MPoly::evaluate: assignment leaves free variables in " + p.to_string());
  }
  return p.constant_term();
}

MPoly MPoly::divide_by_monomial(const Exponents& exponents, const Rat& coeff) const {
  if (exponents.size() != ctx_->size()) {
    throw UsageError("MPoly::divide_by_monomial: exponent vector has wrong length");
  }
  if (coeff == 0) {
    throw EvaluationError("MPoly::divide_by_monomial: zero divisor");
  }
  const auto laurent = ctx_->laurent_slot();
  MPoly out(ctx_);
  for (const auto& [e, c] : terms_) {
    Exponents q = e;
    for (std::size_t i = 0; i < q.size(); ++i) {
      q[i] -= exponents[i];
      if (q[i] < 0 && (!laurent || *laurent != i)) {
        throw EvaluationError("MPoly::divide_by_monomial: inexact division in " + ctx_->name(i));
      }
    }
    out.add_term(q, c / coeff);
  }
  return out;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  // Highest exponent vectors first, so output reads like a conventional polynomial.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rat mag = c;
    bool negative = c < 0;
    if (negative) {
      mag = -c;
    }
    if (first) {
      os << (negative ? "-" : "");
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool has_var = false;
    for (int x : e) {
      has_var = has_var || x != 0;
    }
    if (!has_var || mag != 1) {
      os << rszeta::to_string(mag);
      if (has_var) {
        os << '*';
      }
    }
    bool first_factor = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) {
        continue;
      }
      if (!first_factor) {
        os << '*';
      }
      first_factor = false;
      os << ctx_->name(i);
      if (e[i] != 1) {
        os << '^' << e[i];
      }
    }
  }
  return os.str();
}

} // namespace rszeta
