#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rszeta/rational.hpp"

namespace rszeta {

// Ordered variable names shared by every polynomial of a computation. At most
// one slot (the "Laurent" slot, used for q^{1/2}) may carry negative exponents.
class VarCtx {
public:
  VarCtx(std::vector<std::string> names, std::optional<std::size_t> laurent_slot);

  // x1..xr, y1..ym, v with v as the Laurent slot.
  static std::shared_ptr<const VarCtx> rankin_selberg(int r, int m);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t slot) const { return names_.at(slot); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::optional<std::size_t> laurent_slot() const { return laurent_slot_; }

  bool operator==(const VarCtx& other) const = default;

private:
  std::vector<std::string> names_;
  std::optional<std::size_t> laurent_slot_;
};

using VarCtxPtr = std::shared_ptr<const VarCtx>;

bool same_ctx(const VarCtxPtr& a, const VarCtxPtr& b);

// Slot index -> value. Used for partial or total specialization.
using Assignment = std::map<std::size_t, Rat>;

Assignment assignment_by_name(const VarCtx& ctx, const std::map<std::string, Rat>& values);

// Sparse multivariate polynomial with exact rational coefficients, Laurent in
// the context's Laurent slot. Terms are kept in a sorted map keyed by exponent
// vector; zero coefficients are never stored, so equal polynomials have equal
// term maps regardless of how they were built.
class MPoly {
public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Rat>;

  explicit MPoly(VarCtxPtr ctx);

  static MPoly constant(VarCtxPtr ctx, const Rat& value);
  static MPoly variable(VarCtxPtr ctx, std::size_t slot, int power = 1);
  static MPoly monomial(VarCtxPtr ctx, Exponents exponents, const Rat& coeff = 1);

  const VarCtxPtr& ctx() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Coefficient of the all-zero exponent vector.
  Rat constant_term() const;
  Rat coefficient(const Exponents& exponents) const;

  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const MPoly& other);
  MPoly& operator*=(const Rat& scalar);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rat& s) { return a *= s; }
  friend MPoly operator*(const Rat& s, MPoly a) { return a *= s; }
  MPoly operator-() const;

  bool operator==(const MPoly& other) const;

  MPoly pow(unsigned exponent) const;

  // Substitutes the assigned slots; unassigned slots stay formal.
  MPoly specialize(const Assignment& assignment) const;
  // Total evaluation; every slot that occurs must be assigned.
  Rat evaluate(const Assignment& assignment) const;

  // Exact division by c * monomial; throws EvaluationError if a non-Laurent
  // exponent would become negative.
  MPoly divide_by_monomial(const Exponents& exponents, const Rat& coeff = 1) const;

  std::string to_string() const;

private:
  void add_term(const Exponents& exponents, const Rat& coeff);
  void check_ctx(const MPoly& other, const char* op) const;
  void check_exponents(const Exponents& exponents) const;

  VarCtxPtr ctx_;
  TermMap terms_;
};

} // namespace rszeta
