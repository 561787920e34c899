#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rszeta/patterns.hpp"
#include "rszeta/rational.hpp"
#include "rszeta/weyl.hpp"

namespace rszeta {

// A product of |.|-powers of diagonal entries, recorded as the exponent of q it
// contributes: the character's value at diag(p^{c_1}, ..., p^{c_N}) is
// q^{sum_i weight_i * c_i}. With |p| = q^{-1}, the character |x_i|^e therefore
// has weight -e in slot i.
class ExpChar {
public:
  explicit ExpChar(int size = 0) : weights_(static_cast<std::size_t>(size), Rat(0)) {}
  explicit ExpChar(std::vector<Rat> weights) : weights_(std::move(weights)) {}

  int size() const { return static_cast<int>(weights_.size()); }
  const std::vector<Rat>& weights() const { return weights_; }
  const Rat& operator[](int i) const { return weights_.at(static_cast<std::size_t>(i)); }
  Rat& operator[](int i) { return weights_.at(static_cast<std::size_t>(i)); }

  // Exponent of q at the given cocharacter.
  Rat q_exponent(const Cochar& c) const;
  // Exponent of v = q^{1/2}; throws EvaluationError unless it is an integer.
  int v_exponent(const Cochar& c) const;

  ExpChar& operator+=(const ExpChar& other);
  ExpChar& operator-=(const ExpChar& other);
  friend ExpChar operator+(ExpChar a, const ExpChar& b) { return a += b; }
  friend ExpChar operator-(ExpChar a, const ExpChar& b) { return a -= b; }
  // Raises the character to a rational power.
  friend ExpChar operator*(const Rat& power, ExpChar a);

  bool operator==(const ExpChar&) const = default;
  bool is_trivial() const;
  std::string to_string() const;

private:
  std::vector<Rat> weights_;
};

// The functional c -> f(map(c)) on Z^source_size, for a linear map of cocharacters.
ExpChar pullback(const ExpChar& f, int source_size, const std::function<Cochar(const Cochar&)>& map);

// Modular character of the standard parabolic with the given Levi block sizes.
// A coordinate in block b gets |.|-power (sum of later sizes - sum of earlier sizes).
ExpChar delta_parabolic(const std::vector<int>& levi_blocks);

// Borel of GL_N.
ExpChar delta_borel(int size);

// |det(leading `count` coordinates)|^power on GL_size.
ExpChar abs_det_power(int size, int count, const Rat& power);

// Jacobian of conjugating the coordinate group by diag(p^d): prod |d_i / d_j|
// over the pattern's coordinates (i, j).
ExpChar conj_measure_factor(const CoordSet& coords);

} // namespace rszeta
