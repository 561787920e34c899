#include "rszeta/expchar.hpp"

#include <numeric>
#include <sstream>

#include "rszeta/errors.hpp"

namespace rszeta {

Rat ExpChar::q_exponent(const Cochar& c) const {
  if (c.size() != size()) {
    throw UsageError("ExpChar: cocharacter has size " + std::to_string(c.size()) + ", expected " +
                     std::to_string(size()));
  }
  Rat total = 0;
  for (int i = 0; i < size(); ++i) {
    total += weights_[static_cast<std::size_t>(i)] * c[i];
  }
  return total;
}

int ExpChar::v_exponent(const Cochar& c) const {
  const Rat doubled = 2 * q_exponent(c);
  if (!is_integer(doubled)) {
    throw EvaluationError("ExpChar: exponent of q at " + c.to_string() + " is " +
                          rszeta::to_string(q_exponent(c)) + ", not a half-integer");
  }
  return static_cast<int>(doubled.get_num().get_si());
}

ExpChar& ExpChar::operator+=(const ExpChar& other) {
  if (other.size() != size()) {
    throw UsageError("ExpChar: size mismatch");
  }
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    weights_[i] += other.weights_[i];
  }
  return *this;
}

ExpChar& ExpChar::operator-=(const ExpChar& other) {
  if (other.size() != size()) {
    throw UsageError("ExpChar: size mismatch");
  }
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    weights_[i] -= other.weights_[i];
  }
  return *this;
}

ExpChar operator*(const Rat& power, ExpChar a) {
  for (Rat& w : a.weights_) {
    w *= power;
  }
  return a;
}

bool ExpChar::is_trivial() const {
  for (const Rat& w : weights_) {
    if (w != 0) {
      return false;
    }
  }
  return true;
}

std::string ExpChar::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    os << (i ? ", " : "") << rszeta::to_string(weights_[i]);
  }
  os << ']';
  return os.str();
}

ExpChar pullback(const ExpChar& f, int source_size, const std::function<Cochar(const Cochar&)>& map) {
  ExpChar out(source_size);
  for (int i = 0; i < source_size; ++i) {
    out[i] = f.q_exponent(map(Cochar::basis(source_size, i)));
  }
  return out;
}

ExpChar delta_parabolic(const std::vector<int>& levi_blocks) {
  int size = 0;
  for (int b : levi_blocks) {
    if (b <= 0) {
      throw UsageError("delta_parabolic: block sizes must be positive");
    }
    size += b;
  }
  ExpChar out(size);
  int before = 0;
  int slot = 0;
  for (int b : levi_blocks) {
    const int after = size - before - b;
    for (int k = 0; k < b; ++k) {
      // |x|^{after - before} contributes q^{-(after - before)} per valuation.
      out[slot++] = Rat(before - after);
    }
    before += b;
  }
  return out;
}

ExpChar delta_borel(int size) { return delta_parabolic(std::vector<int>(static_cast<std::size_t>(size), 1)); }

ExpChar abs_det_power(int size, int count, const Rat& power) {
  if (count < 0 || count > size) {
    throw UsageError("abs_det_power: bad coordinate count");
  }
  ExpChar out(size);
  for (int i = 0; i < count; ++i) {
    out[i] = -power;
  }
  return out;
}

ExpChar conj_measure_factor(const CoordSet& coords) {
  ExpChar out(coords.ambient());
  for (const auto& [row, col] : coords.coords()) {
    // |d_row / d_col| = q^{-(d_row - d_col)}.
    out[row - 1] -= 1;
    out[col - 1] += 1;
  }
  return out;
}

} // namespace rszeta
