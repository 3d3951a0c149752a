#pragma once

#include <cstddef>
#include <string>

#include "shiftlab/sequences.hpp"
#include "shiftlab/space.hpp"

namespace shiftlab {

enum class ShiftKind { Backward, Forward };

const char* to_string(ShiftKind kind);

/// B_w or F_w acting on the echelon space `space`.
struct ShiftOperatorSpec {
  ShiftKind kind;
  WeightSequence w;
  SpaceSpec space;

  bool backward() const { return kind == ShiftKind::Backward; }
  std::string describe() const;
};

/// Backward kernel prod_{s=1}^m w_{r-s}; zero when m > r (a_{r-m,k} = 0 there anyway).
LogReal backward_kernel(const WeightSequence& w, std::size_t r, std::size_t m);
/// Forward kernel prod_{s=1}^m w_{r+s}.
LogReal forward_kernel(const WeightSequence& w, std::size_t r, std::size_t m);

FiniteVector apply(const ShiftOperatorSpec& op, const FiniteVector& x);
/// T^m x via window products; T^0 = I.
FiniteVector iterate(const ShiftOperatorSpec& op, const FiniteVector& x, std::size_t m);
/// ln ||T^m x||_{k,p} from the re-indexed closed form.
double iterate_seminorm_log(const ShiftOperatorSpec& op, const FiniteVector& x, std::size_t m, std::size_t k);
double iterate_seminorm(const ShiftOperatorSpec& op, const FiniteVector& x, std::size_t m, std::size_t k);

/// T^[n] x = (1/n) sum_{m=1}^n T^m x, n >= 1.
FiniteVector cesaro_mean(const ShiftOperatorSpec& op, const FiniteVector& x, std::size_t n);
/// ln ||T^[n] x||_{k,p} from the double-sum identity.
double cesaro_seminorm_log(const ShiftOperatorSpec& op, const FiniteVector& x, std::size_t n, std::size_t k);
double cesaro_seminorm(const ShiftOperatorSpec& op, const FiniteVector& x, std::size_t n, std::size_t k);

}  // namespace shiftlab
