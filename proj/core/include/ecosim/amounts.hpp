#pragma once

#include <cmath>

namespace ecosim {

// Money balances, resource stocks and trade quantities all live on a dyadic
// grid of 2^-24 units. Grid values below ~2^28 in magnitude occupy at most
// 52 significand bits, so additions, subtractions and running sums of them
// never round. That is what makes the conservation checks and the money
// ledger exact instead of approximately-equal-with-tolerance.
inline constexpr double kAmountGridScale = 16777216.0;  // 2^24
inline constexpr double kAmountGrid = 1.0 / kAmountGridScale;

// Nearest grid point. Used when adopting configured rates and endowments.
inline double snap_amount(double x) {
  return std::round(x * kAmountGridScale) / kAmountGridScale;
}

// Largest grid point <= x. Used for trade quantities so a buyer never pays
// more than it holds and a seller never dips below its reserve.
inline double floor_amount(double x) {
  return std::floor(x * kAmountGridScale) / kAmountGridScale;
}

// Smallest grid point >= x. The per-step metabolic drain is snapped upward:
// an agent endowed with an exact multiple of the drain then dies on exactly
// the expected step instead of surviving on a stray rounding residue.
inline double ceil_amount(double x) {
  return std::ceil(x * kAmountGridScale) / kAmountGridScale;
}

}  // namespace ecosim
