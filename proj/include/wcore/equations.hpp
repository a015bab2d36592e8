#ifndef WCORE_EQUATIONS_HPP
#define WCORE_EQUATIONS_HPP

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "wcore/weight.hpp"

namespace wcore {

/// The numbered defining equations, in the ring's notation:
///   (1)  axa = a            (2)  xax = x           (3^m) (max)* = max
///   (4^n) (nxa)* = nxa      (5)  ax = xa           (6)   xa^2 = a
///   (7)  ax^2 = x           (8)  a^2x = a          (9)   x^2a = x
///   (6^k) xa^{k+1} = a^k
enum class EquationTag { E1, E2, E3m, E4n, E5, E6, E7, E8, E9, E6k };

std::string_view tag_name(EquationTag t);
std::optional<EquationTag> tag_from_name(std::string_view s);

using Certificate = std::vector<std::pair<EquationTag, bool>>;

bool certificate_ok(const Certificate& c);

/// Exact verdict for one equation on the pair (a, x). E3m needs ctx.m, E4n
/// needs ctx.n, E6k needs the power index k.
bool verify_equation(const Matrix& a, const Matrix& x, EquationTag tag, const RingContext& ctx,
                     std::optional<int> k = std::nullopt);

Certificate verify_equations(const Matrix& a, const Matrix& x, std::span<const EquationTag> tags,
                             const RingContext& ctx, std::optional<int> k = std::nullopt);

}  // namespace wcore

#endif
