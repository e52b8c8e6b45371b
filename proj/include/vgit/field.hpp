#pragma once

#include <concepts>
#include <string>

namespace vgit {

/// An exact field element type: value semantics, exact arithmetic, zero test.
template <class F>
concept Field = std::regular<F> && requires(F a, const F& b) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.str() } -> std::convertible_to<std::string>;
  F(0);
  F(1);
};

}  // namespace vgit
