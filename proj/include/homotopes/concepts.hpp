#pragma once

#include <concepts>

namespace homotopes {

/// Commutative ring with identity. Elements are built from small integers
/// through T(0) and T(1).
template <typename T>
concept Ring = requires(T a, T b) {
  { T(0) } -> std::convertible_to<T>;
  { T(1) } -> std::convertible_to<T>;
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
};

/// Ring in which every nonzero element is invertible.
template <typename T>
concept Field = Ring<T> && requires(T a, T b) {
  { a / b } -> std::convertible_to<T>;
  { a.inv() } -> std::convertible_to<T>;
};

} // namespace homotopes
