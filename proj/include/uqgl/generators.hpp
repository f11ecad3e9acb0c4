#pragma once
#include <compare>
#include <cstdint>
#include <string>

namespace uqgl {

// letters of the free superalgebras used across the engine:
//  LMode      matrix-entry modes l_ij^{sign}[m]
//  GaussMode  triangular-decomposition modes e/f/k1/k2^{sign}[m]
//  CurrentSym whole currents as atomic symbols (argument z or w), used by the
//             identity-level checker where no series expansion happens
//  InvLetter  designated inverse of a single even zero-mode letter
//  HelperInv  registry-bound inverse of a composite element (always even)
enum class GenKind : uint8_t { LMode = 0, GaussMode = 1, CurrentSym = 2, InvLetter = 3, HelperInv = 4 };
enum class GaussWhich : uint8_t { E = 0, F = 1, K1 = 2, K2 = 3 };
enum class CurrentWhich : uint8_t { E = 0, F = 1, K1 = 2, K2 = 3, K1Inv = 4, K2Inv = 5 };
inline constexpr int SignPlus = 0;
inline constexpr int SignMinus = 1;

struct GeneratorKey {
  // layout: [63..60]=kind [59..56]=a [55..52]=b [51..48]=sign [31..0]=mode/id
  uint64_t v = 0;

  static GeneratorKey lmode(int i, int j, int sign, int mode);
  static GeneratorKey gauss(GaussWhich which, int sign, int mode);
  static GeneratorKey current(CurrentWhich which, int sign, int var);
  static GeneratorKey inv(GeneratorKey letter);  // letter must be even, mode 0
  static GeneratorKey helper_inv(int id);

  GenKind kind() const { return static_cast<GenKind>(v >> 60); }
  int a() const { return static_cast<int>((v >> 56) & 0xF); }
  int b() const { return static_cast<int>((v >> 52) & 0xF); }
  int sign() const { return static_cast<int>((v >> 48) & 0xF); }
  int mode() const { return static_cast<int>(v & 0xFFFFFFFFu); }
  // for InvLetter: reconstruct the letter this one inverts
  GeneratorKey inverted_letter() const;

  int parity() const;  // 0 even, 1 odd
  std::string str() const;

  auto operator<=>(const GeneratorKey&) const = default;
};

}  // namespace uqgl
