#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

#include "orbitfn/linalg.hpp"
#include "orbitfn/rational.hpp"

namespace orbitfn {

enum class LieSeries : char {
  A = 'A',
  B = 'B',
  C = 'C',
  D = 'D',
  E = 'E',
  F = 'F',
  G = 'G',
};

struct LieType {
  LieSeries series;
  int rank;
};

bool operator==(LieType a, LieType b);
std::string to_string(LieType t);

struct ClassificationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnsupportedHomomorphismError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Admissible pairs: A(n>=1), B(n>=3), C(n>=2), D(n>=4), E(6,7,8), F(4), G(2).
bool is_admissible(LieSeries series, int rank);

/// Parses "A1".."G2" (series letter followed by a decimal rank).
LieType parse_lie_type(std::string_view s);

/// Sign homomorphisms W -> {+1,-1}, fixed by their values on simple
/// reflections: Identity is trivially 1, Determinant is -1 on every
/// generator, Short/Long are -1 exactly on reflections in short/long roots.
enum class SignHom { Identity = 0, Determinant = 1, Short = 2, Long = 3 };

inline constexpr std::array<SignHom, 4> kAllSignHoms = {
    SignHom::Identity, SignHom::Determinant, SignHom::Short, SignHom::Long};

/// CLI spelling: "id", "e", "s", "l".
const char* sigma_code(SignHom s);
SignHom parse_sigma(std::string_view s);

/// Static data of a simple root system, in the omega / omega-check coordinate
/// bases.  Weights carry omega-basis coordinates, arguments omega-check-basis
/// coordinates; the scalar product of a weight row and an argument column is
/// lambda^T C^{-1} a.  Long roots are normalized to squared length 2.
struct RootSystemData {
  LieType lie_type{LieSeries::A, 1};
  int rank = 0;
  IntMat cartan;
  RatMat cartan_inv;
  IntVec marks;            // m_1..m_n of the highest root (m_0 = 1 implicit)
  IntVec comarks;          // q_1..q_n (q_0 = 1 implicit)
  RatVec root_lengths_sq;  // <alpha_i, alpha_i>
  std::vector<int> short_set;  // 1-based simple-root indices
  std::vector<int> long_set;   // empty for simply-laced systems
  Int d;                       // |P / Q^vee|
  long long coxeter_m = 0;     // 1 + sum of marks
  long long dual_coxeter_g = 0;
  long long num_roots = 0;  // rank * coxeter_m
  Int weyl_order;

  bool simply_laced() const { return long_set.empty(); }
};

RootSystemData build_root_system(LieType t);

/// <lambda, a> for lambda in omega-coordinates and a in omega-check
/// coordinates; exact rational.
Rat pairing(const RootSystemData& rs, const RatVec& lambda, const RatVec& a);

bool sigma_admissible(const RootSystemData& rs, SignHom sigma);
void require_sigma_admissible(const RootSystemData& rs, SignHom sigma);

/// True when the affine generator r_i (i = 0 is the reflection in the highest
/// root wall) picks up sign -1 under sigma.
bool generator_in_r_sigma(const RootSystemData& rs, SignHom sigma, int i);

/// Sum of comarks q_i over the generators with sigma-value -1.
long long q_sigma(const RootSystemData& rs, SignHom sigma);

/// Converts omega-basis coordinates of a weight into omega-check coordinates
/// of the same point (multiply coordinate i by <alpha_i,alpha_i>/2).
RatVec weight_to_argument(const RootSystemData& rs, const RatVec& weight);
RatVec argument_to_weight(const RootSystemData& rs, const RatVec& argument);

/// omega-coordinates of the highest root.
IntVec highest_root_weight_coords(const RootSystemData& rs);

}  // namespace orbitfn
