#pragma once

#include "orbitfn/transforms.hpp"

namespace orbitfn {

/// Generalized Kac-Peterson matrix
///   S_{lambda,mu} = i^{|Pi|/2} phi^sigma_lambda(-mu / M)
///                   / sqrt(d M^n h_M(lambda) h_M(mu)),   M = k + q^sigma,
/// indexed by the label set in canonical order; unitary and symmetric.
struct SMatrix {
  SignHom sigma;
  long long level = 0;  // k
  long long M = 0;      // k + q^sigma
  std::vector<WeightLabel> labels;
  std::vector<std::vector<Complex>> entries;
  Complex phase;  // i^{|Pi|/2}
  double unitarity_defect = 0.0;
  double symmetry_defect = 0.0;
};

SMatrix build_s_matrix(const RootSystemData& rs, const WeylGroup& group,
                       SignHom sigma, long long k,
                       std::uint64_t ceiling = kDefaultGroupCeiling);

/// max |(S S^dagger - I)_{ij}|.
double check_unitary(const SMatrix& s);

/// max |S - S^T|.
double check_symmetric(const SMatrix& s);

/// The rank-one modular S matrix at level k: (k+1) x (k+1) entries
/// sqrt(2/(k+2)) sin(pi a b / (k+2)), a, b in 1..k+1.
std::vector<std::vector<double>> a1_kac_peterson_reference(long long k);

}  // namespace orbitfn
