#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "orbitfn/grids.hpp"

namespace orbitfn {

using Complex = std::complex<double>;

/// phi^sigma_lambda; lambda may be any integer weight, not only dominant.
struct OrbitFunctionSpec {
  SignHom sigma;
  IntVec lambda;
};

/// Signed exponential sum over the Weyl group.  Phases are exact rationals
/// reduced mod 1 and converted to double once per term.
Complex evaluate(const RootSystemData& rs, const WeylGroup& group,
                 const OrbitFunctionSpec& spec, const RatVec& a);

/// Integer weight M * waff(lambda / M).
IntVec map_label(const RootSystemData& rs, const AffineElement& waff,
                 const IntVec& lambda, long long M);

/// Checks phi_{M waff(lambda/M)}(a) == sigma(psi(waff)) phi_lambda(a) at a
/// point a whose denominator divides M.
bool label_symmetry_check(const RootSystemData& rs, const WeylGroup& group,
                          SignHom sigma, const IntVec& lambda,
                          const AffineElement& waff, long long M,
                          const RatVec& a, double tol = 1e-10);

struct SampleVector {
  SignHom sigma;
  long long M = 0;
  std::vector<Complex> values;  // one entry per grid point, canonical order
};

struct SpectrumCoefficients {
  SignHom sigma;
  long long M = 0;
  std::vector<Complex> coeffs;  // one entry per label, canonical order
};

/// Cached evaluation plan for one (root system, sigma, M) configuration:
/// grid, labels, the full phi matrix and the orthogonality normalizations.
/// Holds references; the root system and group must outlive the basis.
class OrbitBasis {
 public:
  OrbitBasis(const RootSystemData& rs, const WeylGroup& group, SignHom sigma,
             long long M, std::uint64_t ceiling = kDefaultGroupCeiling);

  const RootSystemData& root_system() const { return *rs_; }
  SignHom sigma() const { return sigma_; }
  long long resolution() const { return M_; }
  const std::vector<GridPoint>& grid() const { return grid_; }
  const std::vector<WeightLabel>& labels() const { return labels_; }
  Complex phi(std::size_t label, std::size_t point) const {
    return phi_[label][point];
  }
  double eps(std::size_t point) const { return eps_[point]; }
  double h(std::size_t label) const { return h_[label]; }
  /// d |W| M^n.
  double normalization() const { return normalization_; }
  /// d |W| M^n h(lambda), the squared norm of phi_lambda on the grid.
  double norm(std::size_t label) const { return normalization_ * h_[label]; }

 private:
  const RootSystemData* rs_;
  const WeylGroup* group_;
  SignHom sigma_;
  long long M_;
  std::vector<GridPoint> grid_;
  std::vector<WeightLabel> labels_;
  std::vector<double> eps_;
  std::vector<double> h_;
  std::vector<std::vector<Complex>> phi_;
  double normalization_ = 0.0;
};

/// sum_a eps(a) f(a) conj(g(a)); f and g must live on the same grid.
Complex scalar_product(const OrbitBasis& basis, const SampleVector& f,
                       const SampleVector& g);

/// G[l][l'] = <phi_l, phi_l'>; expected diag(d |W| M^n h(lambda)).
std::vector<std::vector<Complex>> gram_matrix(const OrbitBasis& basis);

SpectrumCoefficients forward_transform(const OrbitBasis& basis,
                                       const SampleVector& f);

/// sum_lambda c_lambda phi_lambda(a) at an arbitrary rational point.
Complex interpolate(const OrbitBasis& basis, const SpectrumCoefficients& c,
                    const RatVec& a);

/// interpolate restricted to the grid points, as a sample vector.
SampleVector synthesize(const OrbitBasis& basis,
                        const SpectrumCoefficients& c);

/// lhs = sum_a eps |f|^2, rhs = d |W| M^n sum_lambda h |c_lambda|^2.
std::pair<double, double> plancherel_check(const OrbitBasis& basis,
                                           const SampleVector& f);

/// Representatives of (1/M)P / Q^vee, deduplicated by exact rational coroot
/// coordinate residues; deterministic order, size d M^n.
std::vector<RatVec> coset_representatives(const RootSystemData& rs,
                                          long long M);

Complex exp_sum(const RootSystemData& rs, const std::vector<RatVec>& reps,
                const IntVec& mu);

/// sum over (1/M)P / Q^vee of e^{2 pi i <mu, y>}: d M^n when mu lies in
/// M Q^vee and 0 otherwise.
Complex exp_sum_check(const RootSystemData& rs, const IntVec& mu, long long M);

bool in_m_coroot_lattice(const RootSystemData& rs, const IntVec& mu,
                         long long M);

}  // namespace orbitfn
