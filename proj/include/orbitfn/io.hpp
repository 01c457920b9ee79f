#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "orbitfn/smatrix.hpp"
#include "orbitfn/verify.hpp"

namespace orbitfn {

using json = nlohmann::json;

struct InputValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Shortest round-trip decimal representation.
std::string format_double(double x);

json rat_to_json(const Rat& r);    // {"num":..., "den":...}
json int_to_json(const Int& v);    // number, or decimal string when too wide
json root_system_to_json(const RootSystemData& rs);

json grid_to_json(const RootSystemData& rs, SignHom sigma, long long M,
                  const std::vector<GridPoint>& grid,
                  const CountReport& counts);
std::string grid_to_csv(const std::vector<GridPoint>& grid);

json labels_to_json(const RootSystemData& rs, SignHom sigma, long long M,
                    const std::vector<WeightLabel>& labels,
                    const CountReport& counts);
std::string labels_to_csv(const std::vector<WeightLabel>& labels);

json count_report_to_json(const CountReport& counts);

/// Sample vectors travel as CSV with columns u_1,...,u_n,re,im; rows are
/// keyed by the u-coordinates and must cover the grid exactly once.
std::string samples_to_csv(const SampleVector& f,
                           const std::vector<GridPoint>& grid);
SampleVector samples_from_csv(std::istream& in, const RootSystemData& rs,
                              SignHom sigma, long long M,
                              const std::vector<GridPoint>& grid);

/// Spectra travel as a JSON array of {"lambda":[...], "re":..., "im":...}.
json spectrum_to_json(const SpectrumCoefficients& c,
                      const std::vector<WeightLabel>& labels);
SpectrumCoefficients spectrum_from_json(const json& j, SignHom sigma,
                                        long long M,
                                        const std::vector<WeightLabel>& labels);

json smatrix_to_json(const RootSystemData& rs, const SMatrix& s);
std::string smatrix_to_csv(const SMatrix& s);

json verify_report_to_json(const VerifyReport& report);

}  // namespace orbitfn
