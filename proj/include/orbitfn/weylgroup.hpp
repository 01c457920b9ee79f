#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "orbitfn/rootdata.hpp"

namespace orbitfn {

inline constexpr std::uint64_t kDefaultGroupCeiling = 1'000'000;

struct GroupTooLargeError : std::runtime_error {
  Int required;
  GroupTooLargeError(const std::string& msg, Int req)
      : std::runtime_error(msg), required(std::move(req)) {}
};

struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A Weyl group element, canonicalized by its integer action matrix on
/// omega-coordinates.  The word is one witness expression in simple
/// reflections (1-based generator indices), not a canonical form.
struct WeylElement {
  IntMat weight_action;
  IntMat coweight_action;
  std::vector<std::uint8_t> word;
  std::array<int, 4> sign{1, 1, 1, 1};  // indexed by SignHom
};

inline int sign_of(const WeylElement& w, SignHom s) {
  return w.sign[static_cast<int>(s)];
}

WeylElement identity_element(const RootSystemData& rs);
WeylElement simple_reflection(const RootSystemData& rs, int i);  // i in 1..n
WeylElement compose(const WeylElement& a, const WeylElement& b);

/// Reflection in the highest root, built by conjugating a simple reflection
/// along a height-descent word.
WeylElement highest_root_reflection(const RootSystemData& rs);

class WeylGroup {
 public:
  static WeylGroup enumerate(const RootSystemData& rs,
                             std::uint64_t ceiling = kDefaultGroupCeiling);

  const RootSystemData& root_system() const { return rs_; }
  const std::vector<WeylElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  const WeylElement& identity() const { return elements_.front(); }
  const WeylElement& rxi() const { return rxi_; }
  std::optional<std::size_t> find(const IntMat& weight_action) const;

 private:
  WeylGroup() = default;
  RootSystemData rs_;
  std::vector<WeylElement> elements_;
  WeylElement rxi_;
  std::map<IntMat, std::size_t> index_;
};

/// Breadth-first closure over generator multiplication; identity first,
/// deterministic order, exactly weyl_order distinct action matrices.
WeylGroup enumerate_weyl_group(const RootSystemData& rs,
                               std::uint64_t ceiling = kDefaultGroupCeiling);

/// x -> linear(x) + sum_j shift_j alpha^vee_j.
struct AffineElement {
  WeylElement linear;
  IntVec shift;  // coroot coordinates, integers
};

AffineElement affine_identity(const RootSystemData& rs);
/// i = 0 gives the affine reflection (highest-root reflection plus a
/// translation by the highest coroot); i in 1..n gives r_i.
AffineElement affine_generator(const RootSystemData& rs, int i);
AffineElement affine_compose(const RootSystemData& rs, const AffineElement& a,
                             const AffineElement& b);
RatVec apply_affine(const RootSystemData& rs, const AffineElement& e,
                    const RatVec& a);
int psi_sign(const AffineElement& e, SignHom s);

/// A point of the fundamental simplex in barycentric form: y_0..y_n >= 0 with
/// sum y_i m_i = 1 (m_0 = 1); coords are the omega-check coordinates y_1..y_n.
struct FundamentalPoint {
  RatVec y;
  RatVec coords;
};

bool in_fundamental_domain(const RootSystemData& rs, const RatVec& a);

/// Validates membership and fills in y_0; throws DomainError otherwise.
FundamentalPoint fundamental_point(const RootSystemData& rs,
                                   const RatVec& coords);

/// Alcove walk: while some coordinate is negative reflect at the smallest
/// violating simple index, else reflect at the affine wall when <a,xi> > 1.
/// Returns the representative in F and an affine element mapping it to a.
std::pair<FundamentalPoint, AffineElement> reduce_to_F(
    const RootSystemData& rs, const RatVec& a);

/// Order of the stabilizer in the affine Weyl group: closure of the simple
/// reflections with y_i = 0 together with the highest-root reflection when
/// y_0 = 0.
Int stabilizer_order(const RootSystemData& rs, const FundamentalPoint& p,
                     std::uint64_t ceiling = kDefaultGroupCeiling);

/// |W| / h(a); equals the size of the orbit of a on the torus R^n / Q^vee.
Int epsilon(const RootSystemData& rs, const FundamentalPoint& p,
            std::uint64_t ceiling = kDefaultGroupCeiling);

/// Stabilizer order of lambda / M; lambda in integer omega-coordinates.
Int h_M(const RootSystemData& rs, const IntVec& lambda, long long M,
        std::uint64_t ceiling = kDefaultGroupCeiling);

}  // namespace orbitfn
