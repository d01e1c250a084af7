#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rtop/bivar.hpp"
#include "rtop/ratfunc.hpp"
#include "rtop/realroots.hpp"

namespace rtop {

/// A change of coordinates applied while repairing hypotheses.
struct Transform {
  enum class Kind { kAxisSwap, kShear2d, kShear3d };
  Kind kind = Kind::kAxisSwap;
  mpq_class mu;  // shear2d: (x - mu y, y)
  mpq_class a;   // shear3d: (x + a z, y + b z, z)
  mpq_class b;

  static Transform axis_swap() { return {}; }
  static Transform shear2d(const mpq_class& mu) { return {Kind::kShear2d, mu, 0, 0}; }
  static Transform shear3d(const mpq_class& a, const mpq_class& b) { return {Kind::kShear3d, 0, a, b}; }
  std::string describe() const;
};

// Maps a point of the transformed frame back to the original frame.
// Entries are processed in reverse order of application.
std::vector<BigFloat> to_original_frame(const std::vector<Transform>& applied, std::vector<BigFloat> coords);
std::vector<mpq_class> to_original_frame(const std::vector<Transform>& applied, std::vector<mpq_class> coords);

/// Rational plane or space curve t -> (x(t), y(t)[, z(t)]) with reduced
/// components and lazily computed derived polynomials.
class Parametrization {
 public:
  // Throws Error(kInvalidArgument) unless there are 2 or 3 components.
  explicit Parametrization(std::vector<RatFunc> components, std::vector<Transform> transforms = {});

  int dimension() const { return static_cast<int>(components_.size()); }
  const RatFunc& component(int i) const { return components_[static_cast<std::size_t>(i)]; }
  const std::vector<RatFunc>& components() const { return components_; }
  const RatFunc& x() const { return components_[0]; }
  const RatFunc& y() const { return components_[1]; }
  const std::vector<Transform>& transforms() const { return transforms_; }
  Parametrization projection() const;

  // p_i(t) q_i(s) - p_i(s) q_i(t)
  BivarIntPoly g_tilde_i(int i) const;
  // gcd of all g_tilde_i, normalized (t - s for proper input).
  const BivarIntPoly& g_tilde() const;
  // g_tilde_1 / (t - s) and g_tilde_2 / (t - s); equal to G1, G2 for proper input.
  const BivarIntPoly& g1() const;
  const BivarIntPoly& g2() const;
  // Res_s(G1, G2) (zero exactly when the planar part is improper).
  const IntPoly& resultant_m() const;
  // lcm of the first two denominators (planar) or all three (space).
  IntPoly q_tilde() const;
  IntPoly q_tilde_planar() const;

  std::string to_string() const;

 private:
  struct Cache;
  std::vector<RatFunc> components_;
  std::vector<Transform> transforms_;
  std::shared_ptr<Cache> cache_;
};

struct ProperResult {
  bool proper = false;
  BivarIntPoly g_tilde;
};

enum class AsymptoteCase { kNone, kA, kB };

struct InfinityPoint {
  bool exists = false;
  std::vector<mpq_class> coords;
  bool reached = false;
  IntPoly reaching_poly;                         // gcd of a_i q_i - p_i
  std::vector<IsolatingInterval> reaching_values;  // its real roots
};

ProperResult properness_check(const Parametrization& c);
AsymptoteCase vertical_asymptote_check(const Parametrization& c);
AsymptoteCase z_asymptote_check(const Parametrization& c);
InfinityPoint point_at_infinity(const Parametrization& c);
Parametrization repair_transform(const Parametrization& c, const Transform& t);

// Rejects improper input with Error(kImproper); otherwise applies the
// repair transforms until the hypotheses hold, or throws
// Error(kRepairFailed).
Parametrization prepare(const Parametrization& c);

}  // namespace rtop
