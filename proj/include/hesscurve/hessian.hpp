#pragma once

#include "hesscurve/polyring.hpp"

namespace hesscurve {

/// f_xx * f_yy - f_xy^2. Zero for inputs of degree <= 1.
BivarPoly hessian_of(const BivarPoly& f);

/// Checks Hess(f) = ((f_xx + f_yy)/2)^2 - ((f_xx - f_yy)/2)^2 - f_xy^2 exactly.
bool three_squares_check(const BivarPoly& f);

/// Candidate second derivatives (p, q, r) = (f_xx, f_xy, f_yy) of some f.
/// Construction enforces p_y = q_x and q_y = r_x.
class PqrWitness {
 public:
  /// Throws Error(WitnessInvalid) if the compatibility identities fail.
  PqrWitness(BivarPoly p, BivarPoly q, BivarPoly r);

  const BivarPoly& p() const { return p_; }
  const BivarPoly& q() const { return q_; }
  const BivarPoly& r() const { return r_; }

 private:
  BivarPoly p_, q_, r_;
};

struct HessianReconstruction {
  BivarPoly f;  ///< f_xx = p, f_xy = q, f_yy = r, f(0,0) = f_x(0,0) = f_y(0,0) = 0
  BivarPoly h;  ///< p*r - q^2 = Hess(f)
};

/// Integrates a witness back to f. The result is checked against hessian_of.
HessianReconstruction hessian_from_pqr(const PqrWitness& w);

}  // namespace hesscurve
