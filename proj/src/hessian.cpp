#include "hesscurve/hessian.hpp"

#include "hesscurve/error.hpp"

namespace hesscurve {

namespace {

// g with g_x = gx and g_y = gy, no constant term; requires (gx)_y = (gy)_x.
BivarPoly potential(const BivarPoly& gx, const BivarPoly& gy) {
  const BivarPoly along_x = integrate(gx, Var::X);
  // gy - d/dy(along_x) depends on y alone when the field is closed
  const BivarPoly rest = gy - differentiate(along_x, Var::Y);
  return along_x + integrate(rest, Var::Y);
}

}  // namespace

BivarPoly hessian_of(const BivarPoly& f) {
  const BivarPoly fx = differentiate(f, Var::X);
  const BivarPoly fy = differentiate(f, Var::Y);
  const BivarPoly fxx = differentiate(fx, Var::X);
  const BivarPoly fyy = differentiate(fy, Var::Y);
  const BivarPoly fxy = differentiate(fx, Var::Y);
  return fxx * fyy - fxy * fxy;
}

bool three_squares_check(const BivarPoly& f) {
  const BivarPoly fxx = differentiate(differentiate(f, Var::X), Var::X);
  const BivarPoly fyy = differentiate(differentiate(f, Var::Y), Var::Y);
  const BivarPoly fxy = differentiate(differentiate(f, Var::X), Var::Y);
  const Rational half(1, 2);
  const BivarPoly mean = (fxx + fyy) * half;
  const BivarPoly diff = (fxx - fyy) * half;
  return hessian_of(f) == mean * mean - diff * diff - fxy * fxy;
}

PqrWitness::PqrWitness(BivarPoly p, BivarPoly q, BivarPoly r)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)) {
  if (differentiate(p_, Var::Y) != differentiate(q_, Var::X)) {
    throw Error(Errc::WitnessInvalid, "p_y != q_x");
  }
  if (differentiate(q_, Var::Y) != differentiate(r_, Var::X)) {
    throw Error(Errc::WitnessInvalid, "q_y != r_x");
  }
}

HessianReconstruction hessian_from_pqr(const PqrWitness& w) {
  const BivarPoly s = potential(w.p(), w.q());  // s_x = p, s_y = q
  const BivarPoly t = potential(w.q(), w.r());  // t_x = q, t_y = r
  BivarPoly f = potential(s, t);                // f_x = s, f_y = t
  BivarPoly h = w.p() * w.r() - w.q() * w.q();
  if (hessian_of(f) != h) throw Error(Errc::Internal, "reconstructed f does not reproduce p*r - q^2");
  return {std::move(f), std::move(h)};
}

}  // namespace hesscurve
