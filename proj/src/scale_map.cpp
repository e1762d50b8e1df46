#include "sparserips/scale_map.hpp"

#include <algorithm>
#include <cmath>

namespace sparse_rips {

namespace {

double raw_image(const ScaleMap& psi, double r) { return r + std::max(psi.eps0, psi.eps1 * r); }

double raw_inverse(const ScaleMap& psi, double y) {
  if (y <= psi.eps0) return 0.0;
  // r + eps0 branch holds while eps1 * r <= eps0, i.e. up to y = (1 + 1/eps1) eps0
  if (psi.eps1 == 0.0 || y <= psi.eps0 + psi.eps0 / psi.eps1) return y - psi.eps0;
  return y / (1.0 + psi.eps1);
}

}  // namespace

double ScaleMap::operator()(double r) const {
  if (std::isinf(r)) return r;
  double image = raw_image(*this, r);
  if (threshold && image > *threshold) image = R;
  return std::min(R, image);
}

double ScaleMap::inverse(double y) const {
  if (std::isinf(y)) return y;
  if (threshold && y > *threshold) return raw_inverse(*this, *threshold);
  return raw_inverse(*this, y);
}

bool ScaleMap::is_identity() const {
  return eps0 == 0.0 && eps1 == 0.0 && std::isinf(R) && !threshold;
}

}  // namespace sparse_rips
