#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "extdep/errors.hpp"

namespace extdep {

// Per-coordinate Frechet scales sigma_i and a common tail exponent eta:
//   F_i(t) = exp(-sigma_i * t^(-1/eta)),  t > 0,  sigma_i > 0,  eta in (0,1].
struct MarginSpec {
  int d = 0;
  std::vector<double> sigma;
  double eta = 1.0;

  void validate() const {
    if (d < 1) throw DomainError("dimension d must be >= 1");
    if (static_cast<int>(sigma.size()) != d)
      throw DimensionError("sigma length does not match dimension d");
    for (double s : sigma)
      if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("every sigma_i must be positive and finite");
    if (!(eta > 0.0) || eta > 1.0 || !std::isfinite(eta))
      throw DomainError("eta must lie in (0,1]");
  }

  static MarginSpec unit(int d) { return MarginSpec{d, std::vector<double>(d, 1.0), 1.0}; }
};

inline double frechet_cdf(double t, double sigma, double eta) {
  return std::exp(-sigma * std::pow(t, -1.0 / eta));
}

// Canonical quantile path: F^{-1}(u) = (-sigma / ln u)^eta.
inline double frechet_quantile(double u, double sigma, double eta) {
  return std::pow(-sigma / std::log(u), eta);
}

}  // namespace extdep
