#pragma once

// Builtin category data. Entries are written as closed forms (golden ratio,
// sqrt(2), roots of unity); tests/oracle regenerates them with an independent
// pentagon/hexagon solver and compares.

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "quantum3/category.hpp"

namespace quantum3 {

/// F^{abc}_d[e,f] as a function of six labels.
using FSymbolFn = std::function<Scalar(Label, Label, Label, Label, Label, Label)>;

/// Converts an associator given in F-move form into the stored tetrahedral
/// symbols, G(i,j,k,l,m,n) = conj(F^{ikl}_n[j,m]) / sqrt(d_j d_m), for every
/// admissible 6-tuple.
inline SphericalData spherical_from_f(const FusionRing& ring, const std::vector<Scalar>& qdim,
                                      const FSymbolFn& fsym) {
  const int r = ring.rank();
  std::vector<SixjEntry> entries;
  for (Label i = 0; i < r; ++i)
    for (Label j = 0; j < r; ++j)
      for (Label k = 0; k < r; ++k)
        for (Label l = 0; l < r; ++l)
          for (Label m = 0; m < r; ++m)
            for (Label n = 0; n < r; ++n) {
              if (!(ring.admissible(k, l, m) && ring.admissible(j, l, n) && ring.admissible(i, m, n) &&
                    ring.admissible(i, k, j)))
                continue;
              const Scalar f = fsym(i, k, l, n, j, m);
              entries.push_back({{i, j, k, l, m, n}, std::conj(f) / std::sqrt(qdim[j] * qdim[m])});
            }
  return SphericalData(ring, qdim, entries);
}

/// Pointed category Vec_{Z/n} with trivial associator: all admissible symbols
/// equal 1.
inline SphericalData vec_zn(int n) {
  if (n < 1) throw std::invalid_argument("vec_zn: n must be >= 1");
  std::vector<Label> dual(n);
  for (Label i = 0; i < n; ++i) dual[i] = (n - i) % n;
  auto ring = FusionRing::from_rule(n, dual, [n](Label i, Label j, Label k) { return (i + j) % n == k ? 1 : 0; });
  return spherical_from_f(ring, std::vector<Scalar>(n, 1.0),
                          [](Label, Label, Label, Label, Label, Label) { return Scalar{1.0}; });
}

/// Spherical data equipped with the trivial braiding (R = 1, v = 1). Only
/// valid for commutative rings with trivial associator; used to exhibit
/// non-modular input.
inline ModularData trivially_braided(const SphericalData& base) {
  std::vector<RsymEntry> rsym;
  for (const auto& t : base.ring().triples()) rsym.push_back({t, 1.0});
  return ModularData(base, rsym, std::vector<Scalar>(base.rank(), 1.0));
}

inline constexpr double kGoldenRatio = std::numbers::phi;

/// Fibonacci category: labels {1, tau}, tau (x) tau = 1 (+) tau.
inline ModularData fibonacci() {
  const double phi = kGoldenRatio;
  auto ring = FusionRing::from_rule(2, {0, 1}, [](Label i, Label j, Label k) {
    if (i == 0) return j == k ? 1 : 0;
    if (j == 0) return i == k ? 1 : 0;
    return 1;  // tau (x) tau contains both
  });
  const double diag = 1.0 / phi;
  const double off = 1.0 / std::sqrt(phi);
  auto base = spherical_from_f(ring, {1.0, phi}, [&](Label a, Label b, Label c, Label d, Label e, Label f) {
    if (a == 1 && b == 1 && c == 1 && d == 1) {
      if (e == 0 && f == 0) return Scalar{diag};
      if (e == 1 && f == 1) return Scalar{-diag};
      return Scalar{off};
    }
    return Scalar{1.0};
  });
  const double pi = std::numbers::pi;
  std::vector<RsymEntry> rsym;
  for (const auto& t : ring.triples()) {
    Scalar value = 1.0;
    if (t[0] == 1 && t[1] == 1) value = t[2] == 0 ? std::polar(1.0, -4 * pi / 5) : std::polar(1.0, 3 * pi / 5);
    rsym.push_back({t, value});
  }
  return ModularData(base, rsym, {1.0, std::polar(1.0, 4 * pi / 5)});
}

/// Ising category: labels {1, sigma, psi} = {0, 1, 2}.
inline ModularData ising() {
  constexpr Label one = 0, sigma = 1, psi = 2;
  auto ring = FusionRing::from_rule(3, {0, 1, 2}, [](Label i, Label j, Label k) {
    if (i == one) return j == k ? 1 : 0;
    if (j == one) return i == k ? 1 : 0;
    if (i == sigma && j == sigma) return k == one || k == psi ? 1 : 0;
    if (i == psi && j == psi) return k == one ? 1 : 0;
    return k == sigma ? 1 : 0;  // sigma (x) psi
  });
  const double s2 = std::sqrt(2.0);
  auto base = spherical_from_f(ring, {1.0, s2, 1.0}, [&](Label a, Label b, Label c, Label d, Label e, Label f) {
    if (a == sigma && b == sigma && c == sigma && d == sigma)
      return Scalar{(e == psi && f == psi) ? -1.0 / s2 : 1.0 / s2};
    if (a == sigma && b == psi && c == sigma && d == psi) return Scalar{-1.0};
    if (a == psi && b == sigma && c == psi && d == sigma) return Scalar{-1.0};
    return Scalar{1.0};
  });
  const double pi = std::numbers::pi;
  std::vector<RsymEntry> rsym;
  for (const auto& t : ring.triples()) {
    Scalar value = 1.0;
    if (t[0] == sigma && t[1] == sigma) value = t[2] == one ? std::polar(1.0, -pi / 8) : std::polar(1.0, 3 * pi / 8);
    else if ((t[0] == sigma && t[1] == psi) || (t[0] == psi && t[1] == sigma)) value = Scalar{0.0, -1.0};
    else if (t[0] == psi && t[1] == psi) value = -1.0;
    rsym.push_back({t, value});
  }
  return ModularData(base, rsym, {1.0, std::polar(1.0, pi / 8), -1.0});
}

/// Abelian anyons Z/n with R^{ab}_{a+b} = exp(2 pi i ab / n); modular for odd
/// n. Labels are not self-dual for n > 2.
inline ModularData zn_anyons(int n) {
  const SphericalData base = vec_zn(n);
  const double pi = std::numbers::pi;
  std::vector<RsymEntry> rsym;
  for (const auto& t : base.ring().triples()) rsym.push_back({t, std::polar(1.0, 2 * pi * t[0] * t[1] / n)});
  std::vector<Scalar> twist(n);
  for (Label a = 0; a < n; ++a) twist[a] = std::polar(1.0, 2 * pi * a * a / n);
  return ModularData(base, rsym, twist);
}

/// Names accepted by `quantum3 builtin`.
inline const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"vec_z2", "vec_z3", "fibonacci", "ising"};
  return names;
}

inline bool builtin_is_modular(const std::string& name) { return name == "fibonacci" || name == "ising"; }

}  // namespace quantum3
