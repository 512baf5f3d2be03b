#pragma once

#include "iwkit/series.hpp"

namespace iwkit {

// Phi_0 = X and, for n >= 1, Phi_n = ((1+X)^{p^n} - 1) / ((1+X)^{p^{n-1}} - 1),
// the p^n-th cyclotomic polynomial in 1+X. Throws DegreeOverflow if deg Phi_n
// exceeds the ring's cap.
IwasawaSeries phi(const SeriesRing& ring, int n);

// omega_n = (1+X)^{p^n} - 1.
IwasawaSeries omega(const SeriesRing& ring, int n);

// deg Phi_n: 1 for n = 0, p^n - p^{n-1} otherwise.
long phi_degree(u64 p, int n);
long p_power(u64 p, int n);

struct DivisionResult {
  IwasawaSeries quotient;
  IwasawaSeries remainder;
};

// Polynomial long division f = q*P + r with deg r < deg P. P must be a monic
// polynomial below its cap; f is read as the polynomial of its stored
// coefficients.
DivisionResult divide_distinguished(const IwasawaSeries& f, const IwasawaSeries& divisor);

struct IwasawaInvariants {
  int mu = 0;
  int lambda = 0;
};

// mu = least coefficient valuation, lambda = first index where f / p^mu has a
// unit coefficient. Throws ZeroSeriesError for f == 0 mod p^N.
IwasawaInvariants iwasawa_invariants(const IwasawaSeries& f);

// f = p^mu * distinguished * unit.
struct WeierstrassFactorization {
  int mu = 0;
  int lambda = 0;
  IwasawaSeries distinguished;  // monic, degree lambda, lower coefficients in pZ_p
  IwasawaSeries unit;           // constant term a unit

  // p^mu * distinguished * unit, at the input's precision and cap.
  IwasawaSeries reconstruct() const;
};

// Weierstrass preparation of the polynomial given by f's stored coefficients.
// Throws ZeroSeriesError if f vanishes mod p^N.
WeierstrassFactorization weierstrass_prepare(const IwasawaSeries& f);

}  // namespace iwkit
