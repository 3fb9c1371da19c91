#pragma once

// Dense univariate integer polynomials, coefficients stored low degree first.
// The zero polynomial is the empty vector; nonzero polynomials never carry a
// zero leading coefficient.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace topvert::poly {

using Poly = std::vector<mpz_class>;

void trim(Poly& p);
int degree(const Poly& p);  // -1 for zero
int valuation(const Poly& p);  // index of lowest nonzero coefficient, -1 for zero

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const mpz_class& c);
Poly negate(Poly a);
Poly shift(const Poly& a, int k);  // multiply by s^k, k >= 0
Poly dropLow(const Poly& a, int k);  // divide by s^k, assumes divisibility
Poly reversed(const Poly& a);

mpz_class content(const Poly& p);  // nonnegative gcd of coefficients
Poly divexactScalar(const Poly& a, const mpz_class& c);

// Exact quotient a / b over Z[s] if it exists.
std::optional<Poly> divide(const Poly& a, const Poly& b);

// Greatest common divisor in Z[s], including the integer content, with
// positive leading coefficient. gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

std::string toString(const Poly& p, const std::string& var = "s");

}  // namespace topvert::poly
