#pragma once

#include "topvert/partition.hpp"
#include "topvert/qscalar.hpp"

namespace topvert {

// H_{lambda,mu}, the extremal Hopf-link coefficient. Writing M = mu^t:
//   form 1: q^{(kappa(M)-kappa(lambda))/2} sum_eta s_{lambda^t/eta}(q^{-rho}) s_{M/eta}(q^{-rho})
//   form 2: q^{-kappa(lambda)/2} s_{lambda^t}(q^{-rho}) s_mu(q^{-rho-lambda})
QScalar hopfHForm1(const Partition& lambda, const Partition& mu);
QScalar hopfHForm2(const Partition& lambda, const Partition& mu);
// Computes both forms and throws FormulaDivergenceError if they differ.
QScalar hopfH(const Partition& lambda, const Partition& mu);

void clearHopfCache();

}  // namespace topvert
