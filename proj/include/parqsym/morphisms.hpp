#pragma once

#include "parqsym/element.hpp"

namespace parqsym {

// The bilinear pairing <M_rho, H_pi> = delta, extended over basis
// conversions. x must live in ParQSym and y in ParSym; q metadata of the
// two sides must agree when both are parameterized.
Rational pair(const DiagElement& x, const DiagElement& y);

// Psi_PQ(M_rho) = M_{alpha_rho}: the unique CHA morphism to QSym.
CompElement psi_pq(const DiagElement& x);

// Phi(H_alpha) = H_{pi_alpha}: the injective graded Hopf map NSym -> ParSym.
DiagElement phi(const CompElement& x);

// Phi_PS(M_rho) = sum over coarsenings beta of alpha_rho of
// (-1)^(l(alpha_rho) - l(beta)) prod_i lp(alpha^(i)) x_beta.
CompElement phi_ps(const DiagElement& x);

// The infinitesimal character eta o Psi_PQ.
Rational eta_parqsym(const DiagElement& x);

}  // namespace parqsym
