#include "parqsym/morphisms.hpp"

#include "parqsym/classical.hpp"
#include "parqsym/ops.hpp"

#include "util.hpp"

namespace parqsym {

using detail::sign_pow;

Rational pair(const DiagElement& x, const DiagElement& y) {
    if (x.space != Space::parqsym || y.space != Space::parsym)
        throw InvariantError("pair: expected (ParQSym, ParSym) arguments");
    if (x.q && y.q && *x.q != *y.q) throw InvariantError("pair: mismatched q parameters");
    DiagElement xm = convert(x, Basis::M);
    DiagElement yh = convert(y, Basis::H);
    Rational out = 0;
    for (const auto& [key, c] : xm.terms) out += c * coeff_of(yh.terms, key);
    return out;
}

CompElement psi_pq(const DiagElement& x) {
    if (x.space != Space::parqsym) throw InvariantError("psi_pq: expected a ParQSym element");
    DiagElement xm = convert(x, Basis::M);
    Combo<Composition> out;
    for (const auto& [key, c] : xm.terms) add_term(out, alpha_of(key), c);
    return make_comp_element(Space::qsym, std::move(out));
}

DiagElement phi(const CompElement& x) {
    if (x.space != Space::nsym) throw InvariantError("phi: expected an NSym element");
    Combo<Diagram> out;
    for (const auto& [key, c] : x.terms) add_term(out, pi_of_composition(key), c);
    return make_diag_element(Space::parsym, Basis::H, {}, std::move(out));
}

CompElement phi_ps(const DiagElement& x) {
    if (x.space != Space::parqsym) throw InvariantError("phi_ps: expected a ParQSym element");
    DiagElement xm = convert(x, Basis::M);
    Combo<Composition> out;
    for (const auto& [key, c] : xm.terms) {
        Composition alpha = alpha_of(key);
        for (const auto& beta : comp_coarsenings(alpha)) {
            Rational coeff = c * sign_pow(alpha.len() - beta.len());
            for (const auto& piece : split_along(alpha, beta)) coeff *= lp(piece);
            add_term(out, beta, coeff);
        }
    }
    return make_comp_element(Space::sh, std::move(out));
}

Rational eta_parqsym(const DiagElement& x) {
    return eta_char(psi_pq(x));
}

}  // namespace parqsym
