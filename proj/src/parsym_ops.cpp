#include "parqsym/parsym_ops.hpp"

#include <cstdlib>
#include <functional>
#include <utility>

#include "util.hpp"

namespace parqsym {

using detail::pow_rational;
using detail::sign_pow;

Combo<Diagram> mul_H(const Diagram& a, const Diagram& b) {
    Combo<Diagram> out;
    out.emplace(tensor(a, b), 1);
    return out;
}

Combo<std::pair<Diagram, Diagram>> comul_H(const Diagram& d) {
    Combo<std::pair<Diagram, Diagram>> acc;
    acc.emplace(std::make_pair(Diagram{}, Diagram{}), 1);
    for (const auto& factor : tensor_factorize(d)) {
        Combo<std::pair<Diagram, Diagram>> local;
        add_term(local, {Diagram{}, factor}, Rational(1));
        add_term(local, {factor, Diagram{}}, Rational(1));
        for (int i : bullet_cuts(factor)) {
            add_term(local, bullet_split(factor, i), Rational(1));
        }
        Combo<std::pair<Diagram, Diagram>> next;
        for (const auto& [ab, ca] : acc) {
            for (const auto& [cd, cb] : local) {
                add_term(next, {tensor(ab.first, cd.first), tensor(ab.second, cd.second)}, ca * cb);
            }
        }
        acc = std::move(next);
    }
    return acc;
}

Combo<Diagram> mul_R(const Diagram& a, const Diagram& b) {
    if (a.empty() || b.empty()) throw InvariantError("mul_R requires non-empty diagrams");
    Combo<Diagram> out;
    add_term(out, tensor(a, b), Rational(1));
    add_term(out, bullet(a, b), Rational(1));
    return out;
}

Combo<Diagram> mul_kappa(const Diagram& a, const Diagram& b) {
    Combo<Diagram> out;
    out.emplace(tensor(a, b), 1);
    return out;
}

Combo<Diagram> expand_R_in_H(const Diagram& d) {
    Combo<Diagram> out;
    int ld = length(d);
    for (const auto& sigma : coarsenings(d)) add_term(out, sigma, sign_pow(length(sigma) - ld));
    return out;
}

Combo<Diagram> expand_H_in_R(const Diagram& d) {
    Combo<Diagram> out;
    for (const auto& sigma : coarsenings(d)) add_term(out, sigma, Rational(1));
    return out;
}

Combo<Diagram> expand_KQ_in_H(const Diagram& d, const QParam& qp) {
    Combo<Diagram> out;
    int ld = length(d);
    for (const auto& sigma : refinements(d)) {
        int ls = length(sigma);
        add_term(out, sigma, sign_pow(ls - ld) * pow_rational(qp.r(), -ls));
    }
    return out;
}

Combo<Diagram> expand_H_in_KQ(const Diagram& d, const QParam& qp) {
    Combo<Diagram> out;
    Rational factor = pow_rational(qp.r(), length(d));
    for (const auto& sigma : refinements(d)) add_term(out, sigma, factor);
    return out;
}

namespace {

DiagElement convert_keywise(const DiagElement& x, Basis target, std::optional<Rational> target_q,
                            const std::function<Combo<Diagram>(const Diagram&)>& expand) {
    Combo<Diagram> out;
    for (const auto& [key, c] : x.terms) add_combo(out, expand(key), c);
    return make_diag_element(x.space, target, std::move(target_q), std::move(out));
}

}  // namespace

DiagElement r_to_h(const DiagElement& x) {
    if (x.space != Space::parsym || x.basis != Basis::R) throw InvariantError("r_to_h: expected ParSym R basis");
    return convert_keywise(x, Basis::H, {}, expand_R_in_H);
}

DiagElement h_to_r(const DiagElement& x) {
    if (x.space != Space::parsym || x.basis != Basis::H) throw InvariantError("h_to_r: expected ParSym H basis");
    return convert_keywise(x, Basis::R, {}, expand_H_in_R);
}

DiagElement kappa_to_h(const DiagElement& x) {
    if (x.space != Space::parsym || x.basis != Basis::KQ)
        throw InvariantError("kappa_to_h: expected ParSym KQ basis");
    QParam qp(*x.q);
    return convert_keywise(x, Basis::H, {}, [&qp](const Diagram& d) { return expand_KQ_in_H(d, qp); });
}

DiagElement h_to_kappa(const DiagElement& x, const QParam& qp) {
    if (x.space != Space::parsym || x.basis != Basis::H) throw InvariantError("h_to_kappa: expected ParSym H basis");
    return convert_keywise(x, Basis::KQ, qp.q(), [&qp](const Diagram& d) { return expand_H_in_KQ(d, qp); });
}

DiagTensor2 comul_kappa_line(int n, const QParam& qp) {
    if (n < 1) throw InvariantError("comul_kappa_line: n must be positive");
    DiagTensor2 out;
    out.space = Space::parsym;
    out.basis = Basis::KQ;
    out.q = qp.q();
    for (int left = 0; left <= n; ++left) {
        for (const auto& beta : compositions_of(left)) {
            for (const auto& gamma : compositions_of(n - left)) {
                int lb = beta.len(), lg = gamma.len();
                if (std::abs(lb - lg) > 1) continue;
                Rational coeff = pow_rational(-qp.q(), std::max(lb, lg) - 1);
                if (lb == lg) coeff *= qp.q() - 1;
                add_term(out.terms, {pi_of_composition(beta), pi_of_composition(gamma)}, coeff);
            }
        }
    }
    return out;
}

}  // namespace parqsym
