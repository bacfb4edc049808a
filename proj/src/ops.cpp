#include "parqsym/ops.hpp"

#include <functional>

#include "parqsym/classical.hpp"
#include "parqsym/hopf.hpp"
#include "parqsym/parqsym_ops.hpp"
#include "parqsym/parsym_ops.hpp"

namespace parqsym {

namespace {

Basis anchor_basis(Space s) {
    switch (s) {
        case Space::parsym: return Basis::H;
        case Space::parqsym: return Basis::M;
        default: return Basis::natural;
    }
}

DiagElement to_anchor(const DiagElement& x) {
    switch (x.basis) {
        case Basis::H:
        case Basis::M: return x;
        case Basis::R: return r_to_h(x);
        case Basis::KQ: return kappa_to_h(x);
        case Basis::L: return l_to_m(x);
        case Basis::ETAQ: return eta_q_to_m(x);
        default: throw InvariantError("to_anchor: unsupported basis");
    }
}

DiagElement from_anchor(const DiagElement& x, Basis target, std::optional<Rational> target_q) {
    if (basis_requires_q(target) && !target_q) throw InvariantError("conversion target requires q");
    switch (target) {
        case Basis::H:
        case Basis::M: return x;
        case Basis::R: return h_to_r(x);
        case Basis::KQ: return h_to_kappa(x, QParam(*target_q));
        case Basis::L: return m_to_l(x);
        case Basis::ETA: return m_to_eta_q(x, QParam(Rational(1)));
        case Basis::ETAQ: return m_to_eta_q(x, QParam(*target_q));
        default: throw InvariantError("from_anchor: unsupported basis");
    }
}

const BialgebraHandle<Diagram>& diagram_handle(Space s) {
    static const ParSymHandle parsym_handle;
    static const ParQSymHandle parqsym_handle;
    if (s == Space::parsym) return parsym_handle;
    if (s == Space::parqsym) return parqsym_handle;
    throw InvariantError("no diagram handle for this space");
}

const BialgebraHandle<Composition>& composition_handle(Space s) {
    static const QSymHandle qsym_handle;
    static const NSymHandle nsym_handle;
    static const ShHandle sh_handle;
    switch (s) {
        case Space::qsym: return qsym_handle;
        case Space::nsym: return nsym_handle;
        case Space::sh: return sh_handle;
        default: throw InvariantError("no composition handle for this space");
    }
}

}  // namespace

DiagElement convert(const DiagElement& x, Basis target, std::optional<Rational> target_q) {
    if (target == Basis::ETA) {
        if (target_q && *target_q != 1) throw InvariantError("the ETA basis fixes q = 1");
        target = Basis::ETAQ;
        target_q = Rational(1);
    }
    if (!basis_legal_for(x.space, target))
        throw InvariantError("basis " + basis_name(target) + " is not legal for space " + space_name(x.space));
    if (x.basis == target && x.q == target_q) return x;
    return from_anchor(to_anchor(x), target, std::move(target_q));
}

DiagElement product(const DiagElement& x, const DiagElement& y) {
    check_same_metadata(x.space, x.basis, x.q, y.space, y.basis, y.q);
    const auto& h = diagram_handle(x.space);
    DiagElement xa = to_anchor(x), ya = to_anchor(y);
    Combo<Diagram> out;
    for (const auto& [a, ca] : xa.terms) {
        for (const auto& [b, cb] : ya.terms) {
            for (const auto& [key, c] : h.product(a, b)) add_term(out, key, ca * cb * c);
        }
    }
    auto anchored = make_diag_element(x.space, anchor_basis(x.space), {}, std::move(out));
    return from_anchor(anchored, x.basis, x.q);
}

DiagTensor2 coproduct(const DiagElement& x) {
    const auto& h = diagram_handle(x.space);
    DiagElement xa = to_anchor(x);
    DiagTensor2 anchored{x.space, anchor_basis(x.space), {}, {}};
    for (const auto& [key, c] : xa.terms) {
        for (const auto& [ab, cc] : h.coproduct(key)) add_term(anchored.terms, ab, c * cc);
    }
    return convert_tensor(anchored, x.basis, x.q);
}

DiagElement antipode(const DiagElement& x) {
    const auto& h = diagram_handle(x.space);
    DiagElement xa = to_anchor(x);
    auto out = takeuchi_antipode(h, xa.terms);
    auto anchored = make_diag_element(x.space, anchor_basis(x.space), {}, std::move(out));
    return from_anchor(anchored, x.basis, x.q);
}

Rational counit(const DiagElement& x) {
    DiagElement xa = to_anchor(x);
    return coeff_of(xa.terms, Diagram{});
}

DiagTensor2 convert_tensor(const DiagTensor2& t, Basis target, std::optional<Rational> target_q) {
    if (target == Basis::ETA) {
        target = Basis::ETAQ;
        target_q = Rational(1);
    }
    if (t.basis != anchor_basis(t.space))
        throw InvariantError("convert_tensor: expected a tensor in the anchor basis");
    if (target == t.basis) return t;
    // Convert each leg key-wise via single-key elements.
    DiagTensor2 out{t.space, target, target_q, {}};
    for (const auto& [ab, c] : t.terms) {
        auto left = from_anchor(basis_element(t.space, t.basis, ab.first), target, target_q);
        auto right = from_anchor(basis_element(t.space, t.basis, ab.second), target, target_q);
        for (const auto& [lk, lc] : left.terms) {
            for (const auto& [rk, rc] : right.terms) add_term(out.terms, {lk, rk}, c * lc * rc);
        }
    }
    return out;
}

CompElement product(const CompElement& x, const CompElement& y) {
    check_same_metadata(x.space, x.basis, x.q, y.space, y.basis, y.q);
    const auto& h = composition_handle(x.space);
    Combo<Composition> out;
    for (const auto& [a, ca] : x.terms) {
        for (const auto& [b, cb] : y.terms) {
            for (const auto& [key, c] : h.product(a, b)) add_term(out, key, ca * cb * c);
        }
    }
    return make_comp_element(x.space, std::move(out));
}

CompTensor2 coproduct(const CompElement& x) {
    const auto& h = composition_handle(x.space);
    CompTensor2 out{x.space, Basis::natural, {}, {}};
    for (const auto& [key, c] : x.terms) {
        for (const auto& [ab, cc] : h.coproduct(key)) add_term(out.terms, ab, c * cc);
    }
    return out;
}

CompElement antipode(const CompElement& x) {
    const auto& h = composition_handle(x.space);
    auto out = takeuchi_antipode(h, x.terms);
    return make_comp_element(x.space, std::move(out));
}

Rational counit(const CompElement& x) {
    return coeff_of(x.terms, Composition{});
}

}  // namespace parqsym
