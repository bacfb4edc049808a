#include "parqsym/element.hpp"

namespace parqsym {

std::string space_name(Space s) {
    switch (s) {
        case Space::parsym: return "parsym";
        case Space::parqsym: return "parqsym";
        case Space::qsym: return "qsym";
        case Space::nsym: return "nsym";
        case Space::sh: return "sh";
    }
    throw InvariantError("unknown space");
}

std::string basis_name(Basis b) {
    switch (b) {
        case Basis::H: return "H";
        case Basis::R: return "R";
        case Basis::KQ: return "KQ";
        case Basis::M: return "M";
        case Basis::L: return "L";
        case Basis::ETA: return "ETA";
        case Basis::ETAQ: return "ETAQ";
        case Basis::natural: return "natural";
    }
    throw InvariantError("unknown basis");
}

Space space_from_name(const std::string& name) {
    if (name == "parsym") return Space::parsym;
    if (name == "parqsym") return Space::parqsym;
    if (name == "qsym") return Space::qsym;
    if (name == "nsym") return Space::nsym;
    if (name == "sh") return Space::sh;
    throw InvariantError("unknown space: " + name);
}

Basis basis_from_name(const std::string& name) {
    if (name == "H") return Basis::H;
    if (name == "R") return Basis::R;
    if (name == "KQ") return Basis::KQ;
    if (name == "M") return Basis::M;
    if (name == "L") return Basis::L;
    if (name == "ETA") return Basis::ETA;
    if (name == "ETAQ") return Basis::ETAQ;
    if (name == "natural") return Basis::natural;
    throw InvariantError("unknown basis: " + name);
}

bool basis_legal_for(Space s, Basis b) {
    switch (s) {
        case Space::parsym: return b == Basis::H || b == Basis::R || b == Basis::KQ;
        case Space::parqsym:
            return b == Basis::M || b == Basis::L || b == Basis::ETA || b == Basis::ETAQ;
        case Space::qsym:
        case Space::nsym:
        case Space::sh: return b == Basis::natural;
    }
    return false;
}

bool basis_requires_q(Basis b) {
    return b == Basis::KQ || b == Basis::ETAQ;
}

QParam::QParam(Rational value) : q_(std::move(value)) {
    if (q_ == -1) throw InvariantError("q = -1 is not allowed (q + 1 must be invertible)");
}

void check_same_metadata(Space sa, Basis ba, const std::optional<Rational>& qa, Space sb, Basis bb,
                         const std::optional<Rational>& qb) {
    if (sa != sb || ba != bb || qa != qb) throw InvariantError("element metadata mismatch");
}

template <class Key>
Element<Key> make_element(Space space, Basis basis, std::optional<Rational> q, Combo<Key> terms) {
    if (basis == Basis::ETA) {
        if (q && *q != 1) throw InvariantError("the ETA basis fixes q = 1");
        basis = Basis::ETAQ;
        q = Rational(1);
    }
    if (!basis_legal_for(space, basis))
        throw InvariantError("basis " + basis_name(basis) + " is not legal for space " + space_name(space));
    if (basis_requires_q(basis)) {
        if (!q) throw InvariantError("basis " + basis_name(basis) + " requires a q parameter");
        QParam validated(*q);
        (void)validated;
    } else if (q) {
        throw InvariantError("basis " + basis_name(basis) + " does not take a q parameter");
    }
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->second == 0)
            it = terms.erase(it);
        else
            ++it;
    }
    return Element<Key>{space, basis, std::move(q), std::move(terms)};
}

template Element<Diagram> make_element(Space, Basis, std::optional<Rational>, Combo<Diagram>);
template Element<Composition> make_element(Space, Basis, std::optional<Rational>, Combo<Composition>);

DiagElement make_diag_element(Space space, Basis basis, std::optional<Rational> q, Combo<Diagram> terms) {
    if (space != Space::parsym && space != Space::parqsym)
        throw InvariantError("diagram keys require a diagram space");
    return make_element(space, basis, std::move(q), std::move(terms));
}

CompElement make_comp_element(Space space, Combo<Composition> terms) {
    return make_element(space, Basis::natural, {}, std::move(terms));
}

DiagElement basis_element(Space space, Basis basis, const Diagram& key, std::optional<Rational> q) {
    Combo<Diagram> terms;
    terms.emplace(key, 1);
    return make_diag_element(space, basis, std::move(q), std::move(terms));
}

CompElement basis_element(Space space, const Composition& key) {
    Combo<Composition> terms;
    terms.emplace(key, 1);
    return make_comp_element(space, std::move(terms));
}

}  // namespace parqsym
