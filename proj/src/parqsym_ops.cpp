#include "parqsym/parqsym_ops.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "util.hpp"

namespace parqsym {

using detail::pow_rational;
using detail::sign_pow;

Combo<std::pair<Diagram, Diagram>> comul_M(const Diagram& d) {
    Combo<std::pair<Diagram, Diagram>> out;
    auto factors = tensor_factorize(d);
    for (std::size_t i = 0; i <= factors.size(); ++i) {
        Diagram left, right;
        for (std::size_t j = 0; j < i; ++j) left = tensor(left, factors[j]);
        for (std::size_t j = i; j < factors.size(); ++j) right = tensor(right, factors[j]);
        add_term(out, {left, right}, Rational(1));
    }
    return out;
}

Combo<Diagram> mul_M(const Diagram& a, const Diagram& b) {
    Combo<Diagram> out;
    auto fa = tensor_factorize(a);
    auto fb = tensor_factorize(b);
    // Padded pairs: at each slot, take a factor of a, a factor of b, or
    // their bullet join, keeping both orders.
    std::function<void(std::size_t, std::size_t, const Diagram&)> rec = [&](std::size_t i, std::size_t j,
                                                                            const Diagram& acc) {
        if (i == fa.size() && j == fb.size()) {
            add_term(out, acc, Rational(1));
            return;
        }
        if (i < fa.size()) rec(i + 1, j, tensor(acc, fa[i]));
        if (j < fb.size()) rec(i, j + 1, tensor(acc, fb[j]));
        if (i < fa.size() && j < fb.size()) rec(i + 1, j + 1, tensor(acc, bullet(fa[i], fb[j])));
    };
    rec(0, 0, Diagram{});
    return out;
}

namespace {

enum class Side { left, right };

// Enumerates the interleavings of two words, reporting each as the
// sequence of sides. visit receives the side sequence.
void for_each_shuffle(std::size_t n, std::size_t m, const std::function<void(const std::vector<Side>&)>& visit) {
    std::vector<Side> word;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t j) {
        if (i == n && j == m) {
            visit(word);
            return;
        }
        if (i < n) {
            word.push_back(Side::left);
            rec(i + 1, j);
            word.pop_back();
        }
        if (j < m) {
            word.push_back(Side::right);
            rec(i, j + 1);
            word.pop_back();
        }
    };
    rec(0, 0);
}

}  // namespace

Combo<Diagram> mul_L(const Diagram& a, const Diagram& b) {
    if (a.empty() || b.empty()) {
        Combo<Diagram> out;
        out.emplace(a.empty() ? b : a, 1);
        return out;
    }
    auto da = atoms(a);
    auto db = atoms(b);
    Combo<Diagram> out;
    for_each_shuffle(da.atoms.size(), db.atoms.size(), [&](const std::vector<Side>& word) {
        std::size_t ia = 0, ib = 0;
        Diagram acc;
        Connective next = Connective::tensor;
        for (std::size_t t = 0; t < word.size(); ++t) {
            const Diagram& letter = word[t] == Side::left ? da.atoms[ia] : db.atoms[ib];
            acc = t == 0 ? letter : join(next, acc, letter);
            if (word[t] == Side::left)
                ++ia;
            else
                ++ib;
            if (t + 1 < word.size()) {
                if (word[t] == word[t + 1]) {
                    next = word[t] == Side::left ? da.joins[ia - 1] : db.joins[ib - 1];
                } else {
                    next = word[t] == Side::left ? Connective::bullet : Connective::tensor;
                }
            }
        }
        add_term(out, acc, Rational(1));
    });
    return out;
}

Combo<std::pair<Diagram, Diagram>> comul_L(const Diagram& d) {
    Combo<std::pair<Diagram, Diagram>> out;
    auto a = atoms(d);
    std::size_t n = a.atoms.size();
    // Split the atom word before position i; the join at the split is
    // discarded, each side keeps its own connectives.
    for (std::size_t i = 0; i <= n; ++i) {
        AtomDecomposition left, right;
        left.atoms.assign(a.atoms.begin(), a.atoms.begin() + i);
        if (i > 1) left.joins.assign(a.joins.begin(), a.joins.begin() + (i - 1));
        right.atoms.assign(a.atoms.begin() + i, a.atoms.end());
        if (i + 1 < n) right.joins.assign(a.joins.begin() + i, a.joins.end());
        add_term(out, {assemble(left), assemble(right)}, Rational(1));
    }
    return out;
}

Combo<Diagram> mul_eta_q(const Diagram& a, const Diagram& b, const QParam& qp) {
    if (a.empty() || b.empty()) {
        Combo<Diagram> out;
        out.emplace(a.empty() ? b : a, 1);
        return out;
    }
    auto fa = tensor_factorize(a);
    auto fb = tensor_factorize(b);
    Combo<Diagram> out;
    for_each_shuffle(fa.size(), fb.size(), [&](const std::vector<Side>& word) {
        // Mixed adjacencies may carry either connective; same-word
        // adjacencies are forced tensor joins.
        std::vector<std::size_t> mixed;
        for (std::size_t t = 0; t + 1 < word.size(); ++t) {
            if (word[t] != word[t + 1]) mixed.push_back(t);
        }
        for (std::size_t mask = 0; mask < (std::size_t{1} << mixed.size()); ++mask) {
            std::vector<Connective> joins(word.size() - 1, Connective::tensor);
            int n2 = 0, n3 = 0;
            for (std::size_t bit = 0; bit < mixed.size(); ++bit) {
                if (!((mask >> bit) & 1)) continue;
                std::size_t t = mixed[bit];
                joins[t] = Connective::bullet;
                if (word[t] == Side::left)
                    ++n2;  // bullet at a (left-word, right-word) adjacency
                else
                    ++n3;
            }
            std::size_t ia = 0, ib = 0;
            Diagram acc;
            for (std::size_t t = 0; t < word.size(); ++t) {
                const Diagram& letter = word[t] == Side::left ? fa[ia++] : fb[ib++];
                acc = t == 0 ? letter : join(joins[t - 1], acc, letter);
            }
            Rational coeff = sign_pow(n2 + n3) * pow_rational(-qp.q(), n2);
            add_term(out, acc, coeff);
        }
    });
    return out;
}

Combo<Diagram> mul_eta(const Diagram& a, const Diagram& b) {
    return mul_eta_q(a, b, QParam(Rational(1)));
}

Combo<Diagram> expand_L_in_M(const Diagram& d) {
    Combo<Diagram> out;
    for (const auto& sigma : refinements(d)) add_term(out, sigma, Rational(1));
    return out;
}

Combo<Diagram> expand_M_in_L(const Diagram& d) {
    Combo<Diagram> out;
    int ld = length(d);
    for (const auto& sigma : refinements(d)) add_term(out, sigma, sign_pow(length(sigma) - ld));
    return out;
}

Combo<Diagram> expand_ETAQ_in_M(const Diagram& d, const QParam& qp) {
    Combo<Diagram> out;
    for (const auto& sigma : coarsenings(d)) add_term(out, sigma, pow_rational(qp.r(), length(sigma)));
    return out;
}

Combo<Diagram> expand_M_in_ETAQ(const Diagram& d, const QParam& qp) {
    Combo<Diagram> out;
    int ld = length(d);
    Rational front = pow_rational(qp.r(), -ld);
    for (const auto& sigma : coarsenings(d)) add_term(out, sigma, front * sign_pow(ld - length(sigma)));
    return out;
}

namespace {

// Iterates over the whole similarity class of d: every reassignment of the
// connectives of its atom word. visit(rho, s_rho).
void for_each_similar(const Diagram& d, const std::function<void(const Diagram&, const std::set<int>&)>& visit) {
    auto a = atoms(d);
    int gaps = a.atoms.empty() ? 0 : static_cast<int>(a.atoms.size()) - 1;
    for (int mask = 0; mask < (1 << gaps); ++mask) {
        std::vector<int> positions;
        std::set<int> sset;
        for (int i = 0; i < gaps; ++i) {
            if ((mask >> i) & 1) {
                positions.push_back(i + 1);
                sset.insert(i + 1);
            }
        }
        visit(assemble_with_tensor_set(a, positions), sset);
    }
}

}  // namespace

Combo<Diagram> expand_ETAQ_in_L(const Diagram& d, const QParam& qp) {
    Combo<Diagram> out;
    if (d.empty()) {
        out.emplace(Diagram{}, 1);
        return out;
    }
    auto spi_vec = s_set(d);
    std::set<int> spi(spi_vec.begin(), spi_vec.end());
    for_each_similar(d, [&](const Diagram& rho, const std::set<int>& srho) {
        int diff = 0, inter = 0;
        for (int v : srho) {
            if (spi.count(v))
                ++inter;
            else
                ++diff;
        }
        add_term(out, rho, qp.r() * sign_pow(diff) * pow_rational(qp.q(), inter));
    });
    return out;
}

Combo<Diagram> expand_L_in_ETAQ(const Diagram& d, const QParam& qp) {
    Combo<Diagram> out;
    if (d.empty()) {
        out.emplace(Diagram{}, 1);
        return out;
    }
    int n = atom_count(d);
    auto spi_vec = s_set(d);
    std::set<int> spi(spi_vec.begin(), spi_vec.end());
    Rational front = pow_rational(qp.r(), -n);
    for_each_similar(d, [&](const Diagram& rho, const std::set<int>& srho) {
        int diff = 0;  // |S(pi) \ S(rho)|
        for (int v : spi) {
            if (!srho.count(v)) ++diff;
        }
        int outside = 0;  // |[n-1] \ (S(rho) u S(pi))|
        for (int v = 1; v <= n - 1; ++v) {
            if (!srho.count(v) && !spi.count(v)) ++outside;
        }
        add_term(out, rho, front * sign_pow(diff) * pow_rational(qp.q(), outside));
    });
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

DiagElement l_to_m(const DiagElement& x) {
    if (x.space != Space::parqsym || x.basis != Basis::L) throw InvariantError("l_to_m: expected ParQSym L basis");
    return convert_keywise(x, Basis::M, {}, expand_L_in_M);
}

DiagElement m_to_l(const DiagElement& x) {
    if (x.space != Space::parqsym || x.basis != Basis::M) throw InvariantError("m_to_l: expected ParQSym M basis");
    return convert_keywise(x, Basis::L, {}, expand_M_in_L);
}

DiagElement eta_q_to_m(const DiagElement& x) {
    if (x.space != Space::parqsym || x.basis != Basis::ETAQ)
        throw InvariantError("eta_q_to_m: expected ParQSym ETAQ basis");
    QParam qp(*x.q);
    return convert_keywise(x, Basis::M, {}, [&qp](const Diagram& d) { return expand_ETAQ_in_M(d, qp); });
}

DiagElement m_to_eta_q(const DiagElement& x, const QParam& qp) {
    if (x.space != Space::parqsym || x.basis != Basis::M)
        throw InvariantError("m_to_eta_q: expected ParQSym M basis");
    return convert_keywise(x, Basis::ETAQ, qp.q(), [&qp](const Diagram& d) { return expand_M_in_ETAQ(d, qp); });
}

DiagElement eta_q_to_l(const DiagElement& x) {
    if (x.space != Space::parqsym || x.basis != Basis::ETAQ)
        throw InvariantError("eta_q_to_l: expected ParQSym ETAQ basis");
    QParam qp(*x.q);
    return convert_keywise(x, Basis::L, {}, [&qp](const Diagram& d) { return expand_ETAQ_in_L(d, qp); });
}

DiagElement l_to_eta_q(const DiagElement& x, const QParam& qp) {
    if (x.space != Space::parqsym || x.basis != Basis::L)
        throw InvariantError("l_to_eta_q: expected ParQSym L basis");
    return convert_keywise(x, Basis::ETAQ, qp.q(), [&qp](const Diagram& d) { return expand_L_in_ETAQ(d, qp); });
}

namespace {

// The alternating grid sum behind the closed-form antipode. Entries of a
// k-by-r grid are indexed (i, s); the n non-empty entries, read with i
// major, are the factor sequence. Every i-group and every s-group must be
// non-empty. Each s-column is joined by bullet (in i order, reversed for
// the inverse antipode) and the columns by tensor; the term carries
// (-1)^k.
Combo<Diagram> grid_antipode(const Diagram& d, bool reversed) {
    Combo<Diagram> out;
    if (d.empty()) {
        out.emplace(Diagram{}, 1);
        return out;
    }
    auto factors = tensor_factorize(d);
    int n = static_cast<int>(factors.size());
    for (int k = 1; k <= n; ++k) {
        for (int r = 1; r <= n; ++r) {
            int cells = k * r;
            if (cells < n) continue;
            // Choose the n occupied cells in i-major order.
            std::vector<int> chosen(n);
            std::function<void(int, int)> rec = [&](int idx, int from) {
                if (idx == n) {
                    std::vector<bool> row_used(k, false), col_used(r, false);
                    for (int t = 0; t < n; ++t) {
                        row_used[chosen[t] / r] = true;
                        col_used[chosen[t] % r] = true;
                    }
                    for (int i = 0; i < k; ++i) {
                        if (!row_used[i]) return;
                    }
                    for (int s = 0; s < r; ++s) {
                        if (!col_used[s]) return;
                    }
                    // Assemble columns.
                    Diagram term;
                    for (int s = 0; s < r; ++s) {
                        Diagram column;
                        for (int i = 0; i < k; ++i) {
                            int row = reversed ? k - 1 - i : i;
                            for (int t = 0; t < n; ++t) {
                                if (chosen[t] == row * r + s) column = bullet(column, factors[t]);
                            }
                        }
                        term = tensor(term, column);
                    }
                    add_term(out, term, sign_pow(k));
                    return;
                }
                for (int cell = from; cell <= cells - (n - idx); ++cell) {
                    chosen[idx] = cell;
                    rec(idx + 1, cell + 1);
                }
            };
            rec(0, 0);
        }
    }
    return out;
}

}  // namespace

Combo<Diagram> antipode_M_explicit(const Diagram& d) {
    return grid_antipode(d, false);
}

Combo<Diagram> antipode_inverse_M_explicit(const Diagram& d) {
    return grid_antipode(d, true);
}

Rational zeta(const DiagElement& x) {
    if (x.space != Space::parqsym) throw InvariantError("zeta: expected a ParQSym element");
    const DiagElement* m = &x;
    DiagElement converted;
    if (x.basis != Basis::M) {
        if (x.basis == Basis::L)
            converted = l_to_m(x);
        else
            converted = eta_q_to_m(x);
        m = &converted;
    }
    Rational out = 0;
    for (const auto& [key, c] : m->terms) {
        if (tensor_irreducible(key)) out += c;
    }
    return out;
}

Rational extend_weight(const WeightFunction& f, const Diagram& pi, const Diagram& rho) {
    if (!refines(pi, rho)) throw InvariantError("extend_weight: first diagram must refine second");
    if (pi.empty()) return 1;
    auto api = atoms(pi);
    auto arho = atoms(rho);
    Rational out = 1;
    // Pieces of pi between consecutive tensor positions of rho.
    std::size_t start = 0;
    for (std::size_t i = 0; i <= arho.joins.size(); ++i) {
        bool boundary = i == arho.joins.size() || arho.joins[i] == Connective::tensor;
        if (!boundary) continue;
        AtomDecomposition piece{std::vector<Diagram>(api.atoms.begin() + start, api.atoms.begin() + i + 1),
                                std::vector<Connective>(api.joins.begin() + start,
                                                        api.joins.begin() + i)};
        out *= f.value(assemble(piece));
        start = i + 1;
    }
    return out;
}

DeconcatBasisPair deconcat_basis_pair(const WeightFunction& f, int max_order) {
    // Nonsingularity: f must not vanish on any non-empty tensor-irreducible
    // diagram within the bound.
    std::vector<Diagram> all;
    for (int k = 0; k <= max_order; ++k) {
        auto at_k = enumerate_diagrams(k);
        all.insert(all.end(), at_k.begin(), at_k.end());
    }
    for (const auto& d : all) {
        if (!d.empty() && tensor_irreducible(d) && f.value(d) == 0)
            throw InvariantError("deconcat_basis_pair: weight vanishes on the tensor-irreducible diagram " +
                                 d.text());
    }

    DeconcatBasisPair out;
    out.max_order = max_order;

    for (const auto& pi : all) {
        Combo<Diagram> fwd;
        for (const auto& rho : coarsenings(pi)) add_term(fwd, rho, extend_weight(f, pi, rho));
        out.forward.emplace(pi, std::move(fwd));
    }

    // Solve sum_{pi <= rho} f(pi, rho) g(rho) = [l(pi) = 1] triangularly,
    // coarsest (length 1) first.
    std::vector<Diagram> by_length(all.begin(), all.end());
    std::stable_sort(by_length.begin(), by_length.end(),
                     [](const Diagram& a, const Diagram& b) { return length(a) < length(b); });
    for (const auto& pi : by_length) {
        if (pi.empty()) continue;
        Rational rhs = length(pi) == 1 ? 1 : 0;
        Rational diag = extend_weight(f, pi, pi);
        for (const auto& rho : coarsenings(pi)) {
            if (rho == pi) continue;
            rhs -= extend_weight(f, pi, rho) * out.inverse_weight.at(rho);
        }
        out.inverse_weight.emplace(pi, rhs / diag);
    }

    // g(pi, rho) extends multiplicatively over the pieces of pi along rho.
    WeightFunction g{[&out](const Diagram& d) { return out.inverse_weight.at(d); }};
    for (const auto& pi : all) {
        Combo<Diagram> bwd;
        for (const auto& rho : coarsenings(pi)) add_term(bwd, rho, extend_weight(g, pi, rho));
        out.backward.emplace(pi, std::move(bwd));
    }
    return out;
}

}  // namespace parqsym
