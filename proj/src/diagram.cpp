#include "parqsym/diagram.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

namespace parqsym {

bool node_less(int a, int b) {
    int ca = std::abs(a), cb = std::abs(b);
    if (ca != cb) return ca < cb;
    return a > b;  // top (+c) before bottom (-c)
}

namespace {

bool block_less(const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), node_less);
}

// Shifts every node of b by delta columns.
std::vector<std::vector<int>> shift_blocks(const std::vector<std::vector<int>>& blocks, int delta) {
    std::vector<std::vector<int>> out = blocks;
    for (auto& block : out) {
        for (int& v : block) v = v > 0 ? v + delta : v - delta;
    }
    return out;
}

int column_of(int v) {
    return std::abs(v);
}

}  // namespace

Diagram Diagram::from_blocks(int order, std::vector<std::vector<int>> blocks) {
    if (order < 0) throw InvariantError("diagram order must be non-negative");
    std::set<int> seen;
    for (auto& block : blocks) {
        if (block.empty()) throw InvariantError("empty block");
        for (int v : block) {
            if (v == 0 || std::abs(v) > order)
                throw InvariantError("node column out of range: " + std::to_string(v));
            if (!seen.insert(v).second) throw InvariantError("overlapping blocks at node " + std::to_string(v));
        }
    }
    if (static_cast<int>(seen.size()) != 2 * order) throw InvariantError("blocks do not cover all nodes");
    for (auto& block : blocks) std::sort(block.begin(), block.end(), node_less);
    std::sort(blocks.begin(), blocks.end(), block_less);
    Diagram d;
    d.order_ = order;
    d.blocks_ = std::move(blocks);
    return d;
}

bool Diagram::operator<(const Diagram& rhs) const {
    if (order_ != rhs.order_) return order_ < rhs.order_;
    return std::lexicographical_compare(blocks_.begin(), blocks_.end(), rhs.blocks_.begin(), rhs.blocks_.end(),
                                        block_less);
}

std::string Diagram::text() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i) os << ',';
        os << '[';
        for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
            if (j) os << ',';
            os << blocks_[i][j];
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

Diagram tensor(const Diagram& a, const Diagram& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    std::vector<std::vector<int>> blocks = a.blocks();
    auto shifted = shift_blocks(b.blocks(), a.order());
    blocks.insert(blocks.end(), shifted.begin(), shifted.end());
    return Diagram::from_blocks(a.order() + b.order(), std::move(blocks));
}

Diagram bullet(const Diagram& a, const Diagram& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    int k = a.order();
    Diagram t = tensor(a, b);
    // Merge the blocks containing bottom nodes k and k+1.
    std::vector<std::vector<int>> blocks;
    std::vector<int> merged;
    for (const auto& block : t.blocks()) {
        bool hit = std::find(block.begin(), block.end(), -k) != block.end() ||
                   std::find(block.begin(), block.end(), -(k + 1)) != block.end();
        if (hit)
            merged.insert(merged.end(), block.begin(), block.end());
        else
            blocks.push_back(block);
    }
    blocks.push_back(std::move(merged));
    return Diagram::from_blocks(t.order(), std::move(blocks));
}

Diagram join(Connective c, const Diagram& a, const Diagram& b) {
    return c == Connective::tensor ? tensor(a, b) : bullet(a, b);
}

namespace {

// Blocks of d crossing the column cut at i (nodes on both sides).
std::vector<std::size_t> crossing_blocks(const Diagram& d, int i) {
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < d.blocks().size(); ++b) {
        bool left = false, right = false;
        for (int v : d.blocks()[b]) (column_of(v) <= i ? left : right) = true;
        if (left && right) out.push_back(b);
    }
    return out;
}

bool block_contains(const std::vector<int>& block, int v) {
    return std::find(block.begin(), block.end(), v) != block.end();
}

}  // namespace

std::vector<int> tensor_cuts(const Diagram& d) {
    std::vector<int> out;
    for (int i = 1; i < d.order(); ++i) {
        if (crossing_blocks(d, i).empty()) out.push_back(i);
    }
    return out;
}

std::vector<int> bullet_cuts(const Diagram& d) {
    std::vector<int> out;
    for (int i = 1; i < d.order(); ++i) {
        auto crossing = crossing_blocks(d, i);
        if (crossing.size() != 1) continue;
        const auto& block = d.blocks()[crossing.front()];
        if (block_contains(block, -i) && block_contains(block, -(i + 1))) out.push_back(i);
    }
    return out;
}

bool tensor_irreducible(const Diagram& d) {
    return tensor_cuts(d).empty();
}

namespace {

// Splits d at column i assuming no block crosses except possibly the one
// handled by the caller; blocks entirely on the right are relabeled.
std::pair<Diagram, Diagram> split_by_side(const Diagram& d, int i, const std::vector<std::vector<int>>& extra_left,
                                          const std::vector<std::vector<int>>& extra_right,
                                          const std::vector<std::size_t>& skip) {
    std::vector<std::vector<int>> left = extra_left, right = extra_right;
    for (std::size_t b = 0; b < d.blocks().size(); ++b) {
        if (std::find(skip.begin(), skip.end(), b) != skip.end()) continue;
        const auto& block = d.blocks()[b];
        if (column_of(block.front()) <= i)
            left.push_back(block);
        else
            right.push_back(block);
    }
    for (auto& block : right) {
        for (int& v : block) v = v > 0 ? v - i : v + i;
    }
    return {Diagram::from_blocks(i, std::move(left)), Diagram::from_blocks(d.order() - i, std::move(right))};
}

}  // namespace

std::pair<Diagram, Diagram> tensor_split(const Diagram& d, int i) {
    if (i < 1 || i >= d.order() || !crossing_blocks(d, i).empty())
        throw InvariantError("tensor_split: not a tensor cut");
    return split_by_side(d, i, {}, {}, {});
}

std::pair<Diagram, Diagram> bullet_split(const Diagram& d, int i) {
    auto crossing = crossing_blocks(d, i);
    if (crossing.size() != 1) throw InvariantError("bullet_split: not a bullet cut");
    const auto& block = d.blocks()[crossing.front()];
    if (!block_contains(block, -i) || !block_contains(block, -(i + 1)))
        throw InvariantError("bullet_split: not a bullet cut");
    std::vector<int> half_left, half_right;
    for (int v : block) (column_of(v) <= i ? half_left : half_right).push_back(v);
    return split_by_side(d, i, {half_left}, {half_right}, crossing);
}

std::vector<Diagram> tensor_factorize(const Diagram& d) {
    std::vector<Diagram> out;
    if (d.empty()) return out;
    Diagram rest = d;
    for (;;) {
        auto cuts = tensor_cuts(rest);
        if (cuts.empty()) {
            out.push_back(rest);
            return out;
        }
        auto [head, tail] = tensor_split(rest, cuts.front());
        out.push_back(head);
        rest = tail;
    }
}

AtomDecomposition atoms(const Diagram& d) {
    AtomDecomposition out;
    auto factors = tensor_factorize(d);
    for (std::size_t f = 0; f < factors.size(); ++f) {
        if (f) out.joins.push_back(Connective::tensor);
        Diagram rest = factors[f];
        for (;;) {
            auto cuts = bullet_cuts(rest);
            if (cuts.empty()) {
                out.atoms.push_back(rest);
                break;
            }
            auto [head, tail] = bullet_split(rest, cuts.front());
            out.atoms.push_back(head);
            out.joins.push_back(Connective::bullet);
            rest = tail;
        }
    }
    return out;
}

Diagram assemble(const AtomDecomposition& a) {
    if (a.atoms.empty()) return Diagram{};
    if (a.joins.size() + 1 != a.atoms.size()) throw InvariantError("assemble: connective count mismatch");
    Diagram acc = a.atoms.front();
    if (acc.empty()) throw InvariantError("assemble: empty atom");
    for (std::size_t i = 1; i < a.atoms.size(); ++i) {
        if (a.atoms[i].empty()) throw InvariantError("assemble: empty atom");
        acc = join(a.joins[i - 1], acc, a.atoms[i]);
    }
    return acc;
}

Diagram assemble_with_tensor_set(const AtomDecomposition& a, const std::vector<int>& tensor_positions) {
    AtomDecomposition copy = a;
    for (std::size_t i = 0; i < copy.joins.size(); ++i) {
        bool is_tensor = std::find(tensor_positions.begin(), tensor_positions.end(), static_cast<int>(i) + 1) !=
                         tensor_positions.end();
        copy.joins[i] = is_tensor ? Connective::tensor : Connective::bullet;
    }
    return assemble(copy);
}

int length(const Diagram& d) {
    if (d.empty()) return 0;
    return static_cast<int>(tensor_cuts(d).size()) + 1;
}

std::vector<int> s_set(const Diagram& d) {
    std::vector<int> out;
    auto a = atoms(d);
    for (std::size_t i = 0; i < a.joins.size(); ++i) {
        if (a.joins[i] == Connective::tensor) out.push_back(static_cast<int>(i) + 1);
    }
    return out;
}

int atom_count(const Diagram& d) {
    return static_cast<int>(atoms(d).atoms.size());
}

bool similar(const Diagram& a, const Diagram& b) {
    return atoms(a).atoms == atoms(b).atoms;
}

bool refines(const Diagram& a, const Diagram& b) {
    auto da = atoms(a), db = atoms(b);
    if (da.atoms != db.atoms) return false;
    for (std::size_t i = 0; i < da.joins.size(); ++i) {
        if (db.joins[i] == Connective::tensor && da.joins[i] != Connective::tensor) return false;
    }
    return true;
}

namespace {

std::vector<Diagram> flip_positions(const Diagram& d, Connective flip_from) {
    auto a = atoms(d);
    std::vector<int> flippable;
    for (std::size_t i = 0; i < a.joins.size(); ++i) {
        if (a.joins[i] == flip_from) flippable.push_back(static_cast<int>(i) + 1);
    }
    std::vector<int> base;
    for (std::size_t i = 0; i < a.joins.size(); ++i) {
        if (a.joins[i] == Connective::tensor && flip_from != Connective::tensor)
            base.push_back(static_cast<int>(i) + 1);
    }
    std::vector<Diagram> out;
    int n = static_cast<int>(flippable.size());
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> tensor_positions = base;
        for (int i = 0; i < n; ++i) {
            bool flipped = (mask >> i) & 1;
            bool tensor_here = (flip_from == Connective::tensor) ? !flipped : flipped;
            if (tensor_here) tensor_positions.push_back(flippable[i]);
        }
        out.push_back(assemble_with_tensor_set(a, tensor_positions));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<Diagram> coarsenings(const Diagram& d) {
    return flip_positions(d, Connective::tensor);
}

std::vector<Diagram> refinements(const Diagram& d) {
    return flip_positions(d, Connective::bullet);
}

std::vector<Diagram> enumerate_diagrams(int k) {
    if (k < 0) throw InvariantError("enumerate_diagrams: negative order");
    // Nodes in canonical node order.
    std::vector<int> nodes;
    for (int c = 1; c <= k; ++c) {
        nodes.push_back(c);
        nodes.push_back(-c);
    }
    std::vector<Diagram> out;
    int n = static_cast<int>(nodes.size());
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    // Restricted growth strings: a[0] = 0, a[i] <= max(a[0..i-1]) + 1.
    std::vector<int> a(n, 0);
    for (;;) {
        int m = 0;
        for (int i = 0; i < n; ++i) m = std::max(m, a[i] + 1);
        std::vector<std::vector<int>> blocks(m);
        for (int i = 0; i < n; ++i) blocks[a[i]].push_back(nodes[i]);
        out.push_back(Diagram::from_blocks(k, std::move(blocks)));
        // Next RGS.
        int i = n - 1;
        while (i > 0) {
            int cap = 0;
            for (int j = 0; j < i; ++j) cap = std::max(cap, a[j] + 1);
            if (a[i] < cap) {
                ++a[i];
                break;
            }
            a[i] = 0;
            --i;
        }
        if (i == 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_planar(const Diagram& d) {
    int k = d.order();
    // Boundary cycle positions: top c -> c-1, bottom c -> 2k-c.
    auto pos = [k](int v) { return v > 0 ? v - 1 : 2 * k + v; };
    const auto& blocks = d.blocks();
    for (std::size_t b1 = 0; b1 < blocks.size(); ++b1) {
        for (std::size_t b2 = b1 + 1; b2 < blocks.size(); ++b2) {
            std::vector<int> p1, p2;
            for (int v : blocks[b1]) p1.push_back(pos(v));
            for (int v : blocks[b2]) p2.push_back(pos(v));
            std::sort(p1.begin(), p1.end());
            std::sort(p2.begin(), p2.end());
            for (std::size_t i = 0; i + 1 < p1.size(); ++i) {
                for (std::size_t j = i + 1; j < p1.size(); ++j) {
                    for (int q : p2) {
                        if (p1[i] < q && q < p1[j]) {
                            // b2 has a node strictly between two nodes of b1;
                            // crossing iff it also has one outside.
                            for (int q2 : p2) {
                                if (q2 < p1[i] || q2 > p1[j]) return false;
                            }
                        }
                    }
                }
            }
        }
    }
    return true;
}

int propagation_number(const Diagram& d) {
    int count = 0;
    for (const auto& block : d.blocks()) {
        bool top = false, bottom = false;
        for (int v : block) (v > 0 ? top : bottom) = true;
        if (top && bottom) ++count;
    }
    return count;
}

DiagramClass classify(const Diagram& d) {
    DiagramClass out{true, true, true, true, true};
    for (const auto& block : d.blocks()) {
        std::size_t size = block.size();
        bool top = false, bottom = false;
        for (int v : block) (v > 0 ? top : bottom) = true;
        bool propagating = top && bottom;
        if (size > 2) out.matching = false;
        if (size != 2) {
            out.perfect_matching = false;
            out.permuting = false;
        }
        if (size == 2 && !propagating) out.permuting = false;
        if (size > 2 || (size == 2 && !propagating)) out.partial_permutation = false;
        if (top && size > 1) out.isolated_upper = false;
    }
    return out;
}

Diagram pi_line(int n) {
    if (n < 0) throw InvariantError("pi_line: negative order");
    if (n == 0) return Diagram{};
    std::vector<std::vector<int>> blocks;
    std::vector<int> bottoms;
    for (int c = 1; c <= n; ++c) {
        blocks.push_back({c});
        bottoms.push_back(-c);
    }
    blocks.push_back(std::move(bottoms));
    return Diagram::from_blocks(n, std::move(blocks));
}

Diagram pi_of_composition(const Composition& alpha) {
    Diagram out;
    for (int part : alpha.parts()) out = tensor(out, pi_line(part));
    return out;
}

Composition alpha_of(const Diagram& d) {
    std::vector<int> parts;
    for (const auto& f : tensor_factorize(d)) parts.push_back(f.order());
    return Composition(std::move(parts));
}

}  // namespace parqsym
