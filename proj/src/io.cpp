#include "parqsym/io.hpp"

#include <cctype>
#include <sstream>

namespace parqsym::io {

namespace {

void skip_spaces(const std::string& s, std::size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

int parse_int(const std::string& s, std::size_t& i) {
    skip_spaces(s, i);
    std::size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw ParseError("expected an integer at position " + std::to_string(start));
    return std::stoi(s.substr(start, i - start));
}

void expect_char(const std::string& s, std::size_t& i, char c) {
    skip_spaces(s, i);
    if (i >= s.size() || s[i] != c)
        throw ParseError(std::string("expected '") + c + "' at position " + std::to_string(i));
    ++i;
}

Rational coeff_from_json(const json& j) {
    if (!j.is_string()) throw ParseError("coefficients must be strings like \"p/q\"");
    try {
        return rational_from_string(j.get<std::string>());
    } catch (const InvariantError& e) {
        throw ParseError(e.what());
    }
}

}  // namespace

Diagram parse_diagram_text(const std::string& text) {
    std::size_t i = 0;
    expect_char(text, i, '[');
    std::vector<std::vector<int>> blocks;
    skip_spaces(text, i);
    if (i < text.size() && text[i] == ']') {
        ++i;
    } else {
        for (;;) {
            expect_char(text, i, '[');
            std::vector<int> block;
            for (;;) {
                block.push_back(parse_int(text, i));
                skip_spaces(text, i);
                if (i < text.size() && text[i] == ',') {
                    ++i;
                    continue;
                }
                break;
            }
            expect_char(text, i, ']');
            blocks.push_back(std::move(block));
            skip_spaces(text, i);
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            break;
        }
        expect_char(text, i, ']');
    }
    skip_spaces(text, i);
    if (i != text.size()) throw ParseError("trailing characters after diagram");
    int order = 0;
    for (const auto& block : blocks) {
        for (int v : block) order = std::max(order, std::abs(v));
    }
    try {
        return Diagram::from_blocks(order, std::move(blocks));
    } catch (const InvariantError& e) {
        throw ParseError(e.what());
    }
}

json diagram_to_json(const Diagram& d) {
    json j;
    j["order"] = d.order();
    j["blocks"] = d.blocks();
    return j;
}

Diagram diagram_from_json(const json& j) {
    if (j.is_array()) {
        // Accept the compact block-list form embedded in JSON.
        std::vector<std::vector<int>> blocks;
        int order = 0;
        for (const auto& block : j) {
            if (!block.is_array()) throw ParseError("diagram blocks must be arrays");
            std::vector<int> b = block.get<std::vector<int>>();
            for (int v : b) order = std::max(order, std::abs(v));
            blocks.push_back(std::move(b));
        }
        try {
            return Diagram::from_blocks(order, std::move(blocks));
        } catch (const InvariantError& e) {
            throw ParseError(e.what());
        }
    }
    if (!j.is_object() || !j.contains("order") || !j.contains("blocks"))
        throw ParseError("diagram JSON needs \"order\" and \"blocks\"");
    try {
        return Diagram::from_blocks(j["order"].get<int>(), j["blocks"].get<std::vector<std::vector<int>>>());
    } catch (const InvariantError& e) {
        throw ParseError(e.what());
    }
}

json composition_to_json(const Composition& a) {
    return json(a.parts());
}

Composition composition_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("composition JSON must be an integer array");
    try {
        return Composition(j.get<std::vector<int>>());
    } catch (const InvariantError& e) {
        throw ParseError(e.what());
    }
}

namespace {

template <class Key, class KeyToJson>
json element_to_json_impl(const Element<Key>& x, KeyToJson&& key_to_json) {
    json j;
    j["space"] = space_name(x.space);
    j["basis"] = basis_name(x.basis);
    if (x.q) j["q"] = rational_to_string(*x.q);
    json terms = json::array();
    for (const auto& [key, c] : x.terms) {
        json t;
        t["coeff"] = rational_to_string(c);
        t["key"] = key_to_json(key);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

template <class Key, class KeyToJson>
json tensor2_to_json_impl(const Tensor2<Key>& x, KeyToJson&& key_to_json) {
    json j;
    j["space"] = space_name(x.space);
    j["basis"] = basis_name(x.basis);
    if (x.q) j["q"] = rational_to_string(*x.q);
    json terms = json::array();
    for (const auto& [ab, c] : x.terms) {
        json t;
        t["coeff"] = rational_to_string(c);
        t["left"] = key_to_json(ab.first);
        t["right"] = key_to_json(ab.second);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

}  // namespace

json element_to_json(const DiagElement& x) {
    return element_to_json_impl(x, diagram_to_json);
}

json element_to_json(const CompElement& x) {
    return element_to_json_impl(x, composition_to_json);
}

json tensor2_to_json(const DiagTensor2& t) {
    return tensor2_to_json_impl(t, diagram_to_json);
}

json tensor2_to_json(const CompTensor2& t) {
    return tensor2_to_json_impl(t, composition_to_json);
}

DiagElement diag_element_from_json(const json& j) {
    if (!j.is_object() || !j.contains("space") || !j.contains("basis") || !j.contains("terms"))
        throw ParseError("element JSON needs \"space\", \"basis\" and \"terms\"");
    try {
        Space space = space_from_name(j["space"].get<std::string>());
        Basis basis = basis_from_name(j["basis"].get<std::string>());
        std::optional<Rational> q;
        if (j.contains("q")) q = coeff_from_json(j["q"]);
        Combo<Diagram> terms;
        for (const auto& t : j["terms"]) {
            add_term(terms, diagram_from_json(t.at("key")), coeff_from_json(t.at("coeff")));
        }
        return make_diag_element(space, basis, std::move(q), std::move(terms));
    } catch (const InvariantError& e) {
        throw ParseError(e.what());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
}

CompElement comp_element_from_json(const json& j) {
    if (!j.is_object() || !j.contains("space") || !j.contains("terms"))
        throw ParseError("element JSON needs \"space\" and \"terms\"");
    try {
        Space space = space_from_name(j["space"].get<std::string>());
        Combo<Composition> terms;
        for (const auto& t : j["terms"]) {
            add_term(terms, composition_from_json(t.at("key")), coeff_from_json(t.at("coeff")));
        }
        return make_comp_element(space, std::move(terms));
    } catch (const InvariantError& e) {
        throw ParseError(e.what());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
}

json report_to_json(const CheckReport& r) {
    json j;
    j["suite"] = r.suite;
    j["max_order"] = r.max_order;
    json qs = json::array();
    for (const auto& q : r.q_values) qs.push_back(rational_to_string(q));
    j["q_values"] = std::move(qs);
    j["status"] = r.pass() ? "pass" : "fail";
    json ces = json::array();
    for (const auto& ce : r.counterexamples) {
        ces.push_back(json{{"inputs", ce.inputs}, {"offending", ce.offending}});
    }
    j["counterexamples"] = std::move(ces);
    json efs = json::array();
    for (const auto& ce : r.expected_failures) {
        efs.push_back(json{{"inputs", ce.inputs}, {"offending", ce.offending}});
    }
    j["expected_failures"] = std::move(efs);
    j["note"] = r.note;
    return j;
}

std::string render_ascii(const Diagram& d) {
    // One label per block, assigned in reading order (top row left to
    // right, then bottom row); two rows of labels.
    auto label = [](std::size_t index) {
        std::string out;
        ++index;  // bijective base 26: a..z, aa, ab, ...
        while (index > 0) {
            --index;
            out.insert(out.begin(), static_cast<char>('a' + index % 26));
            index /= 26;
        }
        return out;
    };
    std::vector<int> block_of(2 * d.order() + 1, -1);
    auto slot = [&d](int v) { return v > 0 ? v - 1 : d.order() + std::abs(v) - 1; };
    for (std::size_t b = 0; b < d.blocks().size(); ++b) {
        for (int v : d.blocks()[b]) block_of[slot(v)] = static_cast<int>(b);
    }
    std::vector<std::string> names(d.blocks().size());
    std::size_t next = 0;
    for (int s = 0; s < 2 * d.order(); ++s) {
        int b = block_of[s];
        if (b >= 0 && names[b].empty()) names[b] = label(next++);
    }
    std::vector<std::string> top(d.order()), bottom(d.order());
    for (std::size_t b = 0; b < d.blocks().size(); ++b) {
        for (int v : d.blocks()[b]) {
            (v > 0 ? top : bottom)[std::abs(v) - 1] = names[b];
        }
    }
    std::ostringstream os;
    for (int c = 0; c < d.order(); ++c) os << (c ? " " : "") << top[c];
    os << '\n';
    for (int c = 0; c < d.order(); ++c) os << (c ? " " : "") << bottom[c];
    os << '\n';
    return os.str();
}

}  // namespace parqsym::io
