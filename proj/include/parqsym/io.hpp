#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>

#include "parqsym/checks.hpp"
#include "parqsym/element.hpp"

namespace parqsym::io {

using json = nlohmann::ordered_json;

// Malformed textual or JSON input. The CLI maps this to exit code 2.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Compact block-list form, e.g. [[1],[2,-1],[-2]]. Any block and node
// order is accepted; the result is canonical.
Diagram parse_diagram_text(const std::string& text);

json diagram_to_json(const Diagram& d);        // {"order":k,"blocks":[[...]]}
Diagram diagram_from_json(const json& j);

json composition_to_json(const Composition& a);  // [2,1]
Composition composition_from_json(const json& j);

json element_to_json(const DiagElement& x);
json element_to_json(const CompElement& x);
DiagElement diag_element_from_json(const json& j);
CompElement comp_element_from_json(const json& j);

json tensor2_to_json(const DiagTensor2& t);
json tensor2_to_json(const CompTensor2& t);

json report_to_json(const CheckReport& r);

// Two-row picture: one label per node, blocks shown by shared labels.
std::string render_ascii(const Diagram& d);

}  // namespace parqsym::io
