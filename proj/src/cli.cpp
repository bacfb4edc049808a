#include "parqsym/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "parqsym/checks.hpp"
#include "parqsym/io.hpp"
#include "parqsym/morphisms.hpp"
#include "parqsym/ops.hpp"
#include "parqsym/suites.hpp"

namespace parqsym {

namespace {

using io::json;

// An --in argument is a file path when such a file exists, otherwise it is
// taken as inline text.
std::string read_input(const std::string& arg) {
    std::ifstream file(arg);
    if (file.good()) {
        std::ostringstream os;
        os << file.rdbuf();
        return os.str();
    }
    return arg;
}

bool is_diagram_space(Space s) {
    return s == Space::parsym || s == Space::parqsym;
}

// Parses an input as an element of the given space, accepting full element
// JSON, a bare diagram (JSON or compact text), or a bare composition.
DiagElement parse_diag_input(const std::string& text, Space space, Basis basis, std::optional<Rational> q) {
    std::string trimmed = text;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r\n"));
    trimmed.erase(trimmed.find_last_not_of(" \t\r\n") + 1);
    json j = json::parse(trimmed, nullptr, false);
    if (j.is_discarded()) throw io::ParseError("input is neither valid JSON nor a diagram literal: " + trimmed);
    if (j.is_object() && j.contains("space")) {
        DiagElement x = io::diag_element_from_json(j);
        if (x.space != space) throw io::ParseError("element space does not match --space");
        return x;
    }
    Diagram d = io::diagram_from_json(j);
    try {
        return basis_element(space, basis, d, std::move(q));
    } catch (const InvariantError& e) {
        throw io::ParseError(e.what());
    }
}

CompElement parse_comp_input(const std::string& text, Space space) {
    std::string trimmed = text;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r\n"));
    trimmed.erase(trimmed.find_last_not_of(" \t\r\n") + 1);
    json j = json::parse(trimmed, nullptr, false);
    if (j.is_discarded()) throw io::ParseError("input is not valid JSON: " + trimmed);
    if (j.is_object() && j.contains("space")) {
        CompElement x = io::comp_element_from_json(j);
        if (x.space != space) throw io::ParseError("element space does not match --space");
        return x;
    }
    return basis_element(space, io::composition_from_json(j));
}

std::vector<Rational> parse_q_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(rational_from_string(item));
    }
    if (out.empty()) throw InvariantError("empty q list");
    return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computer algebra for the Hopf algebras ParSym and ParQSym on partition diagrams"};
    app.require_subcommand(1);

    // enum
    auto* cmd_enum = app.add_subcommand("enum", "Enumerate partition diagrams of one order");
    int enum_order = 0;
    std::string enum_predicate;
    bool enum_allow_large = false;
    cmd_enum->add_option("--order", enum_order, "Diagram order")->required();
    cmd_enum->add_option("--predicate", enum_predicate,
                         "Filter: planar|propagation0|isolated_upper|matching|perfect_matching|permuting|"
                         "partial_permutation");
    cmd_enum->add_flag("--allow-large", enum_allow_large, "Allow orders beyond 4");

    // op
    auto* cmd_op = app.add_subcommand("op", "Apply a structure map");
    std::string op_verb, op_space = "parqsym", op_basis = "M", op_q;
    std::vector<std::string> op_inputs;
    cmd_op->add_option("verb", op_verb, "mul|comul|antipode|counit")->required();
    cmd_op->add_option("--space", op_space, "parsym|parqsym|qsym|nsym|sh");
    cmd_op->add_option("--basis", op_basis, "H|R|KQ|M|L|ETA|ETAQ|natural");
    cmd_op->add_option("--q", op_q, "q parameter, e.g. 1/2");
    cmd_op->add_option("--in", op_inputs, "Input element(s), file or inline")
        ->required()
        ->expected(1, 2)
        ->allow_extra_args(false);

    // convert
    auto* cmd_convert = app.add_subcommand("convert", "Change basis");
    std::string conv_from, conv_to, conv_q, conv_space = "parqsym";
    std::vector<std::string> conv_inputs;
    cmd_convert->add_option("--space", conv_space, "parsym|parqsym");
    cmd_convert->add_option("--from", conv_from, "Source basis")->required();
    cmd_convert->add_option("--to", conv_to, "Target basis")->required();
    cmd_convert->add_option("--q", conv_q, "Target q parameter when needed");
    cmd_convert->add_option("--in", conv_inputs, "Input element, file or inline")
        ->required()
        ->expected(1)
        ->allow_extra_args(false);

    // pair
    auto* cmd_pair = app.add_subcommand("pair", "Evaluate the duality pairing");
    std::string pair_left, pair_right;
    cmd_pair->add_option("--left", pair_left, "ParQSym element")->required();
    cmd_pair->add_option("--right", pair_right, "ParSym element")->required();

    // map
    auto* cmd_map = app.add_subcommand("map", "Apply a morphism");
    std::string map_name, map_in;
    cmd_map->add_option("--name", map_name, "psi-pq|phi|phi-ps")->required();
    cmd_map->add_option("--in", map_in, "Input element, file or inline")->required();

    // check
    auto* cmd_check = app.add_subcommand("check", "Run a verification suite");
    std::string check_suite = "all", check_q;
    int check_max_order = 3;
    bool check_allow_large = false;
    cmd_check->add_option("--suite", check_suite, "hopf|duality|bases|subalgebras|gradings|filtrations|all");
    cmd_check->add_option("--max-order", check_max_order, "Truncation order (default 3)");
    cmd_check->add_option("--q", check_q, "Comma-separated q values, default 1,2,-3,1/2");
    cmd_check->add_flag("--allow-large", check_allow_large, "Allow truncation orders beyond 4");

    // render
    auto* cmd_render = app.add_subcommand("render", "Draw a diagram as two rows of block labels");
    std::string render_in;
    cmd_render->add_option("--in", render_in, "Diagram, file or inline")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);

        if (cmd_enum->parsed()) {
            if (enum_order > 4 && !enum_allow_large)
                throw InvariantError("order > 4 needs --allow-large (Bell(2k) grows fast)");
            if (enum_order < 0) throw InvariantError("order must be non-negative");
            std::optional<DiagramPredicate> predicate;
            if (!enum_predicate.empty()) {
                try {
                    predicate = predicate_from_name(enum_predicate);
                } catch (const InvariantError& e) {
                    throw io::ParseError(e.what());
                }
            }
            std::size_t count = 0;
            for (const auto& d : enumerate_diagrams(enum_order)) {
                if (predicate && !eval_predicate(*predicate, d)) continue;
                out << io::diagram_to_json(d).dump() << "\n";
                ++count;
            }
            out << json{{"count", count}}.dump() << "\n";
            return 0;
        }

        if (cmd_op->parsed()) {
            Space space = space_from_name(op_space);
            Basis basis = basis_from_name(op_basis);
            std::optional<Rational> q;
            if (!op_q.empty()) q = rational_from_string(op_q);
            if ((op_verb == "mul") != (op_inputs.size() == 2))
                throw io::ParseError("mul takes two inputs, the other verbs take one");
            if (is_diagram_space(space)) {
                DiagElement x = parse_diag_input(read_input(op_inputs[0]), space, basis, q);
                if (op_verb == "mul") {
                    DiagElement y = parse_diag_input(read_input(op_inputs[1]), space, basis, q);
                    out << io::element_to_json(product(x, y)).dump(2) << "\n";
                } else if (op_verb == "comul") {
                    out << io::tensor2_to_json(coproduct(x)).dump(2) << "\n";
                } else if (op_verb == "antipode") {
                    out << io::element_to_json(antipode(x)).dump(2) << "\n";
                } else if (op_verb == "counit") {
                    out << rational_to_string(counit(x)) << "\n";
                } else {
                    throw io::ParseError("unknown op verb: " + op_verb);
                }
            } else {
                CompElement x = parse_comp_input(read_input(op_inputs[0]), space);
                if (op_verb == "mul") {
                    CompElement y = parse_comp_input(read_input(op_inputs[1]), space);
                    out << io::element_to_json(product(x, y)).dump(2) << "\n";
                } else if (op_verb == "comul") {
                    out << io::tensor2_to_json(coproduct(x)).dump(2) << "\n";
                } else if (op_verb == "antipode") {
                    out << io::element_to_json(antipode(x)).dump(2) << "\n";
                } else if (op_verb == "counit") {
                    out << rational_to_string(counit(x)) << "\n";
                } else {
                    throw io::ParseError("unknown op verb: " + op_verb);
                }
            }
            return 0;
        }

        if (cmd_convert->parsed()) {
            Space space = space_from_name(conv_space);
            if (!is_diagram_space(space)) throw InvariantError("convert applies to the diagram spaces");
            Basis from = basis_from_name(conv_from);
            Basis to = basis_from_name(conv_to);
            std::optional<Rational> source_q;
            std::optional<Rational> target_q;
            if (!conv_q.empty()) target_q = rational_from_string(conv_q);
            if (basis_requires_q(from) && from != Basis::ETA) {
                // The source q must come with the element JSON; a bare key
                // uses --q for both sides.
                source_q = target_q;
            }
            DiagElement x = parse_diag_input(read_input(conv_inputs[0]), space, from, source_q);
            out << io::element_to_json(convert(x, to, target_q)).dump(2) << "\n";
            return 0;
        }

        if (cmd_pair->parsed()) {
            DiagElement left = parse_diag_input(read_input(pair_left), Space::parqsym, Basis::M, {});
            DiagElement right = parse_diag_input(read_input(pair_right), Space::parsym, Basis::H, {});
            out << rational_to_string(pair(left, right)) << "\n";
            return 0;
        }

        if (cmd_map->parsed()) {
            std::string text = read_input(map_in);
            if (map_name == "psi-pq") {
                out << io::element_to_json(psi_pq(parse_diag_input(text, Space::parqsym, Basis::M, {}))).dump(2)
                    << "\n";
            } else if (map_name == "phi") {
                out << io::element_to_json(phi(parse_comp_input(text, Space::nsym))).dump(2) << "\n";
            } else if (map_name == "phi-ps") {
                out << io::element_to_json(phi_ps(parse_diag_input(text, Space::parqsym, Basis::M, {}))).dump(2)
                    << "\n";
            } else {
                throw io::ParseError("unknown map: " + map_name);
            }
            return 0;
        }

        if (cmd_check->parsed()) {
            if (check_max_order > 4 && !check_allow_large)
                throw InvariantError("max order > 4 needs --allow-large");
            SuiteOptions opt;
            opt.max_order = check_max_order;
            if (!check_q.empty()) opt.q_values = parse_q_list(check_q);
            const std::vector<std::string> known = {"hopf",      "duality",  "bases", "subalgebras",
                                                    "gradings", "filtrations", "all"};
            if (std::find(known.begin(), known.end(), check_suite) == known.end())
                throw io::ParseError("unknown suite: " + check_suite);
            auto reports = run_suite(check_suite, opt);
            bool all_pass = true;
            json body = json::array();
            for (const auto& r : reports) {
                all_pass = all_pass && r.pass();
                body.push_back(io::report_to_json(r));
            }
            out << json{{"reports", body}, {"pass", all_pass}}.dump(2) << "\n";
            return all_pass ? 0 : 1;
        }

        if (cmd_render->parsed()) {
            std::string text = read_input(render_in);
            json j = json::parse(text, nullptr, false);
            Diagram d;
            if (!j.is_discarded() && (j.is_array() || j.is_object())) {
                if (j.is_object() && j.contains("space")) {
                    DiagElement x = io::diag_element_from_json(j);
                    if (x.terms.size() != 1) throw InvariantError("render expects a single diagram");
                    d = x.terms.begin()->first;
                } else {
                    d = io::diagram_from_json(j);
                }
            } else {
                d = io::parse_diagram_text(text);
            }
            out << io::render_ascii(d);
            return 0;
        }

        err << "no subcommand given\n";
        return 2;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const io::ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const InvariantError& e) {
        err << "invariant violation: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace parqsym
