#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "fpsl/fpsl.hpp"

namespace {

using namespace fpsl;

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    nlohmann::json j;
    in >> j;
    return j;
}

void print_graph(const BiTree& g, const std::string& format) {
    if (format == "dot")
        std::cout << to_dot(g);
    else
        std::cout << graph_to_json(g).dump(2) << "\n";
}

int cmd_normalize(const std::string& term, const std::string& format) {
    NormalForm nf = theta(parse_term(term));
    if (format == "text") {
        std::cout << nf.key << "\n";
        return 0;
    }
    print_graph(nf.graph, format);
    return 0;
}

int cmd_eq(const std::string& theory, const std::string& u_text, const std::string& v_text,
           int basis_n) {
    bool result;
    if (basis_n > 0) {
        BasisPair pair = family_pair(Family::A, basis_n);
        result = theory == "ps" ? equal_ps(pair.upper_word, pair.lower_word)
                                : equal_sps(pair.upper_word, pair.lower_word);
    } else {
        TermPtr u = parse_term(u_text), v = parse_term(v_text);
        result = theory == "ps" ? equal_ps(u, v) : equal_sps(u, v);
    }
    std::cout << (result ? "equal" : "not equal") << "\n";
    return result ? 0 : 1;
}

int cmd_order(const std::string& u_text, const std::string& v_text) {
    OrderRecord rec = compare(theta(parse_term(u_text)), theta(parse_term(v_text)));
    std::cout << "leq_r=" << rec.leq_r << " leq_l=" << rec.leq_l << " leq=" << rec.leq
              << " r_eq=" << rec.r_eq << " l_eq=" << rec.l_eq << "\n";
    return 0;
}

int cmd_class(const std::string& side, const std::string& term) {
    auto cls = enumerate_class(theta(parse_term(term)),
                               side == "r" ? GreenSide::R : GreenSide::L);
    std::cout << "size " << cls.size() << "\n";
    for (const auto& nf : cls) std::cout << nf.key << "\n";
    return 0;
}

int cmd_component(const std::string& term) {
    auto comp = enumerate_component(theta(parse_term(term)));
    std::cout << "size " << comp.size() << "\n";
    for (const auto& nf : comp) std::cout << nf.key << "\n";
    return 0;
}

int cmd_basis(const std::string& family, int n, const std::string& format) {
    Family f = family == "a"   ? Family::A
               : family == "c" ? Family::C
               : family == "m" ? Family::M
                               : Family::N;
    BasisPair pair = family_pair(f, n);
    std::cout << "upper: " << format_term(pair.upper_word) << "\n";
    std::cout << "lower: " << format_term(pair.lower_word) << "\n";
    if (format != "text") {
        print_graph(pair.upper.graph, format);
        print_graph(pair.lower.graph, format);
    }
    return 0;
}

int cmd_lambda(int n, int k, const std::string& format) {
    auto [graph, word] = lambda_witness(n, k);
    std::cout << format_term(word) << "\n";
    if (format != "text") print_graph(graph, format);
    return 0;
}

int cmd_axioms(const std::string& path) {
    FiniteAlgebra m = algebra_from_json(load_json(path));
    AxiomReport report = check_axioms(m);
    for (const auto& r : report.axioms) {
        std::cout << r.name << ": " << (r.holds ? "pass" : "fail");
        if (!r.holds) {
            std::cout << " at";
            for (const auto& [var, e] : r.counterexample)
                std::cout << " " << var << "=" << m.elements[e];
        }
        std::cout << "\n";
    }
    return report.all_pass() ? 0 : 1;
}

int cmd_model_eq(const std::string& path, const std::string& u_text,
                 const std::string& v_text) {
    FiniteAlgebra m = algebra_from_json(load_json(path));
    bool result = satisfies_identity(m, parse_term(u_text), parse_term(v_text));
    std::cout << (result ? "satisfied" : "not satisfied") << "\n";
    return result ? 0 : 1;
}

int cmd_render(const std::string& kind, const std::string& input, const std::string& format) {
    BiTree g = kind == "term" ? delta(parse_term(input)) : graph_from_json(load_json(input));
    print_graph(g, format);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bipartite-tree model of free pseudosemilattices"};
    app.require_subcommand(1);

    std::string term, term2, theory = "ps", side = "r", family = "a", path, kind;
    std::string format = "text";
    int n = 2, k = 1, basis_n = 0;

    auto* normalize = app.add_subcommand("normalize", "Print the reduced graph of a term");
    normalize->add_option("term", term)->required();
    normalize->add_option("--format", format)->check(CLI::IsMember({"text", "json", "dot"}));

    auto* eq = app.add_subcommand("eq", "Decide an identity (exit 0 = holds, 1 = fails)");
    eq->add_option("--theory", theory)->check(CLI::IsMember({"ps", "sps"}));
    eq->add_option("--basis", basis_n, "Self-test with the generated family-A pair");
    eq->add_option("u", term);
    eq->add_option("v", term2);

    auto* order = app.add_subcommand("order", "Compare two terms in the natural orders");
    order->add_option("u", term)->required();
    order->add_option("v", term2)->required();

    auto* cls = app.add_subcommand("class", "Enumerate the R- or L-class of a term");
    cls->add_option("--side", side)->check(CLI::IsMember({"r", "l"}));
    cls->add_option("term", term)->required();

    auto* component = app.add_subcommand("component", "Enumerate the connected component");
    component->add_option("term", term)->required();

    auto* basis = app.add_subcommand("basis", "Generate a covering-pair family member");
    basis->add_option("--family", family)->check(CLI::IsMember({"a", "c", "m", "n"}));
    basis->add_option("--n", n)->check(CLI::Range(2, 1000));
    basis->add_option("--format", format)->check(CLI::IsMember({"text", "json", "dot"}));

    auto* lambda = app.add_subcommand("lambda", "Generate the k-fold zig-zag witness");
    lambda->add_option("--n", n)->check(CLI::Range(1, 1000));
    lambda->add_option("--k", k)->check(CLI::Range(1, 1000));
    lambda->add_option("--format", format)->check(CLI::IsMember({"text", "json", "dot"}));

    auto* axioms = app.add_subcommand("axioms", "Check the five axioms on an algebra file");
    axioms->add_option("file", path)->required();

    auto* model_eq = app.add_subcommand("model-eq", "Check an identity in a finite algebra");
    model_eq->add_option("file", path)->required();
    model_eq->add_option("u", term)->required();
    model_eq->add_option("v", term2)->required();

    auto* render = app.add_subcommand("render", "Render a term or graph file");
    render->add_option("kind", kind)->required()->check(CLI::IsMember({"term", "graph"}));
    render->add_option("input", term)->required();
    render->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(normalize)) return cmd_normalize(term, format);
        if (app.got_subcommand(eq)) {
            if (basis_n == 0 && (term.empty() || term2.empty())) {
                std::cerr << "eq requires two terms or --basis N\n";
                return 2;
            }
            return cmd_eq(theory, term, term2, basis_n);
        }
        if (app.got_subcommand(order)) return cmd_order(term, term2);
        if (app.got_subcommand(cls)) return cmd_class(side, term);
        if (app.got_subcommand(component)) return cmd_component(term);
        if (app.got_subcommand(basis)) return cmd_basis(family, n, format);
        if (app.got_subcommand(lambda)) return cmd_lambda(n, k, format);
        if (app.got_subcommand(axioms)) return cmd_axioms(path);
        if (app.got_subcommand(model_eq)) return cmd_model_eq(path, term, term2);
        if (app.got_subcommand(render)) {
            if (format == "text") format = "dot";
            return cmd_render(kind, term, format);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
