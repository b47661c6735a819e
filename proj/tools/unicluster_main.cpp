#include "unicluster/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace uc = unicluster;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;

uc::Word parse_word_or_throw(const std::string& text) {
    auto w = uc::Word::parse(text);
    if (!w)
        throw CLI::ValidationError("--word", "'" + text + "' is not a reduced word for the longest element");
    return *w;
}

std::vector<uc::CatalogId> parse_id_list(const std::string& text) {
    std::vector<uc::CatalogId> ids;
    std::string token;
    std::istringstream is(text);
    while (std::getline(is, token, ',')) {
        auto id = uc::catalog_id_from_string(token);
        if (!id) throw CLI::ValidationError("--object", "unknown module id '" + token + "'");
        ids.push_back(*id);
    }
    return ids;
}

void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
}

std::string sequence_line(const std::string& left, const std::vector<uc::CatalogId>& middle,
                          const std::string& right) {
    std::string mid;
    for (size_t i = 0; i < middle.size(); ++i) mid += (i ? " + " : "") + uc::to_string(middle[i]);
    if (middle.empty()) mid = "0";
    return "0 -> " + left + " -> " + mid + " -> " + right + " -> 0";
}

int cmd_catalog(bool json, const uc::Word& word) {
    std::cout << (json ? uc::catalog_to_json(word) : uc::catalog_to_text(word));
    return kExitOk;
}

int cmd_char(const std::string& module_id, const std::string& file, const uc::Word& word) {
    uc::Rep rep = uc::Rep::zero_rep(uc::Field::rationals());
    if (!module_id.empty()) {
        auto id = uc::catalog_id_from_string(module_id);
        if (!id) {
            std::cerr << "error: unknown module id '" << module_id << "'\n";
            return kExitUsage;
        }
        rep = uc::catalog_rep(*id);
    } else {
        std::ifstream in(file);
        if (!in) {
            std::cerr << "error: cannot read '" << file << "'\n";
            return kExitUsage;
        }
        rep = uc::parse_rep(in);
        if (!uc::validate(rep)) {
            std::cerr << "error: module in '" << file << "' violates the preprojective relations\n";
            return kExitUsage;
        }
        std::cout << "relations: ok\n";
    }
    std::vector<uc::CatalogId> parts = uc::decompose(rep);
    std::cout << "decomposition:";
    if (parts.empty()) std::cout << " 0";
    for (uc::CatalogId p : parts) std::cout << " " << uc::to_string(p);
    std::cout << "\n";
    uc::CharPoly phi = uc::cluster_char(rep, word);
    std::cout << "character: " << phi.poly.to_string() << "\n";
    std::string minors;
    for (size_t i = 0; i < parts.size(); ++i)
        minors += (i ? "*" : "") + uc::catalog_minor(parts[i]).to_string();
    if (!parts.empty()) std::cout << "minor: " << minors << "\n";
    return kExitOk;
}

int cmd_graph(const std::string& dot_path, const std::string& json_path) {
    uc::ExchangeGraph g = uc::exchange_graph(uc::RigidObject::initial());
    if (!dot_path.empty()) write_output(dot_path, uc::graph_to_dot(g));
    if (!json_path.empty()) write_output(json_path, uc::graph_to_json(g));
    if (dot_path.empty() && json_path.empty()) {
        std::cout << g.vertices.size() << " vertices, " << g.edges.size() << " edges\n";
        for (size_t i = 0; i < g.vertices.size(); ++i)
            std::cout << "v" << i << ": " << uc::vertex_label(g.vertices[i]) << "\n";
        for (const auto& e : g.edges)
            std::cout << "v" << e.a << " -- v" << e.b << "  (" << uc::to_string(e.removed) << " <-> "
                      << uc::to_string(e.added) << ")\n";
    }
    return kExitOk;
}

int cmd_mutate(const std::string& object_spec, const std::string& slot_spec, bool matrices) {
    std::vector<uc::CatalogId> ids = parse_id_list(object_spec);
    auto slot = uc::catalog_id_from_string(slot_spec);
    if (!slot) {
        std::cerr << "error: unknown module id '" << slot_spec << "'\n";
        return kExitUsage;
    }
    uc::RigidObject object(ids);
    uc::MutationResult m = uc::mutate(object, *slot);
    std::cout << "object:  " << object.to_string() << "\n";
    std::cout << "mutated: " << m.object.to_string() << "  (" << uc::to_string(m.removed) << " -> "
              << uc::to_string(m.added) << ")\n";
    std::cout << sequence_line(uc::to_string(m.removed), m.middle_out, uc::to_string(m.added)) << "\n";
    std::cout << sequence_line(uc::to_string(m.added), m.middle_in, uc::to_string(m.removed)) << "\n";
    if (matrices) {
        auto dump = [](const char* title, const uc::RepMap& f) {
            std::cout << title << "\n";
            for (int v = 1; v <= 3; ++v) {
                std::cout << "  vertex " << v << ":\n";
                std::string body = f.at_vertex(v).to_string();
                std::istringstream is(body);
                std::string line;
                while (std::getline(is, line)) std::cout << "    " << line << "\n";
            }
        };
        dump("approximation map:", m.out_seq.left);
        dump("cokernel projection:", m.out_seq.right);
    }
    return kExitOk;
}

int cmd_positivity(const std::string& path, const std::string& criterion) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot read '" << path << "'\n";
        return kExitUsage;
    }
    uc::RatUniMat m = uc::parse_matrix(in);
    const auto& specs = criterion == "six" ? uc::criterion_six_minors() : uc::nontrivial_minors();
    bool positive = true;
    for (const auto& spec : specs) {
        uc::Rational value = uc::minor(m, spec);
        if (!(value > 0)) {
            positive = false;
            std::cout << "minor " << spec.to_string() << " = " << uc::rational_to_string(value) << " <= 0\n";
            break;
        }
    }
    std::cout << (criterion == "six" ? "six-minor criterion: " : "totally positive: ") << (positive ? "yes" : "no")
              << "\n";
    return kExitOk;
}

int cmd_fold(bool graph, const std::string& dot_path, const std::string& json_path) {
    uc::FoldedGraph g = uc::stable_exchange_graph();
    if (!dot_path.empty()) write_output(dot_path, uc::folded_to_dot(g));
    if (!json_path.empty()) write_output(json_path, uc::folded_to_json(g));
    if (graph && dot_path.empty() && json_path.empty()) {
        std::cout << g.vertices.size() << " stable vertices, " << g.edges.size() << " folded edges\n";
        for (size_t i = 0; i < g.vertices.size(); ++i)
            std::cout << "v" << i << ": " << uc::vertex_label(g.vertices[i]) << "  ["
                      << uc::folded_vertex_label(g.vertices[i]) << "]\n";
        for (const auto& e : g.edges)
            std::cout << "v" << e.a << " -- v" << e.b << "  (slot " << e.slot << ")\n";
    } else if (!graph && dot_path.empty() && json_path.empty()) {
        for (const auto& v : g.vertices) std::cout << uc::folded_vertex_label(v) << "\n";
    }
    return kExitOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed) {
    std::vector<uc::CheckResult> results = uc::run_suite(suite, seed);
    bool all_pass = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << r.criterion << ": " << r.name;
        if (!r.pass) std::cout << " -- " << r.detail;
        std::cout << "\n";
        all_pass = all_pass && r.pass;
    }
    return all_pass ? kExitOk : kExitFalsified;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cluster-structure computations for unitriangular 4x4 matrices"};
    app.require_subcommand(1);
    // Unknown flags must be hard errors.
    app.allow_extras(false);

    std::string word_text = "213213";

    auto* catalog = app.add_subcommand("catalog", "the twelve indecomposables with minors and characters");
    bool catalog_json = false;
    catalog->add_flag("--json", catalog_json, "emit JSON");
    catalog->add_option("--word", word_text, "parametrization word")->capture_default_str();

    auto* chr = app.add_subcommand("char", "cluster character of a module");
    std::string module_id, module_file;
    auto* mod_opt = chr->add_option("--module", module_id, "catalog id (e.g. S1)");
    auto* file_opt = chr->add_option("--file", module_file, "module-definition file");
    mod_opt->excludes(file_opt);
    chr->add_option("--word", word_text, "parametrization word")->capture_default_str();

    auto* graph = app.add_subcommand("graph", "exchange graph of maximal rigid objects");
    std::string dot_path, json_path;
    graph->add_option("--dot", dot_path, "write DOT to file ('-' for stdout)");
    graph->add_option("--json", json_path, "write JSON to file ('-' for stdout)");

    auto* mut = app.add_subcommand("mutate", "mutate a basic maximal rigid object");
    std::string object_spec, slot_spec;
    mut->add_option("--object", object_spec, "comma-separated summand ids")->required();
    mut->add_option("--slot", slot_spec, "non-projective summand to mutate")->required();
    bool matrices = false;
    mut->add_flag("--matrices", matrices, "print the approximation matrices");

    auto* pos = app.add_subcommand("positivity", "test total positivity of a rational matrix");
    std::string matrix_path, criterion = "twelve";
    pos->add_option("--matrix", matrix_path, "4x4 unitriangular matrix file")->required();
    pos->add_option("--criterion", criterion, "six|twelve")
        ->check(CLI::IsMember({"six", "twelve"}))
        ->capture_default_str();

    auto* fold = app.add_subcommand("fold", "stable objects and the folded hexagon");
    bool fold_graph = false;
    fold->add_flag("--graph", fold_graph, "print the folded exchange graph");
    std::string fold_dot, fold_json;
    fold->add_option("--dot", fold_dot, "write DOT to file ('-' for stdout)");
    fold->add_option("--json", fold_json, "write JSON to file ('-' for stdout)");

    auto* ver = app.add_subcommand("verify", "run verification suites");
    std::string suite = "all";
    std::uint64_t seed = uc::kDefaultSeed;
    ver->add_option("--suite", suite, "ext|char|exchange|positivity|fold|all")
        ->check(CLI::IsMember({"ext", "char", "exchange", "positivity", "fold", "all"}))
        ->capture_default_str();
    ver->add_option("--seed", seed, "seed for sampled checks")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // help text, exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        uc::Word word = parse_word_or_throw(word_text);
        if (catalog->parsed()) return cmd_catalog(catalog_json, word);
        if (chr->parsed()) {
            if (module_id.empty() && module_file.empty()) {
                std::cerr << "error: char needs --module or --file\n";
                return kExitUsage;
            }
            return cmd_char(module_id, module_file, word);
        }
        if (graph->parsed()) return cmd_graph(dot_path, json_path);
        if (mut->parsed()) return cmd_mutate(object_spec, slot_spec, matrices);
        if (pos->parsed()) return cmd_positivity(matrix_path, criterion);
        if (fold->parsed()) return cmd_fold(fold_graph, fold_dot, fold_json);
        if (ver->parsed()) return cmd_verify(suite, seed);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        // logic/domain failures are falsified mathematical checks
        std::cerr << "check failed: " << e.what() << "\n";
        return kExitFalsified;
    }
    return kExitUsage;
}
