#include "unicluster/repio.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace unicluster {

namespace {

std::vector<std::string> content_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        size_t last = line.find_last_not_of(" \t\r");
        lines.push_back(line.substr(first, last - first + 1));
    }
    return lines;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

}  // namespace

Rep parse_rep(std::istream& in) {
    std::vector<std::string> lines = content_lines(in);
    size_t pos = 0;
    auto next_line = [&]() -> const std::string& {
        if (pos >= lines.size()) throw std::invalid_argument("parse_rep: unexpected end of input");
        return lines[pos++];
    };
    std::vector<std::string> head = tokens_of(next_line());
    if (head.size() != 4 || head[0] != "dim")
        throw std::invalid_argument("parse_rep: first line must be 'dim d1 d2 d3'");
    DimVec d{std::stoi(head[1]), std::stoi(head[2]), std::stoi(head[3])};
    if (d.at(1) < 0 || d.at(2) < 0 || d.at(3) < 0) throw std::invalid_argument("parse_rep: negative dimension");
    Field f = Field::rationals();
    auto read_arrow = [&](const std::string& name, int rows, int cols) {
        const std::string& key = next_line();
        if (key != name) throw std::invalid_argument("parse_rep: expected arrow block '" + name + "', got '" + key + "'");
        Mat m(rows, cols, f);
        for (int i = 0; i < rows && cols > 0; ++i) {
            std::vector<std::string> toks = tokens_of(next_line());
            if (static_cast<int>(toks.size()) != cols)
                throw std::invalid_argument("parse_rep: row of '" + name + "' needs " + std::to_string(cols) +
                                            " entries");
            for (int j = 0; j < cols; ++j) m.set(i, j, Scalar(parse_rational(toks[j])));
        }
        return m;
    };
    Mat alpha = read_arrow("alpha", d.at(2), d.at(1));
    Mat alphastar = read_arrow("alphastar", d.at(1), d.at(2));
    Mat betastar = read_arrow("betastar", d.at(3), d.at(2));
    Mat beta = read_arrow("beta", d.at(2), d.at(3));
    if (pos != lines.size()) throw std::invalid_argument("parse_rep: trailing input");
    return Rep::make(f, d, std::move(alpha), std::move(alphastar), std::move(betastar), std::move(beta));
}

Rep parse_rep_string(const std::string& text) {
    std::istringstream is(text);
    return parse_rep(is);
}

std::string render_rep(const Rep& x) {
    if (!x.field.is_rational()) throw std::invalid_argument("render_rep: only rational reps are rendered");
    std::ostringstream os;
    os << "dim " << x.dim.at(1) << " " << x.dim.at(2) << " " << x.dim.at(3) << "\n";
    auto block = [&](const char* name, const Mat& m) {
        os << name << "\n";
        if (m.cols() == 0) return;
        for (int i = 0; i < m.rows(); ++i) {
            for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m.at(i, j).to_string();
            os << "\n";
        }
    };
    block("alpha", x.a_alpha);
    block("alphastar", x.a_alphastar);
    block("betastar", x.a_betastar);
    block("beta", x.a_beta);
    return os.str();
}

RatUniMat parse_matrix(std::istream& in) {
    std::vector<std::string> lines = content_lines(in);
    if (lines.size() != 4) throw std::invalid_argument("parse_matrix: expected 4 rows");
    Rational entries[4][4];
    for (int i = 0; i < 4; ++i) {
        std::vector<std::string> toks = tokens_of(lines[i]);
        if (toks.size() != 4) throw std::invalid_argument("parse_matrix: row " + std::to_string(i + 1) + " needs 4 entries");
        for (int j = 0; j < 4; ++j) entries[i][j] = parse_rational(toks[j]);
    }
    RatUniMat m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i == j && entries[i][j] != 1)
                throw std::invalid_argument("parse_matrix: diagonal entries must be 1");
            if (i > j && entries[i][j] != 0)
                throw std::invalid_argument("parse_matrix: below-diagonal entries must be 0");
            if (i < j) m.set(i + 1, j + 1, entries[i][j]);
        }
    return m;
}

RatUniMat parse_matrix_string(const std::string& text) {
    std::istringstream is(text);
    return parse_matrix(is);
}

std::string vertex_label(const RigidObject& v) {
    std::string label;
    for (CatalogId id : v.non_projectives()) {
        if (!label.empty()) label += "|";
        label += to_string(id);
    }
    return label;
}

std::string folded_vertex_label(const RigidObject& v) {
    StableSlots slots = stable_slots(v);
    std::string label = catalog_minor(slots.fixed).to_string();
    label += " | ";
    label += catalog_minor(slots.swapped.first).to_string();
    label += "=";
    label += catalog_minor(slots.swapped.second).to_string();
    return label;
}

std::string graph_to_dot(const ExchangeGraph& g) {
    std::ostringstream os;
    os << "graph exchange {\n";
    for (size_t i = 0; i < g.vertices.size(); ++i)
        os << "  v" << i << " [label=\"" << vertex_label(g.vertices[i]) << "\"];\n";
    for (const auto& e : g.edges)
        os << "  v" << e.a << " -- v" << e.b << " [label=\"" << to_string(e.removed) << "/" << to_string(e.added)
           << "\"];\n";
    os << "}\n";
    return os.str();
}

namespace {

nlohmann::json ids_to_json(const std::vector<CatalogId>& ids) {
    nlohmann::json arr = nlohmann::json::array();
    for (CatalogId id : ids) arr.push_back(to_string(id));
    return arr;
}

}  // namespace

std::string graph_to_json(const ExchangeGraph& g) {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (const auto& v : g.vertices) {
        nlohmann::json jv;
        jv["summands"] = ids_to_json(v.ids);
        jv["nonprojectives"] = ids_to_json(v.non_projectives());
        j["vertices"].push_back(jv);
    }
    j["edges"] = nlohmann::json::array();
    for (const auto& e : g.edges) {
        nlohmann::json je;
        je["a"] = e.a;
        je["b"] = e.b;
        je["exchanged"] = nlohmann::json::array({to_string(e.removed), to_string(e.added)});
        je["middle_out"] = ids_to_json(e.middle_out);
        je["middle_in"] = ids_to_json(e.middle_in);
        j["edges"].push_back(je);
    }
    return j.dump(2) + "\n";
}

std::string folded_to_dot(const FoldedGraph& g) {
    std::ostringstream os;
    os << "graph folded {\n";
    for (size_t i = 0; i < g.vertices.size(); ++i)
        os << "  v" << i << " [label=\"" << folded_vertex_label(g.vertices[i]) << "\"];\n";
    for (const auto& e : g.edges) {
        os << "  v" << e.a << " -- v" << e.b << " [label=\"slot " << e.slot << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

std::string folded_to_json(const FoldedGraph& g) {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (const auto& v : g.vertices) {
        nlohmann::json jv;
        jv["summands"] = ids_to_json(v.ids);
        jv["label"] = folded_vertex_label(v);
        j["vertices"].push_back(jv);
    }
    j["edges"] = nlohmann::json::array();
    for (const auto& e : g.edges) {
        nlohmann::json je;
        je["a"] = e.a;
        je["b"] = e.b;
        je["slot"] = e.slot;
        nlohmann::json pairs = nlohmann::json::array();
        for (const auto& [out, in] : e.exchanged)
            pairs.push_back(nlohmann::json::array({to_string(out), to_string(in)}));
        je["exchanged"] = pairs;
        j["edges"].push_back(je);
    }
    return j.dump(2) + "\n";
}

std::string catalog_to_json(const Word& w) {
    nlohmann::json j = nlohmann::json::array();
    for (CatalogId id : all_catalog_ids()) {
        const Rep& r = catalog_rep(id);
        nlohmann::json entry;
        entry["module"] = to_string(id);
        entry["dim"] = nlohmann::json::array({r.dim.at(1), r.dim.at(2), r.dim.at(3)});
        entry["minor"] = catalog_minor(id).to_string();
        entry["character"] = catalog_char(id, w).poly.to_string();
        entry["projective"] = is_projective(id);
        j.push_back(entry);
    }
    return j.dump(2) + "\n";
}

std::string catalog_to_text(const Word& w) {
    std::ostringstream os;
    size_t name_w = 7, minor_w = 12, dim_w = 8;
    os << "module   dim      minor         character (word " << w.to_string() << ")\n";
    for (CatalogId id : all_catalog_ids()) {
        const Rep& r = catalog_rep(id);
        std::string name = to_string(id);
        std::string dim = r.dim.to_string();
        std::string minor = catalog_minor(id).to_string();
        os << name << std::string(name_w + 2 - name.size(), ' ');
        os << dim << std::string(dim_w + 1 - dim.size(), ' ');
        os << minor << std::string(minor_w + 2 - minor.size(), ' ');
        os << catalog_char(id, w).poly.to_string() << "\n";
    }
    return os.str();
}

}  // namespace unicluster
