#include "unicluster/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
namespace uc = unicluster;

namespace {

uc::CatalogId id_of(const std::string& name) {
    auto id = uc::catalog_id_from_string(name);
    if (!id) throw py::value_error("unknown module id '" + name + "'");
    return *id;
}

uc::Word word_of(const std::string& text) {
    auto w = uc::Word::parse(text);
    if (!w) throw py::value_error("'" + text + "' is not a reduced word for the longest element");
    return *w;
}

std::vector<std::string> names_of(const std::vector<uc::CatalogId>& ids) {
    std::vector<std::string> out;
    for (uc::CatalogId id : ids) out.push_back(uc::to_string(id));
    return out;
}

uc::RigidObject object_of(const std::vector<std::string>& names) {
    std::vector<uc::CatalogId> ids;
    for (const auto& n : names) ids.push_back(id_of(n));
    return uc::RigidObject(ids);
}

std::vector<int> type_of(const std::string& digits) {
    std::vector<int> out;
    for (char c : digits) {
        if (c < '1' || c > '3') throw py::value_error("type must be digits in {1,2,3}");
        out.push_back(c - '0');
    }
    return out;
}

uc::RatUniMat matrix_of(const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream os;
    if (rows.size() != 4) throw py::value_error("matrix needs 4 rows");
    for (const auto& row : rows) {
        if (row.size() != 4) throw py::value_error("matrix rows need 4 entries");
        for (size_t j = 0; j < 4; ++j) os << (j ? " " : "") << row[j];
        os << "\n";
    }
    return uc::parse_matrix_string(os.str());
}

py::dict mutation_dict(const uc::MutationResult& m) {
    py::dict d;
    d["object"] = names_of(m.object.ids);
    d["removed"] = uc::to_string(m.removed);
    d["added"] = uc::to_string(m.added);
    d["middle_out"] = names_of(m.middle_out);
    d["middle_in"] = names_of(m.middle_in);
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact cluster-structure computations for unitriangular 4x4 matrices";

    m.def("catalog_ids", [] { return names_of(uc::all_catalog_ids()); },
          "All twelve indecomposable module ids, sorted.");
    m.def("module_dim", [](const std::string& id) {
        const uc::Rep& r = uc::catalog_rep(id_of(id));
        return py::make_tuple(r.dim.at(1), r.dim.at(2), r.dim.at(3));
    });
    m.def("catalog_minor", [](const std::string& id) { return uc::catalog_minor(id_of(id)).to_string(); });
    m.def("is_projective", [](const std::string& id) { return uc::is_projective(id_of(id)); });

    m.def("validate_word", [](const std::string& w) { return uc::Word::parse(w).has_value(); });
    m.def(
        "cluster_char",
        [](const std::string& id, const std::string& word) {
            return uc::catalog_char(id_of(id), word_of(word)).poly.to_string();
        },
        py::arg("module"), py::arg("word") = "213213");
    m.def(
        "match_minor",
        [](const std::string& id, const std::string& word) {
            return uc::match_minor(uc::catalog_rep(id_of(id)), word_of(word)).to_string();
        },
        py::arg("module"), py::arg("word") = "213213");
    m.def("generic_minor",
          [](const std::string& spec) { return uc::generic_minor(uc::MinorSpec::parse(spec)).to_string(); });
    m.def("pi_project",
          [](const std::string& poly) { return uc::pi_project(uc::MultiPoly::parse(poly)).to_string(); });

    m.def("ext1", [](const std::string& x, const std::string& y) { return uc::ext1_table(id_of(x), id_of(y)); });
    m.def("hom", [](const std::string& x, const std::string& y) { return uc::hom_table(id_of(x), id_of(y)); });

    m.def(
        "count_comp_series",
        [](const std::string& id, const std::string& type, long p) {
            uc::Rep x = uc::reduce_mod(uc::catalog_rep(id_of(id)), p);
            return uc::count_comp_series(x, type_of(type)).str();
        },
        py::arg("module"), py::arg("type"), py::arg("p"));
    m.def(
        "euler_char",
        [](const std::string& id, const std::string& type) {
            return uc::euler_char(uc::catalog_rep(id_of(id)), type_of(type)).str();
        },
        py::arg("module"), py::arg("type"));

    m.def("is_basic_maximal_rigid",
          [](const std::vector<std::string>& ids) { return uc::is_basic_maximal_rigid(object_of(ids).ids); });
    m.def("mutate", [](const std::vector<std::string>& ids, const std::string& slot) {
        return mutation_dict(uc::mutate(object_of(ids), id_of(slot)));
    });
    m.def("exchange_graph", [] {
        uc::ExchangeGraph g = uc::exchange_graph(uc::RigidObject::initial());
        py::dict d;
        py::list vertices, edges;
        for (const auto& v : g.vertices) vertices.append(names_of(v.ids));
        for (const auto& e : g.edges) {
            py::dict je;
            je["a"] = e.a;
            je["b"] = e.b;
            je["removed"] = uc::to_string(e.removed);
            je["added"] = uc::to_string(e.added);
            je["middle_out"] = names_of(e.middle_out);
            je["middle_in"] = names_of(e.middle_in);
            edges.append(je);
        }
        d["vertices"] = vertices;
        d["edges"] = edges;
        return d;
    });

    m.def("is_stable", [](const std::vector<std::string>& ids) { return uc::is_stable(object_of(ids)); });
    m.def("folded_mutate", [](const std::vector<std::string>& ids, int slot) {
        return names_of(uc::folded_mutate(object_of(ids), slot).object.ids);
    });
    m.def("stable_hexagon", [] {
        uc::FoldedGraph g = uc::stable_exchange_graph();
        py::dict d;
        py::list vertices, edges;
        for (const auto& v : g.vertices) {
            py::dict jv;
            jv["summands"] = names_of(v.ids);
            jv["label"] = uc::folded_vertex_label(v);
            vertices.append(jv);
        }
        for (const auto& e : g.edges) {
            py::dict je;
            je["a"] = e.a;
            je["b"] = e.b;
            je["slot"] = e.slot;
            edges.append(je);
        }
        d["vertices"] = vertices;
        d["edges"] = edges;
        return d;
    });

    m.def("is_totally_positive",
          [](const std::vector<std::vector<std::string>>& rows) { return uc::is_totally_positive(matrix_of(rows)); });
    m.def("criterion_six",
          [](const std::vector<std::vector<std::string>>& rows) { return uc::criterion_six(matrix_of(rows)); });

    m.def(
        "verify",
        [](const std::string& suite, std::uint64_t seed) {
            py::list out;
            for (const auto& r : uc::run_suite(suite, seed)) {
                py::dict d;
                d["criterion"] = r.criterion;
                d["name"] = r.name;
                d["pass"] = r.pass;
                d["detail"] = r.detail;
                out.append(d);
            }
            return out;
        },
        py::arg("suite") = "all", py::arg("seed") = uc::kDefaultSeed);
}
