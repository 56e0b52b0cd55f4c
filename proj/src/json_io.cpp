#include "prodtop/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace prodtop {

namespace {

Json edges_to_json(const std::vector<GraphEdge>& edges) {
    Json out = Json::array();
    for (const auto& e : edges) out.push_back({{"id", e.id}, {"tail", e.tail}, {"head", e.head}});
    return out;
}

std::vector<GraphEdge> edges_from_json(const Json& j) {
    std::vector<GraphEdge> out;
    for (const auto& e : j)
        out.push_back({e.at("id").get<std::string>(), e.at("tail").get<std::string>(),
                       e.at("head").get<std::string>()});
    return out;
}

} // namespace

Json complex_to_json(const Graph1Complex& g) {
    return Json{{"kind", "graph"},
                {"vertices", g.vertices()},
                {"edges", edges_to_json(g.edges())}};
}

Json complex_to_json(const Regular2Complex& k) {
    Json faces = Json::array();
    for (const auto& f : k.faces()) {
        Json boundary = Json::array();
        for (const auto& step : f.boundary)
            boundary.push_back({{"edge", step.edge}, {"dir", step.forward ? "+" : "-"}});
        faces.push_back({{"id", f.id}, {"boundary", boundary}});
    }
    return Json{{"kind", "regular2"},
                {"vertices", k.vertices()},
                {"edges", edges_to_json(k.edges())},
                {"faces", faces}};
}

Json complex_to_json(const ProductComplex& p) {
    Json factors = Json::array();
    for (const auto& f : p.factors()) factors.push_back(complex_to_json(f));
    return Json{{"kind", "product"}, {"factors", factors}};
}

Json complex_to_json(const ProductSubcomplex& sub) {
    Json factors = Json::array();
    for (const auto& f : sub.parent().factors()) factors.push_back(complex_to_json(f));
    Json cells = Json::array();
    for (const auto& c : sub.cells()) cells.push_back(c.components);
    return Json{{"kind", "product-subcomplex"}, {"factors", factors}, {"cells", cells}};
}

Json complex_to_json(const TorusSubsetComplex& t) {
    Json cells = Json::array();
    for (const auto& c : t.cells) cells.push_back(std::vector<std::size_t>(c.begin(), c.end()));
    return Json{{"kind", "torus-skeleton"}, {"ambient", t.ambient}, {"cells", cells}};
}

Json complex_to_json(const AnyComplex& complex) {
    return std::visit([](const auto& c) { return complex_to_json(c); }, complex);
}

Graph1Complex graph_from_json(const Json& j) {
    return Graph1Complex(j.at("vertices").get<std::vector<std::string>>(),
                         edges_from_json(j.at("edges")));
}

Regular2Complex regular2_from_json(const Json& j) {
    std::vector<Face2> faces;
    for (const auto& f : j.at("faces")) {
        Face2 face;
        face.id = f.at("id").get<std::string>();
        for (const auto& step : f.at("boundary")) {
            const std::string dir = step.at("dir").get<std::string>();
            if (dir != "+" && dir != "-")
                throw std::invalid_argument("regular2 document: dir must be '+' or '-'");
            face.boundary.push_back({step.at("edge").get<std::string>(), dir == "+"});
        }
        faces.push_back(std::move(face));
    }
    return Regular2Complex(j.at("vertices").get<std::vector<std::string>>(),
                           edges_from_json(j.at("edges")), std::move(faces));
}

ProductComplex product_from_json(const Json& j) {
    std::vector<Graph1Complex> factors;
    for (const auto& f : j.at("factors")) factors.push_back(graph_from_json(f));
    return ProductComplex(std::move(factors));
}

ProductSubcomplex subcomplex_from_json(const Json& j) {
    auto parent = std::make_shared<const ProductComplex>(product_from_json(j));
    std::set<CellTuple> cells;
    for (const auto& c : j.at("cells"))
        cells.insert(CellTuple{c.get<std::vector<std::string>>()});
    return ProductSubcomplex(std::move(parent), std::move(cells));
}

TorusSubsetComplex torus_skeleton_from_json(const Json& j) {
    TorusSubsetComplex t;
    t.ambient = j.at("ambient").get<std::size_t>();
    for (const auto& c : j.at("cells")) {
        auto list = c.get<std::vector<std::size_t>>();
        t.cells.insert(std::set<std::size_t>(list.begin(), list.end()));
    }
    t.validate();
    return t;
}

AnyComplex complex_from_json(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "graph") return graph_from_json(j);
    if (kind == "regular2") return regular2_from_json(j);
    if (kind == "product") return full_subcomplex(
        std::make_shared<const ProductComplex>(product_from_json(j)));
    if (kind == "product-subcomplex") return subcomplex_from_json(j);
    if (kind == "torus-skeleton") return torus_skeleton_from_json(j);
    throw std::invalid_argument("unknown complex kind '" + kind + "'");
}

Json expected_to_json(const ExpectedReport& e) {
    Json out = Json::object();
    if (e.chi) out["chi"] = *e.chi;
    if (e.orientable) out["orientable"] = *e.orientable;
    if (e.genus) out["genus"] = *e.genus;
    if (e.rank_h1) out["rank_h1"] = *e.rank_h1;
    return out;
}

Json construction_to_json(const NamedConstruction& c) {
    Json out = complex_to_json(c.complex);
    out["name"] = c.name;
    out["params"] = c.params;
    if (c.expected) out["expected"] = expected_to_json(*c.expected);
    return out;
}

Json to_json(const HomologySummary& h) {
    return Json{{"betti", h.betti}, {"torsion", h.torsion}, {"euler", h.euler}};
}

Json to_json(const SurfaceReport& r) {
    return Json{{"is_closed_surface", r.is_closed_surface},
                {"connected", r.connected},
                {"orientable", r.orientable},
                {"genus", r.genus},
                {"chi", r.chi},
                {"rank_h1", r.rank_h1}};
}

Json to_json(const VerifierReport& r) {
    Json witnesses = Json::array();
    for (const auto& w : r.witnesses)
        witnesses.push_back({{"cell", w.cell}, {"reason", w.reason}});
    return Json{{"verdict", r.verdict}, {"witnesses", witnesses}};
}

Json to_json(const DecompositionResult& d) {
    Json residual = Json::array();
    if (d.residual)
        for (const auto& c : d.residual->cells()) residual.push_back(c.components);
    return Json{{"circle_indices", d.circle_indices},
                {"exact", d.exact},
                {"residual_cells", residual}};
}

Json to_json(const CollapsePlan& p) {
    Json steps = Json::array();
    for (const auto& s : p.steps)
        steps.push_back({{"free_face", s.free_face}, {"coface", s.coface}});
    return Json{{"steps", steps}, {"core", complex_to_json(p.core)}};
}

Json to_json(const TreeEmbedding& t) {
    Json assignment = Json::object();
    for (const auto& [id, cells] : t.assignment) {
        Json list = Json::array();
        for (const auto& c : cells) list.push_back(c.components);
        assignment[id] = list;
    }
    Json image = Json::array();
    for (const auto& c : t.image.cells()) image.push_back(c.components);
    return Json{{"tree1", complex_to_json(t.tree1)},
                {"tree2", complex_to_json(t.tree2)},
                {"image_cells", image},
                {"assignment", assignment},
                {"pendant_edges", t.stats.pendant_edges},
                {"runs", t.stats.runs},
                {"corners", t.stats.corners}};
}

std::string fnv1a_digest(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

Json report_document(const std::string& command, const std::string& input_digest, Json results,
                     bool pass) {
    return Json{{"command", command},
                {"input_digest", input_digest},
                {"results", std::move(results)},
                {"pass", pass}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

} // namespace prodtop
