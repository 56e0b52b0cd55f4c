#include "prodtop/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace prodtop {

namespace {

std::string num(std::size_t i) { return std::to_string(i); }

std::shared_ptr<const ProductComplex> square_product(const Graph1Complex& g) {
    return std::make_shared<const ProductComplex>(std::vector<Graph1Complex>{g, g});
}

ProductSubcomplex squares_closure(std::shared_ptr<const ProductComplex> parent,
                                  const std::set<std::pair<std::string, std::string>>& squares) {
    std::set<CellTuple> seed;
    for (const auto& [a, b] : squares) seed.insert(CellTuple{{a, b}});
    return ProductSubcomplex::closure(std::move(parent), seed);
}

} // namespace

Graph1Complex theta(std::size_t n) {
    if (n < 1) throw std::invalid_argument("theta: need at least one meridian");
    std::vector<GraphEdge> edges;
    for (std::size_t i = 0; i < n; ++i) edges.push_back({"m" + num(i), "p", "q"});
    return Graph1Complex({"p", "q"}, std::move(edges));
}

ProductSubcomplex m0_surface(std::size_t m) {
    if (m < 1) throw std::invalid_argument("m0_surface: m must be >= 1");
    const std::size_t n = m + 1;
    std::set<std::pair<std::string, std::string>> squares;
    for (std::size_t j = 0; j < n; ++j) {
        squares.emplace("m" + num(j), "m" + num(j));
        squares.emplace("m" + num(j), "m" + num((j + 1) % n));
    }
    return squares_closure(square_product(theta(n)), squares);
}

ProductSubcomplex involution_surface(std::size_t m) {
    if (m < 1) throw std::invalid_argument("involution_surface: m must be >= 1");
    std::set<std::pair<std::string, std::string>> squares;
    squares.emplace("m0", "m0");
    squares.emplace("m" + num(m), "m" + num(m));
    for (std::size_t i = 0; i < m; ++i) {
        squares.emplace("m" + num(i), "m" + num(i + 1));
        squares.emplace("m" + num(i + 1), "m" + num(i));
    }
    return squares_closure(square_product(theta(m + 1)), squares);
}

bool swap_invariance_check(const ProductSubcomplex& m) {
    if (m.parent().factor_count() != 2)
        throw std::invalid_argument("swap_invariance_check: two factors required");
    if (!(m.parent().factor(0) == m.parent().factor(1)))
        throw std::invalid_argument("swap_invariance_check: factors must coincide");
    for (const auto& cell : m.cells()) {
        CellTuple swapped{{cell.components[1], cell.components[0]}};
        if (!m.contains(swapped)) return false;
    }
    return true;
}

bool diagonal_disjointness_check(const ProductSubcomplex& m) {
    if (m.parent().factor_count() != 2)
        throw std::invalid_argument("diagonal_disjointness_check: two factors required");
    if (!(m.parent().factor(0) == m.parent().factor(1)))
        throw std::invalid_argument("diagonal_disjointness_check: factors must coincide");
    const Graph1Complex& g = m.parent().factor(0);
    auto closed_vertices = [&](const std::string& c) {
        std::set<std::string> out;
        if (g.has_edge(c)) {
            out.insert(g.edge(c).tail);
            out.insert(g.edge(c).head);
        } else {
            out.insert(c);
        }
        return out;
    };
    for (const auto& cell : m.cells()) {
        const std::string& a = cell.components[0];
        const std::string& b = cell.components[1];
        if (a == b) return false;
        auto va = closed_vertices(a);
        for (const auto& v : closed_vertices(b))
            if (va.count(v)) return false;
    }
    return true;
}

Graph1Complex wheel(std::size_t n) {
    if (n < 3) throw std::invalid_argument("wheel: n must be >= 3");
    std::vector<std::string> vertices{"o"};
    std::vector<GraphEdge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        vertices.push_back("v" + num(i));
        edges.push_back({"s" + num(i), "o", "v" + num(i)});
        edges.push_back({"r" + num(i), "v" + num(i), "v" + num((i + 1) % n)});
    }
    return Graph1Complex(std::move(vertices), std::move(edges));
}

Graph1Complex wheel_tilde(std::size_t n) {
    Graph1Complex base = wheel(n);
    std::vector<GraphEdge> edges = base.edges();
    edges.push_back({"x", "v1", "v0"});
    return Graph1Complex(base.vertices(), std::move(edges));
}

namespace {

std::array<std::string, 3> wheel_circle(std::size_t i, std::size_t n) {
    return {"s" + std::to_string(i), "r" + std::to_string(i), "s" + std::to_string((i + 1) % n)};
}

std::set<std::pair<std::string, std::string>> cauty_even_squares(std::size_t n) {
    std::set<std::pair<std::string, std::string>> squares;
    for (std::size_t i = 0; i < n; ++i) {
        auto circle = wheel_circle(i, n);
        for (const auto& a : circle)
            for (const auto& b : circle) squares.emplace(a, b);
        squares.erase({"s" + num(i), "s" + num(i)});
        squares.erase({"s" + num((i + 1) % n), "s" + num((i + 1) % n)});
    }
    return squares;
}

} // namespace

ProductSubcomplex cauty_even_rank_surface(std::size_t n) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("cauty_even_rank_surface: n must be odd and >= 3");
    return squares_closure(square_product(wheel(n)), cauty_even_squares(n));
}

ProductSubcomplex cauty_even_rank_surface_plus(std::size_t n) {
    if (n < 4 || n % 2 == 1)
        throw std::invalid_argument("cauty_even_rank_surface_plus: n must be even and >= 4");
    auto squares = cauty_even_squares(n - 1);
    // Attach the torus over the extra bigon circle {r0, x} along the shared
    // square r0 x r0, whose interior is removed to form the connected sum.
    squares.erase({"r0", "r0"});
    squares.emplace("r0", "x");
    squares.emplace("x", "r0");
    squares.emplace("x", "x");
    return squares_closure(square_product(wheel_tilde(n - 1)), squares);
}

ProductSubcomplex cauty_odd_rank_surface(std::size_t k, bool all_same_orientations) {
    if (k < 2) throw std::invalid_argument("cauty_odd_rank_surface: k must be >= 2");

    // First factor: circles S1 (edges a_j, b_j) and S1' (edges a_j, c_j)
    // sharing the arcs a_j.  S1' traverses a_j forward when same[j] holds.
    std::vector<bool> same(k, true);
    if (!all_same_orientations) same[1] = false;

    std::vector<std::string> vertices;
    std::vector<GraphEdge> edges;
    for (std::size_t j = 0; j < k; ++j) {
        vertices.push_back("u" + num(j));
        vertices.push_back("w" + num(j));
    }
    for (std::size_t j = 0; j < k; ++j) {
        edges.push_back({"a" + num(j), "u" + num(j), "w" + num(j)});
        edges.push_back({"b" + num(j), "w" + num(j), "u" + num((j + 1) % k)});
        std::string exit = same[j] ? "w" + num(j) : "u" + num(j);
        std::size_t jn = (j + 1) % k;
        std::string entry = same[jn] ? "u" + num(jn) : "w" + num(jn);
        edges.push_back({"c" + num(j), exit, entry});
    }
    Graph1Complex p1(std::move(vertices), std::move(edges));

    // Second factor: theta curve with shared meridian t.
    Graph1Complex p2({"x", "y"},
                     {{"t", "x", "y"}, {"e", "y", "x"}, {"f", "x", "y"}});

    auto parent = std::make_shared<const ProductComplex>(std::vector<Graph1Complex>{p1, p2});
    std::set<std::pair<std::string, std::string>> squares;
    for (std::size_t j = 0; j < k; ++j) {
        squares.emplace("a" + num(j), "e");
        squares.emplace("b" + num(j), "t");
        squares.emplace("b" + num(j), "e");
        squares.emplace("a" + num(j), "f");
        squares.emplace("c" + num(j), "t");
        squares.emplace("c" + num(j), "f");
    }
    return squares_closure(std::move(parent), squares);
}

ProductSubcomplex diagonal_free_surface(std::size_t n) {
    if (n < 4) throw std::invalid_argument("diagonal_free_surface: n must be >= 4");

    std::vector<std::string> vertices;
    std::vector<GraphEdge> edges;
    for (std::size_t j = 0; j < n; ++j) {
        vertices.push_back("b" + num(j));
        vertices.push_back("t" + num(j));
    }
    for (std::size_t j = 0; j < n; ++j) {
        edges.push_back({"ab" + num(j), "b" + num(j), "b" + num((j + 1) % n)});
        edges.push_back({"at" + num(j), "t" + num(j), "t" + num((j + 1) % n)});
        edges.push_back({"i" + num(j), "b" + num(j), "t" + num(j)});
    }
    Graph1Complex ladder(std::move(vertices), std::move(edges));

    auto circle = [&](std::size_t j) {
        return std::array<std::string, 4>{"i" + num(j), "ab" + num(j), "at" + num(j),
                                          "i" + num((j + 1) % n)};
    };

    std::set<std::pair<std::string, std::string>> squares;
    for (std::size_t j = 0; j < n; ++j)
        for (const auto& a : circle(j))
            for (const auto& b : circle((j + 2) % n)) squares.emplace(a, b);
    for (std::size_t j = 0; j < n; ++j)
        squares.erase({"i" + num(j), "i" + num((j + 2) % n)});
    return squares_closure(square_product(ladder), squares);
}

Regular2Complex cone_over_graph(const Graph1Complex& g) {
    std::set<std::string> used(g.vertices().begin(), g.vertices().end());
    for (const auto& e : g.edges()) used.insert(e.id);
    auto fresh = [&used](std::string id) {
        while (used.count(id)) id += "'";
        used.insert(id);
        return id;
    };

    std::string apex = fresh("c:o");
    std::vector<std::string> vertices = g.vertices();
    vertices.push_back(apex);

    std::vector<GraphEdge> edges = g.edges();
    std::map<std::string, std::string> cone_edge;
    for (const auto& v : g.vertices()) {
        std::string id = fresh("c:" + v);
        cone_edge[v] = id;
        edges.push_back({id, apex, v});
    }
    std::vector<Face2> faces;
    for (const auto& e : g.edges()) {
        Face2 f;
        f.id = fresh("cf:" + e.id);
        f.boundary = {DirectedEdgeRef{cone_edge.at(e.tail), true}, DirectedEdgeRef{e.id, true},
                      DirectedEdgeRef{cone_edge.at(e.head), false}};
        faces.push_back(std::move(f));
    }
    return Regular2Complex(std::move(vertices), std::move(edges), std::move(faces));
}

Regular2Complex dunce_hat() {
    // Hexagonal disc with boundary word (e1 e2)(e1 e2)(e1 e2)^{-1}: an inner
    // hexagon ring around a central fan keeps every cell embedded after the
    // boundary identification.
    std::vector<std::string> vertices = {"P", "Q", "z"};
    for (std::size_t j = 0; j < 6; ++j) vertices.push_back("i" + num(j));

    auto hexv = [](std::size_t j) { return j % 2 == 0 ? std::string("P") : std::string("Q"); };

    std::vector<GraphEdge> edges;
    edges.push_back({"e1", "P", "Q"});
    edges.push_back({"e2", "Q", "P"});
    for (std::size_t j = 0; j < 6; ++j) {
        edges.push_back({"p" + num(j), hexv(j), "i" + num(j)});
        edges.push_back({"q" + num(j), hexv(j + 1), "i" + num(j)});
        edges.push_back({"h" + num(j), "i" + num(j), "i" + num((j + 1) % 6)});
        edges.push_back({"w" + num(j), "i" + num(j), "z"});
    }

    const DirectedEdgeRef hex[6] = {{"e1", true},  {"e2", true}, {"e1", true},
                                    {"e2", true},  {"e2", false}, {"e1", false}};

    std::vector<Face2> faces;
    for (std::size_t j = 0; j < 6; ++j) {
        faces.push_back(Face2{"A" + num(j),
                              {hex[j], {"q" + num(j), true}, {"p" + num(j), false}}});
        faces.push_back(Face2{"B" + num(j),
                              {{"p" + num((j + 1) % 6), true},
                               {"h" + num(j), false},
                               {"q" + num(j), false}}});
        faces.push_back(Face2{"C" + num(j),
                              {{"h" + num(j), true},
                               {"w" + num((j + 1) % 6), true},
                               {"w" + num(j), false}}});
    }
    return Regular2Complex(std::move(vertices), std::move(edges), std::move(faces));
}

namespace {

// Axis-aligned unit-square complex builder over integer grid points.
struct GridBuilder {
    std::map<std::string, GraphEdge> edges;
    std::set<std::string> vertices;
    std::vector<Face2> faces;

    static std::string vid(int x, int y, int z) {
        return "v" + std::to_string(x) + std::to_string(y) + std::to_string(z);
    }

    std::string edge(const std::string& prefix, int x, int y, int z, int dx, int dy, int dz) {
        std::string id = prefix + std::to_string(x) + std::to_string(y) + std::to_string(z);
        if (!edges.count(id)) {
            vertices.insert(vid(x, y, z));
            vertices.insert(vid(x + dx, y + dy, z + dz));
            edges.emplace(id, GraphEdge{id, vid(x, y, z), vid(x + dx, y + dy, z + dz)});
        }
        return id;
    }
    std::string ex(int x, int y, int z) { return edge("ex", x, y, z, 1, 0, 0); }
    std::string ey(int x, int y, int z) { return edge("ey", x, y, z, 0, 1, 0); }
    std::string ez(int x, int y, int z) { return edge("ez", x, y, z, 0, 0, 1); }

    void fxy(int x, int y, int z) {
        faces.push_back(Face2{"fxy" + std::to_string(x) + std::to_string(y) + std::to_string(z),
                              {{ex(x, y, z), true},
                               {ey(x + 1, y, z), true},
                               {ex(x, y + 1, z), false},
                               {ey(x, y, z), false}}});
    }
    void fxz(int x, int y, int z) {
        faces.push_back(Face2{"fxz" + std::to_string(x) + std::to_string(y) + std::to_string(z),
                              {{ex(x, y, z), true},
                               {ez(x + 1, y, z), true},
                               {ex(x, y, z + 1), false},
                               {ez(x, y, z), false}}});
    }
    void fyz(int x, int y, int z) {
        faces.push_back(Face2{"fyz" + std::to_string(x) + std::to_string(y) + std::to_string(z),
                              {{ey(x, y, z), true},
                               {ez(x, y + 1, z), true},
                               {ey(x, y, z + 1), false},
                               {ez(x, y, z), false}}});
    }

    Regular2Complex build() {
        std::vector<GraphEdge> edge_list;
        for (auto& [id, e] : edges) edge_list.push_back(e);
        return Regular2Complex(std::vector<std::string>(vertices.begin(), vertices.end()),
                               std::move(edge_list), std::move(faces));
    }
};

} // namespace

Regular2Complex bing_house() {
    // Box [0,4]x[0,3]x[0,2]; rooms separated by the z=1 floor.  The z in
    // [1,2] shaft over [1,2]x[1,2] descends into the bottom room, the z in
    // [0,1] shaft over [2,3]x[1,2] ascends into the top room; each hangs a
    // panel to an outer wall.
    GridBuilder g;
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 3; ++y) {
            if (!(x == 1 && y == 1)) g.fxy(x, y, 2);               // roof, entry hole over shaft 1
            if (!(x == 2 && y == 1)) g.fxy(x, y, 0);               // ground, entry hole under shaft 2
            if (!(x == 1 && y == 1) && !(x == 2 && y == 1)) g.fxy(x, y, 1);  // middle floor
        }
    for (int y = 0; y < 3; ++y)
        for (int z = 0; z < 2; ++z) {
            g.fyz(0, y, z);
            g.fyz(4, y, z);
        }
    for (int x = 0; x < 4; ++x)
        for (int z = 0; z < 2; ++z) {
            g.fxz(x, 0, z);
            g.fxz(x, 3, z);
        }
    // shaft 1 walls (z in [1,2]) and shaft 2 walls (z in [0,1])
    g.fyz(1, 1, 1);
    g.fyz(2, 1, 1);
    g.fxz(1, 1, 1);
    g.fxz(1, 2, 1);
    g.fyz(2, 1, 0);
    g.fyz(3, 1, 0);
    g.fxz(2, 1, 0);
    g.fxz(2, 2, 0);
    // panels
    g.fxz(0, 1, 1);
    g.fxz(3, 2, 0);
    return g.build();
}

TorusSubsetComplex triple_torus_complex(std::size_t n) {
    if (n < 2) throw std::invalid_argument("triple_torus_complex: n must be >= 2");
    const std::size_t k = n + 1;
    std::set<std::size_t> j1, j2, j3;
    for (std::size_t i = 0; i < k; ++i) {
        if (i != 0) j1.insert(i);
        if (i != 1) j2.insert(i);
        if (i != 2) j3.insert(i);
    }
    return TorusSubsetComplex::closed_cell(k, j1)
        .united(TorusSubsetComplex::closed_cell(k, j2))
        .united(TorusSubsetComplex::closed_cell(k, j3));
}

TripleTorusReport triple_torus_report(std::size_t n) {
    if (n < 2) throw std::invalid_argument("triple_torus_report: n must be >= 2");
    const std::size_t k = n + 1;
    std::set<std::size_t> j1, j2, j3;
    for (std::size_t i = 0; i < k; ++i) {
        if (i != 0) j1.insert(i);
        if (i != 1) j2.insert(i);
        if (i != 2) j3.insert(i);
    }
    TorusSubsetComplex t1 = TorusSubsetComplex::closed_cell(k, j1);
    TorusSubsetComplex t2 = TorusSubsetComplex::closed_cell(k, j2);
    TorusSubsetComplex t3 = TorusSubsetComplex::closed_cell(k, j3);

    auto binom_profile = [](std::size_t m) {
        std::vector<long long> out;
        for (std::size_t i = 0; i <= m; ++i) out.push_back(binomial(m, i));
        return out;
    };

    TripleTorusReport r;
    r.n = n;
    r.torus_profiles = {t1.profile(), t2.profile(), t3.profile()};
    r.pairwise_profiles = {t1.intersected(t2).profile(), t1.intersected(t3).profile(),
                           t2.intersected(t3).profile()};
    TorusSubsetComplex triple = t1.intersected(t2).intersected(t3);
    r.triple_profile = triple.profile();

    r.tori_ok = true;
    for (const auto& p : r.torus_profiles) r.tori_ok = r.tori_ok && p == binom_profile(n);
    r.pairwise_ok = true;
    for (const auto& p : r.pairwise_profiles)
        r.pairwise_ok = r.pairwise_ok && p == binom_profile(n - 1);
    r.triple_nonvoid = !triple.cells.empty();
    r.triple_not_large_torus = r.triple_profile == binom_profile(n - 2) &&
                               r.triple_profile != binom_profile(n - 1);
    r.hypotheses_ok = r.tori_ok && r.pairwise_ok && r.triple_nonvoid && r.triple_not_large_torus;
    return r;
}

Regular2Complex triangulated_disc(std::size_t sectors) {
    if (sectors < 2) throw std::invalid_argument("triangulated_disc: need at least 2 sectors");
    std::vector<std::string> vertices{"o"};
    std::vector<GraphEdge> edges;
    std::vector<Face2> faces;
    for (std::size_t i = 0; i < sectors; ++i) {
        vertices.push_back("v" + num(i));
        edges.push_back({"s" + num(i), "o", "v" + num(i)});
        edges.push_back({"r" + num(i), "v" + num(i), "v" + num((i + 1) % sectors)});
    }
    for (std::size_t i = 0; i < sectors; ++i)
        faces.push_back(Face2{"f" + num(i),
                              {{"s" + num(i), true},
                               {"r" + num(i), true},
                               {"s" + num((i + 1) % sectors), false}}});
    return Regular2Complex(std::move(vertices), std::move(edges), std::move(faces));
}

Regular2Complex grid_triangulated_square(std::size_t n) {
    if (n < 1) throw std::invalid_argument("grid_triangulated_square: n must be >= 1");
    auto v = [](std::size_t x, std::size_t y) {
        return "g" + std::to_string(x) + "." + std::to_string(y);
    };
    auto eid = [](const char* p, std::size_t x, std::size_t y) {
        return std::string(p) + std::to_string(x) + "." + std::to_string(y);
    };
    std::vector<std::string> vertices;
    std::vector<GraphEdge> edges;
    std::vector<Face2> faces;
    for (std::size_t x = 0; x <= n; ++x)
        for (std::size_t y = 0; y <= n; ++y) vertices.push_back(v(x, y));
    for (std::size_t x = 0; x <= n; ++x)
        for (std::size_t y = 0; y <= n; ++y) {
            if (x < n) edges.push_back({eid("h", x, y), v(x, y), v(x + 1, y)});
            if (y < n) edges.push_back({eid("v", x, y), v(x, y), v(x, y + 1)});
            if (x < n && y < n) edges.push_back({eid("d", x, y), v(x, y), v(x + 1, y + 1)});
        }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            faces.push_back(Face2{eid("fl", x, y),
                                  {{eid("h", x, y), true},
                                   {eid("v", x + 1, y), true},
                                   {eid("d", x, y), false}}});
            faces.push_back(Face2{eid("fu", x, y),
                                  {{eid("d", x, y), true},
                                   {eid("h", x, y + 1), false},
                                   {eid("v", x, y), false}}});
        }
    return Regular2Complex(std::move(vertices), std::move(edges), std::move(faces));
}

ProductSubcomplex punctured_torus() {
    ProductSubcomplex torus = m0_surface(1);
    std::set<CellTuple> squares = torus.cells_of_dim(2);
    squares.erase(CellTuple{{"m0", "m0"}});
    return ProductSubcomplex::closure(torus.parent_ptr(), squares);
}

namespace {

Graph1Complex cycle_graph(std::size_t n) {
    if (n < 2) throw std::invalid_argument("cycle_graph: n must be >= 2");
    std::vector<std::string> vertices;
    std::vector<GraphEdge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        vertices.push_back("c" + num(i));
        edges.push_back({"e" + num(i), "c" + num(i), "c" + num((i + 1) % n)});
    }
    return Graph1Complex(std::move(vertices), std::move(edges));
}

ProductSubcomplex circle_product(std::size_t factors) {
    std::vector<Graph1Complex> fs(factors, cycle_graph(3));
    return full_subcomplex(std::make_shared<const ProductComplex>(std::move(fs)));
}

ProductSubcomplex circle_cross_m0() {
    ProductSubcomplex m0 = m0_surface(2);
    Graph1Complex circle = cycle_graph(3);
    auto parent = std::make_shared<const ProductComplex>(
        std::vector<Graph1Complex>{circle, m0.parent().factor(0), m0.parent().factor(1)});
    std::set<CellTuple> seed;
    for (const auto& e : circle.edges())
        for (const auto& sq : m0.cells_of_dim(2))
            seed.insert(CellTuple{{e.id, sq.components[0], sq.components[1]}});
    return ProductSubcomplex::closure(std::move(parent), seed);
}

ExpectedReport orientable_expect(long long genus) {
    return ExpectedReport{2 - 2 * genus, true, genus, 2 * genus};
}

ExpectedReport nonorientable_expect(long long rank) {
    // genus = 2 - chi = rank + 1, chi = 1 - rank
    return ExpectedReport{1 - rank, false, rank + 1, rank};
}

NamedConstruction named(std::string name, std::vector<long long> params, AnyComplex complex,
                        std::optional<ExpectedReport> expected = std::nullopt) {
    return NamedConstruction{std::move(name), std::move(params), std::move(complex),
                             std::move(expected)};
}

} // namespace

const std::vector<ConstructionSpec>& construction_registry() {
    static const std::vector<ConstructionSpec> registry = {
        {"theta", "n", 3,
         [](long long n) {
             return named("theta", {n}, theta(static_cast<std::size_t>(n)));
         },
         "theta graph with n meridians"},
        {"m0-surface", "m", 2,
         [](long long m) {
             return named("m0-surface", {m}, m0_surface(static_cast<std::size_t>(m)),
                          orientable_expect(m));
         },
         "orientable genus-m surface in a product of two theta graphs"},
        {"involution-surface", "m", 2,
         [](long long m) {
             return named("involution-surface", {m},
                          involution_surface(static_cast<std::size_t>(m)), orientable_expect(m));
         },
         "swap-symmetric orientable genus-m surface"},
        {"wheel", "n", 3,
         [](long long n) {
             return named("wheel", {n}, wheel(static_cast<std::size_t>(n)));
         },
         "hub-and-rim wheel graph"},
        {"wheel-tilde", "n", 3,
         [](long long n) {
             return named("wheel-tilde", {n}, wheel_tilde(static_cast<std::size_t>(n)));
         },
         "wheel graph with an extra bigon circle"},
        {"cauty-even", "n", 3,
         [](long long n) {
             return named("cauty-even", {n}, cauty_even_rank_surface(static_cast<std::size_t>(n)),
                          nonorientable_expect(2 * n));
         },
         "non-orientable surface of rank 2n (n odd)"},
        {"cauty-even-plus", "n", 4,
         [](long long n) {
             return named("cauty-even-plus", {n},
                          cauty_even_rank_surface_plus(static_cast<std::size_t>(n)),
                          nonorientable_expect(2 * n));
         },
         "non-orientable surface of rank 2n (n even)"},
        {"cauty-odd", "k", 2,
         [](long long k) {
             return named("cauty-odd", {k}, cauty_odd_rank_surface(static_cast<std::size_t>(k)),
                          nonorientable_expect(2 * k + 1));
         },
         "non-orientable surface of rank 2k+1"},
        {"cauty-odd-control", "k", 2,
         [](long long k) {
             return named("cauty-odd-control", {k},
                          cauty_odd_rank_surface(static_cast<std::size_t>(k), true),
                          orientable_expect(k + 1));
         },
         "orientable control for the odd-rank construction"},
        {"diagonal-free-surface", "n", 4,
         [](long long n) {
             return named("diagonal-free-surface", {n},
                          diagonal_free_surface(static_cast<std::size_t>(n)),
                          ExpectedReport{-2 * n, std::nullopt, std::nullopt, std::nullopt});
         },
         "closed surface avoiding the diagonal of a squared graph"},
        {"cone-over-theta", "n", 3,
         [](long long n) {
             return named("cone-over-theta", {n},
                          cone_over_graph(theta(static_cast<std::size_t>(n))),
                          ExpectedReport{1, std::nullopt, std::nullopt, 0});
         },
         "cone over the theta graph with n meridians"},
        {"dunce-hat", "", 0,
         [](long long) {
             return named("dunce-hat", {}, dunce_hat(),
                          ExpectedReport{1, std::nullopt, std::nullopt, 0});
         },
         "contractible 2-complex with no free edge"},
        {"bing-house", "", 0,
         [](long long) {
             return named("bing-house", {}, bing_house(),
                          ExpectedReport{1, std::nullopt, std::nullopt, 0});
         },
         "two-room house fixture"},
        {"triple-torus-q", "n", 2,
         [](long long n) {
             return named("triple-torus-q", {n}, triple_torus_complex(static_cast<std::size_t>(n)));
         },
         "three n-tori in the (n+1)-torus skeleton model"},
        {"triangulated-disc", "m", 6,
         [](long long m) {
             return named("triangulated-disc", {m},
                          triangulated_disc(static_cast<std::size_t>(m)),
                          ExpectedReport{1, std::nullopt, std::nullopt, 0});
         },
         "fan-triangulated disc"},
        {"grid-square", "n", 3,
         [](long long n) {
             return named("grid-square", {n},
                          grid_triangulated_square(static_cast<std::size_t>(n)),
                          ExpectedReport{1, std::nullopt, std::nullopt, 0});
         },
         "n x n grid square, each cell split into two triangles"},
        {"punctured-torus", "", 0,
         [](long long) {
             return named("punctured-torus", {}, punctured_torus(),
                          ExpectedReport{-1, std::nullopt, std::nullopt, 2});
         },
         "torus with one open square removed"},
        {"circle-product", "n", 3,
         [](long long n) {
             return named("circle-product", {n}, circle_product(static_cast<std::size_t>(n)),
                          std::nullopt);
         },
         "full product of n subdivided circles"},
    };
    return registry;
}

NamedConstruction build_construction(const std::string& cli_name, long long param) {
    for (const auto& spec : construction_registry())
        if (spec.cli_name == cli_name) return spec.build(param);
    throw std::invalid_argument("unknown construction '" + cli_name + "'");
}

std::vector<NamedConstruction> gallery() {
    std::vector<NamedConstruction> out;
    for (long long m = 1; m <= 4; ++m)
        out.push_back(named("m0-surface", {m}, m0_surface(m), orientable_expect(m)));
    for (long long m = 1; m <= 4; ++m)
        out.push_back(named("involution-surface", {m}, involution_surface(m),
                            orientable_expect(m)));
    for (long long k = 2; k <= 3; ++k)
        out.push_back(named("cauty-odd", {k}, cauty_odd_rank_surface(k),
                            nonorientable_expect(2 * k + 1)));
    out.push_back(named("cauty-odd-control", {2}, cauty_odd_rank_surface(2, true),
                        orientable_expect(3)));
    for (long long n : {3, 5})
        out.push_back(named("cauty-even", {n}, cauty_even_rank_surface(n),
                            nonorientable_expect(2 * n)));
    out.push_back(named("cauty-even-plus", {4}, cauty_even_rank_surface_plus(4),
                        nonorientable_expect(8)));
    for (long long n : {4, 5})
        out.push_back(named("diagonal-free-surface", {n}, diagonal_free_surface(n),
                            ExpectedReport{-2 * n, std::nullopt, std::nullopt, std::nullopt}));
    out.push_back(named("circle-product", {3}, circle_product(3), std::nullopt));
    out.push_back(named("circle-cross-m0", {}, circle_cross_m0(), std::nullopt));
    return out;
}

} // namespace prodtop
