#include "prodtop/homology.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "prodtop/verifier.hpp"

namespace prodtop {

std::vector<std::size_t> ChainComplex::dims() const {
    std::vector<std::size_t> out;
    for (const auto& l : labels) out.push_back(l.size());
    return out;
}

void ChainComplex::validate() const {
    if (labels.empty()) throw std::logic_error("ChainComplex: no degrees");
    if (boundaries.size() + 1 != labels.size())
        throw std::logic_error("ChainComplex: boundary count does not match degrees");
    for (std::size_t k = 1; k < labels.size(); ++k) {
        const IntegerMatrix& d = boundary(k);
        if (d.rows() != labels[k - 1].size() || d.cols() != labels[k].size())
            throw std::logic_error("ChainComplex: boundary shape mismatch in degree " +
                                   std::to_string(k));
    }
    for (std::size_t k = 2; k < labels.size(); ++k)
        if (!(boundary(k - 1) * boundary(k)).is_zero())
            throw std::logic_error("ChainComplex: dd != 0 in degree " + std::to_string(k));
}

bool HomologySummary::reduced_trivial() const {
    if (betti.empty() || betti[0] != 1) return false;
    for (std::size_t d = 1; d < betti.size(); ++d)
        if (betti[d] != 0) return false;
    for (const auto& t : torsion)
        if (!t.empty()) return false;
    return true;
}

std::string HomologySummary::to_string() const {
    std::ostringstream os;
    os << "betti=(";
    for (std::size_t i = 0; i < betti.size(); ++i) os << (i ? "," : "") << betti[i];
    os << ")";
    bool any = false;
    for (std::size_t d = 0; d < torsion.size(); ++d)
        for (Int t : torsion[d]) {
            os << (any ? "," : " torsion=") << "Z/" << t << "@" << d;
            any = true;
        }
    os << " chi=" << euler;
    return os.str();
}

ChainComplex chain_complex_of_graph(const Graph1Complex& g) {
    ChainComplex c;
    c.labels.resize(g.edges().empty() ? 1 : 2);
    std::map<std::string, std::size_t> vidx;
    for (const auto& v : g.vertices()) {
        vidx[v] = c.labels[0].size();
        c.labels[0].push_back(v);
    }
    if (!g.edges().empty()) {
        IntegerMatrix d1(g.vertices().size(), g.edges().size());
        for (std::size_t j = 0; j < g.edges().size(); ++j) {
            const GraphEdge& e = g.edges()[j];
            c.labels[1].push_back(e.id);
            d1.at(vidx.at(e.head), j) = checked_add(d1.at(vidx.at(e.head), j), 1);
            d1.at(vidx.at(e.tail), j) = checked_sub(d1.at(vidx.at(e.tail), j), 1);
        }
        c.boundaries.push_back(std::move(d1));
    }
    c.validate();
    return c;
}

ChainComplex chain_complex_of_regular2(const Regular2Complex& k) {
    ChainComplex c;
    std::size_t top = !k.faces().empty() ? 2 : (!k.edges().empty() ? 1 : 0);
    c.labels.resize(top + 1);

    std::map<std::string, std::size_t> vidx, eidx;
    for (const auto& v : k.vertices()) {
        vidx[v] = c.labels[0].size();
        c.labels[0].push_back(v);
    }
    if (top >= 1) {
        IntegerMatrix d1(k.vertices().size(), k.edges().size());
        for (std::size_t j = 0; j < k.edges().size(); ++j) {
            const GraphEdge& e = k.edges()[j];
            eidx[e.id] = j;
            c.labels[1].push_back(e.id);
            d1.at(vidx.at(e.head), j) = 1;
            d1.at(vidx.at(e.tail), j) = -1;
        }
        c.boundaries.push_back(std::move(d1));
    }
    if (top == 2) {
        IntegerMatrix d2(k.edges().size(), k.faces().size());
        for (std::size_t j = 0; j < k.faces().size(); ++j) {
            const Face2& f = k.faces()[j];
            c.labels[2].push_back(f.id);
            for (const auto& step : f.boundary)
                d2.at(eidx.at(step.edge), j) = step.forward ? 1 : -1;
        }
        c.boundaries.push_back(std::move(d2));
    }
    c.validate();
    return c;
}

ChainComplex chain_complex_of_product(const ProductSubcomplex& sub) {
    const ProductComplex& parent = sub.parent();
    int top = sub.dimension();
    ChainComplex c;
    c.labels.resize(top < 0 ? 1 : top + 1);
    if (top < 0) {
        c.validate();
        return c;
    }

    std::vector<std::map<CellTuple, std::size_t>> index(top + 1);
    for (const auto& cell : sub.cells()) {
        std::size_t d = parent.dimension(cell);
        index[d][cell] = c.labels[d].size();
        c.labels[d].push_back(tuple_id(cell));
    }

    for (int k = 1; k <= top; ++k) {
        IntegerMatrix dk(c.labels[k - 1].size(), c.labels[k].size());
        for (const auto& [cell, col] : index[k]) {
            Int sign = 1;
            for (std::size_t p = 0; p < cell.components.size(); ++p) {
                if (!parent.is_edge_component(p, cell.components[p])) continue;
                const GraphEdge& e = parent.factor(p).edge(cell.components[p]);
                CellTuple at_head = cell, at_tail = cell;
                at_head.components[p] = e.head;
                at_tail.components[p] = e.tail;
                std::size_t rh = index[k - 1].at(at_head);
                std::size_t rt = index[k - 1].at(at_tail);
                dk.at(rh, col) = checked_add(dk.at(rh, col), sign);
                dk.at(rt, col) = checked_sub(dk.at(rt, col), sign);
                sign = -sign;
            }
        }
        c.boundaries.push_back(std::move(dk));
    }
    c.validate();
    return c;
}

HomologySummary homology(const ChainComplex& c) {
    c.validate();
    const std::size_t top = c.top_degree();
    std::vector<std::size_t> rank(top + 2, 0);
    std::vector<std::vector<Int>> factors(top + 2);
    for (std::size_t k = 1; k <= top; ++k) {
        SmithForm snf = smith_normal_form(c.boundary(k));
        for (Int d : snf.nonzero_diagonal()) {
            ++rank[k];
            if (d > 1) factors[k].push_back(d);
        }
    }

    HomologySummary h;
    h.betti.resize(top + 1);
    h.torsion.resize(top + 1);
    long long chi_cells = 0, chi_betti = 0;
    for (std::size_t k = 0; k <= top; ++k) {
        h.betti[k] = static_cast<long long>(c.labels[k].size()) -
                     static_cast<long long>(rank[k]) - static_cast<long long>(rank[k + 1]);
        h.torsion[k] = factors[k + 1];
        long long sgn = (k % 2 == 0) ? 1 : -1;
        chi_cells += sgn * static_cast<long long>(c.labels[k].size());
        chi_betti += sgn * h.betti[k];
    }
    if (chi_cells != chi_betti)
        throw std::logic_error("homology: Euler characteristic identity violated");
    h.euler = chi_cells;
    return h;
}

HomologySummary homology_of(const Graph1Complex& g) { return homology(chain_complex_of_graph(g)); }
HomologySummary homology_of(const Regular2Complex& k) {
    return homology(chain_complex_of_regular2(k));
}
HomologySummary homology_of(const ProductSubcomplex& sub) {
    return homology(chain_complex_of_product(sub));
}

namespace {

void require_connected_pseudo_surface(const IncidenceComplex& x, const char* who) {
    VerifierReport pre = pseudo_manifold_check(x, 2, true);
    if (!pre.verdict)
        throw std::invalid_argument(std::string(who) +
                                    ": input is not a connected pseudo 2-manifold complex (" +
                                    (pre.witnesses.empty() ? std::string("unknown")
                                                           : pre.witnesses.front().reason) +
                                    ")");
}

} // namespace

bool orientability(const Regular2Complex& k) {
    require_connected_pseudo_surface(IncidenceComplex::of(k), "orientability");
    HomologySummary h = homology_of(k);
    return h.betti.size() > 2 && h.betti[2] == 1;
}

bool orientability(const ProductSubcomplex& sub) {
    if (sub.dimension() != 2)
        throw std::invalid_argument("orientability: complex is not 2-dimensional");
    require_connected_pseudo_surface(IncidenceComplex::of(sub), "orientability");
    HomologySummary h = homology_of(sub);
    return h.betti.size() > 2 && h.betti[2] == 1;
}

SurfaceReport surface_report(const Regular2Complex& k) {
    SurfaceReport r;
    VerifierReport closed = closed_surface_check(k);
    r.connected = true;
    for (const auto& w : closed.witnesses)
        if (w.reason.find("not connected") != std::string::npos) r.connected = false;
    r.is_closed_surface = closed.verdict;
    if (!r.is_closed_surface) return r;

    HomologySummary h = homology_of(k);
    r.chi = h.euler;
    r.rank_h1 = h.betti.size() > 1 ? h.betti[1] : 0;
    r.orientable = h.betti.size() > 2 && h.betti[2] == 1;
    if (r.orientable) {
        r.genus = 1 - r.chi / 2;
        if (r.chi % 2 != 0 || r.rank_h1 != 2 * r.genus)
            throw std::logic_error("surface_report: orientable genus relations violated");
    } else {
        r.genus = 2 - r.chi;
        if (r.rank_h1 != r.genus - 1)
            throw std::logic_error("surface_report: non-orientable genus relations violated");
    }
    return r;
}

SurfaceReport surface_report(const ProductSubcomplex& sub) {
    return surface_report(to_regular2(sub));
}

TorusSubsetComplex TorusSubsetComplex::skeleton(std::size_t k, std::size_t n) {
    if (n > k) throw std::invalid_argument("TorusSubsetComplex: skeleton degree above ambient");
    TorusSubsetComplex t;
    t.ambient = k;
    std::set<std::size_t> current;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t left) {
        t.cells.insert(current);
        if (left == 0) return;
        for (std::size_t i = start; i < k; ++i) {
            current.insert(i);
            rec(i + 1, left - 1);
            current.erase(i);
        }
    };
    rec(0, n);
    return t;
}

TorusSubsetComplex TorusSubsetComplex::closed_cell(std::size_t k,
                                                   const std::set<std::size_t>& coords) {
    TorusSubsetComplex t;
    t.ambient = k;
    for (std::size_t i : coords)
        if (i >= k) throw std::invalid_argument("TorusSubsetComplex: coordinate out of range");
    std::vector<std::size_t> list(coords.begin(), coords.end());
    const std::size_t m = list.size();
    for (std::size_t mask = 0; mask < (1u << m); ++mask) {
        std::set<std::size_t> subset;
        for (std::size_t b = 0; b < m; ++b)
            if (mask & (1u << b)) subset.insert(list[b]);
        t.cells.insert(subset);
    }
    return t;
}

TorusSubsetComplex TorusSubsetComplex::united(const TorusSubsetComplex& other) const {
    if (ambient != other.ambient)
        throw std::invalid_argument("TorusSubsetComplex: ambient mismatch");
    TorusSubsetComplex t;
    t.ambient = ambient;
    t.cells = cells;
    t.cells.insert(other.cells.begin(), other.cells.end());
    return t;
}

TorusSubsetComplex TorusSubsetComplex::intersected(const TorusSubsetComplex& other) const {
    if (ambient != other.ambient)
        throw std::invalid_argument("TorusSubsetComplex: ambient mismatch");
    TorusSubsetComplex t;
    t.ambient = ambient;
    for (const auto& c : cells)
        if (other.cells.count(c)) t.cells.insert(c);
    return t;
}

void TorusSubsetComplex::validate() const {
    for (const auto& c : cells)
        for (std::size_t i : c) {
            if (i >= ambient)
                throw std::invalid_argument("TorusSubsetComplex: coordinate out of range");
            std::set<std::size_t> sub = c;
            sub.erase(i);
            if (!cells.count(sub))
                throw std::invalid_argument("TorusSubsetComplex: not closed under subsets");
        }
}

std::vector<long long> TorusSubsetComplex::profile() const {
    std::size_t top = 0;
    for (const auto& c : cells) top = std::max(top, c.size());
    std::vector<long long> out(cells.empty() ? 0 : top + 1, 0);
    for (const auto& c : cells) ++out[c.size()];
    return out;
}

ChainComplex TorusSubsetComplex::chain_complex() const {
    validate();
    ChainComplex c;
    std::vector<long long> prof = profile();
    c.labels.resize(std::max<std::size_t>(prof.size(), 1));
    for (const auto& cell : cells) {
        std::string name = "s{";
        bool first = true;
        for (std::size_t i : cell) {
            if (!first) name += ",";
            first = false;
            name += std::to_string(i + 1);
        }
        name += "}";
        c.labels[cell.size()].push_back(name);
    }
    for (std::size_t k = 1; k < c.labels.size(); ++k)
        c.boundaries.emplace_back(c.labels[k - 1].size(), c.labels[k].size());
    c.validate();
    return c;
}

HomologySummary TorusSubsetComplex::homology() const {
    return prodtop::homology(chain_complex());
}

HomologySummary torus_skeleton_homology(std::size_t k, std::size_t n) {
    if (n > k)
        throw std::invalid_argument("torus_skeleton_homology: skeleton degree above ambient");
    return TorusSubsetComplex::skeleton(k, n).homology();
}

long long binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    long long out = 1;
    for (std::size_t i = 0; i < k; ++i) out = out * static_cast<long long>(n - i) / (i + 1);
    return out;
}

} // namespace prodtop
