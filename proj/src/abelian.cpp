#include "prodtop/abelian.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace prodtop {

namespace {

Int cyclic_tensor_order(Int a, Int b) {
    // Z (x) C = C, Z/a (x) Z/b = Z/gcd(a,b); order 0 stands for Z.
    if (a == 0) return b;
    if (b == 0) return a;
    return gcd_nonneg(a, b);
}

// A presentation by independent cyclic generators, together with the
// unimodular change of coordinates into normal form.
struct NormalizedPresentation {
    FgAbGroup group;
    IntegerMatrix to_snf;               // y = to_snf * x  (raw -> SNF coordinates)
    std::vector<std::size_t> survivors; // SNF coordinates kept (free first, then torsion)
    std::vector<Int> survivor_orders;   // matching orders (0 = free)
};

NormalizedPresentation normalize_cyclic_presentation(const std::vector<Int>& orders) {
    const std::size_t n = orders.size();
    std::vector<Int> relation_orders;
    for (Int d : orders)
        if (d != 0) relation_orders.push_back(d);

    IntegerMatrix relations(n, relation_orders.size());
    {
        std::size_t col = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (orders[i] != 0) relations.at(i, col++) = orders[i];
    }
    SmithForm snf = smith_normal_form(relations);

    const std::size_t diag = std::min(relations.rows(), relations.cols());
    std::vector<Int> snf_orders(n, 0);
    for (std::size_t i = 0; i < diag; ++i) snf_orders[i] = snf.D.at(i, i);

    NormalizedPresentation out;
    out.to_snf = snf.U;
    for (std::size_t i = 0; i < n; ++i)
        if (snf_orders[i] == 0) {
            out.survivors.push_back(i);
            out.survivor_orders.push_back(0);
        }
    for (std::size_t i = 0; i < n; ++i)
        if (snf_orders[i] >= 2) {
            out.survivors.push_back(i);
            out.survivor_orders.push_back(snf_orders[i]);
        }
    out.group.free_rank = 0;
    for (Int d : out.survivor_orders)
        if (d == 0)
            ++out.group.free_rank;
        else
            out.group.invariant_factors.push_back(d);
    return out;
}

bool zero_element(const FgAbGroup& g, const std::vector<Int>& coords) {
    std::vector<Int> orders = g.generator_orders();
    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (orders[i] == 0) {
            if (coords[i] != 0) return false;
        } else if (coords[i] % orders[i] != 0) {
            return false;
        }
    }
    return true;
}

} // namespace

FgAbGroup FgAbGroup::free_group(std::size_t rank) {
    FgAbGroup g;
    g.free_rank = rank;
    return g;
}

FgAbGroup FgAbGroup::cyclic(Int order) {
    if (order < 0) throw std::invalid_argument("FgAbGroup::cyclic: order must be >= 0");
    FgAbGroup g;
    if (order == 0)
        g.free_rank = 1;
    else if (order >= 2)
        g.invariant_factors.push_back(order);
    return g;
}

FgAbGroup FgAbGroup::from_cyclic_orders(const std::vector<Int>& orders) {
    FgAbGroup g;
    std::vector<Int> torsion;
    for (Int d : orders) {
        if (d < 0) throw std::invalid_argument("FgAbGroup: cyclic order must be >= 0");
        if (d == 0)
            ++g.free_rank;
        else if (d >= 2)
            torsion.push_back(d);
    }
    if (!torsion.empty()) {
        SmithForm snf = smith_normal_form(IntegerMatrix::diagonal(torsion));
        for (Int d : snf.nonzero_diagonal())
            if (d >= 2) g.invariant_factors.push_back(d);
    }
    return g;
}

std::vector<Int> FgAbGroup::generator_orders() const {
    std::vector<Int> orders(free_rank, 0);
    orders.insert(orders.end(), invariant_factors.begin(), invariant_factors.end());
    return orders;
}

std::string FgAbGroup::to_string() const {
    if (trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << " + ";
        first = false;
    };
    if (free_rank == 1) {
        sep();
        os << "Z";
    } else if (free_rank > 1) {
        sep();
        os << "Z^" << free_rank;
    }
    for (Int d : invariant_factors) {
        sep();
        os << "Z/" << d;
    }
    return os.str();
}

GroupHom identity_hom(const FgAbGroup& g) {
    return GroupHom{g, g, IntegerMatrix::identity(g.generator_count())};
}

GroupHom multiplication_hom(const FgAbGroup& g, Int factor) {
    IntegerMatrix m = IntegerMatrix::identity(g.generator_count());
    for (std::size_t i = 0; i < g.generator_count(); ++i) m.at(i, i) = factor;
    return GroupHom{g, g, m};
}

bool well_defined(const GroupHom& f) {
    if (f.matrix.rows() != f.codomain.generator_count() ||
        f.matrix.cols() != f.domain.generator_count())
        throw std::invalid_argument("GroupHom: matrix shape does not match generator counts");
    std::vector<Int> dom = f.domain.generator_orders();
    for (std::size_t j = 0; j < dom.size(); ++j) {
        if (dom[j] == 0) continue;
        std::vector<Int> scaled(f.matrix.rows());
        for (std::size_t i = 0; i < f.matrix.rows(); ++i)
            scaled[i] = checked_mul(dom[j], f.matrix.at(i, j));
        if (!zero_element(f.codomain, scaled)) return false;
    }
    return true;
}

bool is_zero_hom(const GroupHom& f) {
    for (std::size_t j = 0; j < f.matrix.cols(); ++j) {
        std::vector<Int> col(f.matrix.rows());
        for (std::size_t i = 0; i < f.matrix.rows(); ++i) col[i] = f.matrix.at(i, j);
        if (!zero_element(f.codomain, col)) return false;
    }
    return true;
}

FgAbGroup cokernel(const IntegerMatrix& a) {
    SmithForm snf = smith_normal_form(a);
    std::vector<Int> nz = snf.nonzero_diagonal();
    FgAbGroup g;
    g.free_rank = a.rows() - nz.size();
    for (Int d : nz)
        if (d >= 2) g.invariant_factors.push_back(d);
    return g;
}

FgAbGroup tensor(const FgAbGroup& g, const FgAbGroup& h) {
    std::vector<Int> orders;
    for (Int a : g.generator_orders())
        for (Int b : h.generator_orders()) orders.push_back(cyclic_tensor_order(a, b));
    return FgAbGroup::from_cyclic_orders(orders);
}

FgAbGroup tensor_power(const FgAbGroup& g, std::size_t k) {
    if (k == 0) throw std::invalid_argument("tensor_power: k must be >= 1");
    FgAbGroup out = g;
    for (std::size_t i = 1; i < k; ++i) out = tensor(out, g);
    return out;
}

InducedTensorHom induced_tensor_hom(const GroupHom& f, const FgAbGroup& g) {
    if (!well_defined(f))
        throw std::invalid_argument("induced_tensor_hom: hom is not well defined");

    const std::vector<Int> a_orders = f.domain.generator_orders();
    const std::vector<Int> b_orders = f.codomain.generator_orders();
    const std::vector<Int> g_orders = g.generator_orders();
    const std::size_t na = a_orders.size(), nb = b_orders.size(), ng = g_orders.size();

    std::vector<Int> raw_dom(na * ng), raw_cod(nb * ng);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t t = 0; t < ng; ++t)
            raw_dom[i * ng + t] = cyclic_tensor_order(a_orders[i], g_orders[t]);
    for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t t = 0; t < ng; ++t)
            raw_cod[k * ng + t] = cyclic_tensor_order(b_orders[k], g_orders[t]);

    // (f (x) 1)(e_i (x) e_t) = sum_k f[k,i] (e_k (x) e_t)
    IntegerMatrix raw(nb * ng, na * ng);
    for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t i = 0; i < na; ++i) {
            Int c = f.matrix.at(k, i);
            if (c == 0) continue;
            for (std::size_t t = 0; t < ng; ++t) raw.at(k * ng + t, i * ng + t) = c;
        }

    NormalizedPresentation dom = normalize_cyclic_presentation(raw_dom);
    NormalizedPresentation cod = normalize_cyclic_presentation(raw_cod);

    IntegerMatrix full = cod.to_snf * raw * invert_unimodular(dom.to_snf);

    IntegerMatrix selected(cod.survivors.size(), dom.survivors.size());
    for (std::size_t i = 0; i < cod.survivors.size(); ++i)
        for (std::size_t j = 0; j < dom.survivors.size(); ++j) {
            Int e = full.at(cod.survivors[i], dom.survivors[j]);
            Int order = cod.survivor_orders[i];
            if (order != 0) {
                e %= order;
                if (e < 0) e += order;
            }
            selected.at(i, j) = e;
        }

    GroupHom hom{dom.group, cod.group, selected};
    if (!well_defined(hom))
        throw std::logic_error("induced_tensor_hom: normalized hom is not well defined");
    return InducedTensorHom{hom, !is_zero_hom(hom)};
}

TensorPowerCheckReport tensor_power_check(const GroupHom& f, const FgAbGroup& g, std::size_t k) {
    if (k < 1) throw std::invalid_argument("tensor_power_check: k must be >= 1");
    InducedTensorHom base = induced_tensor_hom(f, g);
    InducedTensorHom power = induced_tensor_hom(f, tensor_power(g, k));

    TensorPowerCheckReport report;
    report.nontrivial_base = base.nontrivial;
    report.nontrivial_power = power.nontrivial;
    report.implication_holds = !(base.nontrivial && !power.nontrivial);
    if (!report.implication_holds) {
        std::ostringstream os;
        os << "counterexample: f (x) 1_G nontrivial but f (x) 1_{G^" << k << "} is zero\n"
           << "f: " << f.domain.to_string() << " -> " << f.codomain.to_string() << "\n"
           << f.matrix.to_string() << "\nG = " << g.to_string() << "\n"
           << "base hom:\n"
           << base.hom.matrix.to_string() << "\npower hom:\n"
           << power.hom.matrix.to_string();
        report.detail = os.str();
    }
    return report;
}

} // namespace prodtop
