#ifndef PRODTOP_ABELIAN_HPP
#define PRODTOP_ABELIAN_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "prodtop/integer_matrix.hpp"

namespace prodtop {

/// Finitely generated abelian group in invariant-factor normal form:
/// Z^free_rank + Z/d1 + ... + Z/dk with 2 <= d1 | d2 | ... | dk.
/// Generators are ordered free generators first, then torsion generators.
struct FgAbGroup {
    std::size_t free_rank = 0;
    std::vector<Int> invariant_factors;

    static FgAbGroup free_group(std::size_t rank);
    static FgAbGroup cyclic(Int order);  // order 0 means Z
    /// Normalize an arbitrary direct sum of cyclic groups (orders, 0 = Z).
    static FgAbGroup from_cyclic_orders(const std::vector<Int>& orders);

    std::size_t generator_count() const { return free_rank + invariant_factors.size(); }
    /// Per-generator order, 0 for the free ones.
    std::vector<Int> generator_orders() const;
    std::size_t rank() const { return free_rank; }
    bool trivial() const { return free_rank == 0 && invariant_factors.empty(); }

    bool operator==(const FgAbGroup&) const = default;
    std::string to_string() const;
};

/// Homomorphism given by a matrix on the chosen generator sequences:
/// column j holds the codomain coordinates of the image of generator j.
struct GroupHom {
    FgAbGroup domain;
    FgAbGroup codomain;
    IntegerMatrix matrix;
};

GroupHom identity_hom(const FgAbGroup& g);
GroupHom multiplication_hom(const FgAbGroup& g, Int factor);
bool well_defined(const GroupHom& f);
bool is_zero_hom(const GroupHom& f);

/// Quotient of Z^rows(a) by the column span of a.
FgAbGroup cokernel(const IntegerMatrix& a);

FgAbGroup tensor(const FgAbGroup& g, const FgAbGroup& h);
FgAbGroup tensor_power(const FgAbGroup& g, std::size_t k);  // k >= 1

struct InducedTensorHom {
    GroupHom hom;      // f (x) 1_G between normalized tensor groups
    bool nontrivial;   // decided exactly from the presentations
};

InducedTensorHom induced_tensor_hom(const GroupHom& f, const FgAbGroup& g);

/// Checks that nontriviality of f (x) 1_G propagates to every tensor power
/// f (x) 1_{G^(x)k}.  A failed implication signals an implementation bug and
/// is reported with the full matrices.
struct TensorPowerCheckReport {
    bool nontrivial_base = false;
    bool nontrivial_power = false;
    bool implication_holds = true;
    std::string detail;
};

TensorPowerCheckReport tensor_power_check(const GroupHom& f, const FgAbGroup& g, std::size_t k);

} // namespace prodtop

#endif
