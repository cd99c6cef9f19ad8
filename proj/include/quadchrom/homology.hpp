#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "quadchrom/complex.hpp"
#include "quadchrom/gf2.hpp"

namespace quadchrom {

/// Mod-2 chain: a set of k-cells of a fixed complex.
struct ChainZ2 {
    const CubicalComplex* complex = nullptr;
    int degree = 0;
    gf2::Vector support;
};

/// Mod-2 cochain, i.e. an indicator function on k-cells.
struct CochainZ2 {
    const CubicalComplex* complex = nullptr;
    int degree = 0;
    gf2::Vector support;
};

ChainZ2 make_chain(const CubicalComplex& cx, int degree);
CochainZ2 make_cochain(const CubicalComplex& cx, int degree);

/// Betti numbers over Z/2 for k = 0..dim.
std::vector<int> betti_numbers(const CubicalComplex& cx);

ChainZ2 boundary(const ChainZ2& z);
CochainZ2 coboundary(const CochainZ2& a);

bool is_cycle(const ChainZ2& z);
bool is_boundary(const ChainZ2& z);
bool is_cocycle(const CochainZ2& a);
bool is_coboundary(const CochainZ2& a);

/// |support(a) n support(z)| mod 2. Degrees must match.
int pairing(const CochainZ2& a, const ChainZ2& z);

/// Sum of all top-dimensional cells.
ChainZ2 fundamental_class(const CubicalComplex& cx);

/// Cup product of a p-cochain and a q-cochain, degree p+q.
///
/// On complexes whose directed structure is globally coherent this is the
/// cubical (Serre diagonal) formula, which is a strict DGA product. On
/// quotient models no coherent global frame exists, so the product is
/// computed through the order complex of the face poset instead: explicit
/// chain maps both ways with an exact retraction, giving a product that is
/// unital and satisfies the Leibniz rule on the nose, and is associative
/// and graded-commutative at cohomology level.
CochainZ2 cup_product(const CochainZ2& a, const CochainZ2& b);

/// The two evaluation strategies, exposed so they can be cross-checked.
/// The cubical route requires a directed-coherent complex.
CochainZ2 cup_product_cubical(const CochainZ2& a, const CochainZ2& b);
CochainZ2 cup_product_subdivision(const CochainZ2& a, const CochainZ2& b);

/// Reusable transport data for cup_product_subdivision; build once per
/// complex when evaluating many products.
class CupTransport {
public:
    explicit CupTransport(const CubicalComplex& cx);
    ~CupTransport();
    CupTransport(CupTransport&&) noexcept;
    CupTransport& operator=(CupTransport&&) noexcept;

    CochainZ2 cup(const CochainZ2& a, const CochainZ2& b) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Picks the evaluation strategy once per complex; use for batches of
/// products (ring conditions, certificates).
class CupEvaluator {
public:
    explicit CupEvaluator(const CubicalComplex& cx);
    CochainZ2 cup(const CochainZ2& a, const CochainZ2& b) const;
    bool cubical_route() const { return coherent_; }

private:
    bool coherent_;
    std::optional<CupTransport> transport_;
};

struct CohomologyBasis {
    int degree = 0;
    std::vector<CochainZ2> classes;
};

/// Deterministic basis of H^k: kernel vectors of the coboundary reduced
/// against the coboundary image by canonical elimination.
CohomologyBasis cohomology_basis(const CubicalComplex& cx, int k);

/// True iff the cocycle is not a coboundary. Throws when the input is not
/// a cocycle.
bool class_is_nontrivial(const CochainZ2& a);

struct RingConditions {
    bool cond1 = false;  // every nonzero class in H^{d-2} cups nontrivially with some H^2 class
    bool cond2 = false;  // all nonzero pairs in H^1 cup nontrivially
};

/// Requires a closed pseudo-manifold of dimension >= 2. Classes are
/// enumerated over the full (finite) span of the cohomology bases.
RingConditions ring_conditions(const CubicalComplex& cx);

}  // namespace quadchrom
