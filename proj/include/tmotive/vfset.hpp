#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "tmotive/hahn.hpp"
#include "tmotive/rvobj.hpp"

namespace tmotive {

// ---------------------------------------------------------------------------
// Holly-normal-form pieces. Every piece describes a subset of the valued
// line; n-dimensional sets are finite unions of coordinate products of
// pieces. Centers, radii and endpoints are explicit model data so that every
// comparison the integrator needs is decidable by exact series arithmetic.
// ---------------------------------------------------------------------------

struct PointPiece {
    HahnSeries value;
};

// Valuative disc around an explicit center. The radius is an additive
// value-group element (an exponent): membership is v(x - center) > radius
// for open discs and >= radius for closed ones.
struct Disc {
    HahnSeries center;
    Rational radius;
    bool closed = false;
};

// Half thin annulus: one side of a closed disc minus its maximal open
// subdisc, i.e. {x : v(x - center) = radius, sign(x - center) = side}.
struct HalfThin {
    HahnSeries center;
    Rational radius;
    int side = 1;  // +1 or -1
};

// Translated pullback of a tamped set: translate + (U x I^sharp)^sharp.
// The residue and value-group data are class-level; the piece occupies one
// VF-coordinate, so the combined grade must be 1.
struct RvPull {
    ResCellList res;
    GammaSet gamma;
    HahnSeries translate;
};

// End of a v-interval: a point, a disc, or an infinity. Disc ends use the
// closed-hull semantics: inclusive means the whole end-disc belongs to the
// interval. Infinite ends are never inclusive.
struct Endpoint {
    enum class Kind { NegInfinity, PosInfinity, Point, AtDisc };

    static Endpoint neg_infinity() { return {Kind::NegInfinity, false, {}, {}}; }
    static Endpoint pos_infinity() { return {Kind::PosInfinity, false, {}, {}}; }
    static Endpoint at_point(HahnSeries p, bool inclusive) {
        return {Kind::Point, inclusive, std::move(p), {}};
    }
    static Endpoint at_disc(Disc d, bool inclusive) {
        return {Kind::AtDisc, inclusive, {}, std::move(d)};
    }

    Kind kind = Kind::NegInfinity;
    bool inclusive = false;
    HahnSeries point;
    Disc disc;
};

struct VInterval {
    Endpoint lo;
    Endpoint hi;
};

using VfPiece = std::variant<PointPiece, Disc, VInterval, HalfThin, RvPull>;

// One product term: a sequence of pieces, one per VF-coordinate.
struct VfProduct {
    std::vector<VfPiece> factors;
};

// Finite disjoint union of product terms. Terms must be presented disjoint;
// validation rejects overlaps but performs no boolean normalization.
struct VfSet {
    std::vector<VfProduct> terms;
};

// ---------------------------------------------------------------------------
// Validation. Checks per-piece well-formedness (nonempty intervals with
// disconnected end regions, legal pullback grades) and pairwise disjointness
// of the union terms by exact cut comparisons. Pairs are separated as soon as
// one shared coordinate is disjoint; a pair is rejected only when every
// coordinate provably overlaps. Pullback pieces carry no concrete extent and
// are accepted as caller-asserted.
//
// The parallel kernel distributes the quadratic pair scan over OpenMP
// threads; the serial routine is the reference implementation and reports
// identical diagnostics (the lexicographically first offending pair).
// ---------------------------------------------------------------------------

void validate_serial(const VfSet& s);
void validate_parallel(const VfSet& s);
void validate(const VfSet& s);

// ---------------------------------------------------------------------------
// Contraction to graded classes and the generalized Euler characteristic.
// ---------------------------------------------------------------------------

// Class of one piece in the graded ring. Pieces admitting two hand
// decompositions produce the representative of the decomposition fixed
// here; representatives of the same set agree after quotient_reduce.
GradedYX contract_piece(const VfPiece& piece);

// Product over the coordinates of one term.
GradedYX contract_product(const VfProduct& term);

// Sum over the union terms (validates first).
GradedYX vf_class_serial(const VfSet& s);
GradedYX vf_class_parallel(const VfSet& s);
GradedYX vf_class(const VfSet& s);

// The generalized Euler characteristic: contract, sum, reduce mod the
// blowup ideal. Exact over the whole pipeline.
WForm integrate_serial(const VfSet& s);
WForm integrate_parallel(const VfSet& s);
WForm integrate(const VfSet& s);

// The two specializations to Z.
Int euler_g(const VfSet& s);
Int euler_b(const VfSet& s);

}  // namespace tmotive
