#include "tmotive/vfset.hpp"

#include <algorithm>
#include <compare>
#include <exception>
#include <optional>
#include <string>

namespace tmotive {
namespace {

// ---------------------------------------------------------------------------
// Regions and cuts. A region is a point or a disc; every concrete piece is
// exactly the set of elements strictly between two region-edge cuts, so both
// emptiness and disjointness reduce to an exact total order on cuts.
// ---------------------------------------------------------------------------

struct Region {
    HahnSeries center;
    std::optional<Rational> radius;  // nullopt: a point
    bool closed = true;
};

bool region_is_point(const Region& r) { return !r.radius.has_value(); }

bool point_in_region(const HahnSeries& p, const Region& r) {
    auto d = leading_difference(p, r.center);
    if (region_is_point(r)) return !d.has_value();
    if (!d) return true;
    return r.closed ? d->exponent >= *r.radius : d->exponent > *r.radius;
}

bool region_contains(const Region& a, const Region& b) {
    if (!point_in_region(b.center, a)) return false;
    if (region_is_point(a)) return region_is_point(b);
    if (region_is_point(b)) return true;
    if (*b.radius > *a.radius) return true;
    if (*b.radius < *a.radius) return false;
    return a.closed || !b.closed;
}

// Discs are nested or disjoint, so intersection means one center lies in
// the other region.
bool regions_intersect(const Region& a, const Region& b) {
    return point_in_region(b.center, a) || point_in_region(a.center, b);
}

// side -1: the cut just below the region; +1: just above.
struct Cut {
    int inf = 0;  // -1 below everything, +1 above everything, 0 at a region
    Region region;
    int side = -1;
};

std::strong_ordering compare_cuts(const Cut& a, const Cut& b) {
    if (a.inf != 0 || b.inf != 0) {
        if (a.inf != b.inf) return a.inf <=> b.inf;
        return std::strong_ordering::equal;
    }
    const bool ab = region_contains(a.region, b.region);
    const bool ba = region_contains(b.region, a.region);
    if (ab && ba) return a.side <=> b.side;
    if (ab) return a.side < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (ba) return b.side < 0 ? std::strong_ordering::greater : std::strong_ordering::less;
    return a.region.center <=> b.region.center;
}

Region disc_region(const Disc& d) { return {d.center, d.radius, d.closed}; }
Region point_region(const HahnSeries& p) { return {p, std::nullopt, true}; }

struct Extent {
    Cut lo;
    Cut hi;
};

Cut lower_endpoint_cut(const Endpoint& e) {
    switch (e.kind) {
        case Endpoint::Kind::NegInfinity:
            return {-1, {}, +1};
        case Endpoint::Kind::Point:
            return {0, point_region(e.point), e.inclusive ? -1 : +1};
        case Endpoint::Kind::AtDisc:
            return {0, disc_region(e.disc), e.inclusive ? -1 : +1};
        case Endpoint::Kind::PosInfinity:
            break;
    }
    throw DomainError(DomainError::Kind::InvalidArgument,
                      "+inf cannot be the lower end of a v-interval");
}

Cut upper_endpoint_cut(const Endpoint& e) {
    switch (e.kind) {
        case Endpoint::Kind::PosInfinity:
            return {+1, {}, -1};
        case Endpoint::Kind::Point:
            return {0, point_region(e.point), e.inclusive ? +1 : -1};
        case Endpoint::Kind::AtDisc:
            return {0, disc_region(e.disc), e.inclusive ? +1 : -1};
        case Endpoint::Kind::NegInfinity:
            break;
    }
    throw DomainError(DomainError::Kind::InvalidArgument,
                      "-inf cannot be the upper end of a v-interval");
}

std::optional<Extent> piece_extent(const VfPiece& piece) {
    if (const auto* p = std::get_if<PointPiece>(&piece)) {
        Region r = point_region(p->value);
        return Extent{{0, r, -1}, {0, r, +1}};
    }
    if (const auto* d = std::get_if<Disc>(&piece)) {
        Region r = disc_region(*d);
        return Extent{{0, r, -1}, {0, r, +1}};
    }
    if (const auto* h = std::get_if<HalfThin>(&piece)) {
        Region open{h->center, h->radius, false};
        Region closed{h->center, h->radius, true};
        if (h->side > 0) return Extent{{0, open, +1}, {0, closed, +1}};
        return Extent{{0, closed, -1}, {0, open, -1}};
    }
    if (const auto* v = std::get_if<VInterval>(&piece))
        return Extent{lower_endpoint_cut(v->lo), upper_endpoint_cut(v->hi)};
    return std::nullopt;  // RvPull: no concrete extent
}

void validate_interval(const VInterval& v) {
    for (const Endpoint* e : {&v.lo, &v.hi}) {
        if ((e->kind == Endpoint::Kind::NegInfinity || e->kind == Endpoint::Kind::PosInfinity) &&
            e->inclusive)
            throw DomainError(DomainError::Kind::NonDefinableEndpoint,
                              "NonDefinableEndpoint: an infinite interval end carries no "
                              "disc data and cannot be inclusive");
    }
    const bool lo_bounded =
        v.lo.kind == Endpoint::Kind::Point || v.lo.kind == Endpoint::Kind::AtDisc;
    const bool hi_bounded =
        v.hi.kind == Endpoint::Kind::Point || v.hi.kind == Endpoint::Kind::AtDisc;
    if (lo_bounded && hi_bounded) {
        Region rl = v.lo.kind == Endpoint::Kind::Point ? point_region(v.lo.point)
                                                       : disc_region(v.lo.disc);
        Region rh = v.hi.kind == Endpoint::Kind::Point ? point_region(v.hi.point)
                                                       : disc_region(v.hi.disc);
        if (regions_intersect(rl, rh))
            throw DomainError(DomainError::Kind::InvalidArgument,
                              "end regions of a v-interval must be disconnected; "
                              "write nested shapes as disc or half-thin pieces");
    }
    if (compare_cuts(lower_endpoint_cut(v.lo), upper_endpoint_cut(v.hi)) !=
        std::strong_ordering::less)
        throw DomainError(DomainError::Kind::EmptyInterval, "EmptyInterval: the v-interval is empty");
}

void validate_piece(const VfPiece& piece) {
    if (const auto* h = std::get_if<HalfThin>(&piece)) {
        if (h->side != 1 && h->side != -1)
            throw DomainError(DomainError::Kind::InvalidArgument,
                              "half thin annulus side must be + or -");
        return;
    }
    if (const auto* r = std::get_if<RvPull>(&piece)) {
        if (r->res.grade() + r->gamma.grade() != 1)
            throw DomainError(DomainError::Kind::InvalidArgument,
                              "a pullback piece occupies one coordinate: residue grade plus "
                              "value-group grade must be 1");
        return;
    }
    if (const auto* v = std::get_if<VInterval>(&piece)) validate_interval(*v);
}

void validate_term(const VfProduct& t) {
    if (t.factors.empty())
        throw DomainError(DomainError::Kind::InvalidArgument, "empty product term");
    for (const auto& p : t.factors) validate_piece(p);
}

// Extents are hoisted out of the quadratic pair scan; one entry per
// coordinate, nullopt for opaque pullback pieces.
using TermExtents = std::vector<std::optional<Extent>>;

TermExtents term_extents(const VfProduct& t) {
    TermExtents e;
    e.reserve(t.factors.size());
    for (const auto& p : t.factors) e.push_back(piece_extent(p));
    return e;
}

// True only when every shared coordinate provably overlaps. A single
// disjoint coordinate separates the terms; opaque pullback coordinates are
// caller-asserted and never flag a pair.
bool terms_overlap(const TermExtents& a, const TermExtents& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t c = 0; c < a.size(); ++c) {
        if (!a[c] || !b[c]) return false;
        const bool meets = compare_cuts(a[c]->lo, b[c]->hi) == std::strong_ordering::less &&
                           compare_cuts(b[c]->lo, a[c]->hi) == std::strong_ordering::less;
        if (!meets) return false;
    }
    return true;
}

[[noreturn]] void throw_overlap(std::size_t i, std::size_t j) {
    throw DomainError(DomainError::Kind::OverlappingPieces,
                      "OverlappingPieces: union terms " + std::to_string(i + 1) + " and " +
                          std::to_string(j + 1) + " overlap");
}

// ---------------------------------------------------------------------------
// Contraction. A bounded open-cut interval splits into three shells: the
// value-group slab above the critical level at the lower center, the full
// residue-interval coset stack at the critical level, and the mirror slab
// below the upper center. The division by leading terms makes each shell a
// pullback with a known class.
// ---------------------------------------------------------------------------

// Exclusive cut at a point (rho absent) or just outside a disc.
// Condition on the level q = v(x - center): q < rho when strict, q <= rho
// otherwise; absent rho accepts every finite level.
struct CutSpec {
    HahnSeries center;
    std::optional<Rational> rho;
    bool strict = true;
};

CutSpec cut_from_endpoint_region(const Endpoint& e) {
    if (e.kind == Endpoint::Kind::Point) return {e.point, std::nullopt, true};
    // Above/below an open disc the level can reach the radius itself;
    // a closed disc forces a strictly smaller level.
    return {e.disc.center, e.disc.radius, e.disc.closed};
}

GradedYX ray_class() { return GradedYX::yx(); }
GradedYX point_class() { return GradedYX::x(); }
GradedYX bounded_open_gamma_class() { return -GradedYX::x(); }

// {x > center : v(x - center) satisfies the cut}, one side of a cut with
// nothing bounding the other end.
GradedYX unbounded_side_class(const CutSpec& s) {
    if (!s.rho) return point_class() + GradedYX::monomial(1, 0, 2);  // full half line
    if (s.strict) return ray_class();
    return ray_class() + point_class();
}

bool cut_admits_level(const CutSpec& s, const Rational& q) {
    if (!s.rho) return true;
    return s.strict ? q < *s.rho : q <= *s.rho;
}

// Value-group slab {q : delta < q, q admitted by the cut}.
GradedYX slab_class(const CutSpec& s, const Rational& delta) {
    if (!s.rho) return ray_class();
    if (delta == *s.rho) return GradedYX::zero();  // nonstrict boundary: nothing above
    GradedYX g = bounded_open_gamma_class();
    if (!s.strict) g = g + point_class();  // the level q = rho itself
    return g;
}

GradedYX bounded_open_class(const CutSpec& lo, const CutSpec& hi) {
    const HahnSeries d = hi.center - lo.center;
    if (d.is_zero() || d.leading_coeff().sign() < 0)
        throw DomainError(DomainError::Kind::EmptyInterval,
                          "EmptyInterval: the v-interval is empty");
    const Rational delta = d.min_exponent();
    if (!cut_admits_level(lo, delta) || !cut_admits_level(hi, delta))
        throw DomainError(DomainError::Kind::EmptyInterval,
                          "EmptyInterval: the v-interval is empty");
    // shells at the critical level: slab above the lower center, the full
    // coset stack over the open residue interval, slab below the upper center
    return slab_class(lo, delta) + point_class() + slab_class(hi, delta);
}

GradedYX disc_class(const Disc& d) {
    // center point plus the pullback of the pair of open rays
    GradedYX c = GradedYX::one() + GradedYX::monomial(1, 0, 2);
    // a closed disc adds the two half thin annuli of its boundary
    if (d.closed) c = c + GradedYX::monomial(1, 2, 0);
    return c;
}

GradedYX contract_interval(const VInterval& v) {
    validate_interval(v);
    GradedYX acc = GradedYX::zero();
    std::optional<CutSpec> lo, hi;

    switch (v.lo.kind) {
        case Endpoint::Kind::NegInfinity:
            break;
        case Endpoint::Kind::Point:
            if (v.lo.inclusive) acc = acc + GradedYX::one();
            lo = cut_from_endpoint_region(v.lo);
            break;
        case Endpoint::Kind::AtDisc:
            if (v.lo.inclusive) acc = acc + disc_class(v.lo.disc);
            lo = cut_from_endpoint_region(v.lo);
            break;
        case Endpoint::Kind::PosInfinity:
            throw DomainError(DomainError::Kind::InvalidArgument,
                              "+inf cannot be the lower end of a v-interval");
    }
    switch (v.hi.kind) {
        case Endpoint::Kind::PosInfinity:
            break;
        case Endpoint::Kind::Point:
            if (v.hi.inclusive) acc = acc + GradedYX::one();
            hi = cut_from_endpoint_region(v.hi);
            break;
        case Endpoint::Kind::AtDisc:
            if (v.hi.inclusive) acc = acc + disc_class(v.hi.disc);
            hi = cut_from_endpoint_region(v.hi);
            break;
        case Endpoint::Kind::NegInfinity:
            throw DomainError(DomainError::Kind::InvalidArgument,
                              "-inf cannot be the upper end of a v-interval");
    }

    if (!lo && !hi) {
        // the whole line: origin plus two full half lines
        return acc + GradedYX::one() +
               (unbounded_side_class({HahnSeries(), std::nullopt, true}) +
                unbounded_side_class({HahnSeries(), std::nullopt, true}));
    }
    if (lo && !hi) return acc + unbounded_side_class(*lo);
    if (!lo && hi) return acc + unbounded_side_class(*hi);
    return acc + bounded_open_class(*lo, *hi);
}

constexpr std::size_t kParallelThreshold = 64;

}  // namespace

void validate_serial(const VfSet& s) {
    std::vector<TermExtents> extents;
    extents.reserve(s.terms.size());
    for (const auto& t : s.terms) {
        validate_term(t);
        extents.push_back(term_extents(t));
    }
    for (std::size_t i = 0; i < extents.size(); ++i)
        for (std::size_t j = i + 1; j < extents.size(); ++j)
            if (terms_overlap(extents[i], extents[j])) throw_overlap(i, j);
}

void validate_parallel(const VfSet& s) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(s.terms.size());
    std::vector<std::exception_ptr> errors(s.terms.size());
    std::vector<TermExtents> extents(s.terms.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            validate_term(s.terms[static_cast<std::size_t>(i)]);
            extents[static_cast<std::size_t>(i)] =
                term_extents(s.terms[static_cast<std::size_t>(i)]);
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::ptrdiff_t best_i = -1, best_j = -1;
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        for (std::ptrdiff_t j = i + 1; j < n; ++j) {
            if (terms_overlap(extents[static_cast<std::size_t>(i)],
                              extents[static_cast<std::size_t>(j)])) {
#pragma omp critical
                {
                    if (best_i < 0 || i < best_i || (i == best_i && j < best_j)) {
                        best_i = i;
                        best_j = j;
                    }
                }
                break;
            }
        }
    }
    if (best_i >= 0)
        throw_overlap(static_cast<std::size_t>(best_i), static_cast<std::size_t>(best_j));
}

void validate(const VfSet& s) {
    if (s.terms.size() >= kParallelThreshold)
        validate_parallel(s);
    else
        validate_serial(s);
}

GradedYX contract_piece(const VfPiece& piece) {
    if (const auto* p = std::get_if<PointPiece>(&piece)) {
        (void)p;
        return GradedYX::one();
    }
    if (const auto* d = std::get_if<Disc>(&piece)) return disc_class(*d);
    if (const auto* h = std::get_if<HalfThin>(&piece)) {
        validate_piece(piece);
        (void)h;
        return point_class();  // one residue-line torsor over a single level
    }
    if (const auto* r = std::get_if<RvPull>(&piece)) {
        validate_piece(piece);
        return assemble(res_class_of_cells(r->res), r->gamma);
    }
    return contract_interval(std::get<VInterval>(piece));
}

GradedYX contract_product(const VfProduct& term) {
    GradedYX acc = GradedYX::one();
    for (const auto& p : term.factors) acc = acc * contract_piece(p);
    return acc;
}

GradedYX vf_class_serial(const VfSet& s) {
    validate_serial(s);
    GradedYX acc = GradedYX::zero();
    for (const auto& t : s.terms) acc = acc + contract_product(t);
    return acc;
}

GradedYX vf_class_parallel(const VfSet& s) {
    validate_parallel(s);
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(s.terms.size());
    std::vector<GradedYX> classes(s.terms.size());
    std::vector<std::exception_ptr> errors(s.terms.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            classes[static_cast<std::size_t>(i)] =
                contract_product(s.terms[static_cast<std::size_t>(i)]);
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    // exact arithmetic: the ordered reduction keeps results bit-identical
    GradedYX acc = GradedYX::zero();
    for (const auto& c : classes) acc = acc + c;
    return acc;
}

GradedYX vf_class(const VfSet& s) {
    if (s.terms.size() >= kParallelThreshold) return vf_class_parallel(s);
    return vf_class_serial(s);
}

WForm integrate_serial(const VfSet& s) { return quotient_reduce(vf_class_serial(s)); }
WForm integrate_parallel(const VfSet& s) { return quotient_reduce(vf_class_parallel(s)); }
WForm integrate(const VfSet& s) { return quotient_reduce(vf_class(s)); }

Int euler_g(const VfSet& s) { return specialize_g(integrate(s)); }
Int euler_b(const VfSet& s) { return specialize_b(integrate(s)); }

}  // namespace tmotive
