#pragma once

// Deterministic random value generators shared by the property tests and
// the acceptance suite.

#include <random>
#include <vector>

#include "tmotive/gamma.hpp"
#include "tmotive/hahn.hpp"
#include "tmotive/res.hpp"
#include "tmotive/rvobj.hpp"
#include "tmotive/rvring.hpp"
#include "tmotive/vfset.hpp"

namespace tmotive::testgen {

using Rng = std::mt19937_64;

inline long pick(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline Rational random_rational(Rng& rng, long max_num = 9, long max_den = 6) {
    return Rational(pick(rng, -max_num, max_num), pick(rng, 1, max_den));
}

inline Rational random_nonzero_rational(Rng& rng, long max_num = 9, long max_den = 6) {
    while (true) {
        Rational r = random_rational(rng, max_num, max_den);
        if (!r.is_zero()) return r;
    }
}

inline Rational random_exponent(Rng& rng) {
    return Rational(pick(rng, -6, 6), pick(rng, 1, 3));
}

inline HahnSeries random_series(Rng& rng, int max_terms = 4) {
    std::vector<HahnTerm> terms;
    const int n = static_cast<int>(pick(rng, 0, max_terms));
    for (int i = 0; i < n; ++i) terms.push_back({random_exponent(rng), random_rational(rng)});
    return HahnSeries::from_terms(std::move(terms));
}

inline HahnSeries random_nonzero_series(Rng& rng, int max_terms = 4) {
    while (true) {
        HahnSeries s = random_series(rng, max_terms);
        if (!s.is_zero()) return s;
    }
}

inline GradedYX random_graded(Rng& rng, std::size_t max_degree = 3, long max_abs = 4) {
    GradedYX acc = GradedYX::constant(pick(rng, -max_abs, max_abs));
    const std::size_t top = static_cast<std::size_t>(pick(rng, 0, static_cast<long>(max_degree)));
    for (std::size_t d = 1; d <= top; ++d)
        acc = acc + GradedYX::monomial(d, pick(rng, -max_abs, max_abs), pick(rng, -max_abs, max_abs));
    return acc;
}

inline WForm random_wform(Rng& rng, long max_abs = 9) {
    return WForm(pick(rng, -max_abs, max_abs), pick(rng, -max_abs, max_abs));
}

inline ResClass random_res(Rng& rng) {
    const std::size_t dim = static_cast<std::size_t>(pick(rng, 0, 3));
    const Int chi = dim == 0 ? pick(rng, 0, 9) : pick(rng, -9, 9);
    return ResClass(dim, chi);
}

inline ResGradedClass random_res_graded(Rng& rng, std::size_t grade) {
    if (grade == 0) return ResGradedClass(0, 0, pick(rng, 0, 9));
    const std::size_t dim = static_cast<std::size_t>(pick(rng, 0, static_cast<long>(grade)));
    return ResGradedClass(grade, dim, pick(rng, -9, 9));
}

inline ResCellList random_cells(Rng& rng, std::size_t grade, int max_cells = 4) {
    std::vector<std::size_t> dims;
    const int n = static_cast<int>(pick(rng, 0, max_cells));
    for (int i = 0; i < n; ++i)
        dims.push_back(static_cast<std::size_t>(pick(rng, 0, static_cast<long>(grade))));
    return ResCellList(grade, std::move(dims));
}

inline GammaCell random_gamma_cell(Rng& rng, std::size_t grade) {
    std::vector<GammaEntry> e;
    for (std::size_t i = 0; i < grade; ++i) {
        switch (pick(rng, 0, 2)) {
            case 0: e.push_back(GammaEntry::Point); break;
            case 1: e.push_back(GammaEntry::BoundedOpen); break;
            default: e.push_back(GammaEntry::Ray); break;
        }
    }
    return GammaCell(std::move(e));
}

inline GammaSet random_gamma_set(Rng& rng, std::size_t grade, int max_cells = 3) {
    std::vector<GammaCell> cells;
    const int n = static_cast<int>(pick(rng, 1, max_cells));
    for (int i = 0; i < n; ++i) cells.push_back(random_gamma_cell(rng, grade));
    return GammaSet(std::move(cells));
}

// A box whose arity equals its intrinsic grade, with at least one marked
// unit coordinate so that a blowup is always available.
inline RvBox random_blowable_box(Rng& rng) {
    const std::size_t res_grade = static_cast<std::size_t>(pick(rng, 0, 2));
    const std::size_t gamma_grade = static_cast<std::size_t>(pick(rng, 0, 2));
    const std::size_t n_units = static_cast<std::size_t>(pick(rng, 1, 2));
    const std::size_t arity = res_grade + gamma_grade + n_units;
    std::vector<std::size_t> units;
    for (std::size_t i = 0; i < n_units; ++i) units.push_back(i + 1);
    return RvBox(random_cells(rng, res_grade), random_gamma_set(rng, gamma_grade), arity,
                 std::move(units));
}

inline RvObject random_object(Rng& rng, int max_boxes = 3) {
    std::vector<RvBox> boxes;
    const int n = static_cast<int>(pick(rng, 1, max_boxes));
    for (int i = 0; i < n; ++i) boxes.push_back(random_blowable_box(rng));
    return RvObject(std::move(boxes));
}

// Concrete pieces clustered around a given integer center so that callers
// can build provably disjoint unions by spacing the centers.
inline VfPiece random_piece(Rng& rng, long center) {
    const HahnSeries base =
        HahnSeries::from_terms({{Rational(0), Rational(center)},
                                {random_exponent(rng) + Rational(7), random_rational(rng)}});
    switch (pick(rng, 0, 4)) {
        case 0:
            return PointPiece{base};
        case 1:
            // positive radius keeps the disc infinitesimally close to its
            // center, so distinct integer centers give disjoint pieces
            return Disc{base, random_exponent(rng) + Rational(7), pick(rng, 0, 1) == 1};
        case 2:
            return HalfThin{base, random_exponent(rng) + Rational(7), pick(rng, 0, 1) ? 1 : -1};
        case 3: {
            // bounded interval with point or disc ends around the center
            const Rational gap(1, 4);
            HahnSeries lo = base;
            HahnSeries hi = base + HahnSeries::constant(gap);
            if (pick(rng, 0, 1)) {
                return VInterval{Endpoint::at_point(lo, pick(rng, 0, 1) == 1),
                                 Endpoint::at_point(hi, pick(rng, 0, 1) == 1)};
            }
            const Rational r1 = Rational(pick(rng, 3, 6));
            const Rational r2 = Rational(pick(rng, 3, 6));
            return VInterval{
                Endpoint::at_disc(Disc{lo, r1, pick(rng, 0, 1) == 1}, pick(rng, 0, 1) == 1),
                Endpoint::at_disc(Disc{hi, r2, pick(rng, 0, 1) == 1}, pick(rng, 0, 1) == 1)};
        }
        default: {
            const std::size_t gamma_grade = static_cast<std::size_t>(pick(rng, 0, 1));
            return RvPull{random_cells(rng, 1 - gamma_grade),
                          random_gamma_set(rng, gamma_grade), base};
        }
    }
}

// --------------------------------------------------------------------------
// Affine transformations of piece descriptions, for the invariance tests:
// x -> x + t and x -> s*x (radii shift by the valuation exponent of s; a
// negative s mirrors intervals and half annuli).
// --------------------------------------------------------------------------

inline Endpoint translate_endpoint(const Endpoint& e, const HahnSeries& t) {
    switch (e.kind) {
        case Endpoint::Kind::Point:
            return Endpoint::at_point(e.point + t, e.inclusive);
        case Endpoint::Kind::AtDisc:
            return Endpoint::at_disc(Disc{e.disc.center + t, e.disc.radius, e.disc.closed},
                                     e.inclusive);
        default:
            return e;
    }
}

inline VfPiece translate_piece(const VfPiece& p, const HahnSeries& t) {
    if (const auto* pt = std::get_if<PointPiece>(&p)) return PointPiece{pt->value + t};
    if (const auto* d = std::get_if<Disc>(&p)) return Disc{d->center + t, d->radius, d->closed};
    if (const auto* h = std::get_if<HalfThin>(&p))
        return HalfThin{h->center + t, h->radius, h->side};
    if (const auto* r = std::get_if<RvPull>(&p))
        return RvPull{r->res, r->gamma, r->translate + t};
    const auto& v = std::get<VInterval>(p);
    return VInterval{translate_endpoint(v.lo, t), translate_endpoint(v.hi, t)};
}

inline Endpoint scale_endpoint(const Endpoint& e, const HahnSeries& s, bool flip) {
    const Rational shift = s.min_exponent();
    Endpoint out = e;
    switch (e.kind) {
        case Endpoint::Kind::Point:
            out = Endpoint::at_point(e.point * s, e.inclusive);
            break;
        case Endpoint::Kind::AtDisc:
            out = Endpoint::at_disc(Disc{e.disc.center * s, e.disc.radius + shift, e.disc.closed},
                                    e.inclusive);
            break;
        case Endpoint::Kind::NegInfinity:
            out = flip ? Endpoint::pos_infinity() : e;
            break;
        case Endpoint::Kind::PosInfinity:
            out = flip ? Endpoint::neg_infinity() : e;
            break;
    }
    return out;
}

inline VfPiece scale_piece(const VfPiece& p, const HahnSeries& s) {
    const Rational shift = s.min_exponent();
    const bool flip = s.sign() < 0;
    if (const auto* pt = std::get_if<PointPiece>(&p)) return PointPiece{pt->value * s};
    if (const auto* d = std::get_if<Disc>(&p))
        return Disc{d->center * s, d->radius + shift, d->closed};
    if (const auto* h = std::get_if<HalfThin>(&p))
        return HalfThin{h->center * s, h->radius + shift, flip ? -h->side : h->side};
    if (const auto* r = std::get_if<RvPull>(&p))
        return RvPull{r->res, r->gamma, r->translate * s};
    const auto& v = std::get<VInterval>(p);
    Endpoint lo = scale_endpoint(v.lo, s, flip);
    Endpoint hi = scale_endpoint(v.hi, s, flip);
    if (flip) std::swap(lo, hi);
    return VInterval{lo, hi};
}

}  // namespace tmotive::testgen
