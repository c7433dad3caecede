#pragma once

#include <cstddef>
#include <vector>

#include "tmotive/gamma.hpp"
#include "tmotive/res.hpp"
#include "tmotive/rvring.hpp"

namespace tmotive {

// Class of the tamped product U x I^sharp: the twisted residue embedding
// times the value-group class. Homogeneous of the summed grade.
GradedYX assemble(const ResGradedClass& res, const GammaSet& gamma);

// A tamped box: a residue-sort factor, a value-group factor, explicitly
// marked unit coordinates (each holding the one-point set {1}), and the
// target arity of the finite-to-one map. Only the arity of the map is
// tracked; classes depend on nothing else. Blowups are permitted exactly
// at marked unit coordinates.
class RvBox {
public:
    RvBox(ResCellList res, GammaSet gamma, std::size_t arity,
          std::vector<std::size_t> unit_coords = {});

    const ResCellList& res() const { return res_; }
    const GammaSet& gamma() const { return gamma_; }
    std::size_t arity() const { return arity_; }
    // 1-based coordinate indices, sorted ascending.
    const std::vector<std::size_t>& unit_coords() const { return units_; }

    bool is_unit_coord(std::size_t coord) const;

    friend bool operator==(const RvBox&, const RvBox&) = default;

private:
    ResCellList res_;
    GammaSet gamma_;
    std::size_t arity_;
    std::vector<std::size_t> units_;
};

// Cartesian product of two boxes: grades, arities and unit markings
// concatenate; the second factor's coordinates shift up.
RvBox box_concat(const RvBox& a, const RvBox& b);

// Finite disjoint union of boxes. Boxes of arity k form the grade-k
// summand; mixed arities represent elements of the graded direct sum.
class RvObject {
public:
    RvObject() = default;
    explicit RvObject(std::vector<RvBox> boxes) : boxes_(std::move(boxes)) {}

    const std::vector<RvBox>& boxes() const { return boxes_; }
    bool empty() const { return boxes_.empty(); }

    RvObject disjoint_union(const RvObject& other) const;

    friend bool operator==(const RvObject&, const RvObject&) = default;

private:
    std::vector<RvBox> boxes_;
};

// Groupified class of a box: the assembled coefficient placed in degree
// arity. Throws when a Y-carrying coefficient would land in degree 0.
GradedYX rv_class(const RvBox& box);
GradedYX rv_class(const RvObject& obj);

// Elementary blowup of one box at a marked unit coordinate: the box is
// replaced by (i) the box with that coordinate deleted, one grade down,
// and (ii) the box with the coordinate carrying the pair of open rays.
// box_index is 0-based, coord is 1-based. Throws InvalidBlowupCoordinate
// when coord is not a marked unit coordinate of the box.
RvObject blowup(const RvObject& obj, std::size_t box_index, std::size_t coord);

// Congruence test at the groupified-class level: the difference of the
// classes must vanish in the quotient by (1 + 2YX + X).
bool isp_equiv(const RvObject& a, const RvObject& b);

}  // namespace tmotive
