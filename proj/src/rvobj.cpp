#include "tmotive/rvobj.hpp"

#include <algorithm>

namespace tmotive {

GradedYX assemble(const ResGradedClass& res, const GammaSet& gamma) {
    return res_embed(res) * gamma_class(gamma);
}

RvBox::RvBox(ResCellList res, GammaSet gamma, std::size_t arity,
             std::vector<std::size_t> unit_coords)
    : res_(std::move(res)), gamma_(std::move(gamma)), arity_(arity),
      units_(std::move(unit_coords)) {
    std::sort(units_.begin(), units_.end());
    if (std::adjacent_find(units_.begin(), units_.end()) != units_.end())
        throw DomainError(DomainError::Kind::InvalidArgument,
                          "duplicate unit coordinate marking");
    for (std::size_t u : units_)
        if (u < 1 || u > arity_)
            throw DomainError(DomainError::Kind::InvalidArgument,
                              "unit coordinate outside 1..arity");
}

bool RvBox::is_unit_coord(std::size_t coord) const {
    return std::binary_search(units_.begin(), units_.end(), coord);
}

RvBox box_concat(const RvBox& a, const RvBox& b) {
    std::vector<std::size_t> dims = a.res().cell_dims();
    std::vector<std::size_t> prod_dims;
    if (dims.empty() || b.res().cell_dims().empty()) {
        // a product with the empty set is empty
    } else {
        for (std::size_t da : dims)
            for (std::size_t db : b.res().cell_dims()) prod_dims.push_back(da + db);
    }
    ResCellList res(a.res().grade() + b.res().grade(), std::move(prod_dims));

    std::vector<GammaCell> cells;
    for (const auto& ca : a.gamma().cells())
        for (const auto& cb : b.gamma().cells()) {
            std::vector<GammaEntry> e = ca.entries();
            e.insert(e.end(), cb.entries().begin(), cb.entries().end());
            cells.emplace_back(std::move(e));
        }
    GammaSet gamma = cells.empty()
                         ? GammaSet(a.gamma().grade() + b.gamma().grade())
                         : GammaSet(std::move(cells));

    std::vector<std::size_t> units = a.unit_coords();
    for (std::size_t u : b.unit_coords()) units.push_back(u + a.arity());
    return RvBox(std::move(res), std::move(gamma), a.arity() + b.arity(), std::move(units));
}

RvObject RvObject::disjoint_union(const RvObject& other) const {
    std::vector<RvBox> all = boxes_;
    all.insert(all.end(), other.boxes_.begin(), other.boxes_.end());
    return RvObject(std::move(all));
}

GradedYX rv_class(const RvBox& box) {
    ResGradedClass r = res_class_of_cells(box.res());
    for (std::size_t i = 0; i < box.unit_coords().size(); ++i)
        r = res_graded_mul(r, ResGradedClass(1, 0, 1));
    const GradedYX e = assemble(r, box.gamma());
    if (e.is_zero()) return GradedYX::zero();
    const std::size_t d = r.grade() + box.gamma().grade();
    const YCoeff c = e.coeff(d);
    if (c.n != 0 && box.arity() == 0)
        throw DomainError(DomainError::Kind::InvalidArgument,
                          "box class carries a ray factor but has arity 0");
    return GradedYX::monomial(box.arity(), c.m, c.n);
}

GradedYX rv_class(const RvObject& obj) {
    GradedYX r = GradedYX::zero();
    for (const auto& b : obj.boxes()) r = r + rv_class(b);
    return r;
}

RvObject blowup(const RvObject& obj, std::size_t box_index, std::size_t coord) {
    if (box_index >= obj.boxes().size())
        throw DomainError(DomainError::Kind::InvalidArgument,
                          "box index out of range");
    const RvBox& box = obj.boxes()[box_index];
    if (!box.is_unit_coord(coord))
        throw DomainError(DomainError::Kind::InvalidBlowupCoordinate,
                          "InvalidBlowupCoordinate: coordinate " + std::to_string(coord) +
                              " is not a marked unit coordinate");

    // Remaining unit marks: the deleted-coordinate box shifts indices above
    // the deleted coordinate down by one, the ray box keeps them in place.
    std::vector<std::size_t> low_units;
    std::vector<std::size_t> high_units;
    for (std::size_t u : box.unit_coords()) {
        if (u == coord) continue;
        high_units.push_back(u);
        low_units.push_back(u > coord ? u - 1 : u);
    }

    // The s = 0 part: the coordinate is deleted and the grade drops by one.
    RvBox low(box.res(), box.gamma(), box.arity() - 1, std::move(low_units));
    try {
        (void)rv_class(low);
    } catch (const DomainError&) {
        throw DomainError(DomainError::Kind::InvalidBlowupCoordinate,
                          "InvalidBlowupCoordinate: deleting the coordinate leaves a "
                          "ray-carrying factor with arity 0");
    }

    // The punctured part: the coordinate now carries the pair of open rays.
    std::vector<GammaCell> ray_cells;
    ray_cells.reserve(2 * box.gamma().cells().size());
    for (const auto& c : box.gamma().cells()) {
        std::vector<GammaEntry> e = c.entries();
        e.push_back(GammaEntry::Ray);
        ray_cells.emplace_back(e);
        ray_cells.emplace_back(std::move(e));
    }
    GammaSet ray_gamma = ray_cells.empty() ? GammaSet(box.gamma().grade() + 1)
                                           : GammaSet(std::move(ray_cells));
    RvBox high(box.res(), std::move(ray_gamma), box.arity(), std::move(high_units));

    std::vector<RvBox> out;
    out.reserve(obj.boxes().size() + 1);
    for (std::size_t i = 0; i < obj.boxes().size(); ++i) {
        if (i == box_index) {
            out.push_back(std::move(low));
            out.push_back(std::move(high));
        } else {
            out.push_back(obj.boxes()[i]);
        }
    }
    return RvObject(std::move(out));
}

bool isp_equiv(const RvObject& a, const RvObject& b) {
    return quotient_reduce(rv_class(a) - rv_class(b)).is_zero();
}

}  // namespace tmotive
