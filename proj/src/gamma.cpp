#include "tmotive/gamma.hpp"

namespace tmotive {

GammaSet::GammaSet(std::vector<GammaCell> cells) : cells_(std::move(cells)) {
    if (!cells_.empty()) {
        grade_ = cells_.front().grade();
        for (const auto& c : cells_)
            if (c.grade() != grade_)
                throw DomainError(DomainError::Kind::GradeMismatch,
                                  "GradeMismatch: cells of a Gamma set must share one grade");
    }
}

GradedYX gamma_entry_class(GammaEntry e) {
    switch (e) {
        case GammaEntry::Point:
            return GradedYX::x();
        case GammaEntry::BoundedOpen:
            return -GradedYX::x();
        case GammaEntry::Ray:
            return GradedYX::yx();
    }
    return GradedYX::zero();
}

GradedYX gamma_class(const GammaCell& cell) {
    GradedYX r = GradedYX::one();
    for (GammaEntry e : cell.entries()) r = r * gamma_entry_class(e);
    return r;
}

GradedYX gamma_class(const GammaSet& s) {
    GradedYX r = GradedYX::zero();
    for (const auto& c : s.cells()) r = r + gamma_class(c);
    return r;
}

static Int evaluate_at_x1(const std::vector<Int>& poly) {
    Int v = 0;
    for (Int c : poly) v += c;
    return v;
}

Int chi_gamma_g(const GammaSet& s) { return evaluate_at_x1(retract_g(gamma_class(s))); }
Int chi_gamma_b(const GammaSet& s) { return evaluate_at_x1(retract_b(gamma_class(s))); }

}  // namespace tmotive
