#include "tmotive/res.hpp"

#include <algorithm>

namespace tmotive {

ResClass::ResClass(std::size_t dim, Int chi) : dim_(dim), chi_(chi) {
    if (dim_ == 0 && chi_ < 0)
        throw DomainError(DomainError::Kind::InvalidArgument,
                          "dimension-0 classes are counts and cannot be negative");
}

ResClass res_add(const ResClass& x, const ResClass& y) {
    return ResClass(std::max(x.dim(), y.dim()), x.chi() + y.chi());
}

ResClass res_mul(const ResClass& x, const ResClass& y) {
    return ResClass(x.dim() + y.dim(), x.chi() * y.chi());
}

ResGradedClass::ResGradedClass(std::size_t grade, std::size_t dim, Int chi)
    : grade_(grade), dim_(dim), chi_(chi) {
    if (dim_ > grade_)
        throw DomainError(DomainError::Kind::InvalidArgument,
                          "class dimension exceeds its ambient grade");
    if (grade_ == 0 && chi_ < 0)
        throw DomainError(DomainError::Kind::InvalidArgument,
                          "grade-0 classes are counts and cannot be negative");
}

ResGradedClass res_graded_add(const ResGradedClass& x, const ResGradedClass& y) {
    if (x.grade() != y.grade())
        throw DomainError(DomainError::Kind::GradeMismatch,
                          "GradeMismatch: cannot add classes of grades " +
                              std::to_string(x.grade()) + " and " + std::to_string(y.grade()));
    return ResGradedClass(x.grade(), std::max(x.dim(), y.dim()), x.chi() + y.chi());
}

ResGradedClass res_graded_mul(const ResGradedClass& x, const ResGradedClass& y) {
    return ResGradedClass(x.grade() + y.grade(), x.dim() + y.dim(), x.chi() * y.chi());
}

ResCellList::ResCellList(std::size_t grade, std::vector<std::size_t> cell_dims)
    : grade_(grade), cells_(std::move(cell_dims)) {
    for (std::size_t d : cells_)
        if (d > grade_)
            throw DomainError(DomainError::Kind::InvalidArgument,
                              "cell dimension exceeds the ambient grade");
    std::sort(cells_.begin(), cells_.end());
}

ResGradedClass res_class_of_cells(const ResCellList& cells) {
    std::size_t dim = 0;
    Int chi = 0;
    for (std::size_t d : cells.cell_dims()) {
        dim = std::max(dim, d);
        chi += (d % 2 == 0) ? 1 : -1;
    }
    return ResGradedClass(cells.grade(), dim, chi);
}

GradedYX res_embed(const ResGradedClass& x) {
    const Int sign = (x.grade() % 2 == 0) ? 1 : -1;
    return GradedYX::monomial(x.grade(), sign * x.chi(), 0);
}

}  // namespace tmotive
