#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tmotive/rvring.hpp"

namespace tmotive {

// Isomorphism class in the ungraded residue-sort semiring: a (dimension,
// Euler characteristic) pair. Dimension-0 classes are counts, so chi >= 0
// there. Kept alongside the graded form for testing the explicit laws.
class ResClass {
public:
    ResClass(std::size_t dim, Int chi);

    std::size_t dim() const { return dim_; }
    Int chi() const { return chi_; }

    friend bool operator==(const ResClass&, const ResClass&) = default;

private:
    std::size_t dim_;
    Int chi_;
};

// (max dim, sum of chi)
ResClass res_add(const ResClass& x, const ResClass& y);
// (sum of dims, product of chi)
ResClass res_mul(const ResClass& x, const ResClass& y);

// Class in the graded semiring: ambient grade k, dimension i <= k, chi.
// Grade 0 classes are counts (i = 0, chi >= 0). (k, 0, 0) is the zero of
// grade k.
class ResGradedClass {
public:
    ResGradedClass(std::size_t grade, std::size_t dim, Int chi);

    static ResGradedClass zero(std::size_t grade) { return {grade, 0, 0}; }
    static ResGradedClass unit() { return {0, 0, 1}; }

    std::size_t grade() const { return grade_; }
    std::size_t dim() const { return dim_; }
    Int chi() const { return chi_; }
    bool is_zero() const { return chi_ == 0 && dim_ == 0; }

    friend bool operator==(const ResGradedClass&, const ResGradedClass&) = default;

private:
    std::size_t grade_;
    std::size_t dim_;
    Int chi_;
};

// (k, max{i, i'}, a + a'); throws GradeMismatch when the grades differ.
ResGradedClass res_graded_add(const ResGradedClass& x, const ResGradedClass& y);
// (k + l, i + j, a * b)
ResGradedClass res_graded_mul(const ResGradedClass& x, const ResGradedClass& y);

// A set in a power of the positive residue sort, given as a multiset of
// open-cell dimensions inside ambient grade k. Cell decomposition is the
// caller's job; only (dimension, chi) data survives into classes.
class ResCellList {
public:
    ResCellList(std::size_t grade, std::vector<std::size_t> cell_dims);

    std::size_t grade() const { return grade_; }
    const std::vector<std::size_t>& cell_dims() const { return cells_; }

    friend bool operator==(const ResCellList&, const ResCellList&) = default;

private:
    std::size_t grade_;
    std::vector<std::size_t> cells_;  // sorted ascending
};

// (k, max cell dimension, alternating sum of (-1)^dim)
ResGradedClass res_class_of_cells(const ResCellList& cells);

// Embedding into the graded ring with the involution twist:
// chi * (-X)^grade. In particular a one-point set in grade 1 lands on -X
// while the full positive residue line lands on X.
GradedYX res_embed(const ResGradedClass& x);

}  // namespace tmotive
