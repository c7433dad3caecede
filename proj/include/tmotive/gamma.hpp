#pragma once

#include <cstddef>
#include <vector>

#include "tmotive/rvring.hpp"

namespace tmotive {

// Combinatorial cell kinds in the signed value group. Endpoints are
// irrelevant at class level: all bounded open intervals with definable
// endpoints share one class, all open rays share the class of H.
enum class GammaEntry {
    Point,        // [e], class X
    BoundedOpen,  // bounded open interval, class -X
    Ray,          // unbounded open ray (H or its mirror), class YX
};

// One cell of Gamma^k: a sequence of k entries. Ambient padding is done
// with explicit Point entries, so the grade is always the length.
class GammaCell {
public:
    GammaCell() = default;
    explicit GammaCell(std::vector<GammaEntry> entries) : entries_(std::move(entries)) {}

    std::size_t grade() const { return entries_.size(); }
    const std::vector<GammaEntry>& entries() const { return entries_; }

    friend bool operator==(const GammaCell&, const GammaCell&) = default;

private:
    std::vector<GammaEntry> entries_;
};

// Finite multiset of equal-grade cells with disjoint-union semantics.
class GammaSet {
public:
    // Empty set of the given grade.
    explicit GammaSet(std::size_t grade) : grade_(grade) {}
    explicit GammaSet(std::vector<GammaCell> cells);

    static GammaSet unit() { return GammaSet(std::vector<GammaCell>{GammaCell{}}); }

    std::size_t grade() const { return grade_; }
    const std::vector<GammaCell>& cells() const { return cells_; }
    bool empty() const { return cells_.empty(); }

    friend bool operator==(const GammaSet&, const GammaSet&) = default;

private:
    std::size_t grade_ = 0;
    std::vector<GammaCell> cells_;
};

// Degree-1 class of a single entry.
GradedYX gamma_entry_class(GammaEntry e);

// Product of the per-entry classes, homogeneous of the cell's grade.
GradedYX gamma_class(const GammaCell& cell);

// Sum over the cells; homogeneous of the set's grade.
GradedYX gamma_class(const GammaSet& s);

// The two Euler characteristics on the value group, evaluated through the
// graded class: Y -> -1, X -> 1 resp. Y -> 0, X -> 1. They disagree
// exactly on rays (-1 versus 0).
Int chi_gamma_g(const GammaSet& s);
Int chi_gamma_b(const GammaSet& s);

}  // namespace tmotive
