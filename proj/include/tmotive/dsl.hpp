#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tmotive/hahn.hpp"
#include "tmotive/rvobj.hpp"
#include "tmotive/rvring.hpp"
#include "tmotive/vfset.hpp"

namespace tmotive::dsl {

// S-expression node. Atoms keep their token text; rationals are normalized
// during typed extraction.
struct Ast {
    bool is_atom = false;
    std::string atom;
    std::vector<Ast> children;
    SourceSpan span;
};

bool ast_equal(const Ast& a, const Ast& b);

// Reads exactly one form (plus surrounding whitespace). Throws ParseError
// with the offending span.
Ast parse_sexpr(std::string_view text);
std::string render_sexpr(const Ast& ast);

// Typed readers for the two file kinds.
VfSet parse_vfset(std::string_view text);
RvObject parse_rvobject(std::string_view text);

// Infix canonical text forms (series "3*t^(1/2) + -1*t^2", graded ring
// elements "1 + (1 + 2*Y)*X", quotient elements "a + b*w"). The renderers in
// the algebra modules round-trip bit-exactly through these.
Rational parse_rational(std::string_view text);
HahnSeries parse_series_text(std::string_view text);
GradedYX parse_graded_text(std::string_view text);
WForm parse_wform_text(std::string_view text);

// Canonical one-line rendering of an object file body.
std::string render_rvobject(const RvObject& obj);

}  // namespace tmotive::dsl
