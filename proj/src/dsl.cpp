#include "tmotive/dsl.hpp"

#include <charconv>
#include <optional>

namespace tmotive::dsl {
namespace {

bool is_token_char(char c) {
    return c != '(' && c != ')' && c != ' ' && c != '\t' && c != '\n' && c != '\r';
}

struct SexprReader {
    std::string_view text;
    std::size_t pos = 0;
    std::size_t line = 1;
    std::size_t col = 1;

    bool eof() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }

    void advance() {
        if (text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }

    void skip_ws() {
        while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\n' || peek() == '\r'))
            advance();
    }

    SourceSpan here() const { return {pos, pos, line, col}; }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError("parse error at " + std::to_string(line) + ":" + std::to_string(col) +
                             ": " + message,
                         here());
    }

    Ast read_form() {
        skip_ws();
        if (eof()) fail("expected a form, found end of input");
        SourceSpan start = here();
        if (peek() == ')') fail("unexpected ')'");
        if (peek() == '(') {
            advance();
            Ast node;
            node.is_atom = false;
            node.span = start;
            while (true) {
                skip_ws();
                if (eof()) fail("expected ')' before end of input");
                if (peek() == ')') {
                    advance();
                    break;
                }
                node.children.push_back(read_form());
            }
            node.span.end = pos;
            return node;
        }
        Ast node;
        node.is_atom = true;
        node.span = start;
        while (!eof() && is_token_char(peek())) {
            node.atom += peek();
            advance();
        }
        node.span.end = pos;
        return node;
    }
};

[[noreturn]] void fail_at(const Ast& node, const std::string& message) {
    throw ParseError("parse error at " + std::to_string(node.span.line) + ":" +
                         std::to_string(node.span.column) + ": " + message,
                     node.span);
}

const Ast& expect_form(const Ast& node, std::string_view head, std::size_t min_args,
                       std::size_t max_args) {
    if (node.is_atom) fail_at(node, "expected (" + std::string(head) + " ...)");
    if (node.children.empty() || !node.children.front().is_atom ||
        node.children.front().atom != head)
        fail_at(node, "expected (" + std::string(head) + " ...)");
    const std::size_t args = node.children.size() - 1;
    if (args < min_args || args > max_args)
        fail_at(node, "(" + std::string(head) + " ...) takes " + std::to_string(min_args) +
                          (min_args == max_args ? "" : ".." + std::to_string(max_args)) +
                          " arguments, found " + std::to_string(args));
    return node;
}

std::string head_of(const Ast& node) {
    if (node.is_atom || node.children.empty() || !node.children.front().is_atom) return "";
    return node.children.front().atom;
}

Rational rational_from_text(std::string_view t, const Ast& at) {
    std::size_t i = 0;
    const auto digits = [&](std::size_t from) {
        std::size_t j = from;
        while (j < t.size() && t[j] >= '0' && t[j] <= '9') ++j;
        return j;
    };
    if (i < t.size() && (t[i] == '+' || t[i] == '-')) ++i;
    std::size_t num_end = digits(i);
    if (num_end == i) fail_at(at, "expected a rational literal, found '" + std::string(t) + "'");
    BigInt num(std::string(t.substr(0, num_end)));
    BigInt den(1);
    if (num_end < t.size()) {
        if (t[num_end] != '/') fail_at(at, "malformed rational '" + std::string(t) + "'");
        std::size_t den_end = digits(num_end + 1);
        if (den_end == num_end + 1 || den_end != t.size())
            fail_at(at, "malformed rational '" + std::string(t) + "'");
        den = BigInt(std::string(t.substr(num_end + 1, den_end - num_end - 1)));
        if (den == 0) fail_at(at, "rational with zero denominator");
    }
    return Rational(std::move(num), std::move(den));
}

Rational rational_from_atom(const Ast& node) {
    if (!node.is_atom) fail_at(node, "expected a rational literal");
    return rational_from_text(node.atom, node);
}

std::size_t nat_from_atom(const Ast& node) {
    if (!node.is_atom) fail_at(node, "expected a natural number");
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(node.atom.data(), node.atom.data() + node.atom.size(), v);
    if (ec != std::errc() || p != node.atom.data() + node.atom.size())
        fail_at(node, "expected a natural number, found '" + node.atom + "'");
    return v;
}

Int int_from_atom(const Ast& node) {
    if (!node.is_atom) fail_at(node, "expected an integer");
    Int v = 0;
    auto [p, ec] = std::from_chars(node.atom.data(), node.atom.data() + node.atom.size(), v);
    if (ec != std::errc() || p != node.atom.data() + node.atom.size())
        fail_at(node, "expected an integer, found '" + node.atom + "'");
    return v;
}

// (series (term EXP COEFF) ...) or a bare rational atom as the constant
// series, e.g. (point 0).
HahnSeries series_from_ast(const Ast& node) {
    if (node.is_atom) return HahnSeries::constant(rational_from_atom(node));
    expect_form(node, "series", 0, static_cast<std::size_t>(-1));
    std::vector<HahnTerm> terms;
    for (std::size_t i = 1; i < node.children.size(); ++i) {
        const Ast& t = expect_form(node.children[i], "term", 2, 2);
        terms.push_back({rational_from_atom(t.children[1]), rational_from_atom(t.children[2])});
    }
    return HahnSeries::from_terms(std::move(terms));
}

ResCellList rescells_from_ast(const Ast& node) {
    const std::string head = head_of(node);
    if (head == "res") {
        expect_form(node, "res", 2, 2);
        const std::size_t grade = nat_from_atom(node.children[1]);
        const Ast& cells = expect_form(node.children[2], "cells", 0, static_cast<std::size_t>(-1));
        std::vector<std::size_t> dims;
        for (std::size_t i = 1; i < cells.children.size(); ++i)
            dims.push_back(nat_from_atom(cells.children[i]));
        try {
            return ResCellList(grade, std::move(dims));
        } catch (const DomainError& e) {
            fail_at(node, e.what());
        }
    }
    if (head == "resclass") {
        expect_form(node, "resclass", 3, 3);
        const std::size_t grade = nat_from_atom(node.children[1]);
        const std::size_t dim = nat_from_atom(node.children[2]);
        const Int chi = int_from_atom(node.children[3]);
        if (dim > grade) fail_at(node, "class dimension exceeds its grade");
        // realize the class by cells: one top-dimensional cell padded by
        // points (+1) or open arcs (-1)
        std::vector<std::size_t> dims;
        if (dim == 0) {
            if (chi < 0) fail_at(node, "a dimension-0 class is a count and cannot be negative");
            dims.assign(static_cast<std::size_t>(chi), 0);
        } else {
            dims.push_back(dim);
            Int delta = chi - (dim % 2 == 0 ? 1 : -1);
            for (; delta > 0; --delta) dims.push_back(0);
            for (; delta < 0; ++delta) dims.push_back(1);
        }
        return ResCellList(grade, std::move(dims));
    }
    fail_at(node, "expected (res ...) or (resclass ...)");
}

GammaSet gset_from_ast(const Ast& node) {
    expect_form(node, "gset", 0, static_cast<std::size_t>(-1));
    std::vector<GammaCell> cells;
    for (std::size_t i = 1; i < node.children.size(); ++i) {
        const Ast& c = expect_form(node.children[i], "gcell", 0, static_cast<std::size_t>(-1));
        std::vector<GammaEntry> entries;
        for (std::size_t j = 1; j < c.children.size(); ++j) {
            const Ast& e = c.children[j];
            if (e.is_atom && e.atom == "pt")
                entries.push_back(GammaEntry::Point);
            else if (e.is_atom && e.atom == "bopen")
                entries.push_back(GammaEntry::BoundedOpen);
            else if (e.is_atom && e.atom == "ray")
                entries.push_back(GammaEntry::Ray);
            else
                fail_at(e, "expected pt, bopen or ray");
        }
        cells.emplace_back(std::move(entries));
    }
    if (cells.empty()) return GammaSet(std::size_t{0});
    try {
        return GammaSet(std::move(cells));
    } catch (const DomainError& e) {
        fail_at(node, e.what());
    }
}

Disc disc_from_ast(const Ast& node, bool closed) {
    expect_form(node, closed ? "cdisc" : "odisc", 2, 2);
    return Disc{series_from_ast(node.children[1]), rational_from_atom(node.children[2]), closed};
}

Endpoint endpoint_from_ast(const Ast& node, bool inclusive) {
    if (node.is_atom) {
        if (node.atom == "-inf") {
            Endpoint e = Endpoint::neg_infinity();
            e.inclusive = inclusive;
            return e;
        }
        if (node.atom == "+inf") {
            Endpoint e = Endpoint::pos_infinity();
            e.inclusive = inclusive;
            return e;
        }
        fail_at(node, "expected an endpoint: (point ...), (odisc ...), (cdisc ...), -inf, +inf");
    }
    const std::string head = head_of(node);
    if (head == "point") {
        expect_form(node, "point", 1, 1);
        return Endpoint::at_point(series_from_ast(node.children[1]), inclusive);
    }
    if (head == "odisc") return Endpoint::at_disc(disc_from_ast(node, false), inclusive);
    if (head == "cdisc") return Endpoint::at_disc(disc_from_ast(node, true), inclusive);
    fail_at(node, "expected an endpoint: (point ...), (odisc ...), (cdisc ...), -inf, +inf");
}

Endpoint bound_from_ast(const Ast& node, std::string_view which) {
    expect_form(node, which, 1, 2);
    bool inclusive = false;
    if (node.children.size() == 3) {
        const Ast& flag = node.children[2];
        if (flag.is_atom && flag.atom == "incl")
            inclusive = true;
        else if (flag.is_atom && flag.atom == "excl")
            inclusive = false;
        else
            fail_at(flag, "expected incl or excl");
    }
    return endpoint_from_ast(node.children[1], inclusive);
}

VfPiece piece_from_ast(const Ast& node) {
    const std::string head = head_of(node);
    if (head == "point") {
        expect_form(node, "point", 1, 1);
        return PointPiece{series_from_ast(node.children[1])};
    }
    if (head == "odisc") return disc_from_ast(node, false);
    if (head == "cdisc") return disc_from_ast(node, true);
    if (head == "vint") {
        expect_form(node, "vint", 2, 2);
        return VInterval{bound_from_ast(node.children[1], "lo"),
                         bound_from_ast(node.children[2], "hi")};
    }
    if (head == "halfthin") {
        expect_form(node, "halfthin", 3, 3);
        const Ast& sign = node.children[3];
        int side = 0;
        if (sign.is_atom && sign.atom == "+")
            side = 1;
        else if (sign.is_atom && sign.atom == "-")
            side = -1;
        else
            fail_at(sign, "expected + or -");
        return HalfThin{series_from_ast(node.children[1]), rational_from_atom(node.children[2]),
                        side};
    }
    if (head == "rvpull") {
        expect_form(node, "rvpull", 3, 3);
        return RvPull{rescells_from_ast(node.children[1]), gset_from_ast(node.children[2]),
                      series_from_ast(node.children[3])};
    }
    fail_at(node, "expected a piece: (point ...), (odisc ...), (cdisc ...), (vint ...), "
                  "(halfthin ...) or (rvpull ...)");
}

VfProduct product_from_ast(const Ast& node) {
    if (head_of(node) == "prod") {
        expect_form(node, "prod", 1, static_cast<std::size_t>(-1));
        VfProduct t;
        for (std::size_t i = 1; i < node.children.size(); ++i)
            t.factors.push_back(piece_from_ast(node.children[i]));
        return t;
    }
    return VfProduct{{piece_from_ast(node)}};
}

RvBox box_from_ast(const Ast& node) {
    expect_form(node, "box", 3, 4);
    ResCellList res = rescells_from_ast(node.children[1]);
    GammaSet gamma = gset_from_ast(node.children[2]);
    const std::size_t arity = nat_from_atom(node.children[3]);
    std::vector<std::size_t> units;
    if (node.children.size() == 5) {
        const Ast& u = expect_form(node.children[4], "units", 1, static_cast<std::size_t>(-1));
        for (std::size_t i = 1; i < u.children.size(); ++i)
            units.push_back(nat_from_atom(u.children[i]));
    }
    try {
        return RvBox(std::move(res), std::move(gamma), arity, std::move(units));
    } catch (const DomainError& e) {
        fail_at(node, e.what());
    }
}

}  // namespace

bool ast_equal(const Ast& a, const Ast& b) {
    if (a.is_atom != b.is_atom) return false;
    if (a.is_atom) return a.atom == b.atom;
    if (a.children.size() != b.children.size()) return false;
    for (std::size_t i = 0; i < a.children.size(); ++i)
        if (!ast_equal(a.children[i], b.children[i])) return false;
    return true;
}

Ast parse_sexpr(std::string_view text) {
    SexprReader r{text};
    Ast ast = r.read_form();
    r.skip_ws();
    if (!r.eof()) r.fail("trailing content after the form");
    return ast;
}

std::string render_sexpr(const Ast& ast) {
    if (ast.is_atom) return ast.atom;
    std::string out = "(";
    for (std::size_t i = 0; i < ast.children.size(); ++i) {
        if (i > 0) out += ' ';
        out += render_sexpr(ast.children[i]);
    }
    out += ')';
    return out;
}

VfSet parse_vfset(std::string_view text) {
    Ast ast = parse_sexpr(text);
    VfSet s;
    if (head_of(ast) == "union") {
        for (std::size_t i = 1; i < ast.children.size(); ++i)
            s.terms.push_back(product_from_ast(ast.children[i]));
    } else {
        s.terms.push_back(product_from_ast(ast));
    }
    return s;
}

namespace {

// OBJ := (rvobj BOX*) | (blowup OBJ boxIndex coord), indices 1-based.
// Blowup failures on a well-formed file are domain errors, not parse errors.
RvObject object_from_ast(const Ast& ast) {
    if (head_of(ast) == "blowup") {
        expect_form(ast, "blowup", 3, 3);
        RvObject base = object_from_ast(ast.children[1]);
        const std::size_t index = nat_from_atom(ast.children[2]);
        if (index < 1) fail_at(ast.children[2], "box indices are 1-based");
        return blowup(base, index - 1, nat_from_atom(ast.children[3]));
    }
    const Ast& node = expect_form(ast, "rvobj", 0, static_cast<std::size_t>(-1));
    std::vector<RvBox> boxes;
    for (std::size_t i = 1; i < node.children.size(); ++i)
        boxes.push_back(box_from_ast(node.children[i]));
    return RvObject(std::move(boxes));
}

}  // namespace

RvObject parse_rvobject(std::string_view text) { return object_from_ast(parse_sexpr(text)); }

// --------------------------- infix text forms ------------------------------

namespace {

struct TextCursor {
    std::string_view s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    }
    bool eof() const { return i >= s.size(); }
    char peek() const { return s[i]; }

    [[noreturn]] void fail(const std::string& message) const {
        SourceSpan span{i, i, 1, i + 1};
        throw ParseError("parse error at 1:" + std::to_string(i + 1) + ": " + message, span);
    }

    void expect(char c) {
        if (eof() || peek() != c) fail(std::string("expected '") + c + "'");
        ++i;
    }

    bool try_consume(char c) {
        if (!eof() && peek() == c) {
            ++i;
            return true;
        }
        return false;
    }

    Rational read_rational() {
        skip_ws();
        const std::size_t start = i;
        if (!eof() && (peek() == '+' || peek() == '-')) ++i;
        const std::size_t digits_start = i;
        while (!eof() && peek() >= '0' && peek() <= '9') ++i;
        if (i == digits_start) fail("expected a rational literal");
        if (!eof() && peek() == '/') {
            ++i;
            const std::size_t den_start = i;
            while (!eof() && peek() >= '0' && peek() <= '9') ++i;
            if (i == den_start) fail("expected digits after '/'");
        }
        std::string_view tok = s.substr(start, i - start);
        Ast at;
        at.is_atom = true;
        at.atom = std::string(tok);
        at.span = {start, i, 1, start + 1};
        return rational_from_text(tok, at);
    }

    Int read_int() {
        Rational r = read_rational();
        if (!r.is_integer()) fail("expected an integer");
        BigInt n = r.numerator();
        if (n > std::numeric_limits<Int>::max() || n < std::numeric_limits<Int>::min())
            fail("integer out of range");
        return static_cast<Int>(n);
    }

    void finish() {
        skip_ws();
        if (!eof()) fail("trailing content");
    }
};

}  // namespace

Rational parse_rational(std::string_view text) {
    TextCursor c{text};
    Rational r = c.read_rational();
    c.finish();
    return r;
}

HahnSeries parse_series_text(std::string_view text) {
    TextCursor c{text};
    std::vector<HahnTerm> terms;
    while (true) {
        Rational coeff = c.read_rational();
        Rational exponent(0);
        c.skip_ws();
        if (c.try_consume('*')) {
            c.skip_ws();
            c.expect('t');
            c.expect('^');
            c.skip_ws();
            if (c.try_consume('(')) {
                exponent = c.read_rational();
                c.skip_ws();
                c.expect(')');
            } else {
                exponent = c.read_rational();
            }
        }
        terms.push_back({std::move(exponent), std::move(coeff)});
        c.skip_ws();
        if (!c.try_consume('+')) break;
    }
    c.finish();
    return HahnSeries::from_terms(std::move(terms));
}

GradedYX parse_graded_text(std::string_view text) {
    TextCursor c{text};
    GradedYX acc = GradedYX::zero();
    while (true) {
        c.skip_ws();
        if (c.try_consume('(')) {
            const Int m = c.read_int();
            c.skip_ws();
            c.expect('+');
            const Int n = c.read_int();
            c.skip_ws();
            c.expect('*');
            c.expect('Y');
            c.skip_ws();
            c.expect(')');
            c.skip_ws();
            c.expect('*');
            c.expect('X');
            std::size_t degree = 1;
            if (c.try_consume('^')) {
                const Int d = c.read_int();
                if (d < 1) c.fail("X power must be at least 1");
                degree = static_cast<std::size_t>(d);
            }
            acc = acc + GradedYX::monomial(degree, m, n);
        } else {
            acc = acc + GradedYX::constant(c.read_int());
        }
        c.skip_ws();
        if (!c.try_consume('+')) break;
    }
    c.finish();
    return acc;
}

WForm parse_wform_text(std::string_view text) {
    TextCursor c{text};
    const Int a = c.read_int();
    c.skip_ws();
    c.expect('+');
    const Int b = c.read_int();
    c.skip_ws();
    c.expect('*');
    c.expect('w');
    c.finish();
    return WForm(a, b);
}

// ------------------------------ rendering ----------------------------------

std::string render_rvobject(const RvObject& obj) {
    std::string out = "(rvobj";
    for (const auto& box : obj.boxes()) {
        out += " (box (res " + std::to_string(box.res().grade()) + " (cells";
        for (std::size_t d : box.res().cell_dims()) out += " " + std::to_string(d);
        out += ")) (gset";
        for (const auto& cell : box.gamma().cells()) {
            out += " (gcell";
            for (GammaEntry e : cell.entries()) {
                switch (e) {
                    case GammaEntry::Point:
                        out += " pt";
                        break;
                    case GammaEntry::BoundedOpen:
                        out += " bopen";
                        break;
                    case GammaEntry::Ray:
                        out += " ray";
                        break;
                }
            }
            out += ")";
        }
        out += ") " + std::to_string(box.arity());
        if (!box.unit_coords().empty()) {
            out += " (units";
            for (std::size_t u : box.unit_coords()) out += " " + std::to_string(u);
            out += ")";
        }
        out += ")";
    }
    out += ")";
    return out;
}

}  // namespace tmotive::dsl
