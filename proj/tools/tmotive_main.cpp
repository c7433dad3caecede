#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tmotive/dsl.hpp"
#include "tmotive/hahn.hpp"
#include "tmotive/rvobj.hpp"
#include "tmotive/vfset.hpp"

namespace {

using namespace tmotive;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError(DomainError::Kind::InvalidArgument, "cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Rational truncation_order(const std::string* explicit_order) {
    if (explicit_order) return dsl::parse_rational(*explicit_order);
    if (const char* env = std::getenv("TMOTIVE_TRUNC_ORDER")) return dsl::parse_rational(env);
    return Rational(8);
}

int run_series(const std::vector<std::string>& args, bool multiplicative) {
    if (args.empty())
        throw DomainError(DomainError::Kind::InvalidArgument,
                          "series needs an operation: add, mul, inv, cmp, val, rv, res");
    const std::string& op = args[0];
    const auto need = [&](std::size_t lo, std::size_t hi) {
        if (args.size() - 1 < lo || args.size() - 1 > hi)
            throw ParseError("parse error at 1:1: series " + op + " takes " + std::to_string(lo) +
                                 (lo == hi ? "" : ".." + std::to_string(hi)) + " arguments",
                             SourceSpan{});
    };
    if (op == "add" || op == "mul") {
        need(2, 2);
        HahnSeries a = dsl::parse_series_text(args[1]);
        HahnSeries b = dsl::parse_series_text(args[2]);
        std::cout << render_series(op == "add" ? a + b : a * b) << "\n";
        return 0;
    }
    if (op == "inv") {
        need(1, 2);
        HahnSeries a = dsl::parse_series_text(args[1]);
        const std::string* order_arg = args.size() == 3 ? &args[2] : nullptr;
        std::cout << render_series(truncated_inverse(a, truncation_order(order_arg))) << "\n";
        return 0;
    }
    if (op == "cmp") {
        need(2, 2);
        HahnSeries a = dsl::parse_series_text(args[1]);
        HahnSeries b = dsl::parse_series_text(args[2]);
        auto c = a <=> b;
        std::cout << (c < 0 ? "LT" : c > 0 ? "GT" : "EQ") << "\n";
        return 0;
    }
    if (op == "val") {
        need(1, 1);
        GammaElem g = dsl::parse_series_text(args[1]).valuation();
        std::cout << (multiplicative ? render_gamma_multiplicative(g) : render_gamma_additive(g))
                  << "\n";
        return 0;
    }
    if (op == "rv") {
        need(1, 1);
        std::cout << render_rv(dsl::parse_series_text(args[1]).leading_rv()) << "\n";
        return 0;
    }
    if (op == "res") {
        need(1, 1);
        std::cout << dsl::parse_series_text(args[1]).residue().str() << "\n";
        return 0;
    }
    throw ParseError("parse error at 1:1: unknown series operation '" + op + "'", SourceSpan{});
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Euler characteristics of definable sets over R((t^Q))"};
    app.require_subcommand(1);

    std::string file, file2, which;
    std::size_t box_index = 1, coord = 1;
    std::vector<std::string> series_args;
    bool multiplicative = false;

    auto* cmd_class = app.add_subcommand("class", "print the graded class and its quotient image");
    cmd_class->add_option("file", file, "set description file")->required();

    auto* cmd_euler = app.add_subcommand("euler", "print one Euler characteristic");
    cmd_euler->add_option("--which", which, "g or b")
        ->required()
        ->check(CLI::IsMember({"g", "b"}));
    cmd_euler->add_option("file", file, "set description file")->required();

    auto* cmd_rvclass = app.add_subcommand("rvclass", "print the class of an RV object");
    cmd_rvclass->add_option("file", file, "object description file")->required();

    auto* cmd_blowup = app.add_subcommand("blowup", "blow up one box coordinate");
    cmd_blowup->add_option("file", file, "object description file")->required();
    cmd_blowup->add_option("index", box_index, "1-based box index")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_blowup->add_option("coord", coord, "1-based unit coordinate")
        ->required()
        ->check(CLI::PositiveNumber);

    auto* cmd_isp = app.add_subcommand("ispcheck", "decide congruence of two RV objects");
    cmd_isp->add_option("file1", file, "first object file")->required();
    cmd_isp->add_option("file2", file2, "second object file")->required();

    auto* cmd_series = app.add_subcommand("series", "Hahn series arithmetic");
    cmd_series->add_flag("--mult", multiplicative, "render values multiplicatively");
    cmd_series->add_option("args", series_args, "operation and operands");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (cmd_class->parsed()) {
            VfSet s = dsl::parse_vfset(read_file(file));
            GradedYX c = vf_class(s);
            std::cout << render_graded(c) << "\n" << render_wform(quotient_reduce(c)) << "\n";
        } else if (cmd_euler->parsed()) {
            VfSet s = dsl::parse_vfset(read_file(file));
            std::cout << (which == "g" ? euler_g(s) : euler_b(s)) << "\n";
        } else if (cmd_rvclass->parsed()) {
            RvObject o = dsl::parse_rvobject(read_file(file));
            std::cout << render_graded(rv_class(o)) << "\n";
        } else if (cmd_blowup->parsed()) {
            RvObject o = dsl::parse_rvobject(read_file(file));
            RvObject b = blowup(o, box_index - 1, coord);
            std::cout << dsl::render_rvobject(b) << "\n" << render_graded(rv_class(b)) << "\n";
        } else if (cmd_isp->parsed()) {
            RvObject a = dsl::parse_rvobject(read_file(file));
            RvObject b = dsl::parse_rvobject(read_file(file2));
            std::cout << (isp_equiv(a, b) ? "equiv" : "inequiv") << "\n";
        } else if (cmd_series->parsed()) {
            return run_series(series_args, multiplicative);
        }
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
