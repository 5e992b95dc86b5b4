#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "twistcalc/error.hpp"
#include "twistcalc/session.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open '" << path << "'\n";
        std::exit(2);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string read_expr(const std::string& arg) {
    if (!arg.empty() && arg != "-") return arg;
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
}

int emit(const twc::SessionOutput& out, const twc::SessionOptions& opt) {
    std::cout << out.rendered(opt.format) << "\n";
    return out.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"twistcalc: exact arithmetic in twisted polynomial rings and twisted Weyl "
                 "algebras, with degree-bounded solvers"};
    app.require_subcommand(1);

    std::string ring_path;
    twc::SessionOptions opt;
    app.add_option("--ring", ring_path, "ring configuration file")->required();
    app.add_option("--format", opt.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json", "json-like"}));
    app.add_option("--seed", opt.seed, "seed for randomized suites");

    std::string expr;
    std::string direction;
    std::string operand;
    twc::SolveRequest solve_req;
    twc::VerifyRequest verify_req;
    std::vector<std::string> matrices;
    std::string check_kind;

    CLI::App* c_norm = app.add_subcommand("normalize", "normal form of an operator expression");
    c_norm->add_option("expr", expr, "operator expression ('-' reads stdin)");

    CLI::App* c_conv = app.add_subcommand("convert", "rewrite between the T and d presentations");
    c_conv->add_option("expr", expr, "operator expression ('-' reads stdin)");
    c_conv->add_option("--direction", direction, "T_to_d or d_to_T")->required();

    CLI::App* c_apply = app.add_subcommand("apply", "act on a coefficient by an operator");
    c_apply->add_option("expr", expr, "operator expression ('-' reads stdin)");
    c_apply->add_option("--to", operand, "coefficient expression")->required();

    CLI::App* c_solve = app.add_subcommand("solve", "degree-bounded solvers");
    c_solve->add_option("task", solve_req.task,
                        "invariants | constants | center | centralizer | h0h1 | horizontal")
        ->required();
    c_solve->add_option("--bound", solve_req.bound, "coefficient degree bound");
    c_solve->add_option("--op-bound", solve_req.op_bound, "operator degree bound");
    c_solve->add_option("--index", solve_req.index, "1-based twist index (h0h1)");
    c_solve->add_option("--matrix", solve_req.matrices, "module matrix, one per twist")
        ->allow_extra_args(false);

    CLI::App* c_verify = app.add_subcommand("verify", "identity suites");
    c_verify->add_option("suite", verify_req.suite,
                         "leibniz | schwarz | genD1 | representation | confluence")
        ->required();
    c_verify->add_option("--bound", verify_req.bound, "suite bound");
    c_verify->add_option("--count", verify_req.count, "randomized trials");

    CLI::App* c_module = app.add_subcommand("module", "semilinear module operations");
    c_module->require_subcommand(1);
    CLI::App* c_mt = c_module->add_subcommand("translate", "sigma <-> differential structure");
    c_mt->add_option("--direction", direction, "sigma_to_diff or diff_to_sigma")->required();
    c_mt->add_option("--matrix", matrices, "module matrix, one per twist")->allow_extra_args(false);
    CLI::App* c_mc = c_module->add_subcommand("check", "compatibility / integrability");
    c_mc->add_option("--kind", check_kind, "sigma or diff")->required();
    c_mc->add_option("--matrix", matrices, "module matrix, one per twist")->allow_extra_args(false);

    for (CLI::App* sub : {c_norm, c_conv, c_apply, c_solve, c_verify, c_module, c_mt, c_mc})
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        twc::RingConfig cfg = twc::parse_ring_config(read_file(ring_path));
        if (*c_norm) return emit(twc::cmd_normalize(cfg, read_expr(expr), opt), opt);
        if (*c_conv) return emit(twc::cmd_convert(cfg, read_expr(expr), direction, opt), opt);
        if (*c_apply) return emit(twc::cmd_apply(cfg, read_expr(expr), operand, opt), opt);
        if (*c_solve) return emit(twc::cmd_solve(cfg, solve_req, opt), opt);
        if (*c_verify) return emit(twc::cmd_verify(cfg, verify_req, opt), opt);
        if (*c_mt) return emit(twc::cmd_module_translate(cfg, direction, matrices, opt), opt);
        if (*c_mc) return emit(twc::cmd_module_check(cfg, check_kind, matrices, opt), opt);
    } catch (const twc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
