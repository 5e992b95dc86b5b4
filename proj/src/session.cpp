#include "twistcalc/session.hpp"

#include <algorithm>
#include <sstream>

#include "twistcalc/error.hpp"
#include "twistcalc/random.hpp"

namespace twc {

using ordered_json = nlohmann::ordered_json;

OrePtr RingConfig::graded() const {
    return make_ore_algebra(algebra, twist, OreKind::Graded, inversive_ops);
}

OrePtr RingConfig::weyl() const { return make_ore_algebra(algebra, twist, OreKind::Weyl); }

// ---------------------------------------------------------------------------
// Ring configuration parsing.

namespace {

[[noreturn]] void config_error(int line, Errc code, const std::string& msg) {
    fail(code, "line " + std::to_string(line) + ": " + msg);
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_names(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',' || c == ' ' || c == '\t') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

FieldPtr parse_field_spec(const std::string& spec, int line) {
    std::string s = trim(spec);
    std::string base = s;
    std::string param;
    std::size_t lp = s.find('(');
    if (lp != std::string::npos) {
        if (s.back() != ')') config_error(line, Errc::SyntaxError, "expected ')' in field spec");
        base = trim(s.substr(0, lp));
        param = trim(s.substr(lp + 1, s.size() - lp - 2));
    }
    FieldPtr bf;
    const bool modular = base.size() >= 2 && base[0] == 'F' &&
                         std::all_of(base.begin() + 1, base.end(), [](unsigned char c) {
                             return std::isdigit(c) != 0;
                         });
    if (base == "Q") {
        bf = rational_field();
    } else if (modular) {
        std::int64_t p = 0;
        try {
            p = std::stoll(base.substr(1));
        } catch (...) {
            config_error(line, Errc::SyntaxError, "bad field spec '" + s + "'");
        }
        bf = prime_field(p);
    } else {
        config_error(line, Errc::SyntaxError,
                     "bad field spec '" + s + "' (want Q, F<p>, Q(name) or F<p>(name))");
    }
    if (param.empty()) return bf;
    return param_function_field(bf, param);
}

bool clashes_with_op_symbols(const std::string& name) {
    if (name.empty() || (name[0] != 'T' && name[0] != 'd')) return false;
    for (std::size_t i = 1; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
    return true;
}

} // namespace

RingConfig parse_ring_config(const std::string& text) {
    FieldPtr field;
    std::vector<std::string> names;
    CoeffMode mode = CoeffMode::Poly;
    bool mode_seen = false;
    bool inversive = false;
    std::vector<std::pair<int, std::pair<std::string, std::string>>> twist_lines;  // line, (gen, expr)

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        std::string rest = trim(line.substr(key.size()));
        if (key == "field") {
            field = parse_field_spec(rest, lineno);
        } else if (key == "generators") {
            names = split_names(rest);
            if (names.empty()) config_error(lineno, Errc::SyntaxError, "no generator names");
        } else if (key == "mode") {
            if (rest == "poly")
                mode = CoeffMode::Poly;
            else if (rest == "laurent")
                mode = CoeffMode::Laurent;
            else if (rest == "ratfunc")
                mode = CoeffMode::RatFunc;
            else
                config_error(lineno, Errc::SyntaxError, "mode must be poly, laurent or ratfunc");
            mode_seen = true;
        } else if (key == "twist") {
            std::size_t eq = rest.find('=');
            if (eq == std::string::npos)
                config_error(lineno, Errc::SyntaxError, "twist needs the form: twist x = q*x + h");
            twist_lines.push_back({lineno, {trim(rest.substr(0, eq)), trim(rest.substr(eq + 1))}});
        } else if (key == "inversive_ops") {
            if (rest == "true")
                inversive = true;
            else if (rest == "false")
                inversive = false;
            else
                config_error(lineno, Errc::SyntaxError, "inversive_ops must be true or false");
        } else {
            config_error(lineno, Errc::SyntaxError, "unknown key '" + key + "'");
        }
    }
    if (!field) fail(Errc::SyntaxError, "config is missing a 'field' line");
    if (names.empty()) fail(Errc::SyntaxError, "config is missing a 'generators' line");
    (void)mode_seen;
    for (const auto& n : names)
        if (clashes_with_op_symbols(n))
            fail(Errc::InvalidArgument,
                 "generator name '" + n + "' clashes with the operator symbols T../d..");
    if (field->kind == FieldKind::RatFunc && clashes_with_op_symbols(field->param))
        fail(Errc::InvalidArgument, "parameter name clashes with the operator symbols");

    AlgebraPtr alg = make_algebra(field, names, mode);
    std::vector<std::pair<Scalar, Scalar>> qh(names.size(),
                                              {Scalar::one(field), Scalar::zero(field)});
    for (const auto& [line, gen_expr] : twist_lines) {
        const auto& [gen, expr] = gen_expr;
        auto it = std::find(names.begin(), names.end(), gen);
        if (it == names.end())
            config_error(line, Errc::UnknownSymbol, "twist names unknown generator '" + gen + "'");
        const int g = static_cast<int>(it - names.begin());
        CoeffElem rhs = CoeffElem::zero(alg);
        try {
            rhs = parse_coeff(alg, expr);
        } catch (const Error& e) {
            config_error(line, Errc::InvalidTwist, std::string("bad twist expression: ") + e.what());
        }
        if (!rhs.has_trivial_denominator())
            config_error(line, Errc::InvalidTwist, "twist image must be polynomial");
        Scalar q = Scalar::zero(field);
        Scalar h = Scalar::zero(field);
        for (const auto& [e, c] : rhs.numer_terms()) {
            if (total_degree(e) == 0) {
                h = c;
            } else if (e[g] == 1 && total_degree(e) == 1) {
                q = c;
            } else {
                config_error(line, Errc::InvalidTwist,
                             "twist image must be affine in " + gen + ": q*" + gen + " + h");
            }
        }
        // Mode invariants, reported against the offending line.
        if (mode == CoeffMode::Laurent && !h.is_zero())
            config_error(line, Errc::InvalidTwist,
                         "laurent mode requires h = 0: sigma must send the unit " + gen +
                             " to a unit");
        if (mode == CoeffMode::Laurent && q.is_zero())
            config_error(line, Errc::InvalidTwist, "laurent mode requires q != 0");
        if (mode == CoeffMode::RatFunc && q.is_zero())
            config_error(line, Errc::InvalidTwist,
                         "ratfunc mode requires q != 0 (sigma must be injective)");
        qh[g] = {std::move(q), std::move(h)};
    }
    RingConfig cfg;
    cfg.field = field;
    cfg.algebra = alg;
    try {
        cfg.twist = TwistSpec::diagonal(alg, std::move(qh));
    } catch (const Error& e) {
        if (e.code() == Errc::InvalidTwist) throw;
        fail(Errc::InvalidTwist, e.what());
    }
    cfg.inversive_ops = inversive;
    if (inversive)
        for (int i = 0; i < cfg.twist.count(); ++i)
            if (cfg.twist.twist(i).q.is_zero())
                fail(Errc::InvalidTwist, "inversive_ops needs every twist invertible (q != 0)");
    return cfg;
}

// ---------------------------------------------------------------------------
// Output assembly.

namespace {

SessionOutput make_output(const std::string& command, const RingConfig& cfg, ordered_json result,
                          ordered_json bounds, ordered_json stability, std::string text,
                          int exit_code = 0) {
    SessionOutput out;
    out.command = command;
    out.ring = cfg.description();
    out.machine = ordered_json{{"command", command},
                               {"ring", out.ring},
                               {"result", std::move(result)},
                               {"bounds", std::move(bounds)},
                               {"stability", std::move(stability)},
                               {"version", kVersion}};
    out.text = std::move(text);
    out.exit_code = exit_code;
    return out;
}

std::string vec_to_string(const std::vector<CoeffElem>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].to_string();
    }
    return s + "]";
}

std::string join_lines(const std::vector<std::string>& lines) {
    std::string s;
    for (const auto& l : lines) {
        s += l;
        s += '\n';
    }
    if (!s.empty()) s.pop_back();
    return s;
}

// The presentation an expression addresses: Weyl when it mentions d.., the
// Graded ring otherwise (mixing both is an error).
OrePtr algebra_for_expression(const RingConfig& cfg, const std::string& expr) {
    OpSymbolScan scan = scan_operator_symbols(expr, cfg.algebra);
    if (scan.uses_T && scan.uses_d)
        fail(Errc::InvalidArgument,
             "expression mixes T.. and d..; convert between presentations instead");
    return scan.uses_d ? cfg.weyl() : cfg.graded();
}

std::vector<CoeffMatrix> parse_matrices(const RingConfig& cfg,
                                        const std::vector<std::string>& mats, int expected,
                                        int* rank_out) {
    std::vector<CoeffMatrix> out;
    if (mats.empty()) {
        // Default module: A itself (rank 1, trivial matrices are supplied by
        // the caller since sigma- and diff-defaults differ).
        fail(Errc::InvalidArgument, "internal: matrices required");
    }
    if (static_cast<int>(mats.size()) != expected)
        fail(Errc::RankMismatch, "need one matrix per twist (" + std::to_string(expected) + ")");
    for (const auto& m : mats) out.push_back(parse_matrix(cfg.algebra, m));
    if (rank_out) *rank_out = out[0].rows();
    return out;
}

SigmaModule sigma_module_from(const RingConfig& cfg, const std::vector<std::string>& mats) {
    if (mats.empty()) {
        std::vector<CoeffMatrix> S(cfg.twist.count(), CoeffMatrix::identity(cfg.algebra, 1));
        return make_sigma_module(cfg.twist, std::move(S));
    }
    return make_sigma_module(cfg.twist, parse_matrices(cfg, mats, cfg.twist.count(), nullptr));
}

DiffModule diff_module_from(const RingConfig& cfg, const std::vector<std::string>& mats) {
    if (mats.empty()) {
        std::vector<CoeffMatrix> N(cfg.twist.count(), CoeffMatrix(cfg.algebra, 1, 1));
        return make_diff_module(cfg.twist, std::move(N));
    }
    return make_diff_module(cfg.twist, parse_matrices(cfg, mats, cfg.twist.count(), nullptr));
}

ordered_json kernel_json(const KernelReport& rep) {
    ordered_json basis = ordered_json::array();
    for (const auto& v : rep.basis) basis.push_back(vec_to_string(v));
    return ordered_json{{"basis", std::move(basis)},
                        {"dimension", rep.dimension},
                        {"stable", rep.stable},
                        {"truncated", rep.truncated}};
}

} // namespace

std::string SessionOutput::rendered(const std::string& format) const {
    if (format == "json" || format == "json-like") return machine.dump(2);
    return text;
}

// ---------------------------------------------------------------------------
// Commands.

SessionOutput cmd_normalize(const RingConfig& cfg, const std::string& expr,
                            const SessionOptions&) {
    OrePtr alg = algebra_for_expression(cfg, expr);
    OreOperator p = parse_operator(alg, expr);
    std::string s = p.to_string();
    return make_output("normalize", cfg, s, nullptr, nullptr, s);
}

SessionOutput cmd_convert(const RingConfig& cfg, const std::string& expr,
                          const std::string& direction, const SessionOptions&) {
    std::string s;
    if (direction == "T_to_d") {
        OreOperator p = parse_operator(cfg.graded(), expr);
        s = convert_T_to_d(p, cfg.weyl()).to_string();
    } else if (direction == "d_to_T") {
        OreOperator p = parse_operator(cfg.weyl(), expr);
        s = convert_d_to_T(p, cfg.graded()).to_string();
    } else {
        fail(Errc::InvalidArgument, "direction must be T_to_d or d_to_T");
    }
    return make_output("convert " + direction, cfg, s, nullptr, nullptr, s);
}

SessionOutput cmd_apply(const RingConfig& cfg, const std::string& op_expr,
                        const std::string& operand, const SessionOptions&) {
    OrePtr alg = algebra_for_expression(cfg, op_expr);
    OreOperator p = parse_operator(alg, op_expr);
    CoeffElem f = parse_coeff(cfg.algebra, operand);
    std::string s = p.apply(f).to_string();
    return make_output("apply", cfg, s, nullptr, nullptr, s);
}

SessionOutput cmd_solve(const RingConfig& cfg, const SolveRequest& req,
                        const SessionOptions&) {
    const std::string& task = req.task;
    ordered_json bounds{{"bound", req.bound}};
    if (task == "invariants" || task == "constants") {
        std::vector<CoeffElem> basis = task == "invariants"
                                           ? invariants_basis(cfg.twist, req.bound)
                                           : constants_basis(cfg.twist, req.bound);
        ordered_json arr = ordered_json::array();
        std::vector<std::string> lines;
        for (const auto& b : basis) {
            arr.push_back(b.to_string());
            lines.push_back(b.to_string());
        }
        ordered_json result{{"basis", arr}, {"dimension", basis.size()}};
        return make_output("solve " + task, cfg, result, bounds, nullptr,
                           "basis: " + join_lines(lines) + "\ndimension: " +
                               std::to_string(basis.size()));
    }
    if (task == "center" || task == "centralizer") {
        bounds = ordered_json{{"bound", req.bound}, {"op_bound", req.op_bound}};
        auto mode = task == "center" ? CentralizeMode::FullCenter : CentralizeMode::CoeffsOnly;
        std::vector<OreOperator> basis = centralizer_basis(cfg.graded(), mode, req.bound, req.op_bound);
        ordered_json arr = ordered_json::array();
        std::vector<std::string> lines;
        for (const auto& b : basis) {
            arr.push_back(b.to_string());
            lines.push_back(b.to_string());
        }
        ordered_json result{{"basis", arr}, {"dimension", basis.size()}};
        return make_output("solve " + task, cfg, result, bounds, nullptr,
                           "basis: " + join_lines(lines) + "\ndimension: " +
                               std::to_string(basis.size()));
    }
    if (task == "h0h1") {
        SigmaModule m = sigma_module_from(cfg, req.matrices);
        auto [h0, h1] = sigma_cohomology(m, req.index - 1, req.bound);
        ordered_json result{{"h0", kernel_json(h0)}, {"h1", kernel_json(h1)}};
        ordered_json stability{{"h0_stable", h0.stable},
                               {"h1_stable", h1.stable},
                               {"h1_truncated", h1.truncated}};
        std::ostringstream text;
        text << "h0 dimension: " << h0.dimension << (h0.stable ? " (stable)" : " (unstable)");
        for (const auto& v : h0.basis) text << "\nh0: " << vec_to_string(v);
        text << "\nh1 dimension: " << h1.dimension << (h1.stable ? " (stable" : " (unstable")
             << (h1.truncated ? ", truncated)" : ")");
        for (const auto& v : h1.basis) text << "\nh1: " << vec_to_string(v);
        return make_output("solve h0h1", cfg, result, bounds, stability, text.str());
    }
    if (task == "horizontal") {
        DiffModule m = diff_module_from(cfg, req.matrices);
        KernelReport rep = horizontal_sections(m, req.bound);
        ordered_json stability{{"stable", rep.stable}};
        std::ostringstream text;
        text << "dimension: " << rep.dimension << (rep.stable ? " (stable)" : " (unstable)");
        for (const auto& v : rep.basis) text << "\nsection: " << vec_to_string(v);
        return make_output("solve horizontal", cfg, kernel_json(rep), bounds, stability, text.str());
    }
    fail(Errc::InvalidArgument, "unknown solve task '" + task + "'");
}

// ---------------------------------------------------------------------------
// Verify suites.

namespace {

struct VerifyRecord {
    std::string identity;
    bool pass = true;
    std::string detail;
};

SessionOutput verify_output(const RingConfig& cfg, const std::string& suite,
                            const std::vector<VerifyRecord>& records, ordered_json bounds) {
    bool all = true;
    ordered_json arr = ordered_json::array();
    std::vector<std::string> lines;
    for (const auto& r : records) {
        all = all && r.pass;
        arr.push_back(ordered_json{{"identity", r.identity}, {"pass", r.pass}, {"detail", r.detail}});
        std::string line = (r.pass ? "ok   " : "FAIL ") + r.identity;
        if (!r.detail.empty()) line += "  [" + r.detail + "]";
        lines.push_back(std::move(line));
    }
    ordered_json result{{"suite", suite}, {"pass", all}, {"identities", arr}};
    return make_output("verify " + suite, cfg, result, std::move(bounds), nullptr,
                       join_lines(lines), all ? 0 : 1);
}

std::vector<VerifyRecord> verify_leibniz(const RingConfig& cfg, Rng& rng, int count) {
    std::vector<VerifyRecord> recs;
    const int deg = cfg.algebra->mode == CoeffMode::RatFunc ? 2 : 4;
    for (int i = 0; i < cfg.twist.count(); ++i) {
        VerifyRecord rec{"leibniz d" + std::to_string(i + 1), true, ""};
        for (int k = 0; k < count && rec.pass; ++k) {
            CoeffElem f = random_coeff(rng, cfg.algebra, deg, 3);
            CoeffElem g = random_coeff(rng, cfg.algebra, deg, 3);
            CoeffElem lhs = cfg.twist.apply_derivation(i, f * g);
            CoeffElem rhs = cfg.twist.apply_derivation(i, f) * g +
                            cfg.twist.apply_endo(i, f) * cfg.twist.apply_derivation(i, g);
            if (!(lhs == rhs)) {
                rec.pass = false;
                rec.detail = "f = " + f.to_string() + ", g = " + g.to_string();
            }
        }
        recs.push_back(std::move(rec));
    }
    return recs;
}

std::vector<VerifyRecord> verify_schwarz(const RingConfig& cfg) {
    SchwarzReport rep = schwarz_check(cfg.twist);
    VerifyRecord rec{"schwarz conditions", rep.ok, ""};
    if (!rep.ok) {
        const auto& v = rep.violations[0];
        rec.detail = "pair (" + std::to_string(v.i + 1) + "," + std::to_string(v.j + 1) +
                     ") condition " + std::to_string(v.condition);
    }
    return {rec};
}

std::vector<VerifyRecord> verify_gend1(const RingConfig& cfg, int bound) {
    if (cfg.algebra->mode != CoeffMode::Poly)
        fail(Errc::InvalidArgument, "genD1 suite needs poly mode");
    std::vector<VerifyRecord> recs;
    for (int i = 0; i < cfg.twist.count(); ++i) {
        VerifyRecord rec{"power formulas d" + std::to_string(i + 1), true, ""};
        for (int k = 1; k <= bound && rec.pass; ++k)
            if (!derivation_power_formula_check(cfg.twist, i, k)) {
                rec.pass = false;
                rec.detail = "k = " + std::to_string(k);
            }
        recs.push_back(std::move(rec));
    }
    return recs;
}

std::vector<VerifyRecord> verify_representation(const RingConfig& cfg, Rng& rng, int count) {
    std::vector<VerifyRecord> recs;
    for (OrePtr alg : {cfg.graded(), cfg.weyl()}) {
        std::string kind = alg->kind == OreKind::Graded ? "graded" : "weyl";
        VerifyRecord rec{"representation " + kind, true, ""};
        for (int k = 0; k < count && rec.pass; ++k) {
            OreOperator p = random_operator(rng, alg, 2, 2, 2);
            OreOperator q = random_operator(rng, alg, 2, 2, 2);
            CoeffElem f = random_coeff(rng, cfg.algebra, 3, 3);
            if (!((p * q).apply(f) == p.apply(q.apply(f))) ||
                !((p + q).apply(f) == p.apply(f) + q.apply(f))) {
                rec.pass = false;
                rec.detail = "P = " + p.to_string() + ", Q = " + q.to_string() +
                             ", f = " + f.to_string();
            }
        }
        recs.push_back(std::move(rec));
    }
    return recs;
}

std::vector<VerifyRecord> verify_confluence(const RingConfig& cfg, int bound) {
    if (cfg.field->kind != FieldKind::RatFunc || cfg.field->base != FieldKind::Rational)
        fail(Errc::InvalidArgument,
             "confluence suite needs a rational parameter field like Q(t)");
    const FieldPtr& f = cfg.field;
    const Scalar t = Scalar::parameter(f);
    const Scalar one = Scalar::one(f);
    AlgebraPtr alg = make_algebra(f, {cfg.algebra->names[0]}, CoeffMode::Poly);
    TwistSpec pair = TwistSpec::family(
        alg, {Twist{0, t * t, Scalar::zero(f)}, Twist{0, t, Scalar::zero(f)}});
    // Connector between the square twist and its root: t(t-1)/(t+1).
    const Scalar conn = t * (t - one) / (t + one);
    const CoeffElem x = CoeffElem::generator(alg, 0);
    std::vector<VerifyRecord> recs;
    VerifyRecord rec{"confluence d_{t^2} = d_t + (t(t-1)/(t+1)) x d_t^2", true, ""};
    for (int n = 1; n <= bound && rec.pass; ++n) {
        CoeffElem xn = x.pow(n);
        CoeffElem lhs = pair.apply_derivation(0, xn);
        CoeffElem d1 = pair.apply_derivation(1, xn);
        CoeffElem d2 = pair.apply_derivation(1, d1);
        CoeffElem rhs = d1 + x * d2 * conn;
        if (!(lhs == rhs)) {
            rec.pass = false;
            rec.detail = "n = " + std::to_string(n);
        }
    }
    recs.push_back(std::move(rec));
    // The connector has a denominator, so the identity cannot be written
    // over the polynomial subring in the parameter.
    VerifyRecord caveat{"connector over the polynomial base", true, ""};
    caveat.detail = conn.param_den_degree() > 0
                        ? "inexpressible without denominators: connector = " + conn.to_string()
                        : "expressible";
    recs.push_back(std::move(caveat));
    // And the pair itself is not of Schwarz type.
    SchwarzReport rep = schwarz_check(pair);
    VerifyRecord sch{"pair (sigma, sigma_2) not of Schwarz type", !rep.ok, ""};
    if (!rep.ok)
        sch.detail = "violating pair (" + std::to_string(rep.violations[0].i + 1) + "," +
                     std::to_string(rep.violations[0].j + 1) + ") condition " +
                     std::to_string(rep.violations[0].condition);
    recs.push_back(std::move(sch));
    return recs;
}

} // namespace

SessionOutput cmd_verify(const RingConfig& cfg, const VerifyRequest& req,
                         const SessionOptions& opt) {
    Rng rng(opt.seed);
    const std::string& suite = req.suite;
    if (suite == "leibniz") {
        int count = req.count > 0 ? req.count : 40;
        return verify_output(cfg, suite, verify_leibniz(cfg, rng, count),
                             ordered_json{{"count", count}});
    }
    if (suite == "schwarz")
        return verify_output(cfg, suite, verify_schwarz(cfg), nullptr);
    if (suite == "genD1") {
        int bound = req.bound > 0 ? req.bound : 8;
        return verify_output(cfg, suite, verify_gend1(cfg, bound),
                             ordered_json{{"bound", bound}});
    }
    if (suite == "representation") {
        int count = req.count > 0 ? req.count : 40;
        return verify_output(cfg, suite, verify_representation(cfg, rng, count),
                             ordered_json{{"count", count}});
    }
    if (suite == "confluence") {
        int bound = req.bound > 0 ? req.bound : 20;
        return verify_output(cfg, suite, verify_confluence(cfg, bound),
                             ordered_json{{"bound", bound}});
    }
    fail(Errc::InvalidArgument, "unknown verify suite '" + suite + "'");
}

// ---------------------------------------------------------------------------
// Module commands.

SessionOutput cmd_module_translate(const RingConfig& cfg, const std::string& direction,
                                   const std::vector<std::string>& matrices,
                                   const SessionOptions&) {
    ordered_json arr = ordered_json::array();
    std::vector<std::string> lines;
    if (direction == "sigma_to_diff") {
        SigmaModule m = sigma_module_from(cfg, matrices);
        DiffModule d = sigma_to_diff(m);
        for (const auto& n : d.N) {
            arr.push_back(n.to_string());
            lines.push_back("N: " + n.to_string());
        }
    } else if (direction == "diff_to_sigma") {
        DiffModule m = diff_module_from(cfg, matrices);
        SigmaModule s = diff_to_sigma(m);
        for (const auto& S : s.S) {
            arr.push_back(S.to_string());
            lines.push_back("S: " + S.to_string());
        }
    } else {
        fail(Errc::InvalidArgument, "direction must be sigma_to_diff or diff_to_sigma");
    }
    return make_output("module translate " + direction, cfg, ordered_json{{"matrices", arr}},
                       nullptr, nullptr, join_lines(lines));
}

SessionOutput cmd_module_check(const RingConfig& cfg, const std::string& kind,
                               const std::vector<std::string>& matrices,
                               const SessionOptions&) {
    CompatReport rep;
    std::string what;
    if (kind == "sigma") {
        rep = check_sigma_compat(sigma_module_from(cfg, matrices));
        what = "sigma compatibility";
    } else if (kind == "diff") {
        rep = check_integrability(diff_module_from(cfg, matrices));
        what = "integrability";
    } else {
        fail(Errc::InvalidArgument, "kind must be sigma or diff");
    }
    ordered_json result{{"check", what}, {"pass", rep.ok}};
    std::string text = what + ": " + (rep.ok ? "ok" : "FAIL");
    if (!rep.ok) {
        result["violating_pair"] = ordered_json::array(
            {rep.violating_pair.first + 1, rep.violating_pair.second + 1});
        text += " at pair (" + std::to_string(rep.violating_pair.first + 1) + "," +
                std::to_string(rep.violating_pair.second + 1) + ")";
    }
    return make_output("module check " + kind, cfg, result, nullptr, nullptr, text,
                       rep.ok ? 0 : 1);
}

} // namespace twc
