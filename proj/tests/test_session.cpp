#include <doctest.h>

#include "twistcalc/error.hpp"
#include "twistcalc/session.hpp"

using namespace twc;

namespace {

RingConfig qdil() {
    return parse_ring_config("field Q(q)\ngenerators x\nmode poly\ntwist x = q*x\n");
}

RingConfig qlaurent() {
    return parse_ring_config("field Q(q)\ngenerators x\nmode laurent\ntwist x = q*x\n");
}

const SessionOptions opt{};

} // namespace

TEST_CASE("normalize") {
    CHECK(cmd_normalize(qdil(), "d * x", opt).text == "1 + q*x*d");
    CHECK(cmd_normalize(qdil(), "T * x", opt).text == "q*x*T");
    CHECK(cmd_normalize(qdil(), "x * d - x * d", opt).text == "0");
    // mixing presentations is rejected
    CHECK_THROWS_AS((void)cmd_normalize(qdil(), "T * d", opt), Error);
}

TEST_CASE("normalized output re-parses to the same normal form") {
    RingConfig cfg = qdil();
    for (const char* expr : {"d * x", "d^2 * x^3 - 2 d", "(x + 1) d (x - 1)", "T^2 x T"}) {
        std::string once = cmd_normalize(cfg, expr, opt).text;
        CHECK(cmd_normalize(cfg, once, opt).text == once);
    }
}

TEST_CASE("convert matches the presentation change") {
    RingConfig cfg = qlaurent();
    SessionOutput out = cmd_convert(cfg, "T", "T_to_d", opt);
    CHECK(out.text == "1 + (q - 1)*x*d");
    SessionOutput back = cmd_convert(cfg, out.text, "d_to_T", opt);
    CHECK(back.text == "T");
    // and the other direction round trips as well
    std::string d_as_T = cmd_convert(cfg, "d", "d_to_T", opt).text;
    CHECK(cmd_convert(cfg, d_as_T, "T_to_d", opt).text == "d");
    // d -> T needs strength
    CHECK_THROWS_AS((void)cmd_convert(qdil(), "d", "d_to_T", opt), Error);
}

TEST_CASE("apply") {
    CHECK(cmd_apply(qdil(), "d^2", "x^3", opt).text == "(q^3 + 2*q^2 + 2*q + 1)*x");
    CHECK(cmd_apply(qdil(), "T", "x^2", opt).text == "q^2*x^2");
}

TEST_CASE("solve outputs carry the machine schema") {
    RingConfig f3 = parse_ring_config("field F3\ngenerators x\nmode poly\ntwist x = x + 1\n");
    SolveRequest req;
    req.task = "invariants";
    req.bound = 3;
    SessionOutput out = cmd_solve(f3, req, opt);
    CHECK(out.exit_code == 0);
    const auto& m = out.machine;
    // stable key set, in order
    std::vector<std::string> keys;
    for (auto it = m.begin(); it != m.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"command", "ring", "result", "bounds", "stability",
                                           "version"});
    CHECK(m["command"] == "solve invariants");
    CHECK(m["ring"] == "F3[x]");
    CHECK(m["result"]["dimension"] == 2);
    CHECK(m["result"]["basis"][1] == "x^3 + 2*x");
    CHECK(m["bounds"]["bound"] == 3);
    CHECK(m["version"] == kVersion);
}

TEST_CASE("solve h0h1 and horizontal") {
    RingConfig q2 = parse_ring_config("field Q\ngenerators x\nmode poly\ntwist x = 2*x\n");
    SolveRequest req;
    req.task = "h0h1";
    req.bound = 6;
    SessionOutput out = cmd_solve(q2, req, opt);
    CHECK(out.machine["result"]["h0"]["dimension"] == 1);
    CHECK(out.machine["result"]["h1"]["dimension"] == 1);
    CHECK(out.machine["stability"]["h0_stable"] == true);
    CHECK(out.machine["stability"]["h1_truncated"] == false);

    RingConfig f3 = parse_ring_config("field F3\ngenerators x\nmode poly\ntwist x = x + 1\n");
    SolveRequest hreq;
    hreq.task = "horizontal";
    hreq.bound = 3;
    SessionOutput h = cmd_solve(f3, hreq, opt);
    CHECK(h.machine["result"]["dimension"] == 2);
    CHECK(h.machine["result"]["basis"][1] == "[x^3 + 2*x]");
}

TEST_CASE("solve center tasks") {
    RingConfig f5 = parse_ring_config("field F5\ngenerators x\nmode poly\ntwist x = 2*x\n");
    SolveRequest req;
    req.task = "center";
    req.bound = 4;
    req.op_bound = 4;
    SessionOutput out = cmd_solve(f5, req, opt);
    CHECK(out.machine["result"]["basis"] ==
          nlohmann::ordered_json::array({"1", "x^4", "T^4", "x^4*T^4"}));
}

TEST_CASE("verify suites report per-identity results") {
    SessionOutput leib = cmd_verify(qdil(), {"leibniz", 0, 10}, opt);
    CHECK(leib.exit_code == 0);
    CHECK(leib.machine["result"]["pass"] == true);

    SessionOutput rep = cmd_verify(qdil(), {"representation", 0, 10}, opt);
    CHECK(rep.exit_code == 0);

    SessionOutput gen = cmd_verify(qdil(), {"genD1", 5, 0}, opt);
    CHECK(gen.exit_code == 0);

    RingConfig qt = parse_ring_config("field Q(t)\ngenerators x\nmode poly\n");
    SessionOutput conf = cmd_verify(qt, {"confluence", 12, 0}, opt);
    CHECK(conf.exit_code == 0);
    bool found_inexpressible = false;
    for (const auto& r : conf.machine["result"]["identities"])
        if (r["detail"].get<std::string>().find("inexpressible") != std::string::npos)
            found_inexpressible = true;
    CHECK(found_inexpressible);
    // confluence needs a rational parameter field
    CHECK_THROWS_AS((void)cmd_verify(qdil().field->kind == FieldKind::RatFunc
                                         ? parse_ring_config("field F5\ngenerators x\n")
                                         : qdil(),
                                     {"confluence", 0, 0}, opt),
                    Error);
}

TEST_CASE("module commands") {
    RingConfig l2 = parse_ring_config("field Q\ngenerators x\nmode laurent\ntwist x = 2*x\n");
    SessionOutput tr = cmd_module_translate(l2, "sigma_to_diff", {"[[x]]"}, opt);
    CHECK(tr.machine["result"]["matrices"][0] == "[[1 - x^-1]]");
    SessionOutput back = cmd_module_translate(l2, "diff_to_sigma", {"[[1 - x^-1]]"}, opt);
    CHECK(back.machine["result"]["matrices"][0] == "[[x]]");

    SessionOutput chk = cmd_module_check(l2, "sigma", {"[[x]]"}, opt);
    CHECK(chk.exit_code == 0);

    // incompatible pair yields exit code 1, not an exception
    RingConfig two = parse_ring_config(
        "field Q\ngenerators x1, x2\nmode poly\ntwist x1 = x1\ntwist x2 = 3*x2\n");
    SessionOutput bad = cmd_module_check(two, "sigma", {"[[x2]]", "[[x1]]"}, opt);
    CHECK(bad.exit_code == 1);
    CHECK(bad.machine["result"]["pass"] == false);
}

TEST_CASE("h0h1 with a chosen index over two generators") {
    RingConfig two = parse_ring_config(
        "field F5\ngenerators x, y\nmode poly\ntwist x = 2*x\ntwist y = y\n");
    SolveRequest req;
    req.task = "h0h1";
    req.bound = 4;
    req.index = 2;  // sigma_2 = id, so 1 - sigma_2 = 0 on everything
    SessionOutput out = cmd_solve(two, req, opt);
    int dim = out.machine["result"]["h0"]["dimension"];
    // all monomials of total degree <= 4 in two variables
    CHECK(dim == 15);
    CHECK(out.machine["result"]["h1"]["dimension"] == 15);
    req.index = 3;
    CHECK_THROWS_AS((void)cmd_solve(two, req, opt), Error);
}

TEST_CASE("machine output is reproducible byte for byte") {
    RingConfig f5 = parse_ring_config("field F5\ngenerators x\nmode poly\ntwist x = 2*x\n");
    SolveRequest req;
    req.task = "invariants";
    req.bound = 4;
    std::string got = cmd_solve(f5, req, opt).rendered("json");
    const std::string want = R"({
  "command": "solve invariants",
  "ring": "F5[x]",
  "result": {
    "basis": [
      "1",
      "x^4"
    ],
    "dimension": 2
  },
  "bounds": {
    "bound": 4
  },
  "stability": null,
  "version": "0.1.0"
})";
    CHECK(got == want);
}

TEST_CASE("bad requests are rejected with typed errors") {
    SolveRequest bad;
    bad.task = "eigenvalues";
    CHECK_THROWS_AS((void)cmd_solve(qdil(), bad, opt), Error);
    CHECK_THROWS_AS((void)cmd_verify(qdil(), {"nonsense", 0, 0}, opt), Error);
    CHECK_THROWS_AS((void)cmd_convert(qdil(), "d", "sideways", opt), Error);
    CHECK_THROWS_AS((void)cmd_module_check(qdil(), "sigma", {"[[x]]", "[[x]]"}, opt), Error);
    // centralizer needs a monomial basis
    RingConfig rf = parse_ring_config("field Q\ngenerators x\nmode ratfunc\ntwist x = 2*x\n");
    SolveRequest c;
    c.task = "center";
    CHECK_THROWS_AS((void)cmd_solve(rf, c, opt), Error);
}

TEST_CASE("json rendering is byte-stable") {
    RingConfig f3 = parse_ring_config("field F3\ngenerators x\nmode poly\ntwist x = x + 1\n");
    SolveRequest req;
    req.task = "constants";
    req.bound = 3;
    std::string a = cmd_solve(f3, req, opt).rendered("json");
    std::string b = cmd_solve(f3, req, opt).rendered("json");
    CHECK(a == b);
    CHECK(a.find("\"command\"") < a.find("\"ring\""));
    CHECK(a.find("\"ring\"") < a.find("\"result\""));
}
