#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "twistcalc/parse.hpp"

namespace twc {

inline constexpr const char* kVersion = "0.1.0";

/// A loaded ring description: base field, coefficient algebra, the diagonal
/// twist family, and operator-variable options.
struct RingConfig {
    FieldPtr field;
    AlgebraPtr algebra;
    TwistSpec twist;
    bool inversive_ops = false;

    OrePtr graded() const;
    OrePtr weyl() const;
    std::string description() const { return algebra->description(); }
};

/// Line-oriented key-value format (see docs/grammar.md). Diagnostics carry
/// line numbers; twist-family violations surface as InvalidTwist.
RingConfig parse_ring_config(const std::string& text);

struct SessionOptions {
    std::string format = "text";  // "text" or "json"
    std::uint64_t seed = 20240917;
};

struct SessionOutput {
    std::string command;
    std::string ring;
    nlohmann::ordered_json machine;
    std::string text;
    int exit_code = 0;

    std::string rendered(const std::string& format) const;
};

SessionOutput cmd_normalize(const RingConfig& cfg, const std::string& expr,
                            const SessionOptions& opt);
SessionOutput cmd_convert(const RingConfig& cfg, const std::string& expr,
                          const std::string& direction, const SessionOptions& opt);
SessionOutput cmd_apply(const RingConfig& cfg, const std::string& op_expr,
                        const std::string& operand, const SessionOptions& opt);

struct SolveRequest {
    std::string task;  // invariants | constants | center | centralizer | h0h1 | horizontal
    int bound = 4;
    int op_bound = 4;
    int index = 1;  // 1-based twist index for h0h1
    std::vector<std::string> matrices;
};
SessionOutput cmd_solve(const RingConfig& cfg, const SolveRequest& req, const SessionOptions& opt);

struct VerifyRequest {
    std::string suite;  // leibniz | schwarz | genD1 | representation | confluence
    int bound = 0;      // 0 = suite default
    int count = 0;      // 0 = suite default
};
SessionOutput cmd_verify(const RingConfig& cfg, const VerifyRequest& req,
                         const SessionOptions& opt);

SessionOutput cmd_module_translate(const RingConfig& cfg, const std::string& direction,
                                   const std::vector<std::string>& matrices,
                                   const SessionOptions& opt);
SessionOutput cmd_module_check(const RingConfig& cfg, const std::string& kind,
                               const std::vector<std::string>& matrices,
                               const SessionOptions& opt);

} // namespace twc
