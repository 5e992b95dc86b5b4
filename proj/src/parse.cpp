#include "twistcalc/parse.hpp"

#include <cctype>
#include <optional>

#include "twistcalc/error.hpp"

namespace twc {

namespace {

// ---------------------------------------------------------------------------
// Lexer.

enum class Tok { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, LBracket, RBracket, Comma, End };

struct Token {
    Tok type = Tok::End;
    std::string text;
    std::int64_t ival = 0;
    int line = 1;
    int col = 1;
};

[[noreturn]] void syntax_error(const Token& at, const std::string& msg) {
    fail(Errc::SyntaxError,
         "line " + std::to_string(at.line) + ", col " + std::to_string(at.col) + ": " + msg);
}

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto push = [&](Tok t, std::string s, std::int64_t v = 0) {
        out.push_back({t, std::move(s), v, line, col});
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++col;
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            std::string digits = text.substr(i, j - i);
            std::int64_t v = 0;
            try {
                v = std::stoll(digits);
            } catch (...) {
                out.push_back({Tok::Int, digits, 0, line, col});
                syntax_error(out.back(), "integer literal too large");
            }
            push(Tok::Int, digits, v);
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            push(Tok::Ident, text.substr(i, j - i));
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        Tok t;
        switch (c) {
        case '+': t = Tok::Plus; break;
        case '-': t = Tok::Minus; break;
        case '*': t = Tok::Star; break;
        case '/': t = Tok::Slash; break;
        case '^': t = Tok::Caret; break;
        case '(': t = Tok::LParen; break;
        case ')': t = Tok::RParen; break;
        case '[': t = Tok::LBracket; break;
        case ']': t = Tok::RBracket; break;
        case ',': t = Tok::Comma; break;
        default: {
            push(Tok::End, std::string(1, c));
            syntax_error(out.back(), std::string("unexpected character '") + c + "'");
        }
        }
        push(t, std::string(1, c));
        ++col;
        ++i;
    }
    Token end;
    end.line = line;
    end.col = col;
    out.push_back(end);
    return out;
}

// ---------------------------------------------------------------------------
// Recursive-descent core, shared by the coefficient and operator grammars.
// Precedence: ^ > unary minus > product (juxtaposition, *, /) > + -.

template <class Policy>
class ExprParser {
public:
    using V = typename Policy::Value;

    ExprParser(Policy pol, std::vector<Token> toks) : pol_(std::move(pol)), toks_(std::move(toks)) {}

    V parse_full() {
        V v = expr();
        expect(Tok::End, "end of expression");
        return v;
    }

    V expr() {
        V v = term();
        while (peek().type == Tok::Plus || peek().type == Tok::Minus) {
            bool minus = next().type == Tok::Minus;
            V rhs = term();
            v = minus ? pol_.sub(v, rhs) : pol_.add(v, rhs);
        }
        return v;
    }

private:
    bool starts_atom(Tok t) const {
        return t == Tok::Int || t == Tok::Ident || t == Tok::LParen;
    }

    V term() {
        V v = factor();
        while (true) {
            Tok t = peek().type;
            if (t == Tok::Star) {
                next();
                v = pol_.mul(v, factor());
            } else if (t == Tok::Slash) {
                Token at = next();
                v = pol_.div(v, factor(), at);
            } else if (starts_atom(t)) {
                v = pol_.mul(v, factor());  // juxtaposition
            } else {
                break;
            }
        }
        return v;
    }

    V factor() {
        if (peek().type == Tok::Minus) {
            next();
            return pol_.neg(factor());
        }
        return powatom();
    }

    V powatom() {
        V a = atom();
        if (peek().type == Tok::Caret) {
            next();
            bool neg = false;
            if (peek().type == Tok::Minus) {
                next();
                neg = true;
            }
            Token e = expect(Tok::Int, "integer exponent");
            if (e.ival > 1000000) syntax_error(e, "exponent too large");
            a = pol_.pow(a, neg ? -e.ival : e.ival, e);
        }
        return a;
    }

    V atom() {
        Token t = next();
        switch (t.type) {
        case Tok::Int: return pol_.from_int(t.ival);
        case Tok::Ident: return pol_.ident(t);
        case Tok::LParen: {
            V v = expr();
            expect(Tok::RParen, "')'");
            return v;
        }
        default: syntax_error(t, "expected a number, name or '('");
        }
    }

    const Token& peek() const { return toks_[pos_]; }
    Token next() { return toks_[pos_++]; }
    Token expect(Tok t, const std::string& what) {
        Token tok = next();
        if (tok.type != t) syntax_error(tok, "expected " + what);
        return tok;
    }

    Policy pol_;
    std::vector<Token> toks_;
    std::size_t pos_ = 0;

public:
    // Bracket-list helpers for the matrix/vector grammars.
    bool consume_if(Tok t) {
        if (peek().type == t) {
            next();
            return true;
        }
        return false;
    }
    Token expect_tok(Tok t, const std::string& what) { return expect(t, what); }
    bool at_end() const { return peek().type == Tok::End; }
};

// Identifier resolution shared by both grammars: generators, then the field
// parameter.
std::optional<CoeffElem> resolve_coeff_ident(const AlgebraPtr& alg, const std::string& name) {
    for (int i = 0; i < alg->nvars(); ++i)
        if (alg->names[i] == name) return CoeffElem::generator(alg, i);
    if (alg->field->kind == FieldKind::RatFunc && alg->field->param == name)
        return CoeffElem::from_scalar(alg, Scalar::parameter(alg->field));
    return std::nullopt;
}

struct CoeffPolicy {
    using Value = CoeffElem;
    AlgebraPtr alg;

    Value from_int(std::int64_t v) const { return CoeffElem::from_int(alg, v); }
    Value ident(const Token& t) const {
        if (auto v = resolve_coeff_ident(alg, t.text)) return *v;
        fail(Errc::UnknownSymbol, "'" + t.text + "' names no generator or parameter of " +
                                      alg->description());
    }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value div(const Value& a, const Value& b, const Token&) const { return a / b; }
    Value neg(const Value& a) const { return -a; }
    Value pow(const Value& a, std::int64_t e, const Token&) const { return a.pow(e); }
};

// Operator symbol: the kind's letter with an optional 1-based index; the bare
// letter is the sole operator of a one-operator algebra.
std::optional<int> match_op_symbol(const OrePtr& alg, const std::string& name) {
    const char letter = alg->kind == OreKind::Graded ? 'T' : 'd';
    if (name.empty() || name[0] != letter) return std::nullopt;
    if (name.size() == 1) return alg->nops() == 1 ? std::optional<int>(0) : std::nullopt;
    int idx = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
        idx = idx * 10 + (name[i] - '0');
    }
    if (idx < 1 || idx > alg->nops()) return std::nullopt;
    return idx - 1;
}

struct OrePolicy {
    using Value = OreOperator;
    OrePtr alg;

    Value from_int(std::int64_t v) const {
        return OreOperator::from_coeff(alg, CoeffElem::from_int(alg->coeffs, v));
    }
    Value ident(const Token& t) const {
        if (auto i = match_op_symbol(alg, t.text)) return OreOperator::generator(alg, *i);
        if (auto v = resolve_coeff_ident(alg->coeffs, t.text))
            return OreOperator::from_coeff(alg, *v);
        fail(Errc::UnknownSymbol,
             "'" + t.text + "' names no operator, generator or parameter of " + alg->description());
    }
    Value add(const Value& a, const Value& b) const { return a + b; }
    Value sub(const Value& a, const Value& b) const { return a - b; }
    Value mul(const Value& a, const Value& b) const { return a * b; }
    Value div(const Value& a, const Value& b, const Token& at) const {
        // Coefficient division when both sides are coefficients; otherwise
        // right-multiplication by the inverse of a unit coefficient.
        if (b.degree() > 0) syntax_error(at, "cannot divide by an operator of positive degree");
        if (b.is_zero()) fail(Errc::DivisionByZero, "operator division by zero");
        const CoeffElem& bc = b.terms().begin()->second;
        if (a.degree() <= 0) {
            CoeffElem ac = a.is_zero() ? CoeffElem::zero(alg->coeffs) : a.terms().begin()->second;
            return OreOperator::from_coeff(alg, ac / bc);
        }
        return a * OreOperator::from_coeff(alg, bc.inv());
    }
    Value neg(const Value& a) const { return -a; }
    Value pow(const Value& a, std::int64_t e, const Token&) const { return a.pow(e); }
};

} // namespace

// ---------------------------------------------------------------------------
// Entry points.

Scalar parse_scalar(const FieldPtr& f, const std::string& text) {
    // Scalars share the coefficient grammar over a throwaway one-generator
    // algebra; the result must be constant.
    AlgebraPtr tmp = make_algebra(f, {"__scalar_slot"}, CoeffMode::Poly);
    ExprParser<CoeffPolicy> p(CoeffPolicy{tmp}, lex(text));
    CoeffElem v = p.parse_full();
    if (!v.is_scalar()) fail(Errc::SyntaxError, "expected a scalar expression: " + text);
    return v.scalar_value();
}

CoeffElem parse_coeff(const AlgebraPtr& alg, const std::string& text) {
    ExprParser<CoeffPolicy> p(CoeffPolicy{alg}, lex(text));
    return p.parse_full();
}

OreOperator parse_operator(const OrePtr& alg, const std::string& text) {
    ExprParser<OrePolicy> p(OrePolicy{alg}, lex(text));
    return p.parse_full();
}

CoeffMatrix parse_matrix(const AlgebraPtr& alg, const std::string& text) {
    ExprParser<CoeffPolicy> p(CoeffPolicy{alg}, lex(text));
    p.expect_tok(Tok::LBracket, "'['");
    std::vector<std::vector<CoeffElem>> rows;
    do {
        p.expect_tok(Tok::LBracket, "'[' starting a row");
        std::vector<CoeffElem> row;
        do {
            row.push_back(p.expr());
        } while (p.consume_if(Tok::Comma));
        p.expect_tok(Tok::RBracket, "']' ending a row");
        rows.push_back(std::move(row));
    } while (p.consume_if(Tok::Comma));
    p.expect_tok(Tok::RBracket, "']' ending the matrix");
    p.expect_tok(Tok::End, "end of matrix");
    const int r = static_cast<int>(rows.size());
    const int c = static_cast<int>(rows[0].size());
    for (const auto& row : rows)
        if (static_cast<int>(row.size()) != c) fail(Errc::SyntaxError, "ragged matrix rows");
    CoeffMatrix m(alg, r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    return m;
}

std::vector<CoeffElem> parse_vector(const AlgebraPtr& alg, const std::string& text) {
    ExprParser<CoeffPolicy> p(CoeffPolicy{alg}, lex(text));
    p.expect_tok(Tok::LBracket, "'['");
    std::vector<CoeffElem> out;
    do {
        out.push_back(p.expr());
    } while (p.consume_if(Tok::Comma));
    p.expect_tok(Tok::RBracket, "']'");
    p.expect_tok(Tok::End, "end of vector");
    return out;
}

OpSymbolScan scan_operator_symbols(const std::string& text, const AlgebraPtr& alg) {
    OpSymbolScan s;
    for (const Token& t : lex(text)) {
        if (t.type != Tok::Ident) continue;
        if (resolve_coeff_ident(alg, t.text)) continue;
        const std::string& n = t.text;
        bool digits = n.size() >= 1;
        for (std::size_t i = 1; i < n.size(); ++i)
            digits = digits && std::isdigit(static_cast<unsigned char>(n[i]));
        if (!digits) continue;
        if (n[0] == 'T') s.uses_T = true;
        if (n[0] == 'd') s.uses_d = true;
    }
    return s;
}

} // namespace twc
