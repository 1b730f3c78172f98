// Input parsing: ring/ideal expressions like
//   QQ[x,y,z] / (x*y^2, x*y*z, y*z^2, x^4-y^3*z, x*z^3-y^4)
//   GF 2[u,v,w,x,y,z] / (...)
// and the FIELD / VARS / GENS file layout. Polynomial expressions support
// +, -, *, ^, integer literals and parentheses.
#ifndef TORALG_PARSE_HPP
#define TORALG_PARSE_HPP

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toralg/errors.hpp"
#include "toralg/polynomial.hpp"

namespace toralg {

struct InputSpec {
    CoefficientField field;
    std::vector<std::string> vars;
    std::vector<std::string> generator_exprs;  // raw text, one per generator
    // location of each generator expression within the original input
    std::vector<std::pair<int, int>> generator_pos;  // 1-based (line, column)
};

namespace detail {

struct Cursor {
    const std::string& text;
    std::size_t i = 0;
    int line = 1;
    int col = 1;

    explicit Cursor(const std::string& t) : text(t) {}

    bool eof() const { return i >= text.size(); }
    char peek() const { return eof() ? '\0' : text[i]; }

    char advance() {
        char c = text[i++];
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        return c;
    }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }

    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, line, col); }

    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        advance();
    }

    bool consume(char c) {
        skip_ws();
        if (peek() != c) return false;
        advance();
        return true;
    }

    std::string identifier() {
        skip_ws();
        if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_')
            fail("expected an identifier");
        std::string s;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
            s += advance();
        return s;
    }

    std::int64_t integer() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
        std::int64_t v = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (advance() - '0');
            if (v > (std::int64_t{1} << 40)) fail("integer literal too large");
        }
        return v;
    }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Polynomial expressions
// ---------------------------------------------------------------------------

template <class K>
class ExprParser {
public:
    ExprParser(RingPtr ring, const std::string& text, int line0 = 1, int col0 = 1)
        : ring_(std::move(ring)), cur_(text) {
        cur_.line = line0;
        cur_.col = col0;
        for (int i = 0; i < ring_->nvars(); ++i) var_index_[ring_->vars[static_cast<std::size_t>(i)]] = i;
    }

    Polynomial<K> parse() {
        Polynomial<K> p = expr();
        cur_.skip_ws();
        if (!cur_.eof()) cur_.fail("unexpected trailing input");
        return p;
    }

private:
    RingPtr ring_;
    detail::Cursor cur_;
    std::map<std::string, int> var_index_;

    Polynomial<K> expr() {
        cur_.skip_ws();
        bool neg = false;
        while (cur_.consume('-')) neg = !neg;
        Polynomial<K> p = term();
        if (neg) p = -p;
        for (;;) {
            cur_.skip_ws();
            char c = cur_.peek();
            if (c == '+') {
                cur_.advance();
                p = p + term();
            } else if (c == '-') {
                cur_.advance();
                p = p - term();
            } else {
                break;
            }
        }
        return p;
    }

    Polynomial<K> term() {
        Polynomial<K> p = factor();
        for (;;) {
            cur_.skip_ws();
            if (cur_.peek() == '*') {
                cur_.advance();
                p = p * factor();
            } else {
                break;
            }
        }
        return p;
    }

    Polynomial<K> factor() {
        Polynomial<K> base = atom();
        cur_.skip_ws();
        if (cur_.peek() == '^') {
            cur_.advance();
            std::int64_t e = cur_.integer();
            if (e > 512) cur_.fail("exponent too large");
            Polynomial<K> r = Polynomial<K>::constant(ring_, 1);
            for (std::int64_t k = 0; k < e; ++k) r = r * base;
            return r;
        }
        return base;
    }

    Polynomial<K> atom() {
        cur_.skip_ws();
        char c = cur_.peek();
        if (c == '(') {
            cur_.advance();
            Polynomial<K> p = expr();
            cur_.expect(')');
            return p;
        }
        if (c == '-') {
            cur_.advance();
            return -atom();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial<K>::constant(ring_, cur_.integer());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            int line = cur_.line, col = cur_.col;
            std::string name = cur_.identifier();
            auto it = var_index_.find(name);
            if (it == var_index_.end()) throw parse_error("unknown variable '" + name + "'", line, col);
            return Polynomial<K>::variable(ring_, it->second);
        }
        cur_.fail("expected a variable, integer or parenthesized expression");
    }
};

template <class K>
Polynomial<K> parse_polynomial(const RingPtr& ring, const std::string& text, int line0 = 1,
                               int col0 = 1) {
    return ExprParser<K>(ring, text, line0, col0).parse();
}

// ---------------------------------------------------------------------------
// Ring/ideal specs
// ---------------------------------------------------------------------------

namespace detail {

inline CoefficientField parse_field_tag(Cursor& cur) {
    std::string tag = cur.identifier();
    if (tag == "QQ") return rationals_field();
    if (tag == "GF") {
        bool paren = cur.consume('(');
        std::int64_t p = cur.integer();
        if (paren) cur.expect(')');
        if (p < 2 || p >= (std::int64_t{1} << 31)) cur.fail("characteristic out of range");
        if (!is_prime(static_cast<std::uint64_t>(p))) cur.fail("characteristic must be prime");
        return prime_field(static_cast<std::uint32_t>(p));
    }
    cur.fail("expected field 'QQ' or 'GF p'");
}

inline std::vector<std::string> parse_var_list(Cursor& cur) {
    std::vector<std::string> vars;
    cur.expect('[');
    if (!cur.consume(']')) {
        do {
            vars.push_back(cur.identifier());
        } while (cur.consume(','));
        cur.expect(']');
    }
    for (std::size_t i = 0; i < vars.size(); ++i)
        for (std::size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) cur.fail("duplicate variable '" + vars[i] + "'");
    if (static_cast<int>(vars.size()) > kMaxVars) cur.fail("too many variables");
    return vars;
}

// captures one generator expression as raw text, tracking nesting
inline std::string capture_generator(Cursor& cur, int& line, int& col) {
    cur.skip_ws();
    line = cur.line;
    col = cur.col;
    std::string s;
    int depth = 0;
    while (!cur.eof()) {
        char c = cur.peek();
        if (depth == 0 && (c == ',' || c == ')')) break;
        if (c == '(') ++depth;
        if (c == ')') --depth;
        s += cur.advance();
    }
    return s;
}

}  // namespace detail

// Single-line form: FIELD[vars] / (g1, g2, ...)
inline InputSpec parse_spec_line(const std::string& text) {
    detail::Cursor cur(text);
    InputSpec spec;
    spec.field = detail::parse_field_tag(cur);
    spec.vars = detail::parse_var_list(cur);
    cur.expect('/');
    cur.expect('(');
    cur.skip_ws();
    if (!cur.consume(')')) {
        do {
            int line = 0, col = 0;
            std::string g = detail::capture_generator(cur, line, col);
            if (g.empty()) cur.fail("empty generator");
            spec.generator_exprs.push_back(g);
            spec.generator_pos.emplace_back(line, col);
        } while (cur.consume(','));
        cur.expect(')');
    }
    cur.skip_ws();
    if (!cur.eof()) cur.fail("unexpected trailing input");
    return spec;
}

// File form:
//   FIELD QQ          (or: FIELD GF 7)
//   VARS x, y, z      (commas optional)
//   GENS
//   x^2 + y*z
//   ...one generator per line, blank lines and '#' comments ignored
inline InputSpec parse_spec_file(const std::string& text) {
    InputSpec spec;
    bool have_field = false, have_vars = false, in_gens = false;
    int lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string line = text.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos);
        ++lineno;
        std::size_t next = nl == std::string::npos ? text.size() + 1 : nl + 1;

        std::string trimmed = line;
        while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.front())))
            trimmed.erase(trimmed.begin());
        while (!trimmed.empty() && std::isspace(static_cast<unsigned char>(trimmed.back())))
            trimmed.pop_back();

        if (trimmed.empty() || trimmed[0] == '#') {
            pos = next;
            continue;
        }
        if (!in_gens) {
            detail::Cursor cur(trimmed);
            cur.line = lineno;
            std::string kw = cur.identifier();
            if (kw == "FIELD") {
                spec.field = detail::parse_field_tag(cur);
                have_field = true;
            } else if (kw == "VARS") {
                std::vector<std::string> vars;
                cur.skip_ws();
                while (!cur.eof()) {
                    vars.push_back(cur.identifier());
                    cur.consume(',');
                    cur.skip_ws();
                }
                if (static_cast<int>(vars.size()) > kMaxVars) cur.fail("too many variables");
                spec.vars = vars;
                have_vars = true;
            } else if (kw == "GENS") {
                in_gens = true;
            } else {
                throw parse_error("expected FIELD, VARS or GENS", lineno, 1);
            }
        } else {
            std::size_t indent = line.find_first_not_of(" \t");
            spec.generator_exprs.push_back(trimmed);
            spec.generator_pos.emplace_back(lineno, static_cast<int>(indent) + 1);
        }
        pos = next;
    }
    if (!have_field) throw parse_error("missing FIELD section", lineno, 1);
    if (!have_vars) throw parse_error("missing VARS section", lineno, 1);
    for (std::size_t i = 0; i < spec.vars.size(); ++i)
        for (std::size_t j = i + 1; j < spec.vars.size(); ++j)
            if (spec.vars[i] == spec.vars[j])
                throw parse_error("duplicate variable '" + spec.vars[i] + "'", 1, 1);
    return spec;
}

// Decides between the two layouts: anything containing a FIELD keyword at the
// start of a line is treated as the file form.
inline InputSpec parse_input(const std::string& text) {
    detail::Cursor probe(text);
    probe.skip_ws();
    if (text.find("FIELD") != std::string::npos) return parse_spec_file(text);
    return parse_spec_line(text);
}

template <class K>
std::vector<Polynomial<K>> build_generators(const RingPtr& ring, const InputSpec& spec) {
    std::vector<Polynomial<K>> gens;
    gens.reserve(spec.generator_exprs.size());
    for (std::size_t i = 0; i < spec.generator_exprs.size(); ++i) {
        auto [line, col] = spec.generator_pos[i];
        gens.push_back(parse_polynomial<K>(ring, spec.generator_exprs[i], line, col));
    }
    return gens;
}

}  // namespace toralg

#endif
