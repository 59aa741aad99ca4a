#include "quasiord/parser.hpp"

#include <cctype>
#include <set>

namespace quasiord {

void VarDecl::validate() const {
    std::set<std::string> seen;
    auto check_name = [&](const std::string& s) {
        if (s.empty() || (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_'))
            throw SyntaxError("invalid variable name '" + s + "'");
        for (char ch : s)
            if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
                throw SyntaxError("invalid variable name '" + s + "'");
        if (!seen.insert(s).second)
            throw SyntaxError("duplicate variable name '" + s + "'");
        // reserved for the tower variables and the deformation parameter
        if (s == "T") throw SyntaxError("'T' is reserved for the deformation parameter");
        if (s.size() >= 2 && s[0] == 'u' &&
            std::all_of(s.begin() + 1, s.end(),
                        [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw SyntaxError("'" + s + "' is reserved for tower variables");
    };
    if (base.empty()) throw SyntaxError("no base variables declared");
    for (const auto& s : base) check_name(s);
    check_name(main);
}

namespace {

struct Parser {
    const std::string& text;
    const VarDecl& decl;
    Signature sig;
    size_t pos = 0;
    int line = 1, col = 1;

    explicit Parser(const std::string& t, const VarDecl& d)
        : text(t), decl(d), sig{static_cast<int>(d.base.size()), 0} {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw SyntaxError(msg + " at line " + std::to_string(line) + ", column " +
                          std::to_string(col));
    }

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
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) advance();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool eat(char c) {
        if (peek() != c) return false;
        advance();
        return true;
    }

    long natural() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected a number");
        std::string digits;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            digits += text[pos];
            advance();
        }
        return std::stol(digits);
    }

    SparsePolynomial parse_base() {
        char c = peek();
        if (c == '(') {
            advance();
            SparsePolynomial e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long num = natural();
            if (eat('/')) {
                long den = natural();
                if (den == 0) fail("zero denominator");
                return SparsePolynomial::constant(sig, Rat(num, den));
            }
            return SparsePolynomial::constant(sig, Rat(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            int vline = line, vcol = col;
            std::string name;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
                name += text[pos];
                advance();
            }
            if (name == decl.main)
                return SparsePolynomial::variable(sig, {VarKind::Main, 0});
            for (size_t i = 0; i < decl.base.size(); ++i)
                if (name == decl.base[i])
                    return SparsePolynomial::variable(sig, {VarKind::Base, static_cast<int>(i)});
            throw UnknownVariable("'" + name + "' at line " + std::to_string(vline) +
                                  ", column " + std::to_string(vcol));
        }
        fail("expected a number, variable, or '('");
    }

    SparsePolynomial factor() {
        SparsePolynomial b = parse_base();
        if (eat('^')) {
            long e = natural();
            return b.pow(static_cast<int>(e));
        }
        return b;
    }

    SparsePolynomial term() {
        SparsePolynomial f = factor();
        while (eat('*')) f = f * factor();
        return f;
    }

    SparsePolynomial expr() {
        bool neg = eat('-');
        SparsePolynomial acc = term();
        if (neg) acc = -acc;
        while (true) {
            if (eat('+')) {
                acc += term();
            } else if (eat('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }
};

}  // namespace

SparsePolynomial parse_polynomial(const std::string& text, const VarDecl& decl) {
    decl.validate();
    Parser p(text, decl);
    SparsePolynomial f = p.expr();
    if (p.peek() != '\0') p.fail("trailing input");
    return f;
}

std::string render(const SparsePolynomial& f, const VarDecl& decl) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        std::vector<std::string> factors;
        auto push_var = [&](const std::string& name, int exp) {
            if (exp == 0) return;
            factors.push_back(exp == 1 ? name : name + "^" + std::to_string(exp));
        };
        for (size_t i = 0; i < e.base.size(); ++i) push_var(decl.base[i], e.base[i]);
        for (size_t i = 0; i < e.tower.size(); ++i) push_var("u" + std::to_string(i), e.tower[i]);
        push_var(decl.main, e.main);

        Rat a = c.abs();
        std::string body;
        if (factors.empty()) {
            body = a.str();
        } else {
            if (!(a == Rat(1))) body = a.str() + "*";
            for (size_t i = 0; i < factors.size(); ++i) {
                if (i) body += "*";
                body += factors[i];
            }
        }
        if (first) {
            out = (c.sign() < 0 ? "-" : "") + body;
            first = false;
        } else {
            out += (c.sign() < 0 ? " - " : " + ") + body;
        }
    }
    return out;
}

}  // namespace quasiord
