#include "pf/expr_parser.hpp"

#include <cctype>
#include <map>

#include "pf/errors.hpp"

namespace pf {

namespace {

struct Token {
    enum Kind { Number, Name, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
    Kind kind = End;
    std::string text;
    BigRational value;  // for Number
    bool is_integer = false;
    int line = 1, col = 1;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t i = 0;
    auto advance = [&](size_t n) {
        for (size_t k = 0; k < n; ++k) {
            if (text[i + k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        i += n;
    };
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        Token tok;
        tok.line = line;
        tok.col = col;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            size_t num_end = j;
            // A '/' directly followed by digits continues the literal.
            if (j < text.size() && text[j] == '/' && j + 1 < text.size() &&
                std::isdigit(static_cast<unsigned char>(text[j + 1]))) {
                ++j;
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
                tok.is_integer = false;
            } else {
                j = num_end;
                tok.is_integer = true;
            }
            tok.kind = Token::Number;
            tok.text = text.substr(i, j - i);
            tok.value = parse_rational(tok.text);
            advance(j - i);
            out.push_back(tok);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            tok.kind = Token::Name;
            tok.text = text.substr(i, j - i);
            advance(j - i);
            out.push_back(tok);
            continue;
        }
        switch (c) {
            case '+': tok.kind = Token::Plus; break;
            case '-': tok.kind = Token::Minus; break;
            case '*': tok.kind = Token::Star; break;
            case '/': tok.kind = Token::Slash; break;
            case '^': tok.kind = Token::Caret; break;
            case '(': tok.kind = Token::LParen; break;
            case ')': tok.kind = Token::RParen; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
        tok.text = std::string(1, c);
        advance(1);
        out.push_back(tok);
    }
    Token end;
    end.kind = Token::End;
    end.line = line;
    end.col = col;
    out.push_back(end);
    return out;
}

// Intermediate value: possibly inhomogeneous polynomial over the variables
// with rational-function coefficients in the parameter.
using Bag = std::map<Monomial, ParamRat>;

void bag_add(Bag& a, const Monomial& m, const ParamRat& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = a.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) a.erase(it);
    }
}

Bag bag_mul(const Bag& a, const Bag& b) {
    Bag r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) bag_add(r, ma * mb, ca * cb);
    return r;
}

class Parser {
public:
    Parser(const std::string& text, std::vector<std::string> variables, std::string parameter,
           bool extended)
        : tokens_(tokenize(text)),
          vars_(std::move(variables)),
          param_(std::move(parameter)),
          extended_(extended) {}

    Bag run() {
        Bag v = expr();
        expect(Token::End, "end of input");
        return v;
    }

    int nvars() const { return static_cast<int>(vars_.size()); }

private:
    const Token& cur() const { return tokens_[pos_]; }
    void next() { ++pos_; }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, cur().line, cur().col);
    }
    void expect(Token::Kind k, const std::string& what) {
        if (cur().kind != k) fail("expected " + what);
        if (k != Token::End) next();
    }

    Bag expr() {
        bool negate_first = false;
        if (cur().kind == Token::Minus) {
            negate_first = true;
            next();
        }
        Bag acc = term();
        if (negate_first) acc = negated(acc);
        while (cur().kind == Token::Plus || cur().kind == Token::Minus) {
            bool minus = cur().kind == Token::Minus;
            next();
            Bag rhs = term();
            if (minus) rhs = negated(rhs);
            for (const auto& [m, c] : rhs) bag_add(acc, m, c);
        }
        return acc;
    }

    Bag term() {
        Bag acc = factor();
        while (cur().kind == Token::Star || cur().kind == Token::Slash) {
            bool divide = cur().kind == Token::Slash;
            if (divide && !extended_) fail("'/' is only allowed inside a rational literal here");
            const Token& op = cur();
            next();
            Bag rhs = factor();
            if (divide) {
                ParamRat d = as_parameter_only(rhs, op);
                if (d.is_zero()) throw ParseError("division by zero", op.line, op.col);
                Bag scaled;
                for (const auto& [m, c] : acc) bag_add(scaled, m, c / d);
                acc = std::move(scaled);
            } else {
                acc = bag_mul(acc, rhs);
            }
        }
        return acc;
    }

    Bag factor() {
        Bag b = base();
        if (cur().kind == Token::Caret) {
            next();
            if (cur().kind != Token::Number || !cur().is_integer)
                fail("expected a natural number exponent");
            BigRational e = cur().value;
            if (e < 0 || e > 1000000) fail("exponent out of range");
            long n = e.get_num().get_si();
            next();
            Bag acc;
            bag_add(acc, Monomial::unit(nvars()), ParamRat(1));
            for (long k = 0; k < n; ++k) acc = bag_mul(acc, b);
            return acc;
        }
        return b;
    }

    Bag base() {
        Bag v;
        switch (cur().kind) {
            case Token::Number:
                bag_add(v, Monomial::unit(nvars()), ParamRat(cur().value));
                next();
                return v;
            case Token::Name: {
                const std::string& name = cur().text;
                if (name == param_) {
                    bag_add(v, Monomial::unit(nvars()), ParamRat::parameter());
                    next();
                    return v;
                }
                for (int i = 0; i < nvars(); ++i) {
                    if (vars_[static_cast<size_t>(i)] == name) {
                        Monomial m = Monomial::unit(nvars());
                        m.e[static_cast<size_t>(i)] = 1;
                        bag_add(v, m, ParamRat(1));
                        next();
                        return v;
                    }
                }
                fail("unknown symbol '" + name + "'");
            }
            case Token::LParen: {
                next();
                Bag inner = expr();
                expect(Token::RParen, "')'");
                return inner;
            }
            default:
                fail("expected a variable, the parameter, a number, or '('");
        }
    }

    static Bag negated(const Bag& a) {
        Bag r;
        for (const auto& [m, c] : a) r.emplace(m, -c);
        return r;
    }

    ParamRat as_parameter_only(const Bag& b, const Token& at) const {
        ParamRat acc;
        for (const auto& [m, c] : b) {
            if (m.degree() != 0)
                throw ParseError("division by an expression containing variables", at.line,
                                 at.col);
            acc += c;
        }
        return acc;
    }

    std::vector<Token> tokens_;
    size_t pos_ = 0;
    std::vector<std::string> vars_;
    std::string param_;
    bool extended_;
};

MultiPoly bag_to_multipoly(const Bag& bag, int nvars) {
    std::vector<std::pair<Monomial, ParamRat>> terms(bag.begin(), bag.end());
    return MultiPoly::from_terms(nvars, terms);
}

}  // namespace

MultiPoly parse_polynomial(const std::string& text, const std::vector<std::string>& variables,
                           const std::string& parameter) {
    Parser p(text, variables, parameter, /*extended=*/false);
    return bag_to_multipoly(p.run(), static_cast<int>(variables.size()));
}

MultiPoly parse_polynomial_extended(const std::string& text,
                                    const std::vector<std::string>& variables,
                                    const std::string& parameter) {
    Parser p(text, variables, parameter, /*extended=*/true);
    return bag_to_multipoly(p.run(), static_cast<int>(variables.size()));
}

ParamRat parse_ratfunc(const std::string& text, const std::string& parameter) {
    Parser p(text, {"__none__"}, parameter, /*extended=*/true);
    Bag bag = p.run();
    ParamRat acc;
    for (const auto& [m, c] : bag) {
        if (m.degree() != 0) throw ParseError("expected an expression in the parameter only");
        acc += c;
    }
    return acc;
}

}  // namespace pf
