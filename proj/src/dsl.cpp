#include "qfp/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qfp {
namespace {

struct Token {
    enum class Kind { Ident, Int, Punct, End } kind = Kind::End;
    std::string text;
    std::size_t line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(std::uint8_t(text_[pos_]))) bump();
        if (pos_ < text_.size() && text_[pos_] == '#') {  // comment to end of line
            while (pos_ < text_.size() && text_[pos_] != '\n') bump();
            advance();
            return;
        }
        tok_ = {Token::Kind::End, "", line_, col_};
        if (pos_ >= text_.size()) return;
        char c = text_[pos_];
        tok_.line = line_;
        tok_.col = col_;
        if (std::isalpha(std::uint8_t(c)) || c == '_') {
            std::string s;
            while (pos_ < text_.size() &&
                   (std::isalnum(std::uint8_t(text_[pos_])) || text_[pos_] == '_')) {
                s += text_[pos_];
                bump();
            }
            // trailing primes belong to the name: s', t''
            while (pos_ < text_.size() && text_[pos_] == '\'') {
                s += text_[pos_];
                bump();
            }
            tok_.kind = Token::Kind::Ident;
            tok_.text = std::move(s);
        } else if (std::isdigit(std::uint8_t(c))) {
            std::string s;
            while (pos_ < text_.size() && std::isdigit(std::uint8_t(text_[pos_]))) {
                s += text_[pos_];
                bump();
            }
            tok_.kind = Token::Kind::Int;
            tok_.text = std::move(s);
        } else {
            tok_.kind = Token::Kind::Punct;
            tok_.text = std::string(1, c);
            bump();
        }
    }
    void bump() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0, line_ = 1, col_ = 1;
    Token tok_;
};

[[noreturn]] void fail(const Token& at, const std::string& expected) {
    throw ParseError(at.line, at.col,
                     at.kind == Token::Kind::End ? "unexpected end of input"
                                                 : "unexpected '" + at.text + "'",
                     expected);
}

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    std::vector<RingDecl> decls() {
        std::vector<RingDecl> out;
        while (lex_.peek().kind != Token::Kind::End) out.push_back(decl());
        return out;
    }

    RingDecl decl() {
        expect_keyword("ring");
        RingDecl d;
        d.name = expect(Token::Kind::Ident, "ring name").text;
        expect_punct("=");
        expect_keyword("GF");
        expect_punct("(");
        d.q = expect_uint("field size");
        expect_punct(")");
        factor_prime_power(d);
        expect_punct("[");
        d.vars.push_back(expect(Token::Kind::Ident, "variable name").text);
        while (is_punct(",")) {
            lex_.take();
            d.vars.push_back(expect(Token::Kind::Ident, "variable name").text);
        }
        expect_punct("]");
        for (std::size_t i = 0; i < d.vars.size(); ++i)
            for (std::size_t j = i + 1; j < d.vars.size(); ++j)
                if (d.vars[i] == d.vars[j])
                    fail(lex_.peek(), "distinct variable names (duplicate '" + d.vars[i] + "')");
        if (is_punct("/")) {
            lex_.take();
            expect_punct("(");
            d.relations.push_back(poly(d));
            while (is_punct(",")) {
                lex_.take();
                d.relations.push_back(poly(d));
            }
            expect_punct(")");
        }
        Token m = expect(Token::Kind::Ident, "'finite' or 'graded'");
        if (m.text == "finite")
            d.mode = RingDecl::Mode::Finite;
        else if (m.text == "graded")
            d.mode = RingDecl::Mode::Graded;
        else
            fail(m, "'finite' or 'graded'");
        if (d.mode == RingDecl::Mode::Graded)
            for (const auto& r : d.relations)
                if (!r.is_homogeneous())
                    fail(m, "homogeneous relations in graded mode");
        return d;
    }

    SparsePoly poly(const RingDecl& d) {
        const std::uint32_t arity = std::uint32_t(d.vars.size());
        Domain dom = gf(d.p);
        SparsePoly acc = SparsePoly::zero(arity, dom);
        bool negate = false;
        if (is_punct("-")) {
            lex_.take();
            negate = true;
        }
        acc = acc.add(term_chain(d, negate));
        while (is_punct("+") || is_punct("-")) {
            bool minus = lex_.take().text == "-";
            acc = acc.add(term_chain(d, minus));
        }
        return acc;
    }

private:
    SparsePoly term_chain(const RingDecl& d, bool negate) {
        const std::uint32_t arity = std::uint32_t(d.vars.size());
        Domain dom = gf(d.p);
        SparsePoly t = factor(d);
        while (true) {
            if (is_punct("*")) {
                lex_.take();
                t = t.mul(factor(d));
            } else if (lex_.peek().kind == Token::Kind::Ident ||
                       lex_.peek().kind == Token::Kind::Int) {
                t = t.mul(factor(d));  // juxtaposition
            } else {
                break;
            }
        }
        if (negate) t = t.neg();
        (void)arity;
        (void)dom;
        return t;
    }

    SparsePoly factor(const RingDecl& d) {
        const std::uint32_t arity = std::uint32_t(d.vars.size());
        Domain dom = gf(d.p);
        Token t = lex_.peek();
        if (t.kind == Token::Kind::Int) {
            lex_.take();
            return SparsePoly::constant(arity, dom, mpz_class(t.text));
        }
        if (t.kind == Token::Kind::Ident) {
            lex_.take();
            auto it = std::find(d.vars.begin(), d.vars.end(), t.text);
            if (it == d.vars.end())
                throw ParseError(t.line, t.col, "undeclared variable '" + t.text + "'",
                                 "a declared variable");
            std::uint16_t e = 1;
            if (is_punct("^")) {
                lex_.take();
                std::uint32_t v = expect_uint("exponent");
                require(v <= 0xffffu, "exponent too large");
                e = std::uint16_t(v);
            }
            return SparsePoly::variable(arity, dom, std::uint32_t(it - d.vars.begin()), e);
        }
        fail(t, "a variable or an integer literal");
    }

    void factor_prime_power(RingDecl& d) {
        std::uint32_t q = d.q;
        auto bad = [&]() -> ParseError {
            return ParseError(lex_.peek().line, lex_.peek().col,
                              std::to_string(d.q) + " is not a prime power",
                              "a prime power field size");
        };
        if (q < 2) throw bad();
        std::uint32_t p = 2;
        while (q % p != 0) ++p;  // smallest divisor of q is prime
        std::uint32_t k = 0;
        while (q > 1) {
            if (q % p != 0) throw bad();
            q /= p;
            ++k;
        }
        d.p = p;
        d.ext_degree = k;
    }

    bool is_punct(const std::string& s) {
        return lex_.peek().kind == Token::Kind::Punct && lex_.peek().text == s;
    }
    Token expect(Token::Kind k, const std::string& what) {
        if (lex_.peek().kind != k) fail(lex_.peek(), what);
        return lex_.take();
    }
    void expect_punct(const std::string& s) {
        if (!is_punct(s)) fail(lex_.peek(), "'" + s + "'");
        lex_.take();
    }
    void expect_keyword(const std::string& s) {
        Token t = expect(Token::Kind::Ident, "'" + s + "'");
        if (t.text != s) fail(t, "'" + s + "'");
    }
    std::uint32_t expect_uint(const std::string& what) {
        Token t = expect(Token::Kind::Int, what);
        unsigned long v = std::stoul(t.text);
        require(v <= 0xffffffffu, "integer literal out of range");
        return std::uint32_t(v);
    }

    Lexer lex_;
};

}  // namespace

ParseError::ParseError(std::size_t line_, std::size_t col_, const std::string& what,
                       const std::string& expected_)
    : error("parse error at " + std::to_string(line_) + ":" + std::to_string(col_) + ": " +
            what + " (expected " + expected_ + ")"),
      line(line_),
      col(col_),
      expected(expected_) {}

bool RingDecl::operator==(const RingDecl& o) const {
    if (name != o.name || q != o.q || p != o.p || ext_degree != o.ext_degree ||
        vars != o.vars || mode != o.mode || relations.size() != o.relations.size())
        return false;
    for (std::size_t i = 0; i < relations.size(); ++i)
        if (!relations[i].equals(o.relations[i])) return false;
    return true;
}

std::vector<RingDecl> parse_ring_file(const std::string& text) {
    Parser p(text);
    auto out = p.decls();
    require(!out.empty(), "no ring declarations found");
    return out;
}

RingDecl parse_ring_decl(const std::string& text) {
    auto all = parse_ring_file(text);
    require(all.size() == 1, "expected exactly one ring declaration");
    return all.front();
}

std::string print_ring_decl(const RingDecl& d) {
    std::ostringstream os;
    os << "ring " << d.name << " = GF(" << d.q << ")[";
    for (std::size_t i = 0; i < d.vars.size(); ++i) os << (i ? ", " : "") << d.vars[i];
    os << "]";
    if (!d.relations.empty()) {
        os << " / (";
        for (std::size_t i = 0; i < d.relations.size(); ++i)
            os << (i ? ", " : "") << d.relations[i].to_string(d.vars);
        os << ")";
    }
    os << (d.mode == RingDecl::Mode::Finite ? " finite" : " graded");
    return os.str();
}

SparsePoly parse_poly_text(const std::string& text, const std::vector<std::string>& vars,
                           Domain dom) {
    require(!dom.is_integers(), "polynomial text parser works over GF(p)");
    RingDecl d;
    d.p = dom.p;
    d.vars = vars;
    Parser p(text);
    return p.poly(d);
}

RealizedRing realize(const RingDecl& decl, std::size_t finite_dim_cap) {
    RealizedRing out;
    std::vector<std::string> vars = decl.vars;
    std::vector<SparsePoly> rels = decl.relations;

    if (decl.ext_degree > 1) {
        require(decl.mode == RingDecl::Mode::Finite,
                "graded mode requires a prime base field");
        require(std::find(vars.begin(), vars.end(), "u") == vars.end(),
                "variable name 'u' is reserved for the field generator of GF(p^k)");
        FiniteAlgebra base = FiniteAlgebra::finite_field(decl.p, decl.ext_degree);
        const std::uint32_t arity = std::uint32_t(vars.size()) + 1;
        std::vector<SparsePoly> lifted;
        for (const auto& r : rels) lifted.push_back(r.extended_to_arity(arity));
        // the generator variable goes last so declared variables keep their slots
        std::vector<SparsePoly::Term> terms;
        for (const auto& t : base.relations().gens.front().terms()) {
            Monomial m(arity, 0);
            m[arity - 1] = t.mono[0];
            terms.push_back({std::move(m), t.coeff});
        }
        lifted.push_back(SparsePoly::from_terms(arity, gf(decl.p), std::move(terms)));
        vars.push_back("u");
        out.finite = std::make_shared<FiniteAlgebra>(FiniteAlgebra::from_presentation(
            decl.p, vars, std::move(lifted), finite_dim_cap));
        return out;
    }

    if (decl.mode == RingDecl::Mode::Finite) {
        out.finite = std::make_shared<FiniteAlgebra>(
            FiniteAlgebra::from_presentation(decl.p, vars, std::move(rels), finite_dim_cap));
    } else {
        out.graded = std::make_shared<GradedQuotient>(decl.p, vars, std::move(rels));
    }
    return out;
}

}  // namespace qfp
