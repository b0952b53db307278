#include "cyclecone/expr.hpp"

#include <algorithm>
#include <cctype>

#include "cyclecone/theorems.hpp"

namespace cyclecone {

namespace {

struct Token {
    enum Kind {
        Number,
        Ident,
        LBrace,
        RBrace,
        LParen,
        RParen,
        Comma,
        Plus,
        Minus,
        Star,
        Slash,
        End
    } kind;
    std::string text;
    std::size_t offset = 0;
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            out.push_back({Token::Number, s.substr(start, i - start), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                ++i;
            out.push_back({Token::Ident, s.substr(start, i - start), start});
            continue;
        }
        Token::Kind k;
        switch (c) {
            case '{': k = Token::LBrace; break;
            case '}': k = Token::RBrace; break;
            case '(': k = Token::LParen; break;
            case ')': k = Token::RParen; break;
            case ',': k = Token::Comma; break;
            case '+': k = Token::Plus; break;
            case '-': k = Token::Minus; break;
            case '*': k = Token::Star; break;
            case '/': k = Token::Slash; break;
            default:
                throw parse_error(std::string("unexpected character '") + c + "'",
                                  start);
        }
        out.push_back({k, s.substr(start, 1), start});
        ++i;
    }
    out.push_back({Token::End, "", s.size()});
    return out;
}

class Parser {
  public:
    Parser(const std::string& text, RingContext ctx)
        : toks_(lex(text)), ctx_(ctx) {}

    ClassExpr parse() {
        ClassExpr e;
        Rat sign(1);
        if (peek().kind == Token::Minus) {
            sign = -1;
            advance();
        } else if (peek().kind == Token::Plus) {
            advance();
        }
        e.terms.push_back(parse_term(sign));
        while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            Rat s = peek().kind == Token::Plus ? Rat(1) : Rat(-1);
            advance();
            e.terms.push_back(parse_term(s));
        }
        if (peek().kind != Token::End)
            throw parse_error("expected '+' or '-' before '" + peek().text + "'",
                              peek().offset);
        return e;
    }

  private:
    const Token& peek(int ahead = 0) const {
        std::size_t i = pos_ + ahead;
        return i < toks_.size() ? toks_[i] : toks_.back();
    }
    const Token& advance() { return toks_[pos_++]; }

    const Token& expect(Token::Kind k, const std::string& what) {
        if (peek().kind != k)
            throw parse_error("expected " + what + " before '" +
                                  (peek().kind == Token::End ? std::string("end of input")
                                                             : peek().text) +
                                  "'",
                              peek().offset);
        return advance();
    }

    Int parse_natural(const std::string& what) {
        const Token& t = expect(Token::Number, what);
        return Int(t.text);
    }

    int parse_index(const std::string& what) {
        const Token& t = expect(Token::Number, what);
        Int v(t.text);
        if (v > 1000000) throw parse_error("index too large", t.offset);
        return static_cast<int>(v);
    }

    Rat parse_rational() {
        bool neg = false;
        if (peek().kind == Token::Minus) {
            neg = true;
            advance();
        }
        Int num = parse_natural("a number");
        Rat v(num);
        if (peek().kind == Token::Slash) {
            advance();
            const Token& t = expect(Token::Number, "a denominator");
            Int den(t.text);
            if (den == 0) throw parse_error("zero denominator", t.offset);
            v /= Rat(den);
        }
        return neg ? -v : v;
    }

    ExprTerm parse_term(const Rat& sign) {
        ExprTerm term;
        term.coeff = sign;
        if (peek().kind == Token::Number) {
            Rat c = parse_rational();
            expect(Token::Star, "'*'");
            term.coeff *= c;
        }
        term.gen = parse_gen();
        return term;
    }

    Generator parse_gen() {
        const Token& t = peek();
        if (t.kind != Token::Ident)
            throw parse_error("expected a generator before '" +
                                  (t.kind == Token::End ? std::string("end of input")
                                                        : t.text) +
                                  "'",
                              t.offset);
        advance();
        if (t.text == "H" && peek().kind == Token::LBrace) return parse_h(t);
        if (t.text == "E" && peek().kind == Token::LBrace) return parse_e_plane(t);
        if (t.text.size() > 1 && t.text[0] == 'E' &&
            std::all_of(t.text.begin() + 1, t.text.end(),
                        [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            return make_e_divisor(t);
        if (t.text == "D1") {
            require_x44(t);
            return GenD1{};
        }
        if (t.text == "D2") {
            require_x44(t);
            return GenD2{};
        }
        if (t.text == "Ws") return parse_ws(t);
        if (t.text == "phi") return parse_phi(t);
        throw parse_error("unknown generator '" + t.text + "'", t.offset);
    }

    Generator parse_h(const Token& head) {
        expect(Token::LBrace, "'{'");
        GenH g;
        g.indices.push_back(parse_h_index());
        while (peek().kind == Token::Comma) {
            advance();
            g.indices.push_back(parse_h_index());
        }
        expect(Token::RBrace, "'}'");
        std::sort(g.indices.begin(), g.indices.end());
        for (std::size_t i = 1; i < g.indices.size(); ++i)
            if (g.indices[i] == g.indices[i - 1])
                throw error("repeated index " + std::to_string(g.indices[i]) +
                            " in H{...} at byte " + std::to_string(head.offset));
        return g;
    }

    int parse_h_index() {
        std::size_t off = peek().offset;
        int v = parse_index("a factor index");
        if (v < 1 || v > ctx_.n)
            throw error("index " + std::to_string(v) + " out of range 1.." +
                        std::to_string(ctx_.n) + " (byte " + std::to_string(off) + ")");
        return v;
    }

    Generator parse_e_plane(const Token&) {
        expect(Token::LBrace, "'{'");
        GenEPlane g;
        g.j = parse_point_index();
        expect(Token::Comma, "','");
        std::size_t off = peek().offset;
        g.k = parse_index("a dimension");
        if (g.k < 1 || g.k > ctx_.n - 1)
            throw error("dimension " + std::to_string(g.k) + " out of range 1.." +
                        std::to_string(ctx_.n - 1) + " (byte " + std::to_string(off) +
                        ")");
        expect(Token::RBrace, "'}'");
        return g;
    }

    Generator make_e_divisor(const Token& t) {
        Int v(t.text.substr(1));
        if (v > 1000000) throw parse_error("index too large", t.offset);
        int j = static_cast<int>(v);
        if (j < 1 || j > ctx_.r)
            throw error("index " + std::to_string(j) + " out of range 1.." +
                        std::to_string(ctx_.r) + " (byte " + std::to_string(t.offset) +
                        ")");
        return GenEDivisor{j};
    }

    int parse_point_index() {
        std::size_t off = peek().offset;
        int j = parse_index("a point index");
        if (j < 1 || j > ctx_.r)
            throw error("index " + std::to_string(j) + " out of range 1.." +
                        std::to_string(ctx_.r) + " (byte " + std::to_string(off) + ")");
        return j;
    }

    Generator parse_ws(const Token& head) {
        expect(Token::LParen, "'('");
        std::size_t off = peek().offset;
        int s = parse_index("a multiplicity");
        expect(Token::RParen, "')'");
        if (ctx_.r < 1)
            throw error("Ws needs at least one blown-up point (byte " +
                        std::to_string(head.offset) + ")");
        if (s < 1 || s > ctx_.n - 1)
            throw error("multiplicity " + std::to_string(s) + " out of range 1.." +
                        std::to_string(ctx_.n - 1) + " (byte " + std::to_string(off) +
                        ")");
        return GenWs{s};
    }

    Generator parse_phi(const Token& head) {
        expect(Token::LParen, "'('");
        GenPhi g;
        g.coeffs.push_back(parse_rational());
        while (peek().kind == Token::Comma) {
            advance();
            g.coeffs.push_back(parse_rational());
        }
        expect(Token::RParen, "')'");
        std::size_t want = static_cast<std::size_t>(ctx_.n + ctx_.r);
        if (g.coeffs.size() != want)
            throw error("phi expects " + std::to_string(want) +
                        " coefficients, got " + std::to_string(g.coeffs.size()) +
                        " (byte " + std::to_string(head.offset) + ")");
        return g;
    }

    void require_x44(const Token& t) {
        if (ctx_.n != 4 || ctx_.r != 4)
            throw error(t.text + " lives on the four-point blowup of (P^1)^4 "
                                 "(byte " +
                        std::to_string(t.offset) + ")");
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    RingContext ctx_;
};

std::string print_rat(const Rat& q) { return q.str(); }

std::string print_gen(const Generator& g) {
    struct Printer {
        std::string operator()(const GenH& h) const {
            std::string s = "H{";
            for (std::size_t i = 0; i < h.indices.size(); ++i) {
                if (i) s += ',';
                s += std::to_string(h.indices[i]);
            }
            return s + "}";
        }
        std::string operator()(const GenEDivisor& e) const {
            return "E" + std::to_string(e.j);
        }
        std::string operator()(const GenEPlane& e) const {
            return "E{" + std::to_string(e.j) + "," + std::to_string(e.k) + "}";
        }
        std::string operator()(const GenWs& w) const {
            return "Ws(" + std::to_string(w.s) + ")";
        }
        std::string operator()(const GenD1&) const { return "D1"; }
        std::string operator()(const GenD2&) const { return "D2"; }
        std::string operator()(const GenPhi& p) const {
            std::string s = "phi(";
            for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
                if (i) s += ',';
                s += print_rat(p.coeffs[i]);
            }
            return s + ")";
        }
    };
    return std::visit(Printer{}, g);
}

// divisor class of a named generator
CycleClass named_divisor(const Generator& g, RingContext ctx) {
    if (std::holds_alternative<GenWs>(g)) {
        int s = std::get<GenWs>(g).s;
        CycleClass w(ctx, ctx.n - 1);
        for (int i = 2; i <= ctx.n; ++i) w.add_h(mask_with(0, i), Rat(1));
        w.add_e(1, Rat(-s));
        return w;
    }
    if (std::holds_alternative<GenD1>(g)) return d1_class();
    if (std::holds_alternative<GenD2>(g)) return d2_class();
    const auto& p = std::get<GenPhi>(g);
    return phi_forward(phi_map(ctx.n, ctx.r), p.coeffs);
}

}  // namespace

ClassExpr parse_class_expr(const std::string& text, RingContext ctx) {
    return Parser(text, ctx).parse();
}

std::string print_class_expr(const ClassExpr& e) {
    std::string s;
    for (std::size_t i = 0; i < e.terms.size(); ++i) {
        const ExprTerm& t = e.terms[i];
        Rat c = t.coeff;
        if (i == 0) {
            if (c < 0) {
                s += "-";
                c = -c;
            }
        } else {
            s += c < 0 ? " - " : " + ";
            if (c < 0) c = -c;
        }
        if (c != 1) s += print_rat(c) + "*";
        s += print_gen(t.gen);
    }
    return s;
}

ChowElement eval_chow(const ClassExpr& e, RingContext ctx) {
    ChowElement out(ctx);
    for (const ExprTerm& t : e.terms) {
        ChowElement g(ctx);
        if (std::holds_alternative<GenH>(t.gen)) {
            g = chow_unit(ctx);
            for (int i : std::get<GenH>(t.gen).indices)
                g = g * make_generator(ctx, 'h', i);
        } else if (std::holds_alternative<GenEDivisor>(t.gen)) {
            g = make_generator(ctx, 'e', std::get<GenEDivisor>(t.gen).j);
        } else if (std::holds_alternative<GenEPlane>(t.gen)) {
            const auto& ep = std::get<GenEPlane>(t.gen);
            CycleClass c(ctx, ep.k);
            c.add_e(ep.j, Rat(1));
            g = to_chow(c);
        } else {
            g = to_chow(named_divisor(t.gen, ctx));
        }
        out = out + g * t.coeff;
    }
    return out;
}

CycleClass eval_cycle(const ClassExpr& e, RingContext ctx, int k) {
    if (k < 0 || k > ctx.n - 1)
        throw error("cycle dimension " + std::to_string(k) + " out of range 0.." +
                    std::to_string(ctx.n - 1));
    CycleClass out(ctx, k);
    for (const ExprTerm& t : e.terms) {
        if (std::holds_alternative<GenH>(t.gen)) {
            const auto& h = std::get<GenH>(t.gen);
            int want = ctx.n - k;
            if (static_cast<int>(h.indices.size()) != want)
                throw error("H generator with " + std::to_string(h.indices.size()) +
                            " indices is not a " + std::to_string(k) +
                            "-cycle; expected " + std::to_string(want) + " indices");
            mask_t m = 0;
            for (int i : h.indices) m = mask_with(m, i);
            out.add_h(m, t.coeff);
        } else if (std::holds_alternative<GenEDivisor>(t.gen)) {
            if (k != ctx.n - 1)
                throw error("E" + std::to_string(std::get<GenEDivisor>(t.gen).j) +
                            " is a divisor; expected a " + std::to_string(k) +
                            "-cycle generator");
            out.add_e(std::get<GenEDivisor>(t.gen).j, t.coeff);
        } else if (std::holds_alternative<GenEPlane>(t.gen)) {
            const auto& ep = std::get<GenEPlane>(t.gen);
            if (ep.k != k)
                throw error("E{" + std::to_string(ep.j) + "," + std::to_string(ep.k) +
                            "} is a " + std::to_string(ep.k) + "-cycle; expected " +
                            std::to_string(k));
            out.add_e(ep.j, t.coeff);
        } else {
            if (k != ctx.n - 1)
                throw error("named divisor generators require k = n-1");
            CycleClass d = named_divisor(t.gen, ctx);
            for (auto& [mask, a] : d.h_coeffs()) out.add_h(mask, a * t.coeff);
            for (auto& [j, c] : d.e_coeffs()) out.add_e(j, c * t.coeff);
        }
    }
    return out;
}

}  // namespace cyclecone
