#include "cyclecone/chow.hpp"

namespace cyclecone {

std::string ChowMonomial::str() const {
    if (kind == Kind::H) {
        if (hmask == 0) return "1";
        return "H" + mask_str(hmask);
    }
    if (power == 1) return "E" + std::to_string(j);
    return "E" + std::to_string(j) + "^" + std::to_string(power);
}

void ChowElement::add_term(const ChowMonomial& mon, const Rat& coeff) {
    if (coeff == 0) return;
    ChowMonomial m = mon;
    Rat c = coeff;
    if (m.kind == ChowMonomial::Kind::E) {
        if (m.j < 1 || m.j > ctx_.r)
            throw error("exceptional index " + std::to_string(m.j) + " out of range");
        if (m.power < 1 || m.power > ctx_.n)
            throw error("exceptional power " + std::to_string(m.power) + " out of range");
        if (m.power == ctx_.n) {
            // e_j^n = (-1)^(n-1) h_1...h_n
            if (ctx_.n % 2 == 0) c = -c;
            m = ChowMonomial::h_set(full_mask(ctx_.n));
        }
    } else if ((m.hmask & ~full_mask(ctx_.n)) != 0) {
        throw error("h index out of range in " + m.str());
    }
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ChowElement ChowElement::operator+(const ChowElement& o) const {
    require_same_context(ctx_, o.ctx_, "chow add");
    ChowElement out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

ChowElement ChowElement::operator-(const ChowElement& o) const {
    require_same_context(ctx_, o.ctx_, "chow subtract");
    ChowElement out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

ChowElement ChowElement::operator*(const Rat& c) const {
    ChowElement out(ctx_);
    if (c == 0) return out;
    for (const auto& [m, coeff] : terms_) out.add_term(m, coeff * c);
    return out;
}

namespace {

// Product of canonical monomials. Returns false when the product is zero;
// otherwise fills (mon, sign-carrying coefficient factor). Canonicalization of
// e_j^n is left to add_term.
bool multiply_monomials(const RingContext& ctx, const ChowMonomial& a,
                        const ChowMonomial& b, ChowMonomial& mon) {
    using Kind = ChowMonomial::Kind;
    if (a.kind == Kind::H && b.kind == Kind::H) {
        if (a.hmask & b.hmask) return false;  // h_i^2 = 0
        mon = ChowMonomial::h_set(a.hmask | b.hmask);
        return true;
    }
    if (a.kind == Kind::H || b.kind == Kind::H) {
        const ChowMonomial& h = (a.kind == Kind::H) ? a : b;
        const ChowMonomial& e = (a.kind == Kind::H) ? b : a;
        if (h.hmask != 0) return false;  // h_i e_j = 0
        mon = e;
        return true;
    }
    if (a.j != b.j) return false;  // e_i e_l = 0 for i != l
    int p = a.power + b.power;
    if (p > ctx.n) return false;
    mon = ChowMonomial::e_power(a.j, p);
    return true;
}

}  // namespace

ChowElement ChowElement::operator*(const ChowElement& o) const {
    require_same_context(ctx_, o.ctx_, "chow multiply");
    ChowElement out(ctx_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            ChowMonomial m;
            if (multiply_monomials(ctx_, ma, mb, m)) out.add_term(m, ca * cb);
        }
    }
    return out;
}

bool ChowElement::is_homogeneous(int* deg) const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        (void)c;
        if (d == -1)
            d = m.degree();
        else if (m.degree() != d)
            return false;
    }
    if (deg) *deg = d;
    return true;
}

std::string ChowElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        std::string ms = m.str();
        if (a != 1)
            out += a.str() + (ms == "1" ? "" : "*" + ms);
        else
            out += ms;
        first = false;
    }
    return out;
}

ChowElement chow_zero(RingContext ctx) { return ChowElement(ctx); }

ChowElement chow_unit(RingContext ctx) {
    ChowElement one(ctx);
    one.add_term(ChowMonomial::unit(), 1);
    return one;
}

ChowElement make_generator(RingContext ctx, char kind, int index) {
    ChowElement g(ctx);
    if (kind == 'h') {
        if (index < 1 || index > ctx.n)
            throw error("h index " + std::to_string(index) + " out of range [1," +
                        std::to_string(ctx.n) + "]");
        g.add_term(ChowMonomial::h_set(mask_with(0, index)), 1);
    } else if (kind == 'e') {
        if (index < 1 || index > ctx.r)
            throw error("e index " + std::to_string(index) + " out of range [1," +
                        std::to_string(ctx.r) + "]");
        g.add_term(ChowMonomial::e_power(index, 1), 1);
    } else {
        throw error(std::string("unknown generator kind '") + kind + "'");
    }
    return g;
}

ChowElement hyperplane_minus_exceptional(RingContext ctx) {
    ChowElement d(ctx);
    for (int i = 1; i <= ctx.n; ++i) d.add_term(ChowMonomial::h_set(mask_with(0, i)), 1);
    for (int j = 1; j <= ctx.r; ++j) d.add_term(ChowMonomial::e_power(j, 1), -1);
    return d;
}

Rat degree(const ChowElement& a) {
    if (a.is_zero()) return 0;
    int d = -1;
    if (!a.is_homogeneous(&d) || d != a.context().n)
        throw error("degree: element is not homogeneous of top degree " +
                    std::to_string(a.context().n));
    auto it = a.terms().find(ChowMonomial::h_set(full_mask(a.context().n)));
    return it == a.terms().end() ? Rat(0) : it->second;
}

ChowElement self_intersection(const ChowElement& d, int m) {
    int deg = -1;
    if (!d.is_homogeneous(&deg) || (deg != 1 && deg != -1))
        throw error("self_intersection: input must be homogeneous of degree 1");
    if (m < 0 || m > d.context().n)
        throw error("self_intersection: exponent " + std::to_string(m) +
                    " out of range [0," + std::to_string(d.context().n) + "]");
    ChowElement acc = chow_unit(d.context());
    for (int i = 0; i < m; ++i) acc = acc * d;
    return acc;
}

}  // namespace cyclecone
