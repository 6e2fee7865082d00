#include "knotpoly/multi_laurent.hpp"

#include <json.hpp>

#include <cctype>
#include <stdexcept>

namespace knotpoly {

namespace {
constexpr int kBias = 32768;
constexpr int kMaxExp = 32767;

int lane_shift(size_t i) { return 16 * (3 - static_cast<int>(i)); }
} // namespace

MultiLaurent::Key MultiLaurent::pack(const std::vector<int>& exps) {
    Key k = 0;
    for (size_t i = 0; i < VarContext::kMaxVars; ++i) {
        int e = i < exps.size() ? exps[i] : 0;
        if (e < -kMaxExp || e > kMaxExp)
            throw std::overflow_error("MultiLaurent: exponent out of range");
        k |= static_cast<Key>(static_cast<uint16_t>(e + kBias)) << lane_shift(i);
    }
    return k;
}

std::vector<int> MultiLaurent::unpack(Key k, size_t nvars) {
    std::vector<int> exps(nvars, 0);
    for (size_t i = 0; i < nvars; ++i)
        exps[i] = static_cast<int>((k >> lane_shift(i)) & 0xFFFF) - kBias;
    return exps;
}

MultiLaurent::Key MultiLaurent::key_mul(Key a, Key b) {
    Key k = 0;
    for (size_t i = 0; i < VarContext::kMaxVars; ++i) {
        int ea = static_cast<int>((a >> lane_shift(i)) & 0xFFFF) - kBias;
        int eb = static_cast<int>((b >> lane_shift(i)) & 0xFFFF) - kBias;
        int e = ea + eb;
        if (e < -kMaxExp || e > kMaxExp)
            throw std::overflow_error("MultiLaurent: exponent out of range");
        k |= static_cast<Key>(static_cast<uint16_t>(e + kBias)) << lane_shift(i);
    }
    return k;
}

void MultiLaurent::raw_add_term(Key k, const GaussRational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiLaurent MultiLaurent::constant(CtxPtr ctx, const GaussRational& c) {
    MultiLaurent p(std::move(ctx));
    p.raw_add_term(pack({}), c);
    return p;
}

MultiLaurent MultiLaurent::monomial(CtxPtr ctx, const GaussRational& c, const std::vector<int>& exps) {
    if (exps.size() != ctx->size())
        throw std::invalid_argument("MultiLaurent: exponent vector length mismatch");
    MultiLaurent p(std::move(ctx));
    p.raw_add_term(pack(exps), c);
    return p;
}

MultiLaurent MultiLaurent::var(CtxPtr ctx, const std::string& name, int power) {
    int idx = ctx->index_of(name);
    if (idx < 0) throw std::invalid_argument("MultiLaurent: unknown variable '" + name + "'");
    std::vector<int> exps(ctx->size(), 0);
    exps[idx] = ctx->var(idx).sqrt ? 2 * power : power;
    return monomial(std::move(ctx), GaussRational(1), exps);
}

MultiLaurent MultiLaurent::half_power(CtxPtr ctx, const std::string& name, int half) {
    int idx = ctx->index_of(name);
    if (idx < 0) throw std::invalid_argument("MultiLaurent: unknown variable '" + name + "'");
    if (!ctx->var(idx).sqrt)
        throw std::invalid_argument("MultiLaurent: variable '" + name + "' has no square root");
    std::vector<int> exps(ctx->size(), 0);
    exps[idx] = half;
    return monomial(std::move(ctx), GaussRational(1), exps);
}

void MultiLaurent::check_ctx(const MultiLaurent& o) const {
    if (!ctx_ || !o.ctx_ || !ctx_->same_as(*o.ctx_))
        throw std::invalid_argument("MultiLaurent: context mismatch");
}

bool MultiLaurent::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == pack({}));
}

GaussRational MultiLaurent::constant_value() const {
    if (terms_.empty()) return GaussRational(0);
    if (!is_constant()) throw std::logic_error("MultiLaurent: value is not constant");
    return terms_.begin()->second;
}

MultiLaurent MultiLaurent::operator+(const MultiLaurent& o) const {
    MultiLaurent r = *this;
    r += o;
    return r;
}

MultiLaurent& MultiLaurent::operator+=(const MultiLaurent& o) {
    check_ctx(o);
    for (const auto& [k, c] : o.terms_) raw_add_term(k, c);
    return *this;
}

MultiLaurent MultiLaurent::operator-(const MultiLaurent& o) const {
    MultiLaurent r = *this;
    r -= o;
    return r;
}

MultiLaurent& MultiLaurent::operator-=(const MultiLaurent& o) {
    check_ctx(o);
    for (const auto& [k, c] : o.terms_) raw_add_term(k, -c);
    return *this;
}

MultiLaurent MultiLaurent::operator-() const {
    MultiLaurent r(ctx_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

MultiLaurent MultiLaurent::operator*(const MultiLaurent& o) const {
    check_ctx(o);
    MultiLaurent r(ctx_);
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_)
            r.raw_add_term(key_mul(ka, kb), ca * cb);
    return r;
}

MultiLaurent MultiLaurent::operator*(const GaussRational& c) const {
    MultiLaurent r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
}

bool MultiLaurent::operator==(const MultiLaurent& o) const {
    check_ctx(o);
    return terms_ == o.terms_;
}

MultiLaurent MultiLaurent::pow(long e) const {
    if (e == 0) return constant(ctx_, GaussRational(1));
    MultiLaurent base = *this;
    if (e < 0) {
        base = monomial_inverse();
        e = -e;
    }
    MultiLaurent acc = constant(ctx_, GaussRational(1));
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

MultiLaurent MultiLaurent::monomial_inverse() const {
    if (terms_.size() != 1)
        throw std::invalid_argument("MultiLaurent: inverse of a non-monomial");
    const auto& [k, c] = *terms_.begin();
    auto exps = unpack(k, ctx_->size());
    for (int& e : exps) e = -e;
    return monomial(ctx_, GaussRational(1) / c, exps);
}

std::vector<std::pair<std::vector<int>, GaussRational>> MultiLaurent::term_list() const {
    std::vector<std::pair<std::vector<int>, GaussRational>> out;
    out.reserve(terms_.size());
    for (const auto& [k, c] : terms_) out.emplace_back(unpack(k, ctx_->size()), c);
    return out;
}

MultiLaurent MultiLaurent::substitute(const std::map<std::string, MultiLaurent>& images, CtxPtr target) const {
    const size_t n = ctx_->size();
    // Image of each internal variable as (coefficient, target internal exponents).
    std::vector<GaussRational> img_coeff(n, GaussRational(1));
    std::vector<std::vector<int>> img_exps(n);
    std::vector<bool> have(n, false);
    for (size_t i = 0; i < n; ++i) {
        auto it = images.find(ctx_->var(i).name);
        if (it == images.end()) continue;
        const MultiLaurent& img = it->second;
        if (!img.ctx_->same_as(*target))
            throw std::invalid_argument("MultiLaurent: substitution image in wrong context");
        if (img.terms_.size() != 1)
            throw std::invalid_argument("MultiLaurent: substitution image must be a single term");
        GaussRational c = img.terms_.begin()->second;
        std::vector<int> w = unpack(img.terms_.begin()->first, target->size());
        if (ctx_->var(i).sqrt) {
            // Internal variable is the square root of the display variable:
            // take the exact square root of the assigned image.
            for (int& e : w) {
                if (e % 2 != 0)
                    throw std::invalid_argument("MultiLaurent: image of a square-root variable has no exact root");
                e /= 2;
            }
            c = c.sqrt_exact();
        }
        img_coeff[i] = c;
        img_exps[i] = std::move(w);
        have[i] = true;
    }

    MultiLaurent out(target);
    for (const auto& [k, c] : terms_) {
        auto exps = unpack(k, n);
        GaussRational coeff = c;
        std::vector<int> texps(target->size(), 0);
        for (size_t i = 0; i < n; ++i) {
            if (exps[i] == 0) continue;
            if (!have[i])
                throw std::invalid_argument("MultiLaurent: no image for variable '" + ctx_->var(i).name + "'");
            coeff *= img_coeff[i].pow(exps[i]);
            for (size_t j = 0; j < texps.size(); ++j) {
                long e = static_cast<long>(texps[j]) + static_cast<long>(img_exps[i][j]) * exps[i];
                if (e < -kMaxExp || e > kMaxExp) throw std::overflow_error("MultiLaurent: exponent out of range");
                texps[j] = static_cast<int>(e);
            }
        }
        out.raw_add_term(pack(texps), coeff);
    }
    return out;
}

MultiLaurent MultiLaurent::promote(CtxPtr target) const {
    std::vector<size_t> where(ctx_->size());
    for (size_t i = 0; i < ctx_->size(); ++i) {
        int j = target->index_of(ctx_->var(i).name);
        if (j < 0 || target->var(j).sqrt != ctx_->var(i).sqrt)
            throw std::invalid_argument("MultiLaurent: promote target lacks variable '" + ctx_->var(i).name + "'");
        where[i] = static_cast<size_t>(j);
    }
    MultiLaurent out(target);
    for (const auto& [k, c] : terms_) {
        auto exps = unpack(k, ctx_->size());
        std::vector<int> texps(target->size(), 0);
        for (size_t i = 0; i < exps.size(); ++i) texps[where[i]] = exps[i];
        out.raw_add_term(pack(texps), c);
    }
    return out;
}

GaussRational MultiLaurent::eval(const std::vector<GaussRational>& point) const {
    if (point.size() != ctx_->size())
        throw std::invalid_argument("MultiLaurent: evaluation point has wrong arity");
    GaussRational total(0);
    for (const auto& [k, c] : terms_) {
        auto exps = unpack(k, ctx_->size());
        GaussRational v = c;
        for (size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (point[i].is_zero())
                throw std::invalid_argument("MultiLaurent: zero assigned to variable with nonzero exponent");
            v *= point[i].pow(exps[i]);
        }
        total += v;
    }
    return total;
}

bool MultiLaurent::divide_exact(const MultiLaurent& divisor, MultiLaurent& quotient) const {
    check_ctx(divisor);
    if (divisor.is_zero()) throw std::invalid_argument("MultiLaurent: division by zero");
    MultiLaurent rem = *this;
    MultiLaurent q(ctx_);
    // If the division is exact, each step peels off one quotient term (leading
    // terms are multiplicative in the lex order); cap the loop so an inexact
    // division fails instead of walking down the infinite Laurent tail.
    size_t cap = terms_.size() * divisor.terms_.size() + terms_.size() + 16;
    const auto& [kd, cd] = *divisor.terms_.rbegin();
    while (!rem.terms_.empty()) {
        if (cap-- == 0) return false;
        const auto& [kr, cr] = *rem.terms_.rbegin();
        std::vector<int> fe(VarContext::kMaxVars);
        for (size_t i = 0; i < VarContext::kMaxVars; ++i) {
            int er = static_cast<int>((kr >> lane_shift(i)) & 0xFFFF) - kBias;
            int ed = static_cast<int>((kd >> lane_shift(i)) & 0xFFFF) - kBias;
            fe[i] = er - ed;
            if (fe[i] < -kMaxExp || fe[i] > kMaxExp) return false;
        }
        Key fk = pack(fe);
        GaussRational fc = cr / cd;
        q.raw_add_term(fk, fc);
        for (const auto& [k2, c2] : divisor.terms_) rem.raw_add_term(key_mul(fk, k2), -(fc * c2));
    }
    quotient = std::move(q);
    return true;
}

// ---------------------------------------------------------------------------
// Text form
// ---------------------------------------------------------------------------

namespace {

bool coeff_is_negative(const GaussRational& c) {
    if (sgn(c.re) != 0) return sgn(c.re) < 0 && sgn(c.im) == 0;
    return sgn(c.im) < 0;
}

std::string render_const(const GaussRational& c) {
    std::string s = c.str();
    bool both = sgn(c.re) != 0 && sgn(c.im) != 0;
    return both ? "(" + s + ")" : s;
}

} // namespace

std::string MultiLaurent::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c0] : terms_) {
        GaussRational c = c0;
        bool neg = coeff_is_negative(c);
        if (neg) c = -c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }

        auto exps = unpack(k, ctx_->size());
        std::string vars;
        for (size_t i = 0; i < exps.size(); ++i) {
            int e = exps[i];
            if (e == 0) continue;
            if (!vars.empty()) vars += "*";
            const auto& v = ctx_->var(i);
            if (v.sqrt) {
                if (e % 2 == 0) {
                    int p = e / 2;
                    vars += v.name;
                    if (p != 1) vars += "^" + std::to_string(p);
                } else {
                    vars += v.name + "^(" + std::to_string(e) + "/2)";
                }
            } else {
                vars += v.name;
                if (e != 1) vars += "^" + std::to_string(e);
            }
        }

        if (vars.empty()) {
            out += render_const(c);
        } else if (c.is_one()) {
            out += vars;
        } else {
            out += render_const(c) + "*" + vars;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parser: expr := [+-] term ((+|-) term)*; term := factor (('*'|'/') factor)*;
// factor := primary ['^' exponent]; primary := number['i'] | 'i' | ident | '(expr)'.
// Exponents: integers, or (k/2) halves on square-root variables.
// ---------------------------------------------------------------------------

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;

    explicit Lexer(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw std::invalid_argument(std::string("polynomial parse error: expected '") + c + "' at offset " +
                                        std::to_string(pos));
    }
    bool number_ahead() {
        char c = peek();
        return isdigit(static_cast<unsigned char>(c));
    }
    mpz_class read_integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("polynomial parse error: digit expected at offset " + std::to_string(pos));
        return mpz_class(s.substr(start, pos - start));
    }
    bool ident_ahead() {
        char c = peek();
        return isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    std::string read_ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && (isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
        return s.substr(start, pos - start);
    }
};

class Parser {
public:
    Parser(CtxPtr ctx, const std::string& text) : ctx_(std::move(ctx)), lex_(text) {}

    MultiLaurent run() {
        MultiLaurent p = parse_expr();
        if (!lex_.eof())
            throw std::invalid_argument("polynomial parse error: trailing input at offset " + std::to_string(lex_.pos));
        return p;
    }

private:
    MultiLaurent parse_expr() {
        bool neg = false;
        if (lex_.accept('-')) neg = true;
        else lex_.accept('+');
        MultiLaurent acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            if (lex_.accept('+')) acc += parse_term();
            else if (lex_.accept('-')) acc -= parse_term();
            else break;
        }
        return acc;
    }

    MultiLaurent parse_term() {
        MultiLaurent acc = parse_factor();
        while (true) {
            if (lex_.accept('*')) acc = acc * parse_factor();
            else if (lex_.accept('/')) {
                MultiLaurent d = parse_factor();
                acc = acc * d.monomial_inverse();
            } else break;
        }
        return acc;
    }

    MultiLaurent parse_factor() {
        int var_idx = -1;
        MultiLaurent base = parse_primary(&var_idx);
        if (!lex_.accept('^')) return base;

        // Exponent: integer, or parenthesized integer / half-integer.
        bool paren = lex_.accept('(');
        bool eneg = lex_.accept('-');
        mpz_class num = lex_.read_integer();
        long den = 1;
        if (paren && lex_.accept('/')) {
            mpz_class d = lex_.read_integer();
            if (d != 2) throw std::invalid_argument("polynomial parse error: only /2 exponents supported");
            den = 2;
        }
        if (paren) lex_.expect(')');
        if (!num.fits_slong_p()) throw std::invalid_argument("polynomial parse error: exponent too large");
        long e = num.get_si();
        if (eneg) e = -e;

        if (den == 2) {
            if (var_idx < 0 || !ctx_->var(var_idx).sqrt)
                throw std::invalid_argument("polynomial parse error: half exponent on a non-square-root base");
            std::vector<int> exps(ctx_->size(), 0);
            exps[var_idx] = static_cast<int>(e);
            return MultiLaurent::monomial(ctx_, GaussRational(1), exps);
        }
        return base.pow(e);
    }

    MultiLaurent parse_primary(int* var_idx) {
        if (lex_.accept('(')) {
            MultiLaurent p = parse_expr();
            lex_.expect(')');
            return p;
        }
        if (lex_.number_ahead()) {
            mpz_class n = lex_.read_integer();
            mpq_class q(n);
            if (lex_.accept('/')) q = mpq_class(n, lex_.read_integer());
            q.canonicalize();
            // imaginary constant "2i", "1/2i"
            if (lex_.peek() == 'i') {
                ++lex_.pos;
                return MultiLaurent::constant(ctx_, GaussRational(mpq_class(0), q));
            }
            return MultiLaurent::constant(ctx_, GaussRational(q));
        }
        if (lex_.ident_ahead()) {
            std::string name = lex_.read_ident();
            if (name == "i") return MultiLaurent::constant(ctx_, GaussRational::zeta());
            int idx = ctx_->index_of(name);
            if (idx < 0) throw std::invalid_argument("polynomial parse error: unknown variable '" + name + "'");
            *var_idx = idx;
            return MultiLaurent::var(ctx_, name);
        }
        throw std::invalid_argument("polynomial parse error: unexpected input at offset " + std::to_string(lex_.pos));
    }

    CtxPtr ctx_;
    Lexer lex_;
};

} // namespace

MultiLaurent MultiLaurent::parse(CtxPtr ctx, const std::string& text) {
    return Parser(std::move(ctx), text).run();
}

// ---------------------------------------------------------------------------
// JSON form
// ---------------------------------------------------------------------------

std::string MultiLaurent::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [k, c] : terms_) {
        auto exps = unpack(k, ctx_->size());
        j.push_back({{"exponents", exps}, {"re", c.re.get_str()}, {"im", c.im.get_str()}});
    }
    return j.dump();
}

MultiLaurent MultiLaurent::from_json(CtxPtr ctx, const std::string& json) {
    nlohmann::json j = nlohmann::json::parse(json);
    if (!j.is_array()) throw std::invalid_argument("MultiLaurent: JSON form must be a list of terms");
    MultiLaurent p(ctx);
    for (const auto& jt : j) {
        std::vector<int> exps = jt["exponents"].get<std::vector<int>>();
        if (exps.size() != ctx->size())
            throw std::invalid_argument("MultiLaurent: JSON exponent arity mismatch");
        mpq_class re(jt["re"].get<std::string>()), im(jt["im"].get<std::string>());
        re.canonicalize();
        im.canonicalize();
        p.raw_add_term(pack(exps), GaussRational(re, im));
    }
    return p;
}

} // namespace knotpoly
