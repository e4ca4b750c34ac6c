#include "toric/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "toric/errors.hpp"

namespace toric {

IVec expo_to_ivec(const Expo& e) {
    IVec v(e.size());
    for (size_t i = 0; i < e.size(); ++i) v[i] = e[i];
    return v;
}

Expo ivec_to_expo(const IVec& v) {
    Expo e(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (!v[i].fits_slong_p()) throw Fault("exponent out of machine range");
        e[i] = v[i].get_si();
    }
    return e;
}

LaurentPolynomial LaurentPolynomial::constant(int nvars, const Rat& c) {
    LaurentPolynomial f(nvars);
    f.add_term(Expo(size_t(nvars), 0), c);
    return f;
}

LaurentPolynomial LaurentPolynomial::monomial(int nvars, const Expo& e, const Rat& c) {
    LaurentPolynomial f(nvars);
    f.add_term(e, c);
    return f;
}

Rat LaurentPolynomial::coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void LaurentPolynomial::add_term(const Expo& e, const Rat& c) {
    if (c == 0) return;
    if (int(e.size()) != nvars_) throw InputError("term arity mismatch");
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
    LaurentPolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
    LaurentPolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    LaurentPolynomial r(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Expo e(e1.size());
            for (size_t i = 0; i < e1.size(); ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-() const { return scale(Rat(-1)); }

LaurentPolynomial LaurentPolynomial::scale(const Rat& c) const {
    LaurentPolynomial r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
}

LaurentPolynomial LaurentPolynomial::euler_derivative(int i) const {
    LaurentPolynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, c * Rat(e[size_t(i)]));
    return r;
}

std::vector<IVec> LaurentPolynomial::support() const {
    std::vector<IVec> pts;
    for (const auto& [e, c] : terms_) pts.push_back(expo_to_ivec(e));
    return pts;
}

Rat LaurentPolynomial::coefficient_norm() const {
    Rat s = 0;
    for (const auto& [e, c] : terms_) s += abs(c);
    return s;
}

LaurentSystem::LaurentSystem(std::vector<LaurentPolynomial> polys, std::vector<std::string> variables,
                             std::optional<std::vector<LatticePolytope>> declared)
    : polys_(std::move(polys)), variables_(std::move(variables)), declared_(std::move(declared)) {
    for (const auto& f : polys_)
        if (f.nvars() != nvars()) throw InputError("system polynomial arity mismatch");
    if (declared_) {
        if (declared_->size() != polys_.size())
            throw InputError("declared supports count does not match the system");
        for (size_t i = 0; i < polys_.size(); ++i) {
            if ((*declared_)[i].ambient_dim() != nvars())
                throw InputError("declared support dimension mismatch");
            for (const auto& [e, c] : polys_[i].terms())
                if (!(*declared_)[i].contains(expo_to_ivec(e)))
                    throw InputError("declared support of polynomial " + std::to_string(i + 1) +
                                     " does not contain the monomial exponent " +
                                     ivec_to_string(expo_to_ivec(e)));
        }
    }
    support_cache_.resize(polys_.size());
}

const LatticePolytope& LaurentSystem::support(int i) const {
    auto& slot = support_cache_[size_t(i)];
    if (!slot) {
        if (declared_)
            slot = (*declared_)[size_t(i)];
        else
            slot = newton_polytope(polys_[size_t(i)]);
    }
    return *slot;
}

const LatticePolytope& LaurentSystem::total_support() const {
    if (!total_cache_) {
        LatticePolytope acc = support(0);
        for (int i = 1; i < size(); ++i) acc = minkowski_sum(acc, support(i));
        total_cache_ = std::move(acc);
    }
    return *total_cache_;
}

LatticePolytope newton_polytope(const LaurentPolynomial& f) {
    if (f.is_zero()) throw InputError("newton_polytope: zero polynomial");
    return LatticePolytope::convex_hull(f.support(), f.nvars());
}

// --- parser -------------------------------------------------------------------

namespace {

struct Token {
    enum Kind { Integer, Ident, Plus, Minus, Star, Caret, Slash, End } kind;
    std::string text;
    int line, col;
};

class Lexer {
  public:
    explicit Lexer(const std::string& src) : src_(src) {}

    Token next() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) advance();
        int l = line_, c = col_;
        if (pos_ >= src_.size()) return {Token::End, "", l, c};
        char ch = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::string num;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                num += src_[pos_];
                advance();
            }
            return {Token::Integer, num, l, c};
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::string id;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                id += src_[pos_];
                advance();
            }
            return {Token::Ident, id, l, c};
        }
        advance();
        switch (ch) {
            case '+': return {Token::Plus, "+", l, c};
            case '-': return {Token::Minus, "-", l, c};
            case '*': return {Token::Star, "*", l, c};
            case '^': return {Token::Caret, "^", l, c};
            case '/': return {Token::Slash, "/", l, c};
            default:
                throw ParseError(l, c, std::string("unexpected character '") + ch + "'",
                                 "'+', '-', integer, or variable");
        }
    }

  private:
    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }
    const std::string& src_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

class Parser {
  public:
    Parser(const std::string& src, const std::vector<std::string>& vars) : lex_(src), vars_(vars) {
        for (size_t i = 0; i < vars.size(); ++i) index_[vars[i]] = int(i);
        bump();
    }

    LaurentPolynomial run() {
        LaurentPolynomial f(int(vars_.size()));
        int sign = 1;
        if (tok_.kind == Token::Plus || tok_.kind == Token::Minus) {
            sign = tok_.kind == Token::Minus ? -1 : 1;
            bump();
        }
        parse_term(f, sign);
        while (tok_.kind != Token::End) {
            if (tok_.kind == Token::Plus)
                sign = 1;
            else if (tok_.kind == Token::Minus)
                sign = -1;
            else
                fail("'+', '-', or end of input");
            bump();
            parse_term(f, sign);
        }
        return f;
    }

  private:
    void bump() { tok_ = lex_.next(); }

    [[noreturn]] void fail(const std::string& expected) {
        std::string got = tok_.kind == Token::End ? "end of input" : "'" + tok_.text + "'";
        throw ParseError(tok_.line, tok_.col, "unexpected " + got, expected);
    }

    Int parse_uint() {
        if (tok_.kind != Token::Integer) fail("integer");
        Int v(tok_.text);
        bump();
        return v;
    }

    void parse_term(LaurentPolynomial& f, int sign) {
        Rat coeff(sign);
        bool saw_anything = false;
        if (tok_.kind == Token::Integer) {
            Int num = parse_uint();
            if (tok_.kind == Token::Slash) {
                bump();
                Int den = parse_uint();
                if (den <= 0)
                    throw ParseError(tok_.line, tok_.col, "denominator must be a positive integer");
                coeff *= make_rat(num, den);
            } else {
                coeff *= Rat(num);
            }
            saw_anything = true;
            if (tok_.kind == Token::Star) bump();
        }
        Expo e(vars_.size(), 0);
        while (tok_.kind == Token::Ident) {
            auto it = index_.find(tok_.text);
            if (it == index_.end())
                throw ParseError(tok_.line, tok_.col, "unknown variable '" + tok_.text + "'",
                                 known_variables());
            int vi = it->second;
            bump();
            long exp = 1;
            if (tok_.kind == Token::Caret) {
                bump();
                int esign = 1;
                if (tok_.kind == Token::Minus || tok_.kind == Token::Plus) {
                    esign = tok_.kind == Token::Minus ? -1 : 1;
                    bump();
                }
                Int v = parse_uint();
                if (!v.fits_slong_p()) throw ParseError(tok_.line, tok_.col, "exponent too large");
                exp = esign * v.get_si();
            }
            e[size_t(vi)] += exp;
            saw_anything = true;
            if (tok_.kind == Token::Star) bump();
        }
        if (!saw_anything) fail("coefficient or variable");
        if (tok_.kind == Token::Integer)
            throw ParseError(tok_.line, tok_.col, "coefficient must precede the variables",
                             "'+', '-', variable, or end of input");
        f.add_term(e, coeff);
    }

    std::string known_variables() const {
        std::string s = "one of {";
        for (size_t i = 0; i < vars_.size(); ++i) s += (i ? ", " : "") + vars_[i];
        return s + "}";
    }

    Lexer lex_;
    const std::vector<std::string>& vars_;
    std::map<std::string, int> index_;
    Token tok_{Token::End, "", 0, 0};
};

}  // namespace

LaurentPolynomial parse_laurent(const std::string& src, const std::vector<std::string>& variables) {
    return Parser(src, variables).run();
}

std::string to_string(const LaurentPolynomial& f, const std::vector<std::string>& variables) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        Rat a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool has_vars = std::any_of(e.begin(), e.end(), [](long x) { return x != 0; });
        if (!has_vars || a != 1) os << rat_to_string(a) << (has_vars ? " " : "");
        bool first_factor = true;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!first_factor) os << " ";
            first_factor = false;
            os << variables[i];
            if (e[i] != 1) os << "^" << e[i];
        }
    }
    return os.str();
}

namespace {

// Laplace expansion with memoization on column subsets.
LaurentPolynomial det_poly(const std::vector<std::vector<LaurentPolynomial>>& m, int nvars) {
    size_t n = m.size();
    std::map<std::uint64_t, LaurentPolynomial> memo;
    std::function<const LaurentPolynomial&(std::uint64_t)> go =
        [&](std::uint64_t cols) -> const LaurentPolynomial& {
        auto it = memo.find(cols);
        if (it != memo.end()) return it->second;
        int k = __builtin_popcountll(cols);
        LaurentPolynomial acc(nvars);
        if (k == 0) {
            acc = LaurentPolynomial::constant(nvars, 1);
        } else {
            int row = k - 1;
            int pos = 0;
            for (size_t j = 0; j < n; ++j) {
                if (!(cols & (1ull << j))) continue;
                const LaurentPolynomial& entry = m[size_t(row)][j];
                if (!entry.is_zero()) {
                    LaurentPolynomial term = entry * go(cols & ~(1ull << j));
                    acc = ((row + pos) % 2 == 0) ? acc + term : acc - term;
                }
                ++pos;
            }
        }
        return memo.emplace(cols, std::move(acc)).first->second;
    };
    return go((1ull << n) - 1);
}

}  // namespace

LaurentPolynomial matrix_determinant(const std::vector<std::vector<LaurentPolynomial>>& m, int nvars) {
    return det_poly(m, nvars);
}

LaurentPolynomial torus_jacobian(const LaurentSystem& system) {
    if (!system.square()) throw InputError("torus_jacobian: system must be square");
    int n = system.nvars();
    std::vector<std::vector<LaurentPolynomial>> m(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        m[size_t(i)].resize(size_t(n));
        for (int j = 0; j < n; ++j) m[size_t(i)][size_t(j)] = system.polys()[size_t(j)].euler_derivative(i);
    }
    return det_poly(m, n);
}

LaurentSystem facial_system(const LaurentSystem& system, const IVec& w) {
    bool nonzero = false;
    for (const Int& x : w) nonzero = nonzero || x != 0;
    if (!nonzero) throw InputError("facial_system: direction must be nonzero");
    std::vector<LaurentPolynomial> parts;
    for (int i = 0; i < system.size(); ++i) {
        const LatticePolytope& P = system.support(i);
        Int mu = -P.facet_offset(w);  // min <m, w> over the declared support
        LaurentPolynomial part(system.nvars());
        for (const auto& [e, c] : system.polys()[size_t(i)].terms()) {
            IVec m = expo_to_ivec(e);
            Int s = 0;
            for (size_t k = 0; k < m.size(); ++k) s += m[k] * w[k];
            if (s == mu) part.add_term(e, c);
        }
        parts.push_back(std::move(part));
    }
    return LaurentSystem(std::move(parts), system.variables());
}

std::complex<double> evaluate(const LaurentPolynomial& f, const CVec& point) {
    auto ipow = [](std::complex<double> b, long e) {
        bool neg = e < 0;
        unsigned long k = neg ? -(unsigned long)e : (unsigned long)e;
        std::complex<double> r = 1.0;
        while (k) {
            if (k & 1) r *= b;
            b *= b;
            k >>= 1;
        }
        return neg ? 1.0 / r : r;
    };
    std::complex<double> acc = 0.0;
    for (const auto& [e, c] : f.terms()) {
        std::complex<double> t = to_double(c);
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (e[i] < 0 && point[i] == std::complex<double>(0.0))
                throw InputError("evaluate: zero coordinate with negative exponent");
            t *= ipow(point[i], e[i]);
        }
        acc += t;
    }
    return acc;
}

Rat evaluate_exact(const LaurentPolynomial& f, const RVec& point) {
    Rat acc = 0;
    for (const auto& [e, c] : f.terms()) {
        Rat t = c;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (point[i] == 0 && e[i] < 0)
                throw InputError("evaluate: zero coordinate with negative exponent");
            Rat p;
            mpz_pow_ui(p.get_num_mpz_t(), point[i].get_num().get_mpz_t(), unsigned(std::abs(e[i])));
            mpz_pow_ui(p.get_den_mpz_t(), point[i].get_den().get_mpz_t(), unsigned(std::abs(e[i])));
            p.canonicalize();
            t *= e[i] > 0 ? p : 1 / p;
        }
        acc += t;
    }
    return acc;
}

}  // namespace toric
