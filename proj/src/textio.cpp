#include "qpd/textio.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

#include "qpd/central.hpp"
#include "qpd/errors.hpp"

namespace qpd {

namespace {

// --- lexer -------------------------------------------------------------------

struct Token {
    enum Kind { Num, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, LBracket, RBracket, Comma, End };
    Kind kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(const std::string& src) {
    std::vector<Token> out;
    std::size_t p = 0;
    while (p < src.size()) {
        char c = src[p];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++p;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = p;
            while (p < src.size() && std::isdigit(static_cast<unsigned char>(src[p]))) ++p;
            out.push_back({Token::Num, src.substr(start, p - start), start});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = p;
            while (p < src.size() && std::isalnum(static_cast<unsigned char>(src[p]))) ++p;
            out.push_back({Token::Ident, src.substr(start, p - start), start});
            continue;
        }
        Token::Kind k;
        switch (c) {
            case '+': k = Token::Plus; break;
            case '-': k = Token::Minus; break;
            case '*': k = Token::Star; break;
            case '/': k = Token::Slash; break;
            case '^': k = Token::Caret; break;
            case '(': k = Token::LParen; break;
            case ')': k = Token::RParen; break;
            case '[': k = Token::LBracket; break;
            case ']': k = Token::RBracket; break;
            case ',': k = Token::Comma; break;
            default: throw parse_error(p, std::string("unexpected character '") + c + "'");
        }
        out.push_back({k, std::string(1, c), p});
        ++p;
    }
    out.push_back({Token::End, "", src.size()});
    return out;
}

bool is_deriv_name(const std::string& s) { return s == "dt" || s == "dx" || s == "dy" || s == "dz"; }
bool is_compact_gen(const std::string& s) {
    return s == "t" || s == "x" || s == "y" || s == "z" || s == "rho";
}

long checked_long(const Token& t) {
    try {
        return std::stol(t.text);
    } catch (const std::out_of_range&) {
        throw parse_error(t.pos, "integer literal out of range");
    }
}

// --- parser ------------------------------------------------------------------

class Parser {
public:
    Parser(std::vector<Token> toks, const Preset& preset, const EvalOptions& opts)
        : toks_(std::move(toks)), preset_(&preset), opts_(opts), central_(+1) {}

    NCPoly parse() {
        NCPoly v = expr();
        expect(Token::End, "end of input");
        return v;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    Token take() { return toks_[pos_++]; }
    void expect(Token::Kind k, const std::string& what) {
        if (peek().kind != k) throw parse_error(peek().pos, "expected " + what);
        ++pos_;
    }

    NCPoly expr() {
        NCPoly v = term();
        while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            Token op = take();
            NCPoly r = term();
            v = (op.kind == Token::Plus) ? v + r : v - r;
        }
        return v;
    }

    NCPoly term() {
        NCPoly v = factor();
        while (peek().kind == Token::Star || peek().kind == Token::Slash) {
            Token op = take();
            NCPoly r = factor();
            if (op.kind == Token::Star) {
                v = v * r;
            } else {
                if (!r.is_scalar()) throw parse_error(op.pos, "division is only defined by scalar values");
                HbarScalar s = r.scalar_value();
                if (s.is_zero()) throw division_by_zero("division by zero in expression");
                v = v.scaled(s.inverse());
            }
        }
        return v;
    }

    NCPoly factor() {
        if (peek().kind == Token::Minus) {
            Token op = take();
            (void)op;
            return -factor();
        }
        return power();
    }

    NCPoly power() {
        NCPoly base = atom();
        if (peek().kind != Token::Caret) return base;
        Token caret = take();
        int sign = 1;
        if (peek().kind == Token::Minus) {
            take();
            sign = -1;
        }
        if (peek().kind != Token::Num) throw parse_error(peek().pos, "expected integer exponent");
        int k = static_cast<int>(sign * checked_long(take()));
        if (k >= 0) return base.pow(k);
        // Negative exponents: scalars, hb-scalars, and (scalar * rho^j) only.
        if (base.is_scalar()) {
            HbarScalar s = base.scalar_value();
            if (s.is_zero()) throw division_by_zero("zero to a negative power");
            return NCPoly::scalar(*preset_, s.pow(k));
        }
        if (base.terms().size() == 1) {
            const auto& [m, c] = *base.terms().begin();
            bool pure_rho = m.rho != 0;
            for (int e : m.exps) pure_rho = pure_rho && e == 0;
            if (pure_rho) {
                return NCPoly::rho_power(*preset_, m.rho * k).scaled(c.pow(k));
            }
        }
        throw parse_error(caret.pos, "negative exponents are limited to rho, hb and scalars");
    }

    NCPoly atom() {
        Token t = peek();
        switch (t.kind) {
            case Token::Num: {
                take();
                return NCPoly::scalar(*preset_, HbarScalar(GaussRational(checked_long(t))));
            }
            case Token::LParen: {
                take();
                NCPoly v = expr();
                expect(Token::RParen, "')'");
                return v;
            }
            case Token::Ident: {
                take();
                if (t.text == "i") return NCPoly::scalar(*preset_, HbarScalar::i());
                if (t.text == "hb") return NCPoly::scalar(*preset_, HbarScalar::hbar());
                if (t.text == "l") {
                    if (preset_->kind() != PresetKind::GlN)
                        throw parse_error(t.pos, "l[i,j] generators cannot mix with compact generators");
                    expect(Token::LBracket, "'['");
                    if (peek().kind != Token::Num) throw parse_error(peek().pos, "expected row index");
                    int i = static_cast<int>(checked_long(take()));
                    expect(Token::Comma, "','");
                    if (peek().kind != Token::Num) throw parse_error(peek().pos, "expected column index");
                    int j = static_cast<int>(checked_long(take()));
                    expect(Token::RBracket, "']'");
                    return NCPoly::generator(*preset_, preset_->gl_index(i, j));
                }
                if (is_deriv_name(t.text)) {
                    if (preset_->kind() == PresetKind::GlN)
                        throw parse_error(t.pos, "derivative applications act on the compact algebra only");
                    expect(Token::LParen, "'(' after derivative name");
                    NCPoly argument = expr();
                    expect(Token::RParen, "')'");
                    return apply_derivative(t, argument);
                }
                if (is_compact_gen(t.text)) {
                    if (preset_->kind() == PresetKind::GlN)
                        throw parse_error(t.pos, "compact generators cannot mix with l[i,j]");
                    if (t.text == "rho") return NCPoly::rho_power(*preset_, 1);
                    int g = t.text == "t" ? 0 : t.text == "x" ? 1 : t.text == "y" ? 2 : 3;
                    return NCPoly::generator(*preset_, g);
                }
                throw parse_error(t.pos, "unknown generator '" + t.text + "'");
            }
            default:
                throw parse_error(t.pos, "expected a value, found '" + t.text + "'");
        }
    }

    NCPoly apply_derivative(const Token& t, const NCPoly& argument) {
        DerivName d = t.text == "dt"   ? DerivName::DtHat
                      : t.text == "dx" ? DerivName::Dx
                      : t.text == "dy" ? DerivName::Dy
                                       : DerivName::Dz;
        for (const auto& [m, c] : argument.terms())
            if (m.rho < 0)
                throw degenerate_alpha(
                    "derivatives of negative rho powers leave the engine's algebra; "
                    "see `verify inverse-c` for the skew-field extension");
        if (d == DerivName::DtHat && opts_.unshifted_dt) return central_.derive_t_unshifted(argument);
        return central_.derive(d, argument);
    }

    std::vector<Token> toks_;
    const Preset* preset_;
    EvalOptions opts_;
    CentralExtension central_;
    std::size_t pos_ = 0;
};

const Preset& infer_preset(const std::vector<Token>& toks) {
    bool has_gl = false, has_compact = false;
    int max_n = 2;
    for (std::size_t k = 0; k < toks.size(); ++k) {
        const Token& t = toks[k];
        if (t.kind != Token::Ident) continue;
        if (t.text == "l") {
            has_gl = true;
            // look ahead for the indices to size the preset
            if (k + 4 < toks.size() && toks[k + 1].kind == Token::LBracket && toks[k + 2].kind == Token::Num &&
                toks[k + 4].kind == Token::Num) {
                max_n = std::max({max_n, static_cast<int>(checked_long(toks[k + 2])),
                                  static_cast<int>(checked_long(toks[k + 4]))});
            }
        } else if (is_compact_gen(t.text) || is_deriv_name(t.text)) {
            has_compact = true;
        } else if (t.text != "i" && t.text != "hb") {
            throw parse_error(t.pos, "unknown generator '" + t.text + "'");
        }
    }
    if (has_gl && has_compact) throw parse_error(0, "cannot mix l[i,j] with compact generators in one expression");
    if (has_gl) return Preset::gl(max_n);
    return Preset::u2ext();
}

// --- printer -----------------------------------------------------------------

std::string gauss_factor(const GaussRational& g) {
    auto rat = [](const mpq_class& q) { return q.get_str(); };
    if (g.im() == 0) return rat(g.re());
    if (g.re() == 0) {
        if (g.im() == 1) return "i";
        if (g.im() == -1) return "-i";
        return rat(g.im()) + "*i";
    }
    std::string im_part;
    mpq_class abs_im = g.im() < 0 ? mpq_class(-g.im()) : g.im();
    im_part = (abs_im == 1) ? "i" : rat(abs_im) + "*i";
    return "(" + rat(g.re()) + (g.im() < 0 ? "-" : "+") + im_part + ")";
}

std::string laurent_term(const GaussRational& g, int e) {
    std::string hb_part;
    if (e == 1)
        hb_part = "hb";
    else if (e != 0)
        hb_part = "hb^" + std::to_string(e);
    if (hb_part.empty()) return gauss_factor(g);
    if (g.is_one()) return hb_part;
    if ((-g).is_one()) return "-" + hb_part;
    return gauss_factor(g) + "*" + hb_part;
}

std::string join_sum(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& s : parts) {
        if (out.empty()) {
            out = s;
        } else if (!s.empty() && s[0] == '-') {
            out += " - " + s.substr(1);
        } else {
            out += " + " + s;
        }
    }
    return out.empty() ? "0" : out;
}

/// Coefficient as a factor usable at the head of a '*'-chain. May be "" for 1
/// and "-" for -1 (the caller merges with the monomial).
std::string coeff_factor(const HbarScalar& c) {
    const HbarPoly& den = c.den();
    bool monomial_den = true;
    for (int k = 0; k < den.degree(); ++k)
        if (!den.coeff(k).is_zero()) monomial_den = false;
    if (monomial_den) {
        int shift = den.degree();
        std::vector<std::pair<GaussRational, int>> terms;
        for (int j = 0; j <= c.num().degree(); ++j)
            if (!c.num().coeff(j).is_zero()) terms.emplace_back(c.num().coeff(j), j - shift);
        if (terms.size() == 1) {
            auto [g, e] = terms.front();
            if (e == 0 && g.is_one()) return "";
            if (e == 0 && (-g).is_one()) return "-";
            return laurent_term(g, e);
        }
        std::vector<std::string> parts;
        for (auto it = terms.rbegin(); it != terms.rend(); ++it) parts.push_back(laurent_term(it->first, it->second));
        return "(" + join_sum(parts) + ")";
    }
    auto poly_sum = [](const HbarPoly& p) {
        std::vector<std::string> parts;
        for (int j = p.degree(); j >= 0; --j)
            if (!p.coeff(j).is_zero()) parts.push_back(laurent_term(p.coeff(j), j));
        return join_sum(parts);
    };
    return "(" + poly_sum(c.num()) + ")/(" + poly_sum(c.den()) + ")";
}

std::string monomial_str(const Preset& p, const Monomial& m) {
    std::vector<std::string> parts;
    for (int g = 0; g < p.num_gens(); ++g) {
        int e = m.exps[static_cast<std::size_t>(g)];
        if (e == 0) continue;
        std::string s = p.gen_name(g);
        if (e != 1) s += "^" + std::to_string(e);
        parts.push_back(std::move(s));
    }
    if (m.rho != 0) {
        std::string s = "rho";
        if (m.rho != 1) s += "^" + std::to_string(m.rho);
        parts.push_back(std::move(s));
    }
    std::string out;
    for (const auto& s : parts) {
        if (!out.empty()) out += "*";
        out += s;
    }
    return out;
}

} // namespace

NCPoly parse_expression(const std::string& src, const EvalOptions& opts) {
    std::vector<Token> toks = tokenize(src);
    const Preset& preset = infer_preset(toks);
    Parser parser(std::move(toks), preset, opts);
    return parser.parse();
}

std::string to_string(const HbarScalar& c) {
    std::string s = coeff_factor(c);
    if (s.empty()) return "1";
    if (s == "-") return "-1";
    return s;
}

std::string to_string(const NCPoly& p) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<Monomial, HbarScalar>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        int da = a.first.total_degree(), db = b.first.total_degree();
        if (da != db) return da > db;
        if (a.first.exps != b.first.exps) return a.first.exps > b.first.exps;
        return a.first.rho > b.first.rho;
    });
    std::vector<std::string> parts;
    for (const auto& [m, c] : terms) {
        std::string mono = monomial_str(p.preset(), m);
        std::string coef = coeff_factor(c);
        if (mono.empty()) {
            if (coef.empty()) coef = "1";
            if (coef == "-") coef = "-1";
            parts.push_back(coef);
        } else if (coef.empty()) {
            parts.push_back(mono);
        } else if (coef == "-") {
            parts.push_back("-" + mono);
        } else {
            parts.push_back(coef + "*" + mono);
        }
    }
    return join_sum(parts);
}

std::string matrix_grid(const DerivMatrix& m) {
    std::vector<std::string> cells;
    std::vector<std::size_t> widths(static_cast<std::size_t>(m.size), 0);
    for (int r = 0; r < m.size; ++r)
        for (int c = 0; c < m.size; ++c) {
            cells.push_back(to_string(m.at(r, c)));
            widths[static_cast<std::size_t>(c)] =
                std::max(widths[static_cast<std::size_t>(c)], cells.back().size());
        }
    std::ostringstream os;
    for (int r = 0; r < m.size; ++r) {
        os << "[ ";
        for (int c = 0; c < m.size; ++c) {
            const std::string& s = cells[static_cast<std::size_t>(r * m.size + c)];
            os << s << std::string(widths[static_cast<std::size_t>(c)] - s.size(), ' ');
            os << (c + 1 == m.size ? " ]" : " | ");
        }
        os << "\n";
    }
    return os.str();
}

} // namespace qpd
