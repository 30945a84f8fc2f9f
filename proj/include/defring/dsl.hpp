#pragma once
// Text format for annotated presentations.
//
//   p 5  prec 3  deg 8
//   param k' 12
//   chi1 omega^0   chi2 omega^{k'-1}
//   gen t_w block=Xinf chi=chi1*chi2^-1 pinned
//   gen g   block=Gamma chi=trivial pi=gamma
//   rel r_w = t_w^5 * [t_w, g]
//   tie Y_2 = 3 * Y_4
//
// Comments start with '#'. Words use '*', '^n', '[a, b]' = a b a^-1 b^-1
// and parentheses; '1' is the empty word.

#include "defring/presentation.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace defring {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t col, const std::string &msg)
        : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg),
          line_(line), col_(col)
    {
    }
    std::size_t line() const { return line_; }
    std::size_t column() const { return col_; }

private:
    std::size_t line_, col_;
};

namespace dsl_detail {

inline bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool ident_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

// Character cursor over one line; columns are 1-based.
class Cursor {
public:
    Cursor(std::string_view text, std::size_t line, std::size_t col0 = 1)
        : s_(text), line_(line), col0_(col0)
    {
    }

    void skip_ws()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
    }
    bool done()
    {
        skip_ws();
        return i_ >= s_.size();
    }
    char peek()
    {
        skip_ws();
        return i_ < s_.size() ? s_[i_] : '\0';
    }
    bool accept(char c)
    {
        if (peek() != c)
            return false;
        ++i_;
        return true;
    }
    void expect(char c)
    {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }
    std::string ident()
    {
        skip_ws();
        if (i_ >= s_.size() || !ident_start(s_[i_]))
            fail("expected a name");
        std::size_t b = i_;
        while (i_ < s_.size() && ident_char(s_[i_]))
            ++i_;
        return std::string(s_.substr(b, i_ - b));
    }
    bool at_ident() { return ident_start(peek()); }
    bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
    std::int64_t unsigned_int()
    {
        skip_ws();
        std::size_t b = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
            ++i_;
        if (b == i_)
            fail("expected an integer");
        try {
            return std::stoll(std::string(s_.substr(b, i_ - b)));
        } catch (const std::out_of_range &) {
            i_ = b;
            fail("integer out of range");
        }
    }
    std::size_t column() const { return col0_ + i_; }
    std::string_view rest() const { return s_.substr(i_); }

    [[noreturn]] void fail(const std::string &msg) const { throw ParseError(line_, column(), msg); }

private:
    std::string_view s_;
    std::size_t i_ = 0;
    std::size_t line_, col0_;
};

using Params = std::map<std::string, std::int64_t>;

// expr := term (('+'|'-') term)*; term := factor ('*' factor)*
inline std::int64_t int_expr(Cursor &c, const Params &params);

inline std::int64_t int_factor(Cursor &c, const Params &params)
{
    if (c.accept('-'))
        return -int_factor(c, params);
    if (c.accept('+'))
        return int_factor(c, params);
    if (c.accept('(')) {
        auto v = int_expr(c, params);
        c.expect(')');
        return v;
    }
    if (c.at_digit())
        return c.unsigned_int();
    c.skip_ws();
    auto col = c.column();
    auto name = c.ident();
    auto it = params.find(name);
    if (it == params.end())
        throw ParseError(0, col, "unknown parameter " + name);
    return it->second;
}

inline std::int64_t int_term(Cursor &c, const Params &params)
{
    auto v = int_factor(c, params);
    while (c.accept('*'))
        v *= int_factor(c, params);
    return v;
}

inline std::int64_t int_expr(Cursor &c, const Params &params)
{
    auto v = int_term(c, params);
    for (;;) {
        if (c.accept('+'))
            v += int_term(c, params);
        else if (c.accept('-'))
            v -= int_term(c, params);
        else
            return v;
    }
}

// ^3, ^-1, ^{k'-1}
inline std::int64_t exponent(Cursor &c, const Params &params)
{
    if (c.accept('{')) {
        auto v = int_expr(c, params);
        c.expect('}');
        return v;
    }
    return int_factor(c, params);
}

inline CharExpr char_expr(Cursor &c, const Params &params)
{
    CharExpr out;
    if (c.accept('1'))
        return out;
    bool any = false;
    do {
        c.skip_ws();
        auto col = c.column();
        auto name = c.ident();
        std::int64_t e = 1;
        if (name == "trivial" || name == "odd" || name == "even") {
            if (any)
                throw ParseError(0, col, name + " cannot be combined with other factors");
            if (name == "odd")
                out.opaque = CharExpr::Opaque::Odd;
            else if (name == "even")
                out.opaque = CharExpr::Opaque::Even;
            return out;
        }
        if (c.accept('^'))
            e = exponent(c, params);
        if (name == "omega")
            out.omega += e;
        else if (name == "chi1")
            out.a += e;
        else if (name == "chi2")
            out.b += e;
        else
            throw ParseError(0, col, "unknown character " + name + " (use omega, chi1, chi2, trivial, odd, even)");
        any = true;
    } while (c.accept('*'));
    return out;
}

// Resolves a name to a letter index; may extend the alphabet.
using LetterLookup = std::function<int(const std::string &, std::size_t col)>;

inline FreeWord word_expr(Cursor &c, const Params &params, const LetterLookup &lookup);

inline FreeWord word_atom(Cursor &c, const Params &params, const LetterLookup &lookup)
{
    FreeWord base;
    if (c.accept('(')) {
        base = word_expr(c, params, lookup);
        c.expect(')');
    } else if (c.accept('[')) {
        FreeWord u = word_expr(c, params, lookup);
        c.expect(',');
        FreeWord v = word_expr(c, params, lookup);
        c.expect(']');
        base = commutator(u, v);
    } else if (c.peek() == '1') {
        c.unsigned_int();
    } else {
        c.skip_ws();
        auto col = c.column();
        auto name = c.ident();
        base = FreeWord::letter(lookup(name, col));
    }
    if (c.accept('^'))
        base = base.pow(exponent(c, params));
    return base;
}

inline FreeWord word_expr(Cursor &c, const Params &params, const LetterLookup &lookup)
{
    FreeWord w = word_atom(c, params, lookup);
    while (c.accept('*'))
        w = w * word_atom(c, params, lookup);
    return w;
}

// Splits a line into whitespace-separated tokens with their columns.
struct Token {
    std::string text;
    std::size_t col;
};

inline std::vector<Token> split(std::string_view line)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        std::size_t b = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])))
            ++i;
        if (b < i)
            out.push_back({std::string(line.substr(b, i - b)), b + 1});
    }
    return out;
}

// Re-throws errors raised with line 0 against the current line.
template <class F>
auto at_line(std::size_t line, F &&f) -> decltype(f())
{
    try {
        return f();
    } catch (const ParseError &e) {
        if (e.line() != 0)
            throw;
        std::string msg = e.what();
        auto pos = msg.find(": ");
        throw ParseError(line, e.column(), pos == std::string::npos ? msg : msg.substr(pos + 2));
    }
}

inline unsigned parse_var_index(const std::string &tok, std::size_t line, std::size_t col)
{
    std::string digits;
    if (tok.rfind("Y_", 0) == 0)
        digits = tok.substr(2);
    else if (tok.rfind("Y", 0) == 0)
        digits = tok.substr(1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
        throw ParseError(line, col, "expected a variable Y_n, got '" + tok + "'");
    return static_cast<unsigned>(std::stoul(digits));
}

inline std::string compact_word(const FreeWord &w, const std::vector<std::string> &names)
{
    if (w.empty())
        return "1";
    std::string out;
    for (const auto &s : w.syllables()) {
        if (!out.empty())
            out += "*";
        out += names.at(static_cast<std::size_t>(s.gen));
        if (s.exp != 1)
            out += "^" + std::to_string(s.exp);
    }
    return out;
}

} // namespace dsl_detail

/// Parses DSL text into a normalized presentation. Structural validation is
/// left to validate(); see parse_presentation for the checked version.
inline Presentation parse_dsl(std::string_view text)
{
    using namespace dsl_detail;
    Presentation pres;
    Params params;
    bool have_p = false, have_chi1 = false, have_chi2 = false, gamma_declared = false;
    struct DimsCheck {
        std::size_t line;
        std::optional<std::int64_t> d, k;
    };
    std::vector<DimsCheck> dims;
    // remember where each relation/tie came from for late errors
    std::map<std::string, std::size_t> gen_line;

    auto gamma_lookup = [&](std::size_t line) {
        return LetterLookup([&, line](const std::string &name, std::size_t col) -> int {
            for (std::size_t i = 0; i < pres.gamma_letters.size(); ++i)
                if (pres.gamma_letters[i] == name)
                    return static_cast<int>(i);
            if (gamma_declared)
                throw ParseError(line, col, "undeclared Gamma letter " + name);
            pres.gamma_letters.push_back(name);
            return static_cast<int>(pres.gamma_letters.size() - 1);
        });
    };
    auto gen_lookup = [&](std::size_t line) {
        return LetterLookup([&, line](const std::string &name, std::size_t col) -> int {
            int i = pres.find(name);
            if (i < 0)
                throw ParseError(line, col, "undeclared generator " + name);
            return i;
        });
    };

    std::size_t lineno = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        auto toks = split(line);
        if (toks.empty()) {
            if (end == text.size())
                break;
            continue;
        }
        const std::string &head = toks[0].text;
        auto int_tok = [&](std::size_t idx) -> std::int64_t {
            if (idx >= toks.size())
                throw ParseError(lineno, line.size() + 1, "missing value after " + toks[idx - 1].text);
            Cursor c(toks[idx].text, lineno, toks[idx].col);
            auto v = at_line(lineno, [&] { return int_expr(c, params); });
            if (!c.done())
                c.fail("unexpected text in integer");
            return v;
        };

        if (head == "p" || head == "prec" || head == "deg") {
            for (std::size_t i = 0; i < toks.size(); i += 2) {
                const auto &key = toks[i].text;
                std::int64_t v = int_tok(i + 1);
                if (key == "p") {
                    if (v < 3)
                        throw ParseError(lineno, toks[i + 1].col, "p must be an odd prime");
                    pres.p = static_cast<std::uint64_t>(v);
                    have_p = true;
                } else if (key == "prec" || key == "deg") {
                    if (v < 1 || v > 255)
                        throw ParseError(lineno, toks[i + 1].col, key + " must lie in 1..255");
                    (key == "prec" ? pres.prec : pres.deg) = static_cast<unsigned>(v);
                } else {
                    throw ParseError(lineno, toks[i].col, "unknown setting " + key);
                }
            }
        } else if (head == "param") {
            if (toks.size() != 3)
                throw ParseError(lineno, toks[0].col, "usage: param NAME INTEGER");
            Cursor nc(toks[1].text, lineno, toks[1].col);
            auto name = nc.ident();
            if (!nc.done())
                nc.fail("bad parameter name");
            params[name] = int_tok(2);
        } else if (head == "chi1" || head == "chi2") {
            for (std::size_t i = 0; i < toks.size(); ++i) {
                const auto &key = toks[i].text;
                if (key != "chi1" && key != "chi2")
                    throw ParseError(lineno, toks[i].col, "expected chi1 or chi2");
                if (++i >= toks.size())
                    throw ParseError(lineno, line.size() + 1, "missing character after " + key);
                bool first = key == "chi1";
                (first ? have_chi1 : have_chi2) = true;
                if (toks[i].text == "symbolic") {
                    pres.diag.symbolic = true;
                    bool odd = !first;
                    if (i + 1 < toks.size() && (toks[i + 1].text == "odd" || toks[i + 1].text == "even"))
                        odd = toks[++i].text == "odd";
                    (first ? pres.diag.chi1_odd : pres.diag.chi2_odd) = odd;
                } else {
                    Cursor c(toks[i].text, lineno, toks[i].col);
                    auto e = at_line(lineno, [&] { return char_expr(c, params); });
                    if (!c.done())
                        c.fail("unexpected text in character");
                    if (e.a != 0 || e.b != 0 || e.opaque != CharExpr::Opaque::None)
                        throw ParseError(lineno, toks[i].col, key + " must be a power of omega or 'symbolic'");
                    (first ? pres.diag.m1 : pres.diag.m2) = e.omega;
                }
            }
        } else if (head == "gamma") {
            if (gamma_declared || !pres.gamma_letters.empty())
                throw ParseError(lineno, toks[0].col, "Gamma letters must be declared once, before use");
            for (std::size_t i = 1; i < toks.size(); ++i) {
                Cursor c(toks[i].text, lineno, toks[i].col);
                pres.gamma_letters.push_back(c.ident());
                if (!c.done())
                    c.fail("bad Gamma letter");
            }
            gamma_declared = true;
        } else if (head == "gen") {
            if (toks.size() < 2)
                throw ParseError(lineno, toks[0].col, "usage: gen NAME block=Xinf|Gamma chi=... [pi=WORD] [pinned] [commutes]");
            GenMeta g;
            {
                Cursor c(toks[1].text, lineno, toks[1].col);
                g.name = c.ident();
                if (!c.done())
                    c.fail("bad generator name");
            }
            if (pres.find(g.name) >= 0)
                throw ParseError(lineno, toks[1].col, "generator " + g.name + " declared twice (first on line " +
                                                          std::to_string(gen_line[g.name]) + ")");
            bool have_block = false, have_pi = false;
            for (std::size_t i = 2; i < toks.size(); ++i) {
                const auto &t = toks[i].text;
                auto eq = t.find('=');
                std::string key = t.substr(0, eq);
                if (eq == std::string::npos) {
                    if (key == "pinned")
                        g.pinned = true;
                    else if (key == "commutes")
                        g.commutes = true;
                    else
                        throw ParseError(lineno, toks[i].col, "unknown flag " + key);
                    continue;
                }
                std::string_view val = std::string_view(t).substr(eq + 1);
                std::size_t vcol = toks[i].col + eq + 1;
                if (key == "block") {
                    if (val == "Xinf")
                        g.block = Block::Xinf;
                    else if (val == "Gamma")
                        g.block = Block::Gamma;
                    else
                        throw ParseError(lineno, vcol, "block must be Xinf or Gamma");
                    have_block = true;
                } else if (key == "chi") {
                    Cursor c(val, lineno, vcol);
                    g.chi = at_line(lineno, [&] { return char_expr(c, params); });
                    if (!c.done())
                        c.fail("unexpected text in character");
                } else if (key == "pi") {
                    Cursor c(val, lineno, vcol);
                    auto look = gamma_lookup(lineno);
                    g.pi = at_line(lineno, [&] { return word_expr(c, params, look); });
                    if (!c.done())
                        c.fail("unexpected text in word");
                    have_pi = true;
                } else {
                    throw ParseError(lineno, toks[i].col, "unknown attribute " + key);
                }
            }
            if (!have_block)
                throw ParseError(lineno, toks[0].col, "generator " + g.name + " needs block=Xinf or block=Gamma");
            if (g.block == Block::Gamma && !have_pi)
                throw ParseError(lineno, toks[0].col, "Gamma generator " + g.name + " needs pi=WORD");
            if (g.block == Block::Xinf && have_pi && !g.pi.empty())
                throw ParseError(lineno, toks[0].col, "X_inf generator " + g.name + " must have trivial pi");
            gen_line[g.name] = lineno;
            pres.gens.push_back(std::move(g));
        } else if (head == "rel") {
            Cursor c(line, lineno);
            c.ident(); // rel
            Relation r;
            r.name = c.ident();
            c.expect('=');
            auto look = gen_lookup(lineno);
            r.word = at_line(lineno, [&] { return word_expr(c, params, look); });
            if (!c.done())
                c.fail("unexpected text after relation word");
            for (const auto &other : pres.relations)
                if (other.name == r.name)
                    throw ParseError(lineno, 1, "relation " + r.name + " declared twice");
            pres.relations.push_back(std::move(r));
        } else if (head == "tie") {
            // tie Y_a = c * Y_b | tie Y_a = Y_b | tie Y_a = -Y_b
            Cursor c(line, lineno);
            c.ident(); // tie
            Tie t;
            c.skip_ws();
            auto col = c.column();
            t.a = parse_var_index(c.ident(), lineno, col);
            c.expect('=');
            std::int64_t sign = c.accept('-') ? -1 : 1;
            std::int64_t coef = 1;
            if (c.at_digit()) {
                coef = c.unsigned_int();
                c.accept('*');
            }
            t.c = sign * coef;
            c.skip_ws();
            col = c.column();
            t.b = parse_var_index(c.ident(), lineno, col);
            if (!c.done())
                c.fail("unexpected text after tie");
            pres.ties.push_back(t);
        } else if (head == "dims") {
            DimsCheck dc{lineno, {}, {}};
            for (std::size_t i = 1; i < toks.size(); ++i) {
                const auto &t = toks[i].text;
                auto eq = t.find('=');
                if (eq == std::string::npos)
                    throw ParseError(lineno, toks[i].col, "expected d=N or k=N");
                Cursor c(std::string_view(t).substr(eq + 1), lineno, toks[i].col + eq + 1);
                auto v = at_line(lineno, [&] { return int_expr(c, params); });
                if (t.substr(0, eq) == "d")
                    dc.d = v;
                else if (t.substr(0, eq) == "k")
                    dc.k = v;
                else
                    throw ParseError(lineno, toks[i].col, "expected d=N or k=N");
            }
            dims.push_back(dc);
        } else {
            throw ParseError(lineno, toks[0].col, "unknown directive " + head);
        }
        if (end == text.size())
            break;
    }
    if (!have_p)
        throw ParseError(lineno, 1, "missing 'p' line");
    if (have_chi1 != have_chi2)
        throw ParseError(lineno, 1, "chi1 and chi2 must both be given");
    try {
        Modulus(pres.p, pres.prec);
    } catch (const ArithmeticError &e) {
        throw ParseError(1, 1, e.what());
    }

    std::size_t n = 0, k = 0;
    for (const auto &g : pres.gens)
        (g.block == Block::Xinf ? n : k) += 1;
    for (const auto &dc : dims) {
        if (dc.d && *dc.d != static_cast<std::int64_t>(n + k))
            throw ValidationError("dims on line " + std::to_string(dc.line) + ": d = " + std::to_string(*dc.d) +
                                  " but " + std::to_string(n + k) + " generators were declared");
        if (dc.k && *dc.k != static_cast<std::int64_t>(k))
            throw ValidationError("dims on line " + std::to_string(dc.line) + ": k = " + std::to_string(*dc.k) +
                                  " but the Gamma block has " + std::to_string(k) + " generators (n = d - k)");
    }
    normalize(pres);
    return pres;
}

/// parse_dsl followed by validation; Error-level violations throw.
inline Presentation parse_presentation(std::string_view text)
{
    Presentation pres = parse_dsl(text);
    require_valid(pres);
    return pres;
}

/// Canonical DSL text; parse_dsl(render_dsl(p)) == p for normalized p.
inline std::string render_dsl(const Presentation &pres)
{
    std::ostringstream out;
    out << "p " << pres.p << " prec " << pres.prec << " deg " << pres.deg << "\n";
    if (pres.diag.symbolic)
        out << "chi1 symbolic " << (pres.diag.chi1_odd ? "odd" : "even") << " chi2 symbolic "
            << (pres.diag.chi2_odd ? "odd" : "even") << "\n";
    else
        out << "chi1 omega^" << pres.diag.m1 << " chi2 omega^" << pres.diag.m2 << "\n";
    if (!pres.gamma_letters.empty()) {
        out << "gamma";
        for (const auto &l : pres.gamma_letters)
            out << " " << l;
        out << "\n";
    }
    for (const auto &g : pres.gens) {
        out << "gen " << g.name << " block=" << to_string(g.block) << " chi=" << g.chi.to_string();
        if (g.block == Block::Gamma || !g.pi.empty())
            out << " pi=" << dsl_detail::compact_word(g.pi, pres.gamma_letters);
        if (g.pinned)
            out << " pinned";
        if (g.commutes)
            out << " commutes";
        out << "\n";
    }
    auto names = pres.names();
    for (const auto &r : pres.relations)
        out << "rel " << r.name << " = " << r.word.to_string(names) << "\n";
    for (const auto &t : pres.ties)
        out << "tie Y_" << t.a << " = " << t.c << " * Y_" << t.b << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// JSON mirror of the DSL

inline nlohmann::ordered_json presentation_to_json(const Presentation &pres)
{
    using nlohmann::ordered_json;
    ordered_json j;
    j["p"] = pres.p;
    j["prec"] = pres.prec;
    j["deg"] = pres.deg;
    j["diag"] = {{"symbolic", pres.diag.symbolic}, {"m1", pres.diag.m1},       {"m2", pres.diag.m2},
                 {"chi1_odd", pres.diag.chi1_odd}, {"chi2_odd", pres.diag.chi2_odd}};
    j["gamma_letters"] = pres.gamma_letters;
    j["gens"] = ordered_json::array();
    for (const auto &g : pres.gens)
        j["gens"].push_back({{"name", g.name},
                             {"block", to_string(g.block)},
                             {"chi", g.chi.to_string()},
                             {"pi", dsl_detail::compact_word(g.pi, pres.gamma_letters)},
                             {"pinned", g.pinned},
                             {"commutes", g.commutes},
                             {"shape", to_string(g.shape)}});
    j["relations"] = ordered_json::array();
    auto names = pres.names();
    for (const auto &r : pres.relations)
        j["relations"].push_back({{"name", r.name}, {"word", r.word.to_string(names)}});
    j["ties"] = ordered_json::array();
    for (const auto &t : pres.ties)
        j["ties"].push_back({{"a", t.a}, {"b", t.b}, {"c", t.c}});
    return j;
}

/// Inverse of presentation_to_json. Shapes are re-derived, not trusted.
inline Presentation presentation_from_json(const nlohmann::json &j)
{
    using namespace dsl_detail;
    Presentation pres;
    try {
        pres.p = j.at("p").get<std::uint64_t>();
        pres.prec = j.at("prec").get<unsigned>();
        pres.deg = j.at("deg").get<unsigned>();
        const auto &d = j.at("diag");
        pres.diag.symbolic = d.at("symbolic").get<bool>();
        pres.diag.m1 = d.at("m1").get<std::int64_t>();
        pres.diag.m2 = d.at("m2").get<std::int64_t>();
        pres.diag.chi1_odd = d.at("chi1_odd").get<bool>();
        pres.diag.chi2_odd = d.at("chi2_odd").get<bool>();
        pres.gamma_letters = j.at("gamma_letters").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(0, 0, std::string("presentation JSON: ") + e.what());
    }
    Params none;
    auto gamma_look = LetterLookup([&](const std::string &name, std::size_t col) -> int {
        for (std::size_t i = 0; i < pres.gamma_letters.size(); ++i)
            if (pres.gamma_letters[i] == name)
                return static_cast<int>(i);
        throw ParseError(0, col, "undeclared Gamma letter " + name);
    });
    auto gen_look = LetterLookup([&](const std::string &name, std::size_t col) -> int {
        int i = pres.find(name);
        if (i < 0)
            throw ParseError(0, col, "undeclared generator " + name);
        return i;
    });
    try {
        for (const auto &jg : j.at("gens")) {
            GenMeta g;
            g.name = jg.at("name").get<std::string>();
            auto block = jg.at("block").get<std::string>();
            if (block != "Xinf" && block != "Gamma")
                throw ParseError(0, 0, "block must be Xinf or Gamma");
            g.block = block == "Xinf" ? Block::Xinf : Block::Gamma;
            auto chi = jg.at("chi").get<std::string>();
            Cursor cc(chi, 0);
            g.chi = char_expr(cc, none);
            auto pi = jg.at("pi").get<std::string>();
            Cursor pc(pi, 0);
            g.pi = word_expr(pc, none, gamma_look);
            g.pinned = jg.at("pinned").get<bool>();
            g.commutes = jg.at("commutes").get<bool>();
            pres.gens.push_back(std::move(g));
        }
        for (const auto &jr : j.at("relations")) {
            Relation r;
            r.name = jr.at("name").get<std::string>();
            auto w = jr.at("word").get<std::string>();
            Cursor wc(w, 0);
            r.word = word_expr(wc, none, gen_look);
            pres.relations.push_back(std::move(r));
        }
        for (const auto &jt : j.at("ties"))
            pres.ties.push_back({jt.at("a").get<unsigned>(), jt.at("b").get<unsigned>(), jt.at("c").get<std::int64_t>()});
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(0, 0, std::string("presentation JSON: ") + e.what());
    }
    normalize(pres);
    return pres;
}

} // namespace defring
