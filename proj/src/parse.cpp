#include "mvpav/parse.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

#include "mvpav/errors.hpp"

namespace mvpav {

namespace {

enum class Tok {
    Arrow,   // ->
    Plus,    // +
    Amp,     // &
    Star,    // *
    MeetT,   // /\ .
    JoinT,   // \/
    Bang,    // !
    LParen,
    RParen,
    Zero,
    One,
    KConst,
    DivOp,   // dN
    Const,   // [p/q]
    Ident,
    End,
};

struct Token {
    Tok tok;
    std::size_t pos = 0;
    std::string text;      // Ident
    int number = 0;        // DivOp index
    Rational01 value;      // Const
};

class Lexer {
  public:
    explicit Lexer(const std::string& s) : s_(s) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        auto mk = [](Tok t, std::size_t p) {
            Token tok;
            tok.tok = t;
            tok.pos = p;
            return tok;
        };
        while (true) {
            skip_ws();
            std::size_t pos = i_;
            if (i_ >= s_.size()) {
                out.push_back(mk(Tok::End, pos));
                return out;
            }
            char c = s_[i_];
            if (c == '-') {
                expect_next('>', "'->'");
                out.push_back(mk(Tok::Arrow, pos));
            } else if (c == '+') {
                ++i_;
                out.push_back(mk(Tok::Plus, pos));
            } else if (c == '&') {
                ++i_;
                out.push_back(mk(Tok::Amp, pos));
            } else if (c == '*') {
                ++i_;
                out.push_back(mk(Tok::Star, pos));
            } else if (c == '/') {
                expect_next('\\', "'/\\'");
                out.push_back(mk(Tok::MeetT, pos));
            } else if (c == '\\') {
                expect_next('/', "'\\/'");
                out.push_back(mk(Tok::JoinT, pos));
            } else if (c == '!') {
                ++i_;
                out.push_back(mk(Tok::Bang, pos));
            } else if (c == '(') {
                ++i_;
                out.push_back(mk(Tok::LParen, pos));
            } else if (c == ')') {
                ++i_;
                out.push_back(mk(Tok::RParen, pos));
            } else if (c == '[') {
                out.push_back(lex_const(pos));
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                if (c == '0' && !digit_follows()) {
                    ++i_;
                    out.push_back(mk(Tok::Zero, pos));
                } else if (c == '1' && !digit_follows()) {
                    ++i_;
                    out.push_back(mk(Tok::One, pos));
                } else {
                    throw ParseError("unexpected number literal", pos);
                }
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                out.push_back(lex_word(pos));
            } else {
                throw ParseError(std::string("unexpected character '") + c + "'",
                                 pos);
            }
        }
    }

  private:
    void skip_ws() {
        while (i_ < s_.size() &&
               std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
    }

    bool digit_follows() const {
        return i_ + 1 < s_.size() &&
               std::isdigit(static_cast<unsigned char>(s_[i_ + 1]));
    }

    void expect_next(char c, const char* what) {
        if (i_ + 1 >= s_.size() || s_[i_ + 1] != c)
            throw ParseError(std::string("expected ") + what, i_);
        i_ += 2;
    }

    Token lex_const(std::size_t pos) {
        ++i_;  // '['
        skip_ws();
        std::string num = lex_digits("numerator");
        skip_ws();
        std::string den = "1";
        if (i_ < s_.size() && s_[i_] == '/') {
            ++i_;
            skip_ws();
            den = lex_digits("denominator");
            skip_ws();
        }
        if (i_ >= s_.size() || s_[i_] != ']')
            throw ParseError("expected ']' in truth constant", i_);
        ++i_;
        Rational01 v;
        try {
            v = Rational01::parse(num + "/" + den);
        } catch (const Error& e) {
            throw ParseError(std::string("bad truth constant: ") + e.what(),
                             pos);
        }
        Token t;
        t.tok = Tok::Const;
        t.pos = pos;
        t.value = v;
        return t;
    }

    std::string lex_digits(const char* what) {
        std::size_t start = i_;
        while (i_ < s_.size() &&
               std::isdigit(static_cast<unsigned char>(s_[i_])))
            ++i_;
        if (i_ == start)
            throw ParseError(std::string("expected ") + what, i_);
        return s_.substr(start, i_ - start);
    }

    Token lex_word(std::size_t pos) {
        std::size_t start = i_;
        while (i_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[i_])) ||
                s_[i_] == '_'))
            ++i_;
        std::string w = s_.substr(start, i_ - start);
        if (w == "K") {
            Token t;
            t.tok = Tok::KConst;
            t.pos = pos;
            return t;
        }
        // dN is the division operator; any other word is a variable.
        if (w.size() >= 2 && w[0] == 'd' &&
            std::all_of(w.begin() + 1, w.end(), [](char c) {
                return std::isdigit(static_cast<unsigned char>(c));
            })) {
            Token t;
            t.tok = Tok::DivOp;
            t.pos = pos;
            try {
                t.number = std::stoi(w.substr(1));
            } catch (...) {
                throw ParseError("division index out of range", pos);
            }
            if (t.number < 1)
                throw ParseError("division index must be >= 1", pos);
            return t;
        }
        Token t;
        t.tok = Tok::Ident;
        t.pos = pos;
        t.text = std::move(w);
        return t;
    }

    const std::string& s_;
    std::size_t i_ = 0;
};

class Parser {
  public:
    Parser(std::vector<Token> toks, const LogicProfile& profile)
        : toks_(std::move(toks)), profile_(profile) {}

    Formula run() {
        Formula f = parse_impl();
        if (cur().tok != Tok::End)
            throw ParseError("unexpected trailing input", cur().pos);
        return f;
    }

  private:
    const Token& cur() const { return toks_[i_]; }
    void advance() { ++i_; }

    bool eat(Tok t) {
        if (cur().tok != t) return false;
        advance();
        return true;
    }

    // ->, right-associative, weakest
    Formula parse_impl() {
        Formula lhs = parse_oplus();
        if (eat(Tok::Arrow)) return Formula::impl(std::move(lhs), parse_impl());
        return lhs;
    }

    Formula parse_oplus() {
        Formula f = parse_odot();
        while (eat(Tok::Plus)) f = Formula::oplus(std::move(f), parse_odot());
        return f;
    }

    Formula parse_odot() {
        Formula f = parse_bullet();
        while (eat(Tok::Amp)) f = Formula::odot(std::move(f), parse_bullet());
        return f;
    }

    Formula parse_bullet() {
        Formula f = parse_meet();
        while (cur().tok == Tok::Star) {
            std::size_t pos = cur().pos;
            advance();
            if (!profile_.product)
                throw ProfileError("connective not in profile: * (position " +
                                   std::to_string(pos) + ")");
            f = Formula::bullet(std::move(f), parse_meet());
        }
        return f;
    }

    Formula parse_meet() {
        Formula f = parse_join();
        while (eat(Tok::MeetT)) f = Formula::meet(std::move(f), parse_join());
        return f;
    }

    Formula parse_join() {
        Formula f = parse_unary();
        while (eat(Tok::JoinT)) f = Formula::join(std::move(f), parse_unary());
        return f;
    }

    Formula parse_unary() {
        if (eat(Tok::Bang)) return Formula::neg(parse_unary());
        if (cur().tok == Tok::DivOp) {
            int n = cur().number;
            std::size_t pos = cur().pos;
            advance();
            if (!profile_.division)
                throw ProfileError("connective not in profile: d" +
                                   std::to_string(n) + " (position " +
                                   std::to_string(pos) + ")");
            if (!eat(Tok::LParen))
                throw ParseError("expected '(' after division operator",
                                 cur().pos);
            Formula arg = parse_impl();
            if (!eat(Tok::RParen))
                throw ParseError("expected ')'", cur().pos);
            return Formula::div(n, std::move(arg));
        }
        return parse_atom();
    }

    Formula parse_atom() {
        const Token& t = cur();
        switch (t.tok) {
            case Tok::LParen: {
                advance();
                Formula f = parse_impl();
                if (!eat(Tok::RParen))
                    throw ParseError("expected ')'", cur().pos);
                return f;
            }
            case Tok::Zero:
                advance();
                return Formula::zero();
            case Tok::One:
                advance();
                return Formula::one();
            case Tok::KConst:
                advance();
                if (!profile_.fixpoint)
                    throw ProfileError(
                        "connective not in profile: K (position " +
                        std::to_string(t.pos) + ")");
                return Formula::fixk();
            case Tok::Const: {
                advance();
                if (!profile_.constants)
                    throw ProfileError(
                        "connective not in profile: truth constant (position " +
                        std::to_string(t.pos) + ")");
                return Formula::truth(t.value);
            }
            case Tok::Ident: {
                advance();
                return Formula::var(t.text);
            }
            default:
                throw ParseError("expected a formula", t.pos);
        }
    }

    std::vector<Token> toks_;
    LogicProfile profile_;
    std::size_t i_ = 0;
};

// Precedence levels for printing; higher binds tighter.
int prec(Kind k) {
    switch (k) {
        case Kind::Impl: return 1;
        case Kind::Oplus: return 2;
        case Kind::Odot: return 3;
        case Kind::Bullet: return 4;
        case Kind::Meet: return 5;
        case Kind::Join: return 6;
        default: return 7;
    }
}

void print_rec(const Formula& f, int ctx, std::string& out) {
    int p = prec(f.kind());
    switch (f.kind()) {
        case Kind::Var:
        case Kind::MetaVar:
            out += f.name();
            return;
        case Kind::Zero:
            out += '0';
            return;
        case Kind::One:
            out += '1';
            return;
        case Kind::FixK:
            out += 'K';
            return;
        case Kind::TruthConst:
            out += '[';
            out += f.constant().str();
            out += ']';
            return;
        case Kind::Neg:
            out += '!';
            print_rec(f.lhs(), 7, out);
            return;
        case Kind::Div:
            out += 'd';
            out += std::to_string(f.div_index());
            out += '(';
            print_rec(f.lhs(), 0, out);
            out += ')';
            return;
        default:
            break;
    }
    const char* op = nullptr;
    bool right_assoc = false;
    switch (f.kind()) {
        case Kind::Impl: op = " -> "; right_assoc = true; break;
        case Kind::Oplus: op = " + "; break;
        case Kind::Odot: op = " & "; break;
        case Kind::Bullet: op = " * "; break;
        case Kind::Meet: op = " /\\ "; break;
        case Kind::Join: op = " \\/ "; break;
        default: throw Error("print: unknown node");
    }
    bool parens = p < ctx;
    if (parens) out += '(';
    print_rec(f.lhs(), right_assoc ? p + 1 : p, out);
    out += op;
    print_rec(f.rhs(), right_assoc ? p : p + 1, out);
    if (parens) out += ')';
}

}  // namespace

Formula parse(const std::string& text, const LogicProfile& profile) {
    Lexer lex(text);
    Parser p(lex.run(), profile);
    return p.run();
}

std::string print(const Formula& f) {
    std::string out;
    print_rec(f, 0, out);
    return out;
}

}  // namespace mvpav
