#include "eqs/parse.hpp"

#include <cctype>

namespace eqs {

ParseError::ParseError(std::size_t l, std::size_t c, const std::string &msg)
    : ProofError(std::to_string(l) + ":" + std::to_string(c) + ": " + msg), line(l), col(c) {}

namespace {

enum class Tok { Ident, Abbrev, LParen, RParen, Comma, Dot, Tilde, Amp, Bar, Arrow, Eq, Seq, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

class Parser {
public:
    Parser(const std::string &text, Signature *sig, std::size_t line, std::size_t col)
        : text_(text), sig_(sig ? sig : &local_), line_(line), col_(col) {
        lex();
    }

    Term whole_term() {
        Term t = term();
        expect_end();
        return t;
    }

    Formula whole_formula() {
        Formula f = formula();
        expect_end();
        return f;
    }

    Sequent whole_sequent() {
        Sequent s;
        if (peek().kind != Tok::Seq) s.ante = list();
        expect(Tok::Seq, "'=>'");
        if (peek().kind != Tok::End) s.succ = list();
        expect_end();
        return s;
    }

private:
    const std::string &text_;
    Signature local_;
    Signature *sig_;
    std::size_t line_, col_;
    std::vector<Token> toks_;
    std::size_t at_ = 0;
    std::vector<std::string> scope_;

    [[noreturn]] void fail(std::size_t pos, const std::string &msg) const {
        throw ParseError(line_, col_ + pos, msg);
    }

    void lex() {
        std::size_t i = 0;
        while (i < text_.size()) {
            char c = text_[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
                continue;
            }
            std::size_t start = i;
            auto push = [&](Tok k, std::size_t len) {
                toks_.push_back({k, text_.substr(start, len), start});
                i += len;
            };
            if (ident_start(c)) {
                std::size_t j = i;
                while (j < text_.size() && ident_char(text_[j])) ++j;
                push(Tok::Ident, j - i);
            } else if (c == '$') {
                std::size_t j = i + 1;
                while (j < text_.size() && ident_char(text_[j])) ++j;
                if (j == i + 1) fail(i, "expected abbreviation name after '$'");
                toks_.push_back({Tok::Abbrev, text_.substr(i + 1, j - i - 1), start});
                i = j;
            } else if (text_.compare(i, 2, "->") == 0) {
                push(Tok::Arrow, 2);
            } else if (text_.compare(i, 2, "=>") == 0) {
                push(Tok::Seq, 2);
            } else {
                switch (c) {
                    case '(': push(Tok::LParen, 1); break;
                    case ')': push(Tok::RParen, 1); break;
                    case ',': push(Tok::Comma, 1); break;
                    case '.': push(Tok::Dot, 1); break;
                    case '~': push(Tok::Tilde, 1); break;
                    case '&': push(Tok::Amp, 1); break;
                    case '|': push(Tok::Bar, 1); break;
                    case '=': push(Tok::Eq, 1); break;
                    default: fail(i, std::string("unexpected character '") + c + "'");
                }
            }
        }
        toks_.push_back({Tok::End, "", text_.size()});
    }

    const Token &peek(std::size_t k = 0) const { return toks_[std::min(at_ + k, toks_.size() - 1)]; }
    const Token &next() { return toks_[at_ < toks_.size() - 1 ? at_++ : at_]; }

    void expect(Tok k, const char *what) {
        if (peek().kind != k) fail(peek().pos, std::string("expected ") + what);
        next();
    }

    void expect_end() {
        if (peek().kind != Tok::End) fail(peek().pos, "unexpected '" + peek().text + "'");
    }

    std::vector<Formula> list() {
        std::vector<Formula> out{formula()};
        while (peek().kind == Tok::Comma) {
            next();
            out.push_back(formula());
        }
        return out;
    }

    void arity(std::map<std::string, std::size_t> &table, const Token &tok, std::size_t n, const char *kind) {
        auto [it, fresh] = table.emplace(tok.text, n);
        if (!fresh && it->second != n)
            fail(tok.pos, std::string(kind) + " " + tok.text + " used with arity " + std::to_string(n) +
                              ", previously " + std::to_string(it->second));
    }

    Formula formula() {
        Formula lhs = disjunction();
        if (peek().kind == Tok::Arrow) {
            next();
            return Formula::imp(lhs, formula());
        }
        return lhs;
    }

    Formula disjunction() {
        Formula lhs = conjunction();
        if (peek().kind == Tok::Bar) {
            next();
            return Formula::disj(lhs, disjunction());
        }
        return lhs;
    }

    Formula conjunction() {
        Formula lhs = unary();
        if (peek().kind == Tok::Amp) {
            next();
            return Formula::conj(lhs, conjunction());
        }
        return lhs;
    }

    Formula unary() {
        const Token &t = peek();
        switch (t.kind) {
            case Tok::Tilde:
                next();
                return Formula::neg(unary());
            case Tok::LParen: {
                next();
                Formula f = formula();
                expect(Tok::RParen, "')'");
                return f;
            }
            case Tok::Abbrev: {
                auto it = sig_->abbreviations.find(t.text);
                if (it == sig_->abbreviations.end()) fail(t.pos, "unknown abbreviation $" + t.text);
                if (std::holds_alternative<Formula>(it->second)) {
                    if (!scope_.empty()) fail(t.pos, "formula abbreviation used under a binder");
                    next();
                    return std::get<Formula>(it->second);
                }
                return equation();
            }
            case Tok::Ident:
                if (t.text == "forall" || t.text == "exists") return quantifier();
                if (std::isupper(static_cast<unsigned char>(t.text[0]))) return predicate();
                return equation();
            default:
                fail(t.pos, t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
        }
    }

    Formula quantifier() {
        bool all = next().text == "forall";
        const Token &v = peek();
        if (v.kind != Tok::Ident || !std::islower(static_cast<unsigned char>(v.text[0])) || v.text == "forall" ||
            v.text == "exists")
            fail(v.pos, "expected a lowercase bound variable");
        std::string name = next().text;
        expect(Tok::Dot, "'.'");
        scope_.push_back(name);
        Formula body = formula();
        scope_.pop_back();
        return all ? Formula::forall(name, body) : Formula::exists(name, body);
    }

    Formula predicate() {
        const Token &p = next();
        std::vector<Term> args;
        if (peek().kind == Tok::LParen) {
            next();
            args = arguments();
        }
        arity(sig_->predicates, p, args.size(), "predicate");
        return Formula::atom(p.text, std::move(args));
    }

    Formula equation() {
        Term l = term();
        expect(Tok::Eq, "'=' after term");
        Term r = term();
        return Formula::eq(l, r);
    }

    std::vector<Term> arguments() {
        std::vector<Term> args;
        if (peek().kind == Tok::RParen) {
            next();
            return args;
        }
        args.push_back(term());
        while (peek().kind == Tok::Comma) {
            next();
            args.push_back(term());
        }
        expect(Tok::RParen, "')'");
        return args;
    }

    Term term() {
        const Token &t = peek();
        if (t.kind == Tok::Abbrev) {
            auto it = sig_->abbreviations.find(t.text);
            if (it == sig_->abbreviations.end() || !std::holds_alternative<Term>(it->second))
                fail(t.pos, "unknown term abbreviation $" + t.text);
            next();
            return std::get<Term>(it->second);
        }
        if (t.kind != Tok::Ident) fail(t.pos, "expected a term");
        if (!std::islower(static_cast<unsigned char>(t.text[0])) || t.text == "forall" || t.text == "exists")
            fail(t.pos, "terms start with a lowercase letter: '" + t.text + "'");
        const Token &id = next();
        if (peek().kind == Tok::LParen) {
            next();
            auto args = arguments();
            arity(sig_->functions, id, args.size(), "function");
            return Term::fun(id.text, std::move(args));
        }
        for (std::size_t k = scope_.size(); k-- > 0;)
            if (scope_[k] == id.text) return Term::bound(static_cast<std::uint32_t>(scope_.size() - 1 - k), id.text);
        return Term::var(id.text);
    }
};

void record_term(const Term &t, Signature &sig) {
    if (!t.is_fun()) return;
    auto [it, fresh] = sig.functions.emplace(t.name(), t.args().size());
    if (!fresh && it->second != t.args().size()) throw ParseError(0, 0, "function " + t.name() + " arity clash");
    for (const auto &a : t.args()) record_term(a, sig);
}

}  // namespace

Term parse_term(const std::string &text, Signature *sig, std::size_t line, std::size_t col) {
    return Parser(text, sig, line, col).whole_term();
}

Formula parse_formula(const std::string &text, Signature *sig, std::size_t line, std::size_t col) {
    return Parser(text, sig, line, col).whole_formula();
}

Sequent parse_sequent(const std::string &text, Signature *sig, std::size_t line, std::size_t col) {
    return Parser(text, sig, line, col).whole_sequent();
}

void record_symbols(const Formula &f, Signature &sig) {
    if (f.is_atom()) {
        if (!f.is_eq()) {
            auto [it, fresh] = sig.predicates.emplace(f.name(), f.terms().size());
            if (!fresh && it->second != f.terms().size())
                throw ParseError(0, 0, "predicate " + f.name() + " arity clash");
        }
        for (const auto &t : f.terms()) record_term(t, sig);
        return;
    }
    for (const auto &c : f.children()) record_symbols(c, sig);
}

}  // namespace eqs
