#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "aisr/terms.hpp"

namespace aisr {

namespace {

enum class Tok { letter, plus, star, lparen, rparen, rel, end };

struct Token {
    Tok kind;
    std::size_t pos;      // byte offset of the first character
    std::string text;     // letter name, when kind == letter
};

class Lexer {
public:
    explicit Lexer(std::string_view input) : in_(input) { advance(); }

    const Token& peek() const noexcept { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < in_.size() && std::isspace(static_cast<unsigned char>(in_[pos_]))) ++pos_;
        tok_.pos = pos_;
        tok_.text.clear();
        if (pos_ == in_.size()) {
            tok_.kind = Tok::end;
            return;
        }
        const char c = in_[pos_];
        switch (c) {
            case '+': tok_.kind = Tok::plus; ++pos_; return;
            case '*': tok_.kind = Tok::star; ++pos_; return;
            case '(': tok_.kind = Tok::lparen; ++pos_; return;
            case ')': tok_.kind = Tok::rparen; ++pos_; return;
            case '=': tok_.kind = Tok::rel; ++pos_; return;
            default: break;
        }
        // UTF-8 '≈' (U+2248)
        if (in_.substr(pos_, 3) == "≈") {
            tok_.kind = Tok::rel;
            pos_ += 3;
            return;
        }
        if (c >= 'a' && c <= 'z') {
            std::size_t end = pos_ + 1;
            while (end < in_.size()) {
                const char d = in_[end];
                if ((d >= 'a' && d <= 'z') || (d >= '0' && d <= '9')) ++end;
                else break;
            }
            tok_.kind = Tok::letter;
            tok_.text = std::string(in_.substr(pos_, end - pos_));
            pos_ = end;
            return;
        }
        throw ParseError(pos_, std::string("unexpected character '") + c + "'");
    }

    std::string_view in_;
    std::size_t pos_ = 0;
    Token tok_;
};

class Parser {
public:
    explicit Parser(std::string_view input) : lex_(input) {}

    Identity identity() {
        std::vector<Word> lhs = expr();
        if (lex_.peek().kind != Tok::rel) {
            throw ParseError(lex_.peek().pos, "missing relation symbol '=' or '≈'");
        }
        lex_.take();
        std::vector<Word> rhs = expr();
        if (lex_.peek().kind != Tok::end) {
            throw ParseError(lex_.peek().pos, "unexpected trailing input after the identity");
        }
        return Identity(FormalSum(std::move(lhs)), FormalSum(std::move(rhs)));
    }

    Word bare_word() {
        if (lex_.peek().kind == Tok::end) return Word();
        std::vector<Letter> ls;
        bool want_letter = true;
        while (lex_.peek().kind != Tok::end) {
            const Token t = lex_.take();
            if (t.kind == Tok::letter) {
                ls.emplace_back(t.text);
                want_letter = false;
            } else if (t.kind == Tok::star && !want_letter) {
                want_letter = true;
            } else {
                throw ParseError(t.pos, "expected a letter");
            }
        }
        if (want_letter) throw ParseError(lex_.peek().pos, "expected a letter after '*'");
        return Word(std::move(ls));
    }

private:
    // expr := term ('+' term)*  -- duplicates are fine, canonicalization
    // removes them.
    std::vector<Word> expr() {
        std::vector<Word> words = term();
        while (lex_.peek().kind == Tok::plus) {
            lex_.take();
            std::vector<Word> more = term();
            words.insert(words.end(), more.begin(), more.end());
        }
        return words;
    }

    // term := factor (['*'] factor)*, expanded by distributivity.
    std::vector<Word> term() {
        std::vector<Word> prod = factor(true);
        for (;;) {
            const Tok k = lex_.peek().kind;
            if (k == Tok::star) {
                lex_.take();
                prod = cross(prod, factor(false));
            } else if (k == Tok::letter || k == Tok::lparen) {
                prod = cross(prod, factor(false));
            } else {
                return prod;
            }
        }
    }

    std::vector<Word> factor(bool at_summand_start) {
        const Token& t = lex_.peek();
        if (t.kind == Tok::letter) {
            Token taken = lex_.take();
            return {Word({Letter(taken.text)})};
        }
        if (t.kind == Tok::lparen) {
            lex_.take();
            std::vector<Word> inner = expr();
            if (lex_.peek().kind != Tok::rparen) {
                throw ParseError(lex_.peek().pos, "expected ')'");
            }
            lex_.take();
            return inner;
        }
        if (at_summand_start) throw ParseError(t.pos, "empty summand");
        throw ParseError(t.pos, "expected a letter or '('");
    }

    static std::vector<Word> cross(const std::vector<Word>& a, const std::vector<Word>& b) {
        std::vector<Word> out;
        out.reserve(a.size() * b.size());
        for (const Word& u : a) {
            for (const Word& v : b) out.push_back(u.concat(v));
        }
        return out;
    }

    Lexer lex_;
};

}  // namespace

Identity parse_identity(std::string_view text) { return Parser(text).identity(); }

Word parse_word(std::string_view text) { return Parser(text).bare_word(); }

}  // namespace aisr
