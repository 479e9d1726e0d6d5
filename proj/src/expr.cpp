#include "expr.hpp"

#include <cctype>

#include "theta/errors.hpp"

namespace theta::detail {

namespace {

class Parser {
public:
    Parser(std::string_view s, const Env& env) : s_(s), env_(env) {}

    long long run() {
        long long v = ternary();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw CatalogFormatError("bad expression '" + std::string(s_) + "': " + why);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(std::string_view tok) {
        skip();
        if (s_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    long long ternary() {
        long long c = lor();
        if (eat("?")) {
            long long a = ternary();
            if (!eat(":")) fail("expected ':'");
            long long b = ternary();
            return c ? a : b;
        }
        return c;
    }
    long long lor() {
        long long v = land();
        while (eat("||")) {
            long long r = land();
            v = (v || r) ? 1 : 0;
        }
        return v;
    }
    long long land() {
        long long v = cmp();
        while (eat("&&")) {
            long long r = cmp();
            v = (v && r) ? 1 : 0;
        }
        return v;
    }
    long long cmp() {
        long long a = add();
        if (eat("==")) return a == add();
        if (eat("!=")) return a != add();
        if (eat("<=")) return a <= add();
        if (eat(">=")) return a >= add();
        if (eat("<")) return a < add();
        if (eat(">")) return a > add();
        return a;
    }
    long long add() {
        long long v = mul();
        for (;;) {
            if (eat("+")) v += mul();
            else if (eat("-")) v -= mul();
            else return v;
        }
    }
    long long mul() {
        long long v = unary();
        for (;;) {
            if (eat("*")) {
                v *= unary();
            } else if (eat("/")) {
                long long d = unary();
                if (d == 0) fail("division by zero");
                v /= d;
            } else if (eat("%")) {
                long long d = unary();
                if (d == 0) fail("division by zero");
                v %= d;
            } else {
                return v;
            }
        }
    }
    long long unary() {
        if (eat("-")) return -unary();
        if (s_.substr(pos_, 2) != "!=" && eat("!")) return unary() ? 0 : 1;
        return primary();
    }
    long long primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        if (eat("(")) {
            long long v = ternary();
            if (!eat(")")) fail("expected ')'");
            return v;
        }
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long v = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) v = v * 10 + (s_[pos_++] - '0');
            return v;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            auto it = env_.find(name);
            if (it == env_.end()) fail("unknown variable '" + name + "'");
            return it->second;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    const Env& env_;
    std::size_t pos_ = 0;
};

}  // namespace

long long eval_expr(std::string_view text, const Env& env) { return Parser(text, env).run(); }

std::string substitute(std::string_view text, const Env& env) {
    std::string out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == '{') {
            std::size_t close = text.find('}', i);
            if (close == std::string_view::npos) throw CatalogFormatError("unterminated '{' in '" + std::string(text) + "'");
            out += std::to_string(eval_expr(text.substr(i + 1, close - i - 1), env));
            i = close + 1;
        } else {
            out += text[i++];
        }
    }
    return out;
}

}  // namespace theta::detail
