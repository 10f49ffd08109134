#pragma once

#include <cctype>
#include <string>

#include "error.hpp"
#include "scalar.hpp"

namespace jetgroup {

// recursive-descent parser for exact scalar expressions:
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := '-' factor | primary ('^' uint)?
//   primary := uint | name | '(' expr ')'
// names resolve per scalar domain ("w", "i", declared symbols)
template <ScalarRing S>
class ScalarParser {
public:
    explicit ScalarParser(const S& exemplar) : ex_(exemplar) {}

    S parse(const std::string& text) const {
        Cursor c{text, 0};
        S value = expr(c);
        skip_ws(c);
        if (c.pos != c.text.size())
            throw ParseError("trailing input at position " + std::to_string(c.pos) +
                             " in \"" + c.text + "\"");
        return value;
    }

private:
    struct Cursor {
        const std::string& text;
        std::size_t pos;
    };

    static void skip_ws(Cursor& c) {
        while (c.pos < c.text.size() && std::isspace(static_cast<unsigned char>(c.text[c.pos])))
            ++c.pos;
    }

    static bool eat(Cursor& c, char ch) {
        skip_ws(c);
        if (c.pos < c.text.size() && c.text[c.pos] == ch) {
            ++c.pos;
            return true;
        }
        return false;
    }

    static char peek(const Cursor& c) {
        Cursor t = c;
        skip_ws(t);
        return t.pos < t.text.size() ? t.text[t.pos] : '\0';
    }

    S expr(Cursor& c) const {
        S acc = term(c);
        for (;;) {
            if (eat(c, '+'))
                acc = acc + term(c);
            else if (eat(c, '-'))
                acc = acc - term(c);
            else
                return acc;
        }
    }

    S term(Cursor& c) const {
        S acc = factor(c);
        for (;;) {
            if (eat(c, '*'))
                acc = acc * factor(c);
            else if (eat(c, '/'))
                acc = acc * factor(c).inverse();
            else
                return acc;
        }
    }

    S factor(Cursor& c) const {
        if (eat(c, '-')) return -factor(c);
        S base = primary(c);
        if (eat(c, '^')) {
            long e = uint_literal(c);
            S out = ex_.one_like();
            for (long i = 0; i < e; ++i) out = out * base;
            return out;
        }
        return base;
    }

    S primary(Cursor& c) const {
        skip_ws(c);
        if (c.pos >= c.text.size())
            throw ParseError("unexpected end of expression in \"" + c.text + "\"");
        char ch = c.text[c.pos];
        if (ch == '(') {
            ++c.pos;
            S inner = expr(c);
            if (!eat(c, ')'))
                throw ParseError("missing ')' in \"" + c.text + "\"");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::string digits;
            while (c.pos < c.text.size() &&
                   std::isdigit(static_cast<unsigned char>(c.text[c.pos])))
                digits += c.text[c.pos++];
            return ScalarTraits<S>::from_bigint(ex_, BigInt(digits));
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::string name;
            while (c.pos < c.text.size() &&
                   (std::isalnum(static_cast<unsigned char>(c.text[c.pos])) ||
                    c.text[c.pos] == '_'))
                name += c.text[c.pos++];
            return ScalarTraits<S>::named_value(ex_, name);
        }
        throw ParseError(std::string("unexpected character '") + ch + "' in \"" +
                         c.text + "\"");
    }

    static long uint_literal(Cursor& c) {
        skip_ws(c);
        if (c.pos >= c.text.size() ||
            !std::isdigit(static_cast<unsigned char>(c.text[c.pos])))
            throw ParseError("expected integer exponent in \"" + c.text + "\"");
        long v = 0;
        while (c.pos < c.text.size() &&
               std::isdigit(static_cast<unsigned char>(c.text[c.pos]))) {
            v = v * 10 + (c.text[c.pos] - '0');
            if (v > 1'000'000) throw ParseError("exponent too large");
            ++c.pos;
        }
        return v;
    }

    const S& ex_;
};

template <ScalarRing S>
S parse_scalar(const std::string& text, const S& exemplar) {
    return ScalarParser<S>(exemplar).parse(text);
}

}  // namespace jetgroup
