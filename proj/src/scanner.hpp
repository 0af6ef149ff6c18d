#pragma once

// Tokenizer shared by the element and polynomial text parsers.

#include <cctype>
#include <string>
#include <string_view>

#include "ffgcd/bigint.hpp"
#include "ffgcd/error.hpp"

namespace ffgcd::detail {

class Scanner {
   public:
    explicit Scanner(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool consume(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!consume(c)) fail(std::string("expected '") + c + "'");
    }
    bool peek_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

    BigInt read_uint() {
        if (!peek_digit()) fail("expected unsigned integer");
        BigInt v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    // mono := symbol ['^' uint]; the symbol itself must be next.
    u64 read_monomial(char symbol) {
        expect(symbol);
        if (!consume('^')) return 1;
        BigInt e = read_uint();
        if (e > BigInt(u64{1} << 40)) fail("exponent too large");
        return static_cast<u64>(e);
    }

    // Raw text up to (not including) the next occurrence of c.
    std::string_view take_until(char c) {
        auto end = text_.find(c, pos_);
        if (end == std::string_view::npos) fail(std::string("missing '") + c + "'");
        auto out = text_.substr(pos_, end - pos_);
        pos_ = end;
        return out;
    }

    std::size_t pos() const noexcept { return pos_; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(Errc::SyntaxError,
                    "syntax error at position " + std::to_string(pos_) + ": " + msg + " in \"" +
                        std::string(text_) + "\"");
    }

   private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace ffgcd::detail
