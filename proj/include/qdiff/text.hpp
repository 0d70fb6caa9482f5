#pragma once

#include <cctype>
#include <string>

#include "qdiff/errors.hpp"

namespace qdiff {

/// Position-tracking cursor over parser input.  Failures are reported as
/// ParseError with the 1-based line and column of the current position.
/// The cursor borrows the input string; it must outlive the cursor.
class TextCursor {
public:
    explicit TextCursor(const std::string& text) : s_(text) {}

    size_t pos() const { return i_; }
    void seek(size_t p) { i_ = p; }

    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
    }

    bool at_end() const { return i_ >= s_.size(); }
    char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }
    char peek_at(size_t ahead) const {
        return i_ + ahead < s_.size() ? s_[i_ + ahead] : '\0';
    }
    char advance() { return s_[i_++]; }

    bool try_consume(char c) {
        if (peek() == c) {
            ++i_;
            return true;
        }
        return false;
    }

    bool try_consume(const std::string& lit) {
        if (s_.compare(i_, lit.size(), lit) == 0) {
            i_ += lit.size();
            return true;
        }
        return false;
    }

    void expect(char c, const std::string& what) {
        if (!try_consume(c)) fail("expected " + what);
    }

    [[noreturn]] void fail(const std::string& msg) const {
        int line = 1, col = 1;
        for (size_t k = 0; k < i_ && k < s_.size(); ++k) {
            if (s_[k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(msg, line, col);
    }

private:
    const std::string& s_;
    size_t i_ = 0;
};

} // namespace qdiff
