#include "daml/lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace daml {

namespace {

constexpr std::array kReservedWords = {
    "action",      "analyze",     "architecture", "behavior", "connection", "consume",
    "event",       "external",    "format",       "formats",  "generate",   "in",
    "ingest",      "level",       "link",         "location", "mode",       "node",
    "out",         "port",        "process",      "processing", "receive",  "representation",
    "send",        "source",      "steps",        "storage",  "store",      "subprocesses",
    "tasks",       "technique",   "via",
};

bool is_ident_start(char c) {
    return c == '_' || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_ident_part(char c) {
    return is_ident_start(c) || (c >= '0' && c <= '9');
}

bool is_punct_char(char c) {
    return c == '{' || c == '}' || c == '[' || c == ']' || c == '(' || c == ')' || c == ':' ||
           c == ';' || c == ',' || c == '.';
}

class Lexer {
  public:
    Lexer(std::string_view source, std::string file)
        : source_(source), file_(std::move(file)) {}

    LexResult run() {
        while (!at_end()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
                advance();
            } else if (c == '/' && peek(1) == '/') {
                // Stop before '\r' as well: advance() folds "\r\n" into one
                // line break, which would silently eat the next line.
                while (!at_end() && peek() != '\n' && peek() != '\r') advance();
            } else if (is_ident_start(c)) {
                identifier();
            } else if (c == '"') {
                string_literal();
            } else if (is_punct_char(c)) {
                SourcePos start = pos_;
                std::size_t offset = i_;
                advance();
                emit(TokenKind::Punct, start, offset);
            } else if (c == '-' && peek(1) == '>') {
                SourcePos start = pos_;
                std::size_t offset = i_;
                advance();
                advance();
                emit(TokenKind::Arrow, start, offset);
            } else {
                SourcePos start = pos_;
                std::size_t offset = i_;
                advance();
                error(start, "illegal character '" +
                                 std::string(source_.substr(offset, i_ - offset)) + "'");
            }
        }
        return LexResult{std::move(tokens_), std::move(diagnostics_)};
    }

  private:
    bool at_end() const { return i_ >= source_.size(); }
    char peek(std::size_t ahead = 0) const {
        return i_ + ahead < source_.size() ? source_[i_ + ahead] : '\0';
    }

    // Consumes one code point (or one newline), keeping line/col in step.
    void advance() {
        char c = source_[i_];
        if (c == '\n') {
            ++i_;
            ++pos_.line;
            pos_.col = 1;
            return;
        }
        if (c == '\r') {
            ++i_;
            if (!at_end() && source_[i_] == '\n') ++i_;
            ++pos_.line;
            pos_.col = 1;
            return;
        }
        ++i_;
        // Skip UTF-8 continuation bytes so columns count code points.
        while (i_ < source_.size() && (static_cast<unsigned char>(source_[i_]) & 0xC0) == 0x80) {
            ++i_;
        }
        ++pos_.col;
    }

    void emit(TokenKind kind, SourcePos start, std::size_t offset, std::string value = {}) {
        std::string lexeme(source_.substr(offset, i_ - offset));
        if (kind != TokenKind::String) value = lexeme;
        tokens_.push_back(Token{kind, std::move(lexeme), std::move(value),
                                SourceSpan{file_, start, pos_}, offset});
    }

    void error(SourcePos start, std::string message) {
        diagnostics_.push_back(Diagnostic{Severity::Error, "P001", std::move(message),
                                          SourceSpan{file_, start, pos_}, {}});
    }

    void identifier() {
        SourcePos start = pos_;
        std::size_t offset = i_;
        while (!at_end() && is_ident_part(peek())) advance();
        std::string_view word = source_.substr(offset, i_ - offset);
        emit(is_reserved_word(word) ? TokenKind::Keyword : TokenKind::Ident, start, offset);
    }

    void string_literal() {
        SourcePos start = pos_;
        std::size_t offset = i_;
        advance(); // opening quote
        std::string value;
        while (true) {
            if (at_end() || peek() == '\n' || peek() == '\r') {
                error(start, "unterminated string");
                return;
            }
            char c = peek();
            if (c == '"') {
                advance();
                emit(TokenKind::String, start, offset, std::move(value));
                return;
            }
            if (c == '\\') {
                SourcePos escape_start = pos_;
                advance();
                if (at_end() || peek() == '\n' || peek() == '\r') {
                    error(start, "unterminated string");
                    return;
                }
                char e = peek();
                std::size_t escaped_at = i_;
                advance();
                if (e == '"' || e == '\\') {
                    value.push_back(e);
                } else {
                    // Report, then take the escaped text literally and move on.
                    std::string seq(source_.substr(escaped_at, i_ - escaped_at));
                    diagnostics_.push_back(
                        Diagnostic{Severity::Error, "P001", "invalid escape sequence '\\" + seq +
                                   "'", SourceSpan{file_, escape_start, pos_}, {}});
                    value += seq;
                }
                continue;
            }
            std::size_t char_at = i_;
            advance();
            value.append(source_.substr(char_at, i_ - char_at));
        }
    }

    std::string_view source_;
    std::string file_;
    std::size_t i_ = 0;
    SourcePos pos_{1, 1};
    std::vector<Token> tokens_;
    std::vector<Diagnostic> diagnostics_;
};

} // namespace

LexResult lex(std::string_view source, std::string file) {
    return Lexer(source, std::move(file)).run();
}

bool is_reserved_word(std::string_view s) {
    return std::binary_search(kReservedWords.begin(), kReservedWords.end(), s);
}

bool is_identifier(std::string_view s) {
    if (s.empty() || !is_ident_start(s[0])) return false;
    return std::all_of(s.begin(), s.end(), is_ident_part);
}

} // namespace daml
