#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "daml/diagnostics.hpp"

namespace daml {

enum class TokenKind {
    Keyword, // reserved word
    Ident,   // identifier (includes taxonomy literals such as JSON, Batch)
    String,  // quoted string; `value` holds the decoded content
    Punct,   // one of { } [ ] ( ) : ; , .
    Arrow,   // ->
};

struct Token {
    TokenKind kind = TokenKind::Punct;
    std::string lexeme;  // exact source slice, never empty
    std::string value;   // decoded content for String, else == lexeme
    SourceSpan span;
    std::size_t offset = 0; // byte offset of lexeme start

    bool is_keyword(std::string_view kw) const {
        return kind == TokenKind::Keyword && lexeme == kw;
    }
    bool is_punct(std::string_view p) const {
        return kind == TokenKind::Punct && lexeme == p;
    }
};

struct LexResult {
    std::vector<Token> tokens;
    std::vector<Diagnostic> diagnostics; // rule P001, error severity
};

/// Tokenizes `source` (UTF-8). Total: skips illegal bytes with a diagnostic
/// and keeps going, so the parser always receives the recoverable remainder.
LexResult lex(std::string_view source, std::string file);

bool is_reserved_word(std::string_view s);

/// True when `s` matches the identifier lexeme shape
/// (letter or `_`, then letters, digits, `_`). Reserved words still count;
/// callers that need usable names must also check is_reserved_word.
bool is_identifier(std::string_view s);

} // namespace daml
