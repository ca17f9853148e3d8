#pragma once

namespace daml {

/// damlc entry point. Exit codes: 0 success, 1 validation errors,
/// 2 parse/lex failure, 3 usage or I/O error; the worst outcome wins when
/// several inputs are processed.
int run_cli(int argc, const char* const* argv);

} // namespace daml
