#pragma once

#include <cassert>
#include <string>
#include <utility>
#include <variant>

namespace daml {

/// Machine-readable failure: a stable code plus a human message.
struct Error {
    std::string code;
    std::string message;
};

/// Minimal value-or-error carrier used by fallible operations.
template <typename T>
class Result {
  public:
    Result(T value) : state_(std::move(value)) {}
    Result(Error error) : state_(std::move(error)) {}

    bool ok() const { return std::holds_alternative<T>(state_); }
    explicit operator bool() const { return ok(); }

    const T& value() const& {
        assert(ok());
        return std::get<T>(state_);
    }
    T&& value() && {
        assert(ok());
        return std::get<T>(std::move(state_));
    }
    const Error& error() const {
        assert(!ok());
        return std::get<Error>(state_);
    }

  private:
    std::variant<T, Error> state_;
};

} // namespace daml
