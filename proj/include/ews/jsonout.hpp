#pragma once

#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

namespace ews::jsonout {

/// Minimal streaming JSON writer with deterministic output: keys appear in
/// insertion order and every double is printed with 17 significant digits,
/// which round-trips exactly through a correctly rounded strtod.
class JsonWriter {
 public:
  void begin_object() {
    comma();
    out_ += '{';
    stack_.push_back(State::ObjectFirst);
  }
  void end_object() {
    pop();
    newline_indent();
    out_ += '}';
  }
  void begin_array(bool inline_rows = false) {
    comma();
    out_ += '[';
    stack_.push_back(inline_rows ? State::InlineArrayFirst
                                 : State::ArrayFirst);
  }
  void end_array() {
    const bool was_inline = is_inline();
    pop();
    if (!was_inline) newline_indent();
    out_ += ']';
  }
  void key(std::string_view k) {
    comma();
    quote(k);
    out_ += ": ";
    pending_key_ = true;
  }
  void value(double v) {
    comma();
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out_ += buf;
  }
  void value(int v) {
    comma();
    out_ += std::to_string(v);
  }
  void value(std::string_view v) {
    comma();
    quote(v);
  }
  // without this overload a string literal would convert to bool
  void value(const char* v) { value(std::string_view(v)); }
  void value(bool v) {
    comma();
    out_ += v ? "true" : "false";
  }

  const std::string& str() const { return out_; }

 private:
  enum class State { ObjectFirst, Object, ArrayFirst, Array, InlineArrayFirst, InlineArray };

  bool is_inline() const {
    return !stack_.empty() && (stack_.back() == State::InlineArrayFirst ||
                               stack_.back() == State::InlineArray);
  }
  void comma() {
    if (pending_key_) {
      pending_key_ = false;
      return;
    }
    if (stack_.empty()) return;
    State& s = stack_.back();
    switch (s) {
      case State::ObjectFirst:
        s = State::Object;
        newline_indent();
        break;
      case State::Object:
        out_ += ',';
        newline_indent();
        break;
      case State::ArrayFirst:
        s = State::Array;
        newline_indent();
        break;
      case State::Array:
        out_ += ',';
        newline_indent();
        break;
      case State::InlineArrayFirst:
        s = State::InlineArray;
        break;
      case State::InlineArray:
        out_ += ", ";
        break;
    }
  }
  void pop() {
    if (!stack_.empty()) stack_.pop_back();
  }
  void newline_indent() {
    out_ += '\n';
    out_.append(2 * stack_.size(), ' ');
  }
  void quote(std::string_view s) {
    out_ += '"';
    for (char ch : s) {
      if (ch == '"' || ch == '\\') out_ += '\\';
      out_ += ch;
    }
    out_ += '"';
  }

  std::string out_;
  std::vector<State> stack_;
  bool pending_key_ = false;
};

}  // namespace ews::jsonout
