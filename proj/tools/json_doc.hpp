#pragma once

// Small ordered JSON document builder for the CLI.  Key order is insertion
// order and floating-point formatting is fixed at %.12g, so reports are
// byte-stable across runs and thread counts.

#include <cstdint>
#include <cstdio>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace jdoc {

class Value;
using Array = std::vector<Value>;
using Object = std::vector<std::pair<std::string, Value>>;

class Value {
 public:
  Value() : v_(nullptr) {}
  Value(std::nullptr_t) : v_(nullptr) {}
  Value(bool b) : v_(b) {}
  Value(std::int64_t i) : v_(i) {}
  Value(std::uint64_t u) : v_(u) {}
  Value(int i) : v_(static_cast<std::int64_t>(i)) {}
  Value(unsigned u) : v_(static_cast<std::uint64_t>(u)) {}
  Value(double d) : v_(d) {}
  Value(const char* s) : v_(std::string(s)) {}
  Value(std::string s) : v_(std::move(s)) {}
  Value(Array a) : v_(std::move(a)) {}
  Value(Object o) : v_(std::move(o)) {}

  const auto& data() const { return v_; }

 private:
  std::variant<std::nullptr_t, bool, std::int64_t, std::uint64_t, double,
               std::string, Array, Object>
      v_;
};

inline std::string format_double(double d) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", d);
  return buf;
}

inline std::string escape(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      case '\r':
        out += "\\r";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
  return out;
}

inline void dump_json_impl(const Value& value, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string pad_in(static_cast<std::size_t>(indent + 1) * 2, ' ');
  struct Visitor {
    int indent;
    const std::string& pad;
    const std::string& pad_in;
    std::string& out;
    void operator()(std::nullptr_t) const { out += "null"; }
    void operator()(bool b) const { out += b ? "true" : "false"; }
    void operator()(std::int64_t i) const { out += std::to_string(i); }
    void operator()(std::uint64_t u) const { out += std::to_string(u); }
    void operator()(double d) const { out += format_double(d); }
    void operator()(const std::string& s) const { out += escape(s); }
    void operator()(const Array& a) const {
      if (a.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < a.size(); ++i) {
        out += pad_in;
        dump_json_impl(a[i], indent + 1, out);
        if (i + 1 < a.size()) out += ',';
        out += '\n';
      }
      out += pad;
      out += ']';
    }
    void operator()(const Object& o) const {
      if (o.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      for (std::size_t i = 0; i < o.size(); ++i) {
        out += pad_in;
        out += escape(o[i].first);
        out += ": ";
        dump_json_impl(o[i].second, indent + 1, out);
        if (i + 1 < o.size()) out += ',';
        out += '\n';
      }
      out += pad;
      out += '}';
    }
  };
  std::visit(Visitor{indent, pad, pad_in, out}, value.data());
}

inline std::string dump_json(const Value& value) {
  std::string out;
  dump_json_impl(value, 0, out);
  out += '\n';
  return out;
}

// Flat "path = value" rendering for --format text.
inline void dump_text_impl(const Value& value, const std::string& path,
                           std::string& out) {
  struct Visitor {
    const std::string& path;
    std::string& out;
    std::string line(const std::string& rhs) const {
      return (path.empty() ? std::string("value") : path) + " = " + rhs + "\n";
    }
    void operator()(std::nullptr_t) const { out += line("null"); }
    void operator()(bool b) const { out += line(b ? "true" : "false"); }
    void operator()(std::int64_t i) const { out += line(std::to_string(i)); }
    void operator()(std::uint64_t u) const { out += line(std::to_string(u)); }
    void operator()(double d) const { out += line(format_double(d)); }
    void operator()(const std::string& s) const { out += line(s); }
    void operator()(const Array& a) const {
      if (a.empty()) {
        out += line("[]");
        return;
      }
      for (std::size_t i = 0; i < a.size(); ++i)
        dump_text_impl(a[i], path + "[" + std::to_string(i) + "]", out);
    }
    void operator()(const Object& o) const {
      if (o.empty()) {
        out += line("{}");
        return;
      }
      for (const auto& [key, val] : o)
        dump_text_impl(val, path.empty() ? key : path + "." + key, out);
    }
  };
  std::visit(Visitor{path, out}, value.data());
}

inline std::string dump_text(const Value& value) {
  std::string out;
  dump_text_impl(value, "", out);
  return out;
}

}  // namespace jdoc
