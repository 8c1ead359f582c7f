// Deterministic output records for the CLI: a minimal ordered JSON tree
// with fixed numeric formatting (17 significant digits, round-trip safe),
// so identical inputs always produce byte-identical output.
#pragma once

#include <cmath>
#include <cstdio>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace ptmcli {

inline std::string format_double(double v) {
  if (std::isnan(v)) return "null";
  if (std::isinf(v)) return v > 0 ? "1e999" : "-1e999";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class Json {
 public:
  Json() : kind_(Kind::Null) {}
  Json(bool b) : kind_(Kind::Bool), bool_(b) {}
  Json(int v) : kind_(Kind::Int), int_(v) {}
  Json(long long v) : kind_(Kind::Int), int_(v) {}
  Json(size_t v) : kind_(Kind::Int), int_(static_cast<long long>(v)) {}
  Json(double v) : kind_(Kind::Double), double_(v) {}
  Json(const char* s) : kind_(Kind::String), string_(s) {}
  Json(std::string s) : kind_(Kind::String), string_(std::move(s)) {}

  static Json object() {
    Json j;
    j.kind_ = Kind::Object;
    return j;
  }
  static Json array() {
    Json j;
    j.kind_ = Kind::Array;
    return j;
  }

  // Object access; keys keep insertion order.
  Json& operator[](const std::string& key) {
    for (auto& [k, v] : members_) {
      if (k == key) return v;
    }
    members_.emplace_back(key, Json());
    return members_.back().second;
  }

  void push_back(Json v) { elements_.push_back(std::move(v)); }

  void dump(std::string& out) const {
    switch (kind_) {
      case Kind::Null: out += "null"; break;
      case Kind::Bool: out += bool_ ? "true" : "false"; break;
      case Kind::Int: out += std::to_string(int_); break;
      case Kind::Double: out += format_double(double_); break;
      case Kind::String: dump_string(out, string_); break;
      case Kind::Array: {
        out += '[';
        for (size_t i = 0; i < elements_.size(); ++i) {
          if (i) out += ',';
          elements_[i].dump(out);
        }
        out += ']';
        break;
      }
      case Kind::Object: {
        out += '{';
        for (size_t i = 0; i < members_.size(); ++i) {
          if (i) out += ',';
          dump_string(out, members_[i].first);
          out += ':';
          members_[i].second.dump(out);
        }
        out += '}';
        break;
      }
    }
  }

  std::string dump() const {
    std::string out;
    dump(out);
    return out;
  }

 private:
  enum class Kind { Null, Bool, Int, Double, String, Array, Object };

  static void dump_string(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
      switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        default: out += c;
      }
    }
    out += '"';
  }

  Kind kind_;
  bool bool_ = false;
  long long int_ = 0;
  double double_ = 0.0;
  std::string string_;
  std::vector<Json> elements_;
  std::vector<std::pair<std::string, Json>> members_;
};

// command + inputs + results + status, serialized with stable key order.
struct OutputRecord {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  std::string status;  // "pass" | "fail" | "value"

  std::string to_json() const {
    Json root = Json::object();
    root["command"] = command;
    root["inputs"] = inputs;
    root["results"] = results;
    root["status"] = status;
    return root.dump();
  }
};

}  // namespace ptmcli
