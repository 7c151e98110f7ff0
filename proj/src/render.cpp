#include "noecover/render.hpp"

namespace noecover {

namespace {

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

bool all_scalar(const Json& arr) {
  for (const Json& e : arr)
    if (!is_scalar(e)) return false;
  return true;
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

std::string inline_array(const Json& arr) {
  std::string out = "[";
  bool first = true;
  for (const Json& e : arr) {
    if (!first) out += ", ";
    out += scalar_text(e);
    first = false;
  }
  return out + "]";
}

void render_value(const Json& value, int indent, std::string& out);

void render_object(const Json& obj, int indent, std::string& out, bool first_inline) {
  bool first = true;
  for (const auto& [key, value] : obj.items()) {
    if (!(first && first_inline)) out.append(static_cast<std::size_t>(indent), ' ');
    first = false;
    out += key;
    if (is_scalar(value)) {
      out += ": " + scalar_text(value) + "\n";
    } else if (value.is_array() && all_scalar(value)) {
      out += ": " + inline_array(value) + "\n";
    } else {
      out += ":\n";
      render_value(value, indent + 2, out);
    }
  }
  if (obj.empty()) {
    if (first_inline) out += "{}\n"; // avoid a dangling "- " item
  }
}

void render_value(const Json& value, int indent, std::string& out) {
  if (value.is_object()) {
    render_object(value, indent, out, false);
    return;
  }
  if (value.is_array()) {
    for (const Json& e : value) {
      out.append(static_cast<std::size_t>(indent), ' ');
      out += "- ";
      if (is_scalar(e)) {
        out += scalar_text(e) + "\n";
      } else if (e.is_array() && all_scalar(e)) {
        out += inline_array(e) + "\n";
      } else if (e.is_object()) {
        render_object(e, indent + 2, out, true);
      } else {
        out += "\n";
        render_value(e, indent + 2, out);
      }
    }
    return;
  }
  out.append(static_cast<std::size_t>(indent), ' ');
  out += scalar_text(value) + "\n";
}

} // namespace

std::string render_text(const Json& j) {
  std::string out;
  render_object(j, 0, out, false);
  return out;
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

} // namespace noecover
