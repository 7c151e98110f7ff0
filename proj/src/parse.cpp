#include "noecover/parse.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "noecover/errors.hpp"

namespace noecover {

namespace {

bool valid_label(std::string_view t) {
  if (t.empty()) return false;
  for (char c : t)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

[[noreturn]] void fail(std::string_view name, int line, const std::string& message) {
  throw InputError(std::string(name) + ":" + std::to_string(line) + ": " + message);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

} // namespace

SystemSpec parse_system(std::string_view text, std::string_view name) {
  SystemSpec spec;
  spec.source_name = std::string(name);
  bool have_system = false;
  int lineno = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    std::vector<std::string> tok = tokenize(raw);
    if (tok.empty()) continue;
    const std::string& head = tok[0];
    if (head == "system") {
      if (have_system) fail(name, lineno, "duplicate system line");
      if (tok.size() != 2) fail(name, lineno, "expected: system <kind>");
      if (tok[1] == "moore") spec.kind = SystemSpec::Kind::moore;
      else if (tok[1] == "preorder") spec.kind = SystemSpec::Kind::preorder;
      else if (tok[1] == "implications") spec.kind = SystemSpec::Kind::implications;
      else if (tok[1] == "powerset-union") spec.kind = SystemSpec::Kind::powerset_union;
      else fail(name, lineno, "unknown system kind \"" + tok[1] + "\"");
      have_system = true;
    } else if (head == "elements") {
      if (!have_system) fail(name, lineno, "elements before system line");
      if (tok.size() < 2) fail(name, lineno, "expected: elements <label>+");
      for (std::size_t i = 1; i < tok.size(); ++i) {
        if (!valid_label(tok[i])) fail(name, lineno, "invalid label \"" + tok[i] + "\"");
        spec.labels.push_back(tok[i]);
      }
    } else if (head == "closed") {
      if (!have_system || spec.kind != SystemSpec::Kind::moore)
        fail(name, lineno, "closed lines belong to moore systems");
      spec.closed_sets.emplace_back(tok.begin() + 1, tok.end());
    } else if (head == "le") {
      if (!have_system || spec.kind != SystemSpec::Kind::preorder)
        fail(name, lineno, "le lines belong to preorder systems");
      if (tok.size() != 3) fail(name, lineno, "expected: le <a> <b>");
      spec.le_pairs.emplace_back(tok[1], tok[2]);
    } else if (head == "rule") {
      if (!have_system || spec.kind != SystemSpec::Kind::implications)
        fail(name, lineno, "rule lines belong to implication systems");
      auto arrow = std::find(tok.begin(), tok.end(), "->");
      if (arrow == tok.end() || arrow == tok.begin() + 1 || arrow + 2 != tok.end())
        fail(name, lineno, "expected: rule <label>+ -> <label>");
      SystemSpec::RuleSpec rule;
      rule.premise.assign(tok.begin() + 1, arrow);
      rule.conclusion = *(arrow + 1);
      spec.rules.push_back(std::move(rule));
    } else if (head == "powerset-union") {
      if (!have_system || spec.kind != SystemSpec::Kind::powerset_union)
        fail(name, lineno, "powerset-union line belongs to powerset-union systems");
      if (tok.size() != 2) fail(name, lineno, "expected: powerset-union <n>");
      int value = -1;
      auto [ptr, ec] = std::from_chars(tok[1].data(), tok[1].data() + tok[1].size(), value);
      if (ec != std::errc{} || ptr != tok[1].data() + tok[1].size() || value < 0)
        fail(name, lineno, "powerset-union size must be a nonnegative integer");
      spec.inner = value;
    } else {
      fail(name, lineno, "unknown directive \"" + head + "\"");
    }
  }
  if (!have_system) throw InputError(std::string(name) + ": missing system line");
  if (spec.kind == SystemSpec::Kind::powerset_union) {
    if (spec.inner < 0) throw InputError(std::string(name) + ": missing powerset-union line");
    if (!spec.labels.empty())
      throw InputError(std::string(name) + ": powerset-union systems have no elements line");
  } else if (spec.labels.empty()) {
    throw InputError(std::string(name) + ": missing elements line");
  }
  return spec;
}

namespace {

int label_index(const std::vector<std::string>& labels, const std::string& label,
                const std::string& context) {
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw InputError(context + ": unknown label \"" + label + "\"");
  return static_cast<int>(it - labels.begin());
}

SubsetMask labels_to_mask(const std::vector<std::string>& labels,
                          const std::vector<std::string>& members, const std::string& context) {
  SubsetMask m = SubsetMask::empty_set(static_cast<int>(labels.size()));
  for (const std::string& member : members) {
    int id = label_index(labels, member, context);
    if (m.contains(id)) throw InputError(context + ": duplicate label \"" + member + "\"");
    m = m.with(id);
  }
  return m;
}

} // namespace

ClosureSystem build_system(const SystemSpec& spec, const BuildOptions& options,
                           const Limits& limits) {
  const std::string& src = spec.source_name;
  switch (spec.kind) {
    case SystemSpec::Kind::moore: {
      if (static_cast<int>(spec.labels.size()) > limits.max_ground)
        throw InputError(src + ": ground set larger than " + std::to_string(limits.max_ground));
      std::vector<SubsetMask> family;
      for (const auto& members : spec.closed_sets)
        family.push_back(labels_to_mask(spec.labels, members, src));
      std::sort(family.begin(), family.end());
      family.erase(std::unique(family.begin(), family.end()), family.end());
      if (family.empty() || !family.back().is_full())
        throw InputError(src + ": Moore family must contain the full ground set");
      if (options.lax_moore)
        return ClosureSystem::moore(spec.labels, std::move(family), false);
      // Close under pairwise intersections or reject, depending on the flag.
      std::vector<SubsetMask> closed = family;
      bool grew = true;
      while (grew) {
        grew = false;
        const std::size_t sz = closed.size();
        for (std::size_t i = 0; i < sz; ++i)
          for (std::size_t j = i + 1; j < sz; ++j) {
            SubsetMask meet = closed[i] & closed[j];
            if (!std::binary_search(closed.begin(), closed.end(), meet)) {
              if (!options.complete_moore)
                throw InputError(src + ": Moore family is not intersection-closed (missing the intersection of two members; pass the completion flag to close it)");
              closed.insert(std::lower_bound(closed.begin(), closed.end(), meet), meet);
              grew = true;
            }
          }
      }
      return ClosureSystem::moore(spec.labels, std::move(closed), true);
    }
    case SystemSpec::Kind::preorder: {
      if (static_cast<int>(spec.labels.size()) > limits.max_ground)
        throw InputError(src + ": ground set larger than " + std::to_string(limits.max_ground));
      std::vector<std::pair<int, int>> pairs;
      for (const auto& [a, b] : spec.le_pairs)
        pairs.emplace_back(label_index(spec.labels, a, src), label_index(spec.labels, b, src));
      return ClosureSystem::alexandroff(
          spec.labels, QuasiOrder::from_pairs(static_cast<int>(spec.labels.size()), pairs));
    }
    case SystemSpec::Kind::implications: {
      if (static_cast<int>(spec.labels.size()) > limits.max_ground)
        throw InputError(src + ": ground set larger than " + std::to_string(limits.max_ground));
      std::vector<ImplicationRule> rules;
      for (const auto& rule : spec.rules)
        rules.push_back(ImplicationRule{labels_to_mask(spec.labels, rule.premise, src),
                                        label_index(spec.labels, rule.conclusion, src)});
      return ClosureSystem::implications(spec.labels, std::move(rules));
    }
    case SystemSpec::Kind::powerset_union: {
      if (spec.inner > limits.max_powerset_inner)
        throw InputError(src + ": powerset-union size larger than " +
                         std::to_string(limits.max_powerset_inner));
      return ClosureSystem::powerset_union(spec.inner);
    }
  }
  throw InputError(src + ": unknown system kind");
}

SubsetMask parse_subset(const ClosureSystem& s, std::string_view text) {
  SubsetMask m = SubsetMask::empty_set(s.size());
  if (text == "-") return m;
  if (text.empty()) throw InputError("empty subset literal; write \"-\" for the empty set");
  for (std::string_view part : split(text, ',')) {
    std::string label(part);
    int id = s.index_of(label);
    if (id < 0) throw InputError("unknown label \"" + label + "\"");
    if (m.contains(id)) throw InputError("duplicate label \"" + label + "\"");
    m = m.with(id);
  }
  return m;
}

ClosedChain parse_chain(const ClosureSystem& s, std::string_view text) {
  std::vector<SubsetMask> sets;
  for (std::string_view part : split(text, ';')) sets.push_back(parse_subset(s, part));
  return make_chain(s, std::move(sets));
}

GMPDecomposition parse_decomposition(const ClosureSystem& s, std::string_view text) {
  GMPDecomposition d;
  for (std::string_view block_text : split(text, '|')) {
    std::vector<std::string> tok = tokenize(block_text);
    if (tok.size() != 2 || tok[0].rfind("A=", 0) != 0 || tok[1].rfind("N=", 0) != 0)
      throw InputError("each block must look like \"A=<labels> N=<set;set;...>\"");
    GMPBlock block;
    block.elements = parse_subset(s, tok[0].substr(2));
    std::string ideal = tok[1].substr(2);
    if (ideal == "implicit") {
      block.ideal.kind = IdealDescriptor::Kind::implicit;
      block.ideal.target = block.elements;
    } else {
      block.ideal.kind = IdealDescriptor::Kind::explicit_sets;
      for (std::string_view part : split(ideal, ';'))
        block.ideal.sets.push_back(parse_subset(s, part));
      std::sort(block.ideal.sets.begin(), block.ideal.sets.end());
      block.ideal.sets.erase(std::unique(block.ideal.sets.begin(), block.ideal.sets.end()),
                             block.ideal.sets.end());
    }
    d.blocks.push_back(std::move(block));
  }
  return d;
}

} // namespace noecover
