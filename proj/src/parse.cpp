#include "strata/parse.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace strata {

namespace {

// Cursor over the raw text that skips whitespace and reports positions in
// the original string.
struct Cursor {
  const std::string& text;
  size_t pos = 0;

  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }
  bool done() {
    skip();
    return pos >= text.size();
  }
  char peek() {
    skip();
    return pos < text.size() ? text[pos] : '\0';
  }
  void expect(char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) {
      throw ParseError(pos, std::string("expected '") + c + "'");
    }
    ++pos;
  }
  bool accept(char c) {
    skip();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  long long integer() {
    skip();
    size_t start = pos;
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      neg = text[pos] == '-';
      ++pos;
    }
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw ParseError(start, "expected an integer");
    }
    long long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > (1LL << 40)) throw ParseError(start, "integer too large");
      ++pos;
    }
    return neg ? -value : value;
  }
  std::string name() {
    skip();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '\'' || text[pos] == '_')) {
      ++pos;
    }
    if (pos == start) throw ParseError(start, "expected a name");
    return text.substr(start, pos - start);
  }
};

}  // namespace

Signature parse_signature(const std::string& text) {
  Cursor c{text};
  c.expect('(');
  long long genus = c.integer();
  if (genus < 0) throw ParseError(c.pos, "genus must be >= 0");
  c.expect(';');
  std::vector<long long> periods;
  if (!c.accept('-')) {
    for (;;) {
      size_t at = c.pos;
      long long m = c.integer();
      if (m < 2) throw ParseError(at, "period must be >= 2");
      periods.push_back(m);
      if (!c.accept(',')) break;
    }
  }
  c.expect(')');
  if (!c.done()) throw ParseError(c.pos, "trailing input after signature");
  return Signature(static_cast<int>(genus), std::move(periods));
}

std::vector<int> parse_cycles(const std::string& text) {
  Cursor c{text};
  std::vector<std::vector<int>> cycles;
  std::set<int> used;
  int max_point = 0;
  while (c.peek() == '(') {
    c.expect('(');
    std::vector<int> cycle;
    while (c.peek() != ')') {
      size_t at = c.pos;
      long long point = c.integer();
      if (point < 1) throw ParseError(at, "points are 1-based");
      if (!used.insert(static_cast<int>(point)).second) {
        throw ParseError(at, "cycles reuse a point");
      }
      cycle.push_back(static_cast<int>(point));
      max_point = std::max(max_point, static_cast<int>(point));
    }
    c.expect(')');
    cycles.push_back(std::move(cycle));
  }
  if (!c.done()) throw ParseError(c.pos, "trailing input after cycles");
  std::vector<int> perm(max_point);
  for (int i = 0; i < max_point; ++i) perm[i] = i + 1;
  for (const auto& cycle : cycles) {
    for (size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i], to = cycle[(i + 1) % cycle.size()];
      perm[from - 1] = to;
    }
  }
  return perm;
}

FiniteGroup parse_group_spec(const std::string& text, int cap) {
  Cursor c{text};
  std::string kind = c.name();
  c.expect(':');
  if (kind == "G2") {
    std::string key = c.name();
    if (key != "n") throw ParseError(c.pos, "expected n=<int>");
    c.expect('=');
    long long n = c.integer();
    if (!c.done()) throw ParseError(c.pos, "trailing input after group spec");
    return build_G2(static_cast<int>(n));
  }
  if (kind == "Gp") {
    std::string key = c.name();
    if (key != "p") throw ParseError(c.pos, "expected p=<int>");
    c.expect('=');
    long long p = c.integer();
    c.expect(',');
    key = c.name();
    if (key != "n") throw ParseError(c.pos, "expected n=<int>");
    c.expect('=');
    long long n = c.integer();
    if (!c.done()) throw ParseError(c.pos, "trailing input after group spec");
    return build_Gp(static_cast<int>(p), static_cast<int>(n));
  }
  if (kind == "perm") {
    c.expect('[');
    std::vector<std::vector<int>> perms;
    if (c.peek() != ']') {
      for (;;) {
        size_t start = c.pos;
        int depth = 0;
        size_t end = start;
        while (end < text.size()) {
          char ch = text[end];
          if (ch == '(') ++depth;
          if (ch == ')') --depth;
          if (depth == 0 && (ch == ';' || ch == ']')) break;
          ++end;
        }
        perms.push_back(parse_cycles(text.substr(start, end - start)));
        c.pos = end;
        if (!c.accept(';')) break;
      }
    }
    c.expect(']');
    if (!c.done()) throw ParseError(c.pos, "trailing input after group spec");
    size_t degree = 0;
    for (auto& p : perms) degree = std::max(degree, p.size());
    for (auto& p : perms) {
      size_t old = p.size();
      p.resize(degree);
      for (size_t i = old; i < degree; ++i) p[i] = static_cast<int>(i) + 1;
    }
    return from_permutations(perms, cap);
  }
  throw ParseError(0, "unknown group kind '" + kind + "' (use G2, Gp or perm)");
}

int eval_word(const FiniteGroup& g, const std::string& word) {
  Cursor c{word};
  if (c.peek() == 'e') {
    size_t save = c.pos;
    std::string nm = c.name();
    if (nm == "e" && c.done()) return g.identity();
    c.pos = save;
  }
  int acc = g.identity();
  for (;;) {
    std::string nm = c.name();
    long long exp = 1;
    if (c.accept('^')) exp = c.integer();
    acc = g.mul(acc, g.pow(g.generator(nm), exp));
    if (!c.accept('*')) break;
  }
  if (!c.done()) throw ParseError(c.pos, "trailing input after word");
  return acc;
}

// --- JSON ---------------------------------------------------------------------

Json to_json(const Signature& sig) { return sig.str(); }

Json to_json(const EquivalenceClassReport& report) {
  Json j;
  j["signature"] = report.signature.str();
  j["group"] = report.group_name;
  j["total"] = report.total;
  j["move_set"] = report.move_set;
  j["orbits"] = Json::array();
  for (const auto& orbit : report.orbits) {
    Json o;
    o["size"] = orbit.size;
    o["representative"] = orbit.representative_words;
    j["orbits"].push_back(std::move(o));
  }
  return j;
}

Json to_json(const DecompositionReport& report) {
  Json j;
  j["group"] = report.group_name;
  j["signature"] = report.signature.str();
  if (!report.subgroup_label.empty()) j["subgroup"] = report.subgroup_label;
  j["genus"] = report.genus;
  j["factors"] = Json::array();
  for (const auto& f : report.factors) {
    Json o;
    o["irrep"] = f.irrep;
    o["degree"] = f.degree;
    o["field_degree"] = f.field_degree;
    o["multiplicity"] = f.multiplicity;
    o["dim"] = f.dim;
    j["factors"].push_back(std::move(o));
  }
  j["total"] = report.total();
  return j;
}

Json to_json(const BoundResult& result) {
  Json j;
  j["class"] = result.cls.str();
  j["d"] = result.d;
  j["coefficient"] = rational_str(result.coefficient);
  j["extremal_signatures"] = Json::array();
  for (const auto& sig : result.extremal) {
    j["extremal_signatures"].push_back(sig.str());
  }
  return j;
}

EquivalenceClassReport equivalence_report_from_json(const Json& j) {
  EquivalenceClassReport report{
      .signature = parse_signature(j.at("signature").get<std::string>()),
      .group_name = j.at("group").get<std::string>()};
  report.total = j.at("total").get<long long>();
  report.move_set = j.at("move_set").get<std::string>();
  for (const auto& o : j.at("orbits")) {
    OrbitInfo info;
    info.size = o.at("size").get<long long>();
    info.representative_words =
        o.at("representative").get<std::vector<std::string>>();
    report.orbits.push_back(std::move(info));
  }
  return report;
}

DecompositionReport decomposition_report_from_json(const Json& j) {
  DecompositionReport report{
      .group_name = j.at("group").get<std::string>(),
      .signature = parse_signature(j.at("signature").get<std::string>())};
  if (j.contains("subgroup")) {
    report.subgroup_label = j.at("subgroup").get<std::string>();
  }
  report.genus = j.at("genus").get<long long>();
  for (const auto& o : j.at("factors")) {
    DecompositionFactor f;
    f.irrep = o.at("irrep").get<int>();
    f.degree = o.at("degree").get<long long>();
    f.field_degree = o.at("field_degree").get<long long>();
    f.multiplicity = o.at("multiplicity").get<long long>();
    f.dim = o.at("dim").get<long long>();
    report.factors.push_back(f);
  }
  return report;
}

}  // namespace strata
