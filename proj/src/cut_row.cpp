#include "ecp/cut_row.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ecp/errors.hpp"

namespace ecp {

CutRow RowBuilder::finish(Sense sense, std::int64_t rhs, FamilyTag tag) {
  CutRow row;
  std::sort(touched_.begin(), touched_.end());
  for (int var : touched_)
    if (coeff_[var] != 0) row.coeffs.emplace_back(var, coeff_[var]);
  row.sense = sense;
  row.rhs = rhs;
  row.family = std::move(tag);
  return row;
}

std::string family_name(const FamilyTag& tag) {
  struct Namer {
    std::string operator()(const CliqueTag&) const { return "clique"; }
    std::string operator()(const BlockTag&) const { return "block"; }
    std::string operator()(const TwoRankTag&) const { return "two_rank"; }
    std::string operator()(const TwoRankEmptyTag&) const { return "two_rank_empty"; }
    std::string operator()(const TwoRankSingletonTag&) const { return "two_rank_singleton"; }
    std::string operator()(const SubneighborhoodTag&) const { return "subneighborhood"; }
    std::string operator()(const SColorTag&) const { return "s_color"; }
    std::string operator()(const OutsideNeighborhoodTag&) const { return "outside_neighborhood"; }
    std::string operator()(const CliqueNeighborhoodTag&) const { return "clique_neighborhood"; }
    std::string operator()(const SymmetryTag&) const { return "symmetry"; }
    std::string operator()(const AssignmentTag&) const { return "assignment"; }
    std::string operator()(const ConflictTag&) const { return "conflict"; }
    std::string operator()(const WOrderTag&) const { return "w_order"; }
    std::string operator()(const IsolatedTag&) const { return "isolated"; }
    std::string operator()(const EquityLowerTag&) const { return "equity_lower"; }
    std::string operator()(const EquityUpperTag&) const { return "equity_upper"; }
  };
  return std::visit(Namer{}, tag);
}

double evaluate_lhs(const CutRow& row, const std::vector<double>& point) {
  double acc = 0.0;
  for (auto [var, c] : row.coeffs) acc += static_cast<double>(c) * point[var];
  return acc;
}

double violation(const CutRow& row, const std::vector<double>& point) {
  double lhs = evaluate_lhs(row, point);
  double rhs = static_cast<double>(row.rhs);
  switch (row.sense) {
    case Sense::LessEqual:
      return lhs - rhs;
    case Sense::GreaterEqual:
      return rhs - lhs;
    case Sense::Equal:
      return std::abs(lhs - rhs);
  }
  return 0.0;
}

bool satisfies(const CutRow& row, const std::vector<double>& point, double tol) {
  return violation(row, point) <= tol;
}

std::string var_name(int var, int n) {
  if (var < n * n) {
    int v = var / n + 1;
    int j = var % n + 1;
    return "x[" + std::to_string(v) + "," + std::to_string(j) + "]";
  }
  return "w[" + std::to_string(var - n * n + 1) + "]";
}

namespace {

std::string set_text(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

std::string params_text(const FamilyTag& tag) {
  struct Printer {
    std::string operator()(const CliqueTag& t) const {
      return "Q=" + set_text(t.clique) + " j=" + std::to_string(t.color);
    }
    std::string operator()(const BlockTag& t) const {
      return "v=" + std::to_string(t.vertex) + " j=" + std::to_string(t.color);
    }
    std::string operator()(const TwoRankTag& t) const {
      return "S=" + set_text(t.s) + " Q=" + set_text(t.q) + " j=" + std::to_string(t.color);
    }
    std::string operator()(const TwoRankEmptyTag& t) const {
      return "S=" + set_text(t.s) + " j=" + std::to_string(t.color);
    }
    std::string operator()(const TwoRankSingletonTag& t) const {
      return "S=" + set_text(t.s) + " q=" + std::to_string(t.q) + " j=" + std::to_string(t.color);
    }
    std::string operator()(const SubneighborhoodTag& t) const {
      return "u=" + std::to_string(t.u) + " j=" + std::to_string(t.color) + " S=" + set_text(t.s);
    }
    std::string operator()(const SColorTag& t) const { return "S=" + set_text(t.colors); }
    std::string operator()(const OutsideNeighborhoodTag& t) const {
      return "u=" + std::to_string(t.u) + " j=" + std::to_string(t.color);
    }
    std::string operator()(const CliqueNeighborhoodTag& t) const {
      return "u=" + std::to_string(t.u) + " j=" + std::to_string(t.j) +
             " k=" + std::to_string(t.k) + " Q=" + set_text(t.clique);
    }
    std::string operator()(const SymmetryTag& t) const {
      return "v=" + std::to_string(t.vertex) + " j=" + std::to_string(t.color);
    }
    std::string operator()(const AssignmentTag& t) const {
      return "v=" + std::to_string(t.vertex);
    }
    std::string operator()(const ConflictTag& t) const {
      return "u=" + std::to_string(t.u) + " v=" + std::to_string(t.v) +
             " j=" + std::to_string(t.color);
    }
    std::string operator()(const WOrderTag& t) const { return "j=" + std::to_string(t.color); }
    std::string operator()(const IsolatedTag& t) const {
      return "v=" + std::to_string(t.vertex) + " j=" + std::to_string(t.color);
    }
    std::string operator()(const EquityLowerTag& t) const { return "j=" + std::to_string(t.color); }
    std::string operator()(const EquityUpperTag& t) const { return "j=" + std::to_string(t.color); }
  };
  return std::visit(Printer{}, tag);
}

const char* sense_text(Sense s) {
  switch (s) {
    case Sense::LessEqual:
      return "<=";
    case Sense::Equal:
      return "=";
    case Sense::GreaterEqual:
      return ">=";
  }
  return "?";
}

// --- parsing helpers -------------------------------------------------------

class TokenStream {
 public:
  explicit TokenStream(const std::string& line) {
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) tokens_.push_back(tok);
  }
  bool done() const { return pos_ >= tokens_.size(); }
  const std::string& peek() const {
    if (done()) throw ParseError("cut row: unexpected end of line");
    return tokens_[pos_];
  }
  std::string next() {
    std::string t = peek();
    ++pos_;
    return t;
  }

 private:
  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
};

int parse_int(const std::string& text) {
  std::size_t used = 0;
  int value = std::stoi(text, &used);
  if (used != text.size()) throw ParseError("cut row: bad integer '" + text + "'");
  return value;
}

std::vector<int> parse_set(const std::string& text) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw ParseError("cut row: bad set '" + text + "'");
  std::vector<int> out;
  std::string body = text.substr(1, text.size() - 2);
  if (body.empty()) return out;
  std::istringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_int(item));
  return out;
}

// named parameter "key=value"
std::pair<std::string, std::string> split_param(const std::string& tok) {
  auto eq = tok.find('=');
  if (eq == std::string::npos)
    throw ParseError("cut row: expected key=value, got '" + tok + "'");
  return {tok.substr(0, eq), tok.substr(eq + 1)};
}

}  // namespace

std::string to_text(const CutRow& row, int n) {
  std::ostringstream out;
  out << family_name(row.family) << " n=" << n;
  std::string params = params_text(row.family);
  if (!params.empty()) out << " " << params;
  out << " :";
  for (auto [var, c] : row.coeffs) {
    out << " " << (c >= 0 ? "+" : "-") << std::llabs(c) << " " << var_name(var, n);
  }
  out << " " << sense_text(row.sense) << " " << row.rhs;
  return out.str();
}

CutRow row_from_text(const std::string& line, int* num_vertices) {
  TokenStream ts(line);
  std::string name = ts.next();
  std::vector<std::pair<std::string, std::string>> params;
  while (!ts.done() && ts.peek() != ":") params.push_back(split_param(ts.next()));
  if (ts.done()) throw ParseError("cut row: missing ':' separator");
  ts.next();  // ':'

  auto get = [&](const std::string& key) -> std::string {
    for (auto& [k, v] : params)
      if (k == key) return v;
    throw ParseError("cut row: missing parameter '" + key + "' for family " + name);
  };
  int n = parse_int(get("n"));
  if (n < 1) throw ParseError("cut row: bad n");
  if (num_vertices) *num_vertices = n;

  CutRow row;
  if (name == "clique")
    row.family = CliqueTag{parse_set(get("Q")), parse_int(get("j"))};
  else if (name == "block")
    row.family = BlockTag{parse_int(get("v")), parse_int(get("j"))};
  else if (name == "two_rank")
    row.family = TwoRankTag{parse_set(get("S")), parse_set(get("Q")), parse_int(get("j"))};
  else if (name == "two_rank_empty")
    row.family = TwoRankEmptyTag{parse_set(get("S")), parse_int(get("j"))};
  else if (name == "two_rank_singleton")
    row.family = TwoRankSingletonTag{parse_set(get("S")), parse_int(get("q")), parse_int(get("j"))};
  else if (name == "subneighborhood")
    row.family = SubneighborhoodTag{parse_int(get("u")), parse_int(get("j")), parse_set(get("S"))};
  else if (name == "s_color")
    row.family = SColorTag{parse_set(get("S"))};
  else if (name == "outside_neighborhood")
    row.family = OutsideNeighborhoodTag{parse_int(get("u")), parse_int(get("j"))};
  else if (name == "clique_neighborhood")
    row.family = CliqueNeighborhoodTag{parse_int(get("u")), parse_int(get("j")),
                                       parse_int(get("k")), parse_set(get("Q"))};
  else if (name == "symmetry")
    row.family = SymmetryTag{parse_int(get("v")), parse_int(get("j"))};
  else if (name == "assignment")
    row.family = AssignmentTag{parse_int(get("v"))};
  else if (name == "conflict")
    row.family = ConflictTag{parse_int(get("u")), parse_int(get("v")), parse_int(get("j"))};
  else if (name == "w_order")
    row.family = WOrderTag{parse_int(get("j"))};
  else if (name == "isolated")
    row.family = IsolatedTag{parse_int(get("v")), parse_int(get("j"))};
  else if (name == "equity_lower")
    row.family = EquityLowerTag{parse_int(get("j"))};
  else if (name == "equity_upper")
    row.family = EquityUpperTag{parse_int(get("j"))};
  else
    throw ParseError("cut row: unknown family '" + name + "'");

  // terms until a sense token
  while (true) {
    std::string tok = ts.next();
    if (tok == "<=" || tok == "=" || tok == ">=") {
      row.sense = tok == "<=" ? Sense::LessEqual
                 : tok == "=" ? Sense::Equal
                              : Sense::GreaterEqual;
      row.rhs = parse_int(ts.next());
      break;
    }
    std::int64_t coeff = 0;
    if (tok.size() > 1 && (tok[0] == '+' || tok[0] == '-'))
      coeff = (tok[0] == '-' ? -1 : 1) * static_cast<std::int64_t>(parse_int(tok.substr(1)));
    else
      throw ParseError("cut row: bad coefficient '" + tok + "'");
    std::string var = ts.next();
    int id = -1;
    if (var.rfind("x[", 0) == 0 && var.back() == ']') {
      auto comma = var.find(',');
      if (comma == std::string::npos) throw ParseError("cut row: bad variable '" + var + "'");
      int v = parse_int(var.substr(2, comma - 2));
      int j = parse_int(var.substr(comma + 1, var.size() - comma - 2));
      if (v < 1 || v > n || j < 1 || j > n)
        throw ParseError("cut row: variable index out of range in '" + var + "'");
      id = x_index(v, j, n);
    } else if (var.rfind("w[", 0) == 0 && var.back() == ']') {
      int j = parse_int(var.substr(2, var.size() - 3));
      if (j < 1 || j > n) throw ParseError("cut row: variable index out of range in '" + var + "'");
      id = w_index(j, n);
    } else {
      throw ParseError("cut row: bad variable '" + var + "'");
    }
    row.coeffs.emplace_back(id, coeff);
  }
  if (!ts.done()) throw ParseError("cut row: trailing tokens");
  std::sort(row.coeffs.begin(), row.coeffs.end());
  return row;
}

}  // namespace ecp
