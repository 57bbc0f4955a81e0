#include <cctype>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>

#include "hpseudo/algebra_data.hpp"

namespace hp {

namespace {

struct Node {
  std::string atom;
  std::vector<Node> items;
  bool list = false;
};

class ValueParser {
 public:
  explicit ValueParser(const std::string& s) : s_(s) {}

  Node parse() {
    Node n = value();
    skip();
    if (pos_ != s_.size()) throw ParseError("trailing characters in '" + s_ + "'");
    return n;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  Node value() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of value");
    char ch = s_[pos_];
    if (ch == '[' || ch == '(') {
      char close = ch == '[' ? ']' : ')';
      ++pos_;
      Node n;
      n.list = true;
      skip();
      if (pos_ < s_.size() && s_[pos_] == close) {
        ++pos_;
        return n;
      }
      while (true) {
        n.items.push_back(value());
        skip();
        if (pos_ >= s_.size()) throw ParseError("unbalanced brackets");
        if (s_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (s_[pos_] == close) {
          ++pos_;
          return n;
        }
        throw ParseError(std::string("unexpected '") + s_[pos_] + "'");
      }
    }
    Node n;
    while (pos_ < s_.size() && s_[pos_] != ',' && s_[pos_] != ']' && s_[pos_] != ')' &&
           s_[pos_] != '[' && s_[pos_] != '(')
      n.atom += s_[pos_++];
    while (!n.atom.empty() && std::isspace(static_cast<unsigned char>(n.atom.back()))) n.atom.pop_back();
    if (n.atom.empty()) throw ParseError("empty entry");
    return n;
  }

  const std::string& s_;
  size_t pos_ = 0;
};

int balance(const std::string& s) {
  int b = 0;
  for (char ch : s) {
    if (ch == '[' || ch == '(') ++b;
    if (ch == ']' || ch == ')') --b;
  }
  return b;
}

int as_int(const Node& n, const std::string& what) {
  if (n.list) throw ParseError(what + ": expected an integer");
  Q q = parse_rational(n.atom);
  if (q.get_den() != 1) throw ParseError(what + ": expected an integer");
  return static_cast<int>(q.get_num().get_si());
}

Q as_q(const Node& n, const std::string& what) {
  if (n.list) throw ParseError(what + ": expected a rational");
  return parse_rational(n.atom);
}

}  // namespace

LieAlgebraSpec parse_spec_text(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line, key, acc;
  int lineno = 0;
  auto flush = [&] {
    if (key.empty()) return;
    if (kv.count(key)) throw ParseError("duplicate key '" + key + "'");
    kv[key] = acc;
    key.clear();
    acc.clear();
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (!key.empty() && balance(acc) > 0) {
      acc += " " + line;
      if (balance(acc) == 0) flush();
      continue;
    }
    bool blank = true;
    for (char ch : line)
      if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
    if (blank) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("line " + std::to_string(lineno) + ": expected key = value");
    key = line.substr(0, eq);
    key.erase(0, key.find_first_not_of(" \t"));
    key.erase(key.find_last_not_of(" \t") + 1);
    acc = line.substr(eq + 1);
    if (balance(acc) < 0) throw ParseError("line " + std::to_string(lineno) + ": unbalanced brackets");
    if (balance(acc) == 0) flush();
  }
  if (!key.empty()) throw ParseError("unterminated value for '" + key + "'");

  for (const auto& [k, v] : kv)
    if (k != "name" && k != "dim" && k != "brackets" && k != "chi" && k != "omega")
      throw ParseError("unknown key '" + k + "'");
  if (!kv.count("dim")) throw ParseError("missing key 'dim'");
  if (!kv.count("omega")) throw ParseError("missing key 'omega'");
  int dim = as_int(ValueParser(kv["dim"]).parse(), "dim");
  if (dim < 1 || dim > 8) throw ParseError("dim out of range");
  std::string name = "spec";
  if (kv.count("name")) {
    name = kv["name"];
    name.erase(0, name.find_first_not_of(" \t\""));
    name.erase(name.find_last_not_of(" \t\"") + 1);
  }
  LieAlgebraSpec s(name, dim);
  if (kv.count("brackets")) {
    Node b = ValueParser(kv["brackets"]).parse();
    if (!b.list) throw ParseError("brackets: expected a list");
    for (const auto& t : b.items) {
      if (!t.list || t.items.size() != 4) throw ParseError("brackets: entries are (i,j,k,coeff)");
      int i = as_int(t.items[0], "brackets") - 1, j = as_int(t.items[1], "brackets") - 1,
          k = as_int(t.items[2], "brackets") - 1;
      Q v = as_q(t.items[3], "brackets");
      if (i < 0 || j < 0 || k < 0 || i >= dim || j >= dim || k >= dim)
        throw ParseError("brackets: index out of range");
      if (i == j && v != 0) throw ParseError("brackets: [d_i,d_i] must vanish");
      s.set_bracket(i, j, k, v);
    }
  }
  if (kv.count("chi")) {
    Node c = ValueParser(kv["chi"]).parse();
    if (!c.list || static_cast<int>(c.items.size()) != dim) throw ParseError("chi: expected dim entries");
    for (int i = 0; i < dim; ++i) s.chi[i] = as_q(c.items[i], "chi");
  }
  Node o = ValueParser(kv["omega"]).parse();
  if (!o.list || static_cast<int>(o.items.size()) != dim) throw ParseError("omega: expected dim rows");
  for (int i = 0; i < dim; ++i) {
    const Node& row = o.items[i];
    if (!row.list || static_cast<int>(row.items.size()) != dim) throw ParseError("omega: expected dim columns");
    for (int j = 0; j < dim; ++j) s.omega(i, j) = as_q(row.items[j], "omega");
  }
  return s;
}

LieAlgebraSpec load_spec_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open spec file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_spec_text(ss.str());
}

std::string format_spec_text(const LieAlgebraSpec& s) {
  std::ostringstream os;
  os << "name = " << s.name << "\n";
  os << "dim = " << s.dim << "\n";
  os << "brackets = [";
  bool first = true;
  for (int i = 0; i < s.dim; ++i)
    for (int j = i + 1; j < s.dim; ++j)
      for (int k = 0; k < s.dim; ++k)
        if (!is_zero(s.C(i, j, k))) {
          os << (first ? "" : ", ") << "(" << i + 1 << ", " << j + 1 << ", " << k + 1 << ", "
             << to_string(s.C(i, j, k)) << ")";
          first = false;
        }
  os << "]\nchi = [";
  for (int i = 0; i < s.dim; ++i) os << (i ? ", " : "") << to_string(s.chi[i]);
  os << "]\nomega = [";
  for (int i = 0; i < s.dim; ++i) {
    os << (i ? ",\n         [" : "[");
    for (int j = 0; j < s.dim; ++j) os << (j ? ", " : "") << to_string(s.omega(i, j));
    os << "]";
  }
  os << "]\n";
  return os.str();
}

}  // namespace hp
