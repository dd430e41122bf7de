#include "cocycle/io.hpp"

#include "cocycle/catalog.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cocycle::io {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

std::string expect_keyword_line(std::istream& in, const std::string& keyword) {
  std::string line;
  if (!std::getline(in, line)) fail("unexpected end of file, wanted '" + keyword + "'");
  if (line.rfind(keyword + " ", 0) != 0) fail("malformed line, wanted '" + keyword + " ...': " + line);
  return line.substr(keyword.size() + 1);
}

} // namespace

std::string write_group_file(const FiniteGroup& g) {
  std::ostringstream out;
  int n = g.order();
  out << "order " << n << "\n";
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (b) out << ' ';
      out << g.mul(a, b);
    }
    out << "\n";
  }
  for (int i = 0; i < int(g.labels().size()); ++i)
    if (!g.labels()[i].empty()) out << "# label " << i << " " << g.labels()[i] << "\n";
  return out.str();
}

GroupPtr read_group_file(std::istream& in) {
  int n = 0;
  {
    std::istringstream head(expect_keyword_line(in, "order"));
    if (!(head >> n) || n <= 0) fail("bad group order");
  }
  std::vector<int> table;
  table.reserve(std::size_t(n) * n);
  for (int row = 0; row < n; ++row) {
    std::string line;
    if (!std::getline(in, line)) fail("group file truncated at row " + std::to_string(row));
    std::istringstream is(line);
    for (int col = 0; col < n; ++col) {
      int v;
      if (!(is >> v)) fail("short row " + std::to_string(row));
      table.push_back(v);
    }
    int extra;
    if (is >> extra) fail("long row " + std::to_string(row));
  }
  std::vector<std::string> labels(n);
  std::string line;
  bool any_label = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream is(line);
    std::string hash, kw;
    int idx;
    if (!(is >> hash >> kw >> idx) || hash != "#" || kw != "label") fail("bad trailer: " + line);
    std::string name;
    std::getline(is, name);
    if (!name.empty() && name[0] == ' ') name.erase(0, 1);
    if (idx < 0 || idx >= n) fail("label index out of range");
    labels[idx] = name;
    any_label = true;
  }
  return std::make_shared<const FiniteGroup>(FiniteGroup::from_table(
      n, std::move(table), any_label ? std::move(labels) : std::vector<std::string>{}));
}

GroupPtr read_group_file_text(const std::string& text) {
  std::istringstream in(text);
  return read_group_file(in);
}

GroupPtr resolve_group(const std::string& ref) {
  if (ref.rfind("catalog:", 0) == 0) return catalog_group(ref.substr(8));
  std::ifstream in(ref);
  if (!in) fail("cannot open group file: " + ref);
  return read_group_file(in);
}

std::string write_cocycle_file(const std::string& group_ref, const Cocycle& c) {
  std::ostringstream out;
  out << "group " << group_ref << "\n";
  out << "modulus " << c.modulus << "\n";
  int n = c.group->order();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (b) out << ' ';
      out << c.at(a, b);
    }
    out << "\n";
  }
  return out.str();
}

Cocycle read_cocycle_file(std::istream& in) {
  std::string ref = expect_keyword_line(in, "group");
  GroupPtr g = resolve_group(ref);
  std::uint32_t m = 0;
  {
    std::istringstream head(expect_keyword_line(in, "modulus"));
    if (!(head >> m) || m == 0) fail("bad cocycle modulus");
  }
  int n = g->order();
  std::vector<std::uint32_t> table;
  table.reserve(std::size_t(n) * n);
  for (int row = 0; row < n; ++row) {
    std::string line;
    if (!std::getline(in, line)) fail("cocycle file truncated");
    std::istringstream is(line);
    for (int col = 0; col < n; ++col) {
      std::uint32_t v;
      if (!(is >> v)) fail("short cocycle row " + std::to_string(row));
      table.push_back(v);
    }
  }
  return Cocycle::from_table(std::move(g), m, std::move(table));
}

std::string write_action_file(const std::string& k_ref, const KAction& act) {
  std::ostringstream out;
  out << "group " << k_ref << "\n";
  out << "factors";
  for (int d : act.a.factors) out << ' ' << d;
  out << "\n";
  for (const auto& row : act.table) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ' ';
      out << row[i];
    }
    out << "\n";
  }
  return out.str();
}

KActionPtr read_action_file(std::istream& in) {
  std::string ref = expect_keyword_line(in, "group");
  GroupPtr k = resolve_group(ref);
  std::vector<int> factors;
  {
    std::istringstream head(expect_keyword_line(in, "factors"));
    int d;
    while (head >> d) factors.push_back(d);
  }
  AbelianGroup a = AbelianGroup::from_factors(std::move(factors));
  std::vector<std::vector<int>> table;
  for (int row = 0; row < k->order(); ++row) {
    std::string line;
    if (!std::getline(in, line)) fail("action file truncated");
    std::istringstream is(line);
    std::vector<int> perm;
    int v;
    while (is >> v) perm.push_back(v);
    if (int(perm.size()) != a.order()) fail("action row has wrong length");
    table.push_back(std::move(perm));
  }
  return KAction::make(std::move(k), std::move(a), std::move(table));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("cannot write file: " + path);
  out << text;
}

} // namespace cocycle::io
