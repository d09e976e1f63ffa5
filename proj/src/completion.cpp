#include "dehnkit/completion.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <sstream>

#include "dehnkit/homsym.hpp"

namespace dehnkit {

bool IntersectionGraph::adjacent(int i, int j) const {
  if (i > j) std::swap(i, j);
  return edges.count({i, j}) > 0;
}

IntersectionGraph humphries_graph(int g) {
  if (g < 1) throw Error(ErrorKind::bad_input, "genus must be >= 1");
  IntersectionGraph graph;
  if (g == 1) {
    graph.vertices = {"a0", "a1"};
    graph.edges.insert({0, 1});
    return graph;
  }
  if (g == 2) {
    for (int i = 0; i <= 4; ++i) graph.vertices.push_back("a" + std::to_string(i));
    for (int i = 0; i < 4; ++i) graph.edges.insert({i, i + 1});
    return graph;
  }
  for (int i = 0; i <= 2 * g; ++i) graph.vertices.push_back("a" + std::to_string(i));
  for (int i = 1; i < 2 * g; ++i) graph.edges.insert({i, i + 1});
  graph.edges.insert({0, 4});
  return graph;
}

int InvPresentation::generator_index(const std::string& name) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i] == name) return static_cast<int>(i);
  throw Error(ErrorKind::unknown_generator, "unknown generator: " + name);
}

InvPresentation relations_from_graph(const IntersectionGraph& graph) {
  InvPresentation pres;
  pres.generators = graph.vertices;
  const int n = static_cast<int>(graph.vertices.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (graph.adjacent(i, j)) {
        pres.point_relations.push_back({GenWord{{i, j, i}}, GenWord{{j}}});
        pres.point_relations.push_back({GenWord{{j, i, j}}, GenWord{{i}}});
        pres.universal_rules.push_back({{i, j, i}, {j, i, j}});
      } else {
        pres.point_relations.push_back({GenWord{{i, j}}, GenWord{{i}}});
        pres.point_relations.push_back({GenWord{{j, i}}, GenWord{{j}}});
        pres.universal_rules.push_back({{i, j}, {j, i}});
      }
    }
  return pres;
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// Letters of a word like "a0*a1*-a2"; signs are accepted and ignored since
// x *^{-1} y = x*y in the involutory setting.
std::vector<int> word_letters(const std::string& text, const InvPresentation& pres) {
  std::vector<int> letters;
  std::string token;
  auto flush = [&]() {
    if (token.empty())
      throw Error(ErrorKind::parse_error, "empty letter in word: " + text);
    if (token[0] == '-') token.erase(0, 1);
    letters.push_back(pres.generator_index(token));
    token.clear();
  };
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '*') flush();
    else token += c;
  }
  flush();
  return letters;
}

}  // namespace

GenWord parse_gen_word(const std::string& text, const InvPresentation& pres) {
  return GenWord{word_letters(text, pres)};
}

InvPresentation parse_presentation(const std::string& text) {
  InvPresentation pres;
  std::vector<std::pair<std::string, std::string>> edge_lines, rel_lines, rule_lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto colon = line.find(':');
    if (colon == std::string::npos) continue;
    std::string head = line.substr(0, colon);
    std::string body = line.substr(colon + 1);
    head.erase(std::remove_if(head.begin(), head.end(), ::isspace), head.end());
    if (head == "gens") {
      for (const auto& g : split_ws(body)) pres.generators.push_back(g);
    } else if (head == "edge" || head == "rel" || head == "rule") {
      auto eq = body.find('=');
      if (head == "edge") {
        edge_lines.push_back({body, ""});
      } else if (eq == std::string::npos) {
        throw Error(ErrorKind::parse_error, "expected '=' in: " + line);
      } else {
        auto& dst = head == "rel" ? rel_lines : rule_lines;
        dst.push_back({body.substr(0, eq), body.substr(eq + 1)});
      }
    } else {
      throw Error(ErrorKind::parse_error, "unknown directive: " + head);
    }
  }
  if (pres.generators.empty())
    throw Error(ErrorKind::parse_error, "presentation needs a gens: line");

  bool graph_mode = !edge_lines.empty() || (rel_lines.empty() && rule_lines.empty());
  if (graph_mode) {
    IntersectionGraph graph;
    graph.vertices = pres.generators;
    for (const auto& [body, unused] : edge_lines) {
      auto toks = split_ws(body);
      if (toks.size() != 2)
        throw Error(ErrorKind::parse_error, "edge needs two generators: " + body);
      int i = pres.generator_index(toks[0]);
      int j = pres.generator_index(toks[1]);
      if (i == j) throw Error(ErrorKind::parse_error, "edge endpoints coincide");
      graph.edges.insert({std::min(i, j), std::max(i, j)});
    }
    InvPresentation from_graph = relations_from_graph(graph);
    pres.point_relations = std::move(from_graph.point_relations);
    pres.universal_rules = std::move(from_graph.universal_rules);
  }
  for (const auto& [lhs, rhs] : rel_lines)
    pres.point_relations.push_back(
        {parse_gen_word(lhs, pres), parse_gen_word(rhs, pres)});
  for (const auto& [lhs, rhs] : rule_lines) {
    auto strip = [&](std::string s) {
      s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
      if (s.empty() || s[0] != '*')
        throw Error(ErrorKind::parse_error, "rule sides start with '*': " + s);
      return s.substr(1);
    };
    pres.universal_rules.push_back(
        {word_letters(strip(lhs), pres), word_letters(strip(rhs), pres)});
  }
  return pres;
}

// ---------------------------------------------------------------------------
// Completion

namespace {

// Action word of a left-associated element word [b, s1, ..., sk]: acting by
// it is x -> x.sk...s1.b.s1...sk, by S_{w*s} = S_s S_w S_s.
std::vector<int> action_word(const std::vector<int>& letters) {
  std::vector<int> out(letters.rbegin(), letters.rend());
  out.insert(out.end(), letters.begin() + 1, letters.end());
  return out;
}

struct Enumerator {
  const InvPresentation& pres;
  std::size_t cap;
  int ngens;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> rules;
  std::vector<int> parent;
  std::vector<int> class_size;
  std::vector<std::vector<int>> table;     // [element][generator]
  std::vector<std::vector<int>> witness;   // minimal word per class root
  std::deque<std::pair<int, int>> obligations;  // (element, rule index)
  std::deque<std::pair<int, int>> pending_merges;
  CompletionStats stats;

  explicit Enumerator(const InvPresentation& p, std::size_t cap_)
      : pres(p), cap(cap_), ngens(static_cast<int>(p.generators.size())) {
    rules = p.universal_rules;
    // Identified elements must also act identically on everything; these
    // induced operator rules are what make generator-column tracing complete.
    for (const auto& [lhs, rhs] : p.point_relations)
      rules.push_back({action_word(lhs.letters), action_word(rhs.letters)});
  }

  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  int fresh(std::vector<int> word) {
    if (table.size() >= cap)
      throw Error(ErrorKind::cap_exceeded,
                  "completion exceeded cap " + std::to_string(cap) +
                      " (presentation may be infinite)");
    int id = static_cast<int>(table.size());
    parent.push_back(id);
    class_size.push_back(1);
    table.emplace_back(ngens, -1);
    witness.push_back(std::move(word));
    for (std::size_t r = 0; r < rules.size(); ++r)
      obligations.push_back({id, static_cast<int>(r)});
    ++stats.elements_created;
    return id;
  }

  static bool word_less(const std::vector<int>& a, const std::vector<int>& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  }

  // x.s with on-demand definition; x must be a root.
  int step(int x, int s) {
    x = find(x);
    int t = table[x][s];
    if (t >= 0) return find(t);
    int n = fresh([&] {
      std::vector<int> w = witness[x];
      w.push_back(s);
      return w;
    }());
    table[x][s] = n;
    table[n][s] = x;  // involution
    return n;
  }

  int walk(int x, const std::vector<int>& letters, std::size_t from = 0) {
    for (std::size_t i = from; i < letters.size(); ++i) x = step(x, letters[i]);
    return x;
  }

  void merge(int a, int b) {
    pending_merges.push_back({a, b});
    drain_merges();
  }

  void drain_merges() {
    while (!pending_merges.empty()) {
      auto [a, b] = pending_merges.front();
      pending_merges.pop_front();
      a = find(a);
      b = find(b);
      if (a == b) continue;
      if (class_size[a] < class_size[b]) std::swap(a, b);
      // b joins a; keep the smaller witness on the surviving root.
      parent[b] = a;
      class_size[a] += class_size[b];
      if (word_less(witness[b], witness[a])) witness[a] = witness[b];
      ++stats.merges;
      for (int s = 0; s < ngens; ++s) {
        int ta = table[a][s], tb = table[b][s];
        if (tb < 0) continue;
        if (ta < 0) table[a][s] = tb;
        else pending_merges.push_back({ta, tb});
      }
    }
  }

  int generator_element(int g) { return find(g); }

  void trace_point_relations() {
    for (const auto& [lhs, rhs] : pres.point_relations) {
      int l = walk(generator_element(lhs.letters[0]), lhs.letters, 1);
      int r = walk(generator_element(rhs.letters[0]), rhs.letters, 1);
      merge(l, r);
    }
  }

  bool is_live(int x) { return find(x) == x; }

  void run() {
    // One element per generator; idempotence at the generator elements.
    for (int g = 0; g < ngens; ++g) fresh({g});
    for (int g = 0; g < ngens; ++g) table[g][g] = g;
    trace_point_relations();
    for (;;) {
      while (!obligations.empty()) {
        auto [e, r] = obligations.front();
        obligations.pop_front();
        int x = find(e);
        const auto& [u, w] = rules[r];
        merge(walk(x, u), walk(x, w));
      }
      // Totality: every live element needs every generator column.
      bool defined_any = false;
      for (int e = 0; e < static_cast<int>(table.size()); ++e) {
        if (!is_live(e)) continue;
        for (int s = 0; s < ngens; ++s)
          if (table[e][s] < 0) {
            step(e, s);
            defined_any = true;
          }
      }
      if (defined_any) continue;
      // Verification sweep: re-trace everything; idempotent when converged.
      std::size_t merges_before = stats.merges;
      trace_point_relations();
      for (int e = 0; e < static_cast<int>(table.size()); ++e) {
        if (!is_live(e)) continue;
        for (const auto& [u, w] : rules) merge(walk(e, u), walk(e, w));
      }
      ++stats.passes;
      if (stats.merges == merges_before && obligations.empty()) break;
    }
  }
};

std::string word_to_string(const std::vector<int>& letters,
                           const std::vector<std::string>& gens) {
  std::string out;
  for (int l : letters) {
    if (!out.empty()) out += '*';
    out += gens[l];
  }
  return out;
}

}  // namespace

CompletionResult complete(const InvPresentation& pres, std::size_t cap) {
  if (pres.generators.empty())
    throw Error(ErrorKind::bad_input, "presentation has no generators");
  if (cap < pres.generators.size())
    throw Error(ErrorKind::bad_input, "cap smaller than the generator count");
  for (const auto& [lhs, rhs] : pres.point_relations)
    if (lhs.letters.empty() || rhs.letters.empty())
      throw Error(ErrorKind::bad_input, "empty word in a point relation");

  Enumerator en(pres, group_cap_from_env(cap));
  en.run();

  // Compact live classes in witness order: generators come first.
  std::vector<int> live;
  for (int e = 0; e < static_cast<int>(en.table.size()); ++e)
    if (en.find(e) == e) live.push_back(e);
  std::sort(live.begin(), live.end(), [&](int a, int b) {
    return Enumerator::word_less(en.witness[a], en.witness[b]);
  });
  std::vector<int> compact(en.table.size(), -1);
  for (std::size_t i = 0; i < live.size(); ++i) compact[live[i]] = static_cast<int>(i);

  const int n = static_cast<int>(live.size());
  const int ngens = static_cast<int>(pres.generators.size());

  // Generator columns as permutations of the live classes.
  std::vector<std::vector<int>> gen_col(ngens, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int s = 0; s < ngens; ++s)
      gen_col[s][i] = compact[en.find(en.table[live[i]][s])];

  // S_{w.s} = S_s S_w S_s extends the operation to every column.
  std::vector<std::vector<int>> columns(n);
  for (int e = 0; e < n; ++e) {
    const auto& w = en.witness[live[e]];
    std::vector<int> p = gen_col[w[0]];
    for (std::size_t k = 1; k < w.size(); ++k) {
      const auto& s = gen_col[w[k]];
      std::vector<int> q(n);
      for (int x = 0; x < n; ++x) q[x] = s[p[s[x]]];
      p = std::move(q);
    }
    columns[e] = std::move(p);
  }

  std::vector<std::vector<int>> full(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) full[x][y] = columns[y][x];

  CompletionResult out;
  out.presentation = pres;
  out.stats = en.stats;
  out.witnesses.resize(n);
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) {
    out.witnesses[i] = word_to_string(en.witness[live[i]], pres.generators);
    labels[i] = out.witnesses[i];
  }
  out.quandle = make_quandle(std::move(full), std::move(labels));
  out.generator_elements.resize(ngens);
  for (int g = 0; g < ngens; ++g)
    out.generator_elements[g] = compact[en.find(g)];
  return out;
}

int evaluate_word(const CompletionResult& result, const GenWord& word) {
  if (word.letters.empty())
    throw Error(ErrorKind::bad_input, "cannot evaluate the empty word");
  int e = result.generator_elements[word.letters[0]];
  for (std::size_t i = 1; i < word.letters.size(); ++i) {
    int s = result.generator_elements[word.letters[i]];
    e = result.quandle.table[e][s];
  }
  return e;
}

int evaluate_word(const CompletionResult& result, const std::string& text) {
  return evaluate_word(result, parse_gen_word(text, result.presentation));
}

// ---------------------------------------------------------------------------
// Genus-3 closure-set bookkeeping

GenWord chain_word(int m, int n) {
  GenWord w;
  for (int i = m; i <= n; ++i) w.letters.push_back(i);
  return w;
}

namespace {

struct GammaVertex {
  const char* name;
  int label;        // generator a_{label}
  const char* parent;  // "" for the root child
};

// The genus-3 tree: main path plus three side branches.
constexpr std::array<GammaVertex, 16> kGamma16 = {{
    {"x01", 0, ""},
    {"x41", 4, "x01"},
    {"y31", 3, "x41"},
    {"y21", 2, "y31"},
    {"y51", 5, "y21"},
    {"x42", 4, "y51"},
    {"x31", 3, "x42"},
    {"x02", 0, "x31"},
    {"x43", 4, "x02"},
    {"x51", 5, "x43"},
    {"x61", 6, "x51"},
    {"x03", 0, "x42"},
    {"y52", 5, "y31"},
    {"x44", 4, "y52"},
    {"x04", 0, "x44"},
    {"y53", 5, "x41"},
}};

int gamma_index(const std::string& name) {
  for (std::size_t i = 0; i < kGamma16.size(); ++i)
    if (name == kGamma16[i].name) return static_cast<int>(i);
  throw Error(ErrorKind::bad_input, "unknown gamma vertex: " + name);
}

// Vertex survives in Gamma_{m,n} iff no y_{i,*} with i in {m,n} lies on its
// root path (eliminating those vertices removes their whole branch).
bool in_gamma(int vertex, int m, int n) {
  std::string cur = kGamma16[vertex].name;
  while (!cur.empty()) {
    int idx = gamma_index(cur);
    if (kGamma16[idx].name[0] == 'y' &&
        (kGamma16[idx].label == m || kGamma16[idx].label == n))
      return false;
    cur = kGamma16[idx].parent;
  }
  return true;
}

GenWord f_word(int m, int n, const std::string& vertex) {
  int idx = gamma_index(vertex);
  if (!in_gamma(idx, m, n))
    throw Error(ErrorKind::bad_input,
                vertex + " is not a vertex of Gamma_{" + std::to_string(m) + "," +
                    std::to_string(n) + "}");
  std::vector<int> path;
  std::string cur = vertex;
  while (!cur.empty()) {
    int i = gamma_index(cur);
    path.push_back(kGamma16[i].label);
    cur = kGamma16[i].parent;
  }
  std::reverse(path.begin(), path.end());
  GenWord w = chain_word(m, n);
  w.letters.insert(w.letters.end(), path.begin(), path.end());
  return w;
}

// Cell grammar: "cMN", "cMN*a0", or "fMN(vertex)".
GenWord parse_cell(const std::string& cell) {
  if (cell[0] == 'c') {
    int m = cell[1] - '0', n = cell[2] - '0';
    GenWord w = chain_word(m, n);
    if (cell.size() > 3) {
      if (cell.substr(3) != "*a0")
        throw Error(ErrorKind::bad_input, "bad cell: " + cell);
      w.letters.push_back(0);
    }
    return w;
  }
  if (cell[0] == 'f') {
    int m = cell[1] - '0', n = cell[2] - '0';
    auto open = cell.find('(');
    auto close = cell.find(')');
    return f_word(m, n, cell.substr(open + 1, close - open - 1));
  }
  throw Error(ErrorKind::bad_input, "bad cell: " + cell);
}

struct Table1Row {
  const char* row;
  std::array<const char*, 7> cells;  // products with a0..a6
};

// Products x*a_i for the 35 closure-set elements, transcribed from the
// genus-3 table.
constexpr std::array<Table1Row, 35> kTable1 = {{
    {"f15(x01)", {"c15", "f25(x01)", "f15(x01)", "f15(x01)", "f15(x41)", "c14*a0", "f16(x01)"}},
    {"f15(x41)", {"f15(x41)", "f25(x41)", "f15(x41)", "f15(y31)", "f15(x01)", "f15(x41)", "f16(x41)"}},
    {"f15(y31)", {"f15(y31)", "f25(y31)", "f15(y21)", "f15(x41)", "f15(y31)", "f15(y31)", "f16(y31)"}},
    {"f15(y21)", {"f15(y21)", "f15(y21)", "f15(y31)", "f15(y21)", "f15(y21)", "f15(y21)", "f16(y21)"}},
    {"f16(x01)", {"c16", "f26(x01)", "f16(x01)", "f16(x01)", "f16(x41)", "f16(x01)", "f15(x01)"}},
    {"f16(x41)", {"f16(x41)", "f26(x41)", "f16(x41)", "f16(y31)", "f16(x01)", "f16(y53)", "f15(x41)"}},
    {"f16(y31)", {"f16(y31)", "f26(y31)", "f16(y21)", "f16(x41)", "f16(y31)", "f16(y52)", "f15(y31)"}},
    {"f16(y21)", {"f16(y21)", "f16(y21)", "f16(y31)", "f16(y21)", "f16(y21)", "f16(y51)", "f15(y21)"}},
    {"f16(y51)", {"f16(y51)", "f16(y51)", "f16(y52)", "f16(y51)", "f16(x42)", "f16(y21)", "f16(y51)"}},
    {"f16(x42)", {"f16(x03)", "f16(x42)", "f16(x44)", "f16(x31)", "f16(y51)", "f16(x42)", "f16(x42)"}},
    {"f16(x31)", {"f16(x02)", "f16(x31)", "f16(x31)", "f16(x42)", "f16(x31)", "f16(x31)", "f16(x31)"}},
    {"f16(x02)", {"f16(x31)", "f16(x02)", "f16(x02)", "f16(x03)", "f16(x43)", "f16(x02)", "f16(x02)"}},
    {"f16(x43)", {"f16(x43)", "f16(x43)", "f16(x43)", "f16(x43)", "f16(x02)", "f16(x51)", "f16(x43)"}},
    {"f16(x51)", {"f16(x51)", "f16(x51)", "f16(x51)", "f16(x51)", "f16(x51)", "f16(x43)", "f16(x61)"}},
    {"f16(x61)", {"f16(x61)", "f16(x61)", "f16(x61)", "f16(x61)", "f16(x61)", "f16(x61)", "f16(x51)"}},
    {"f16(x03)", {"f16(x42)", "f16(x03)", "f16(x04)", "f16(x02)", "f16(x03)", "f16(x03)", "f16(x03)"}},
    {"f16(y52)", {"f16(y52)", "f26(y52)", "f16(y51)", "f16(y53)", "f16(x44)", "f16(y31)", "f16(y52)"}},
    {"f16(x44)", {"f16(x04)", "f26(x44)", "f16(x42)", "f16(x44)", "f16(y52)", "f16(x44)", "f16(x44)"}},
    {"f16(x04)", {"f16(x44)", "f26(x04)", "f16(x03)", "f16(x04)", "f16(x04)", "f16(x04)", "f16(x04)"}},
    {"f16(y53)", {"f16(y53)", "f26(y53)", "f16(y53)", "f16(y52)", "f16(y53)", "f16(x41)", "f16(y53)"}},
    {"f25(x01)", {"c25", "f15(x01)", "f35(x01)", "f25(x01)", "f25(x41)", "c24*a0", "f26(x01)"}},
    {"f25(x41)", {"f25(x41)", "f15(x41)", "f35(x41)", "f25(y31)", "f25(x01)", "f25(x41)", "f26(x41)"}},
    {"f25(y31)", {"f25(y31)", "f15(y31)", "f25(y31)", "f25(x41)", "f25(y31)", "f25(y31)", "f26(y31)"}},
    {"f26(x01)", {"c26", "f16(x01)", "f36(x01)", "f26(x01)", "f26(x41)", "f26(x01)", "f25(x01)"}},
    {"f26(x41)", {"f26(x41)", "f16(x41)", "f36(x41)", "f26(y31)", "f26(x01)", "f26(y53)", "f25(x41)"}},
    {"f26(y31)", {"f26(y31)", "f16(y31)", "f26(y31)", "f26(x41)", "f26(y31)", "f26(y52)", "f25(y31)"}},
    {"f26(y52)", {"f26(y52)", "f16(y52)", "f26(y52)", "f26(y53)", "f26(x44)", "f26(y31)", "f26(y52)"}},
    {"f26(x44)", {"f26(x04)", "f16(x44)", "f26(x44)", "f26(x44)", "f26(y52)", "f26(x44)", "f26(x44)"}},
    {"f26(x04)", {"f26(x44)", "f16(x04)", "f26(x04)", "f26(x04)", "f26(x04)", "f26(x04)", "f26(x04)"}},
    {"f26(y53)", {"f26(y53)", "f16(y53)", "f36(y53)", "f26(y52)", "f26(y53)", "f26(x41)", "f26(y53)"}},
    {"f35(x01)", {"c35", "f35(x01)", "f25(x01)", "c45*a0", "f35(x41)", "c34*a0", "f36(x01)"}},
    {"f35(x41)", {"f35(x41)", "f35(x41)", "f25(x41)", "f35(x41)", "f35(x01)", "f35(x41)", "f36(x41)"}},
    {"f36(x01)", {"c36", "f36(x01)", "f26(x01)", "c46*a0", "f36(x41)", "f36(x01)", "f35(x01)"}},
    {"f36(x41)", {"f36(x41)", "f36(x41)", "f26(x41)", "f36(x41)", "f36(x01)", "f36(y53)", "f35(x41)"}},
    {"f36(y53)", {"f36(y53)", "f36(y53)", "f26(y53)", "f36(y53)", "f36(y53)", "f36(x41)", "f36(y53)"}},
}};

}  // namespace

std::vector<std::pair<std::string, GenWord>> table1_rows() {
  std::vector<std::pair<std::string, GenWord>> out;
  for (const auto& row : kTable1) out.push_back({row.row, parse_cell(row.row)});
  return out;
}

Table1Report verify_table1(const CompletionResult& result) {
  if (result.presentation.generators.size() != 7)
    throw Error(ErrorKind::bad_input, "table verification needs humphries(3)");
  Table1Report report;
  for (const auto& row : kTable1) {
    int x = evaluate_word(result, parse_cell(row.row));
    for (int i = 0; i < 7; ++i) {
      int got = result.quandle.table[x][result.generator_elements[i]];
      int expected = evaluate_word(result, parse_cell(row.cells[i]));
      ++report.checked;
      if (got != expected)
        report.mismatches.push_back({row.row, "a" + std::to_string(i),
                                     row.cells[i],
                                     result.witnesses[got]});
    }
  }
  return report;
}

namespace {

std::vector<int> desc_word(int from, int to) {  // [a_from, a_from-1, ..., a_to]
  std::vector<int> w;
  for (int i = from; i >= to; --i) w.push_back(i);
  return w;
}

std::vector<int> asc_word(int from, int to) {
  std::vector<int> w;
  for (int i = from; i <= to; ++i) w.push_back(i);
  return w;
}

std::vector<int> cat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

LemmaReport verify_lemma_identities(const CompletionResult& result, int g) {
  if (g < 3) throw Error(ErrorKind::bad_input, "the lemma identities need g >= 3");
  if (static_cast<int>(result.presentation.generators.size()) != 2 * g + 1)
    throw Error(ErrorKind::bad_input, "completion does not match humphries(g)");
  LemmaReport report;
  const int n = result.quandle.n;
  auto apply = [&](int x, const std::vector<int>& letters) {
    for (int s : letters) x = result.quandle.table[x][result.generator_elements[s]];
    return x;
  };
  auto check = [&](const std::string& name, int lx, int rx,
                   const std::vector<int>& lw, const std::vector<int>& rw) {
    int l = apply(lx, lw);
    int r = apply(rx, rw);
    ++report.checked;
    if (l != r) {
      ++report.failed;
      report.failures.push_back({name, result.witnesses[l], result.witnesses[r], false});
    }
  };

  // Family (i): x*a3*a2*...*a_m*a4*a3*...*a_m = x*a4*...*a_m*a4*...*a_{m+1}.
  for (int m = 1; m <= 3; ++m) {
    auto lhs = cat(desc_word(3, m), desc_word(4, m));
    auto rhs = cat(desc_word(4, m), desc_word(4, m + 1));
    for (int x = 0; x < n; ++x)
      check("lemma1(i) m=" + std::to_string(m) + " x=" + result.witnesses[x],
            x, x, lhs, rhs);
  }
  // Family (ii): x*a5*...*a_n*a4*...*a_n = x*a4*...*a_n*a4*...*a_{n-1}.
  for (int nn = 5; nn <= 2 * g; ++nn) {
    auto lhs = cat(asc_word(5, nn), asc_word(4, nn));
    auto rhs = cat(asc_word(4, nn), asc_word(4, nn - 1));
    for (int x = 0; x < n; ++x)
      check("lemma1(ii) n=" + std::to_string(nn) + " x=" + result.witnesses[x],
            x, x, lhs, rhs);
  }
  // The c_{m,n}*a0*a4 identities.
  for (int m = 1; m <= 3; ++m)
    for (int nn = 5; nn <= 2 * g; ++nn) {
      int c = evaluate_word(result, chain_word(m, nn));
      std::string tag = " (m,n)=(" + std::to_string(m) + "," + std::to_string(nn) + ")";
      check("lemma2(i)" + tag, c, c, {0, 4, 0}, {0, 4});
      check("lemma2(ii)" + tag, c, c, cat({0, 4}, desc_word(3, m)),
            cat({0, 4}, desc_word(3, m + 1)));
      check("lemma2(iii)" + tag, c, c, cat({0, 4}, asc_word(5, nn)),
            cat({0, 4}, asc_word(5, nn - 1)));
    }
  return report;
}

std::optional<std::vector<int>> quotient_iso_to_homological(const CompletionResult& result,
                                                            int g) {
  HQuandle h = hquandle(g, 2);
  return find_isomorphism(result.quandle, h.quandle,
                          std::max(result.quandle.n, h.quandle.n));
}

}  // namespace dehnkit
