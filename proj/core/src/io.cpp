#include "sr/io.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace sr {

namespace {

std::string strip_comment(const std::string& line) {
  const auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw std::invalid_argument("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Profile parse_instance(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;

  std::vector<std::string> names;
  std::map<std::string, AgentId> ids;
  std::vector<std::vector<std::vector<AgentId>>> groups;
  std::vector<char> seen;
  std::vector<int> prefs_line;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip_comment(raw);
    auto toks = tokens_of(line);
    if (toks.empty()) continue;

    if (toks[0] == "agents") {
      for (std::size_t i = 1; i < toks.size(); ++i) {
        if (ids.count(toks[i])) fail(line_no, "duplicate agent '" + toks[i] + "'");
        ids[toks[i]] = static_cast<AgentId>(names.size());
        names.push_back(toks[i]);
      }
      groups.resize(names.size());
      seen.resize(names.size(), 0);
      prefs_line.resize(names.size(), 0);
      continue;
    }

    if (toks[0] == "prefs") {
      const auto colon = line.find(':');
      if (colon == std::string::npos) fail(line_no, "prefs line needs a ':'");
      auto head = tokens_of(line.substr(0, colon));
      if (head.size() != 2) fail(line_no, "expected 'prefs <name>:'");
      auto owner_it = ids.find(head[1]);
      if (owner_it == ids.end()) fail(line_no, "unknown agent '" + head[1] + "'");
      const AgentId owner = owner_it->second;
      if (seen[static_cast<std::size_t>(owner)])
        fail(line_no, "second prefs line for '" + head[1] + "'");
      seen[static_cast<std::size_t>(owner)] = 1;
      prefs_line[static_cast<std::size_t>(owner)] = line_no;

      std::string rest = line.substr(colon + 1);
      std::string spaced;
      for (char ch : rest) {
        if (ch == '(' || ch == ')') {
          spaced += ' ';
          spaced += ch;
          spaced += ' ';
        } else {
          spaced += ch;
        }
      }
      std::vector<std::vector<AgentId>> own;
      std::vector<AgentId> tie;
      bool in_tie = false;
      for (const auto& tok : tokens_of(spaced)) {
        if (tok == "(") {
          if (in_tie) fail(line_no, "nested '('");
          in_tie = true;
          tie.clear();
          continue;
        }
        if (tok == ")") {
          if (!in_tie) fail(line_no, "')' without '('");
          if (tie.empty()) fail(line_no, "empty tie group");
          own.push_back(tie);
          in_tie = false;
          continue;
        }
        auto it = ids.find(tok);
        if (it == ids.end()) fail(line_no, "unknown agent '" + tok + "'");
        if (in_tie)
          tie.push_back(it->second);
        else
          own.push_back({it->second});
      }
      if (in_tie) fail(line_no, "unclosed '('");
      groups[static_cast<std::size_t>(owner)] = std::move(own);
      continue;
    }

    fail(line_no, "unrecognized directive '" + toks[0] + "'");
  }

  if (names.empty()) throw std::invalid_argument("no agents line found");
  for (std::size_t a = 0; a < names.size(); ++a)
    if (!seen[a]) throw std::invalid_argument("no prefs line for agent '" + names[a] + "'");

  return make_profile(std::move(groups), std::move(names));
}

std::string serialize_instance(const Profile& profile) {
  std::ostringstream out;
  out << "agents";
  for (const auto& n : profile.names) out << ' ' << n;
  out << '\n';
  for (AgentId a = 0; a < profile.agent_count(); ++a) {
    out << "prefs " << profile.name(a) << ":";
    for (const auto& g : profile.lists[static_cast<std::size_t>(a)].groups) {
      if (g.size() == 1) {
        out << ' ' << profile.name(g[0]);
        continue;
      }
      out << " (";
      for (std::size_t i = 0; i < g.size(); ++i) out << (i ? " " : "") << profile.name(g[i]);
      out << ')';
    }
    out << '\n';
  }
  return out.str();
}

ColoredGraph parse_colored_graph(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  ColoredGraph g;
  int declared = -1;

  while (std::getline(in, raw)) {
    ++line_no;
    auto toks = tokens_of(strip_comment(raw));
    if (toks.empty()) continue;
    if (toks[0] == "classes") {
      if (toks.size() != 2) fail(line_no, "expected 'classes <k>'");
      declared = std::stoi(toks[1]);
      if (declared < 1) fail(line_no, "need at least one class");
      g.classes.assign(static_cast<std::size_t>(declared), {});
      continue;
    }
    if (toks[0] == "class") {
      if (declared < 0) fail(line_no, "'classes' must come first");
      if (toks.size() < 2) fail(line_no, "expected 'class <j> <names>...'");
      const int j = std::stoi(toks[1]);
      if (j < 1 || j > declared) fail(line_no, "class index out of range");
      for (std::size_t i = 2; i < toks.size(); ++i)
        g.classes[static_cast<std::size_t>(j - 1)].push_back(toks[i]);
      continue;
    }
    if (toks[0] == "edge") {
      if (toks.size() != 3) fail(line_no, "expected 'edge <u> <v>'");
      g.edges.emplace_back(toks[1], toks[2]);
      continue;
    }
    fail(line_no, "unrecognized directive '" + toks[0] + "'");
  }
  if (declared < 0) throw std::invalid_argument("no classes line found");
  return g;
}

CnfFormula parse_dimacs_cnf(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  CnfFormula f;
  bool header = false;
  std::vector<int> pending;

  while (std::getline(in, raw)) {
    ++line_no;
    auto toks = tokens_of(raw);
    if (toks.empty() || toks[0] == "c") continue;
    if (toks[0] == "p") {
      if (toks.size() != 4 || toks[1] != "cnf") fail(line_no, "expected 'p cnf <vars> <clauses>'");
      f.variables = std::stoi(toks[2]);
      header = true;
      continue;
    }
    if (!header) fail(line_no, "clause before 'p cnf' header");
    for (const auto& tok : toks) {
      const int lit = std::stoi(tok);
      if (lit == 0) {
        if (pending.size() != 3) fail(line_no, "clauses must have exactly three literals");
        f.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
      } else {
        pending.push_back(lit);
      }
    }
  }
  if (!pending.empty()) throw std::invalid_argument("unterminated clause at end of file");
  return f;
}

}  // namespace sr
