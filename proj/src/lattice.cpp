#include "latmorph/lattice.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

namespace latmorph {

PhonemeLattice PhonemeLattice::from_string(const std::vector<Phoneme>& phonemes) {
  if (phonemes.empty()) throw EmptyInput("cannot build a lattice from no phonemes");
  PhonemeLattice lat(static_cast<int>(phonemes.size()) + 1);
  for (std::size_t i = 0; i < phonemes.size(); ++i)
    lat.edges_.push_back({static_cast<int>(i), static_cast<int>(i) + 1, phonemes[i]});
  return lat;
}

std::vector<LatticeEdge> PhonemeLattice::edges_from(int node) const {
  std::vector<LatticeEdge> out;
  for (const auto& e : edges_)
    if (e.from == node) out.push_back(e);
  std::sort(out.begin(), out.end(), [](const LatticeEdge& a, const LatticeEdge& b) {
    return std::tie(a.to, a.phoneme.symbol, a.phoneme.role) <
           std::tie(b.to, b.phoneme.symbol, b.phoneme.role);
  });
  return out;
}

void PhonemeLattice::add_alternative(int from, int to, const Phoneme& phoneme) {
  if (from < 0 || to > sink() || from >= to)
    throw NodeOutOfRange("edge (" + std::to_string(from) + "," + std::to_string(to) +
                         ") out of range for " + std::to_string(node_count_) +
                         " nodes");
  LatticeEdge e{from, to, phoneme};
  auto pos = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (pos != edges_.end() && *pos == e) return;  // duplicate: no-op
  edges_.insert(pos, e);
}

bool PhonemeLattice::all_nodes_connected() const {
  if (node_count_ == 0) return false;
  std::vector<char> fwd(node_count_, 0), bwd(node_count_, 0);
  fwd[0] = 1;
  for (const auto& e : edges_)  // edges sorted by from: one forward sweep
    if (fwd[e.from]) fwd[e.to] = 1;
  bwd[sink()] = 1;
  for (auto it = edges_.rbegin(); it != edges_.rend(); ++it)
    if (bwd[it->to]) bwd[it->from] = 1;
  for (int n = 0; n < node_count_; ++n)
    if (!fwd[n] || !bwd[n]) return false;
  return true;
}

bool PhonemeLattice::operator==(const PhonemeLattice& other) const {
  return node_count_ == other.node_count_ && edges_ == other.edges_;
}

PathEnumeration enumerate_paths(const PhonemeLattice& lattice, std::size_t limit) {
  PathEnumeration result;
  if (lattice.node_count() == 0) return result;
  std::vector<LatticeEdge> stack;
  std::function<bool(int)> dfs = [&](int node) -> bool {
    if (node == lattice.sink()) {
      if (result.paths.size() == limit) {
        result.overflow = true;
        return false;
      }
      LatticePath p;
      p.edges = stack;
      for (const auto& e : stack) p.phonemes.push_back(e.phoneme);
      result.paths.push_back(std::move(p));
      return true;
    }
    for (const auto& e : lattice.edges_from(node)) {
      stack.push_back(e);
      bool keep_going = dfs(e.to);
      stack.pop_back();
      if (!keep_going) return false;
    }
    return true;
  };
  dfs(0);
  return result;
}

PhonemeLattice read_lattice(std::istream& in, const AlphabetConfig& alphabet) {
  std::string line;
  int line_no = 0;
  int node_count = -1;
  PhonemeLattice lat;
  bool any_edge = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ss(line);
    std::string first;
    if (!(ss >> first)) continue;
    if (node_count < 0) {
      int n;
      if (first != "nodes" || !(ss >> n) || n < 2)
        throw ParseError("expected header 'nodes <count>' with count >= 2", line_no);
      node_count = n;
      lat = PhonemeLattice(node_count);
      continue;
    }
    int from, to;
    std::string symbol, role_str;
    std::istringstream es(line);
    if (!(es >> from >> to >> symbol))
      throw ParseError("expected '<from> <to> <symbol> [role]'", line_no);
    if (from >= to)
      throw ParseError("edge must go forward (from < to)", line_no);
    if (from < 0 || to >= node_count)
      throw ParseError("edge node out of range", line_no);
    Role role;
    if (es >> role_str) {
      if (role_str == "V")
        role = Role::Vowel;
      else if (role_str == "C1")
        role = Role::Initial;
      else if (role_str == "C2")
        role = Role::Final;
      else
        throw ParseError("unknown role '" + role_str + "'", line_no);
      if (!alphabet.has(symbol, role))
        throw ParseError("'" + symbol + "' is not a " + role_str + " symbol", line_no);
    } else {
      int n_roles = 0;
      for (Role r : {Role::Vowel, Role::Initial, Role::Final})
        if (alphabet.has(symbol, r)) {
          role = r;
          ++n_roles;
        }
      if (n_roles == 0)
        throw ParseError("'" + symbol + "' is not an alphabet symbol", line_no);
      if (n_roles > 1)
        throw ParseError("'" + symbol + "' is role-ambiguous; add a role column",
                         line_no);
    }
    lat.add_alternative(from, to, {symbol, role});
    any_edge = true;
  }
  if (node_count < 0) throw ParseError("empty lattice file", line_no);
  if (!any_edge) throw ParseError("lattice file has no edges", line_no);
  if (!lat.all_nodes_connected())
    throw ParseError("lattice has nodes off every source->sink path", line_no);
  return lat;
}

PhonemeLattice read_lattice_file(const std::string& path, const AlphabetConfig& alphabet) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open lattice file '" + path + "'", 0);
  return read_lattice(in, alphabet);
}

void write_lattice(const PhonemeLattice& lattice, std::ostream& out) {
  out << "nodes " << lattice.node_count() << "\n";
  for (const auto& e : lattice.edges())
    out << e.from << ' ' << e.to << ' ' << e.phoneme.symbol << ' '
        << role_name(e.phoneme.role) << "\n";
}

}  // namespace latmorph
