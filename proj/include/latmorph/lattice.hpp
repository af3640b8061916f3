#ifndef LATMORPH_LATTICE_HPP
#define LATMORPH_LATTICE_HPP

#include <iosfwd>
#include <vector>

#include "latmorph/alphabet.hpp"

namespace latmorph {

struct LatticeEdge {
  int from = 0;
  int to = 0;
  Phoneme phoneme;

  auto operator<=>(const LatticeEdge&) const = default;
};

// DAG of phoneme-labelled edges over integer nodes 0..N. Node ids are a
// topological order by construction (every edge satisfies from < to);
// node 0 is the source, N the sink. Value-like and immutable once built.
class PhonemeLattice {
 public:
  PhonemeLattice() = default;
  explicit PhonemeLattice(int node_count) : node_count_(node_count) {}

  static PhonemeLattice from_string(const std::vector<Phoneme>& phonemes);

  int node_count() const { return node_count_; }
  int sink() const { return node_count_ - 1; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<LatticeEdge>& edges() const { return edges_; }

  // Edges leaving `node`, ordered by (to, symbol, role).
  std::vector<LatticeEdge> edges_from(int node) const;

  // Adds a parallel hypothesis edge. Existing paths are preserved;
  // re-adding an existing edge is a no-op.
  void add_alternative(int from, int to, const Phoneme& phoneme);

  // True when every node lies on some source->sink path.
  bool all_nodes_connected() const;

  bool operator==(const PhonemeLattice& other) const;

 private:
  int node_count_ = 0;
  std::vector<LatticeEdge> edges_;  // kept sorted by (from, to, phoneme)
};

struct LatticePath {
  std::vector<LatticeEdge> edges;
  std::vector<Phoneme> phonemes;
};

struct PathEnumeration {
  std::vector<LatticePath> paths;
  bool overflow = false;  // true when more than `limit` paths exist
};

// All source->sink paths in lexicographic edge order, truncated at limit.
PathEnumeration enumerate_paths(const PhonemeLattice& lattice, std::size_t limit);

// Text format: header `nodes <N+1>`, then `<from> <to> <symbol> [role]`
// per edge; `#` comments. The role column (V/C1/C2) is required only for
// symbols that exist in more than one role.
PhonemeLattice read_lattice(std::istream& in, const AlphabetConfig& alphabet);
PhonemeLattice read_lattice_file(const std::string& path, const AlphabetConfig& alphabet);
void write_lattice(const PhonemeLattice& lattice, std::ostream& out);

}  // namespace latmorph

#endif
