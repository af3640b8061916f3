#ifndef LATMORPH_ALPHABET_HPP
#define LATMORPH_ALPHABET_HPP

#include <compare>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "latmorph/errors.hpp"

namespace latmorph {

// Positional role of a phoneme inside a syllable.
enum class Role { Vowel, Initial, Final };

const char* role_name(Role r);

// One Yale-romanization phoneme with its syllable role. The same Yale
// symbol may exist in more than one role (e.g. "k" as onset and coda);
// equality includes the role.
struct Phoneme {
  std::string symbol;
  Role role = Role::Vowel;

  auto operator<=>(const Phoneme&) const = default;
};

std::string phonemes_to_string(const std::vector<Phoneme>& ps);

enum class DiphoneType { V, C1V, VC2, C2C1 };

const char* diphone_type_name(DiphoneType t);
DiphoneType diphone_type_from_name(const std::string& name);

// A recognition unit of one or two phonemes: V, C1V, VC2 or C2C1.
struct Diphone {
  DiphoneType type = DiphoneType::V;
  std::vector<Phoneme> phonemes;  // size 1 for V, 2 otherwise

  const Phoneme& first() const { return phonemes.front(); }
  const Phoneme& last() const { return phonemes.back(); }
  std::string label() const;

  auto operator<=>(const Diphone&) const = default;
};

// Phoneme alphabet: vowel/initial/final symbol lists plus the vowel-group
// partition used by the recognizer front end. Immutable after load.
class AlphabetConfig {
 public:
  AlphabetConfig(std::vector<std::string> vowels,
                 std::vector<std::string> initials,
                 std::vector<std::string> finals,
                 std::vector<std::vector<std::string>> merged_groups = {});

  // File format: `V|C1|C2 <TAB> symbol` per line, `#` comments. Optional
  // `G <TAB> v1 v2 ...` lines merge the listed vowels into one group;
  // unmentioned vowels form singleton groups.
  static AlphabetConfig load(std::istream& in);
  static AlphabetConfig load_file(const std::string& path);

  const std::vector<std::string>& vowels() const { return vowels_; }
  const std::vector<std::string>& initials() const { return initials_; }
  const std::vector<std::string>& finals() const { return finals_; }

  bool has(const std::string& symbol, Role role) const;

  // Vowel groups are numbered 0..group_count()-1; the consonant-cluster
  // (CC) group for C2C1 diphones is cc_group_id() == group_count().
  int group_count() const { return group_count_; }
  int cc_group_id() const { return group_count_; }
  int group_of_vowel(const std::string& vowel) const;
  std::vector<std::string> group_members(int group_id) const;

  // Longest prefix of text[pos..] that is a symbol of the given role;
  // empty when none matches.
  std::string longest_match(const std::string& text, std::size_t pos, Role role) const;

 private:
  std::vector<std::string> vowels_, initials_, finals_;
  std::map<std::string, int> role_sets_[3];  // symbol -> index per role
  std::map<std::string, int> vowel_group_;
  int group_count_ = 0;
  std::size_t max_symbol_len_ = 0;
};

// Tokenizes one Eojeol of Yale text ("-" separates syllables) into
// phonemes with positional roles. Each syllable must be (C1) V (C2).
std::vector<Phoneme> parse_eojeol(const std::string& text, const AlphabetConfig& alphabet);

// Splits on spaces and parses each Eojeol.
std::vector<std::vector<Phoneme>> parse_yale(const std::string& text,
                                             const AlphabetConfig& alphabet);

// Inverse of parse_eojeol: joins phonemes into Yale text with "-" at
// syllable boundaries derived from the roles.
std::string render_yale(const std::vector<Phoneme>& phonemes);

// Assigns roles to a flat Yale symbol sequence (no syllable marks), as
// used by dictionary headers: a consonant is an onset when a vowel
// follows, otherwise a coda, falling back to whichever role list has it.
std::vector<Phoneme> infer_roles(const std::vector<std::string>& symbols,
                                 const AlphabetConfig& alphabet);

// Builds the typed diphone from 1 or 2 phonemes; throws IllegalPattern
// for anything outside V, C1V, VC2, C2C1.
Diphone classify_diphone(const std::vector<Phoneme>& phonemes);

// Full diphone inventory: every V, C1 x V, V x C2 and C2 x C1
// combination, in deterministic order.
std::vector<Diphone> generate_inventory(const AlphabetConfig& alphabet);

struct InventoryCounts {
  std::size_t v = 0, c1v = 0, vc2 = 0, c2c1 = 0;
};
InventoryCounts inventory_counts(const AlphabetConfig& alphabet);

// Group of the diphone's vowel; C2C1 diphones map to the CC group.
int vowel_group_of(const Diphone& d, const AlphabetConfig& alphabet);

}  // namespace latmorph

#endif
