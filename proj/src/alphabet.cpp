#include "latmorph/alphabet.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace latmorph {

const char* role_name(Role r) {
  switch (r) {
    case Role::Vowel: return "V";
    case Role::Initial: return "C1";
    case Role::Final: return "C2";
  }
  return "?";
}

std::string phonemes_to_string(const std::vector<Phoneme>& ps) {
  std::string out;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) out += ' ';
    out += ps[i].symbol;
  }
  return out;
}

const char* diphone_type_name(DiphoneType t) {
  switch (t) {
    case DiphoneType::V: return "V";
    case DiphoneType::C1V: return "C1V";
    case DiphoneType::VC2: return "VC2";
    case DiphoneType::C2C1: return "C2C1";
  }
  return "?";
}

DiphoneType diphone_type_from_name(const std::string& name) {
  if (name == "V") return DiphoneType::V;
  if (name == "C1V") return DiphoneType::C1V;
  if (name == "VC2") return DiphoneType::VC2;
  if (name == "C2C1") return DiphoneType::C2C1;
  throw ParseError("unknown diphone type '" + name + "'", 0);
}

std::string Diphone::label() const {
  std::string out = "/";
  for (const auto& p : phonemes) out += p.symbol;
  out += "/";
  return out;
}

namespace {

int role_index(Role r) { return static_cast<int>(r); }

}  // namespace

AlphabetConfig::AlphabetConfig(std::vector<std::string> vowels,
                               std::vector<std::string> initials,
                               std::vector<std::string> finals,
                               std::vector<std::vector<std::string>> merged_groups)
    : vowels_(std::move(vowels)),
      initials_(std::move(initials)),
      finals_(std::move(finals)) {
  auto index_role = [&](const std::vector<std::string>& syms, Role role) {
    auto& set = role_sets_[role_index(role)];
    for (std::size_t i = 0; i < syms.size(); ++i) {
      if (syms[i].empty())
        throw ParseError("empty symbol in alphabet", 0);
      if (!set.emplace(syms[i], static_cast<int>(i)).second)
        throw ParseError("duplicate " + std::string(role_name(role)) +
                             " symbol '" + syms[i] + "'",
                         0);
      max_symbol_len_ = std::max(max_symbol_len_, syms[i].size());
    }
  };
  index_role(vowels_, Role::Vowel);
  index_role(initials_, Role::Initial);
  index_role(finals_, Role::Final);

  // Group ids follow first appearance in the vowel list; merged groups
  // take the id of their earliest member.
  std::map<std::string, int> merge_leader;
  for (const auto& group : merged_groups) {
    if (group.empty()) continue;
    // leader = member appearing earliest in vowels_
    std::size_t best = vowels_.size();
    for (const auto& v : group) {
      if (!has(v, Role::Vowel))
        throw ParseError("group member '" + v + "' is not a vowel", 0);
      auto it = std::find(vowels_.begin(), vowels_.end(), v);
      best = std::min(best, static_cast<std::size_t>(it - vowels_.begin()));
    }
    for (const auto& v : group) merge_leader[v] = static_cast<int>(best);
  }
  std::map<int, int> leader_to_group;
  for (std::size_t i = 0; i < vowels_.size(); ++i) {
    int leader = static_cast<int>(i);
    if (auto it = merge_leader.find(vowels_[i]); it != merge_leader.end())
      leader = it->second;
    auto [pos, inserted] = leader_to_group.emplace(leader, group_count_);
    if (inserted) ++group_count_;
    vowel_group_[vowels_[i]] = pos->second;
  }
}

AlphabetConfig AlphabetConfig::load(std::istream& in) {
  std::vector<std::string> vowels, initials, finals;
  std::vector<std::vector<std::string>> groups;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ss(line);
    std::string role;
    if (!(ss >> role)) continue;
    if (role == "G") {
      std::vector<std::string> members;
      std::string sym;
      while (ss >> sym) members.push_back(sym);
      if (members.size() < 2)
        throw ParseError("group line needs at least two vowels", line_no);
      groups.push_back(std::move(members));
      continue;
    }
    std::string sym;
    if (!(ss >> sym))
      throw ParseError("missing symbol", line_no);
    if (role == "V")
      vowels.push_back(sym);
    else if (role == "C1")
      initials.push_back(sym);
    else if (role == "C2")
      finals.push_back(sym);
    else
      throw ParseError("unknown role '" + role + "'", line_no);
  }
  if (vowels.empty())
    throw ParseError("alphabet has no vowels", line_no);
  return AlphabetConfig(std::move(vowels), std::move(initials), std::move(finals),
                        std::move(groups));
}

AlphabetConfig AlphabetConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open alphabet file '" + path + "'", 0);
  return load(in);
}

bool AlphabetConfig::has(const std::string& symbol, Role role) const {
  return role_sets_[role_index(role)].count(symbol) > 0;
}

int AlphabetConfig::group_of_vowel(const std::string& vowel) const {
  auto it = vowel_group_.find(vowel);
  if (it == vowel_group_.end())
    throw Error("'" + vowel + "' is not a vowel of this alphabet");
  return it->second;
}

std::vector<std::string> AlphabetConfig::group_members(int group_id) const {
  std::vector<std::string> out;
  for (const auto& v : vowels_)
    if (vowel_group_.at(v) == group_id) out.push_back(v);
  return out;
}

std::string AlphabetConfig::longest_match(const std::string& text, std::size_t pos,
                                          Role role) const {
  const auto& set = role_sets_[role_index(role)];
  std::size_t max_len = std::min(max_symbol_len_, text.size() - pos);
  for (std::size_t len = max_len; len >= 1; --len) {
    std::string cand = text.substr(pos, len);
    if (set.count(cand)) return cand;
  }
  return {};
}

namespace {

// One syllable of Yale letters -> (C1) V (C2).
std::vector<Phoneme> parse_syllable(const std::string& syl, std::size_t base_pos,
                                    const AlphabetConfig& alphabet) {
  std::vector<Phoneme> out;
  std::size_t pos = 0;
  bool seen_vowel = false, seen_coda = false;
  while (pos < syl.size()) {
    std::string v = alphabet.longest_match(syl, pos, Role::Vowel);
    if (!v.empty()) {
      if (seen_vowel)
        throw RoleViolation("second vowel '" + v + "' in syllable '" + syl + "'");
      out.push_back({v, Role::Vowel});
      seen_vowel = true;
      pos += v.size();
      continue;
    }
    if (!seen_vowel) {
      if (!out.empty())
        throw RoleViolation("two onset consonants in syllable '" + syl + "'");
      std::string c = alphabet.longest_match(syl, pos, Role::Initial);
      if (c.empty())
        throw UntokenizableRun("no symbol matches at '" + syl.substr(pos) + "'",
                               base_pos + pos);
      out.push_back({c, Role::Initial});
      pos += c.size();
      continue;
    }
    if (seen_coda)
      throw RoleViolation("trailing material after coda in syllable '" + syl + "'");
    std::string c = alphabet.longest_match(syl, pos, Role::Final);
    if (c.empty()) {
      if (!alphabet.longest_match(syl, pos, Role::Initial).empty())
        throw RoleViolation("consonant '" + syl.substr(pos) +
                            "' cannot close syllable '" + syl + "'");
      throw UntokenizableRun("no symbol matches at '" + syl.substr(pos) + "'",
                             base_pos + pos);
    }
    out.push_back({c, Role::Final});
    seen_coda = true;
    pos += c.size();
  }
  if (!seen_vowel)
    throw RoleViolation("syllable '" + syl + "' has no vowel");
  return out;
}

}  // namespace

std::vector<Phoneme> parse_eojeol(const std::string& text, const AlphabetConfig& alphabet) {
  if (text.empty()) throw EmptyInput("empty Eojeol");
  std::vector<Phoneme> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t dash = text.find('-', start);
    std::size_t end = dash == std::string::npos ? text.size() : dash;
    if (end == start)
      throw RoleViolation("empty syllable in '" + text + "'");
    auto syl = parse_syllable(text.substr(start, end - start), start, alphabet);
    out.insert(out.end(), syl.begin(), syl.end());
    if (dash == std::string::npos) break;
    start = dash + 1;
  }
  return out;
}

std::vector<std::vector<Phoneme>> parse_yale(const std::string& text,
                                             const AlphabetConfig& alphabet) {
  std::vector<std::vector<Phoneme>> out;
  std::istringstream ss(text);
  std::string word;
  while (ss >> word) out.push_back(parse_eojeol(word, alphabet));
  return out;
}

std::string render_yale(const std::vector<Phoneme>& phonemes) {
  std::string out;
  for (std::size_t i = 0; i < phonemes.size(); ++i) {
    const auto& p = phonemes[i];
    if (i > 0) {
      Role prev = phonemes[i - 1].role;
      bool boundary = false;
      if (p.role == Role::Initial)
        boundary = true;
      else if (p.role == Role::Vowel && prev != Role::Initial)
        boundary = true;
      if (boundary) out += '-';
    }
    out += p.symbol;
  }
  return out;
}

std::vector<Phoneme> infer_roles(const std::vector<std::string>& symbols,
                                 const AlphabetConfig& alphabet) {
  std::vector<Phoneme> out;
  out.reserve(symbols.size());
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    const auto& s = symbols[i];
    if (alphabet.has(s, Role::Vowel)) {
      out.push_back({s, Role::Vowel});
      continue;
    }
    bool next_is_vowel =
        i + 1 < symbols.size() && alphabet.has(symbols[i + 1], Role::Vowel);
    Role preferred = next_is_vowel ? Role::Initial : Role::Final;
    Role other = next_is_vowel ? Role::Final : Role::Initial;
    if (alphabet.has(s, preferred))
      out.push_back({s, preferred});
    else if (alphabet.has(s, other))
      out.push_back({s, other});
    else
      throw UntokenizableRun("'" + s + "' is not an alphabet symbol", i);
  }
  return out;
}

Diphone classify_diphone(const std::vector<Phoneme>& phonemes) {
  if (phonemes.size() == 1) {
    if (phonemes[0].role == Role::Vowel) return {DiphoneType::V, phonemes};
    throw IllegalPattern("single phoneme must be a vowel, got " +
                         std::string(role_name(phonemes[0].role)));
  }
  if (phonemes.size() == 2) {
    Role a = phonemes[0].role, b = phonemes[1].role;
    if (a == Role::Initial && b == Role::Vowel) return {DiphoneType::C1V, phonemes};
    if (a == Role::Vowel && b == Role::Final) return {DiphoneType::VC2, phonemes};
    if (a == Role::Final && b == Role::Initial) return {DiphoneType::C2C1, phonemes};
    throw IllegalPattern(std::string("no diphone type for (") + role_name(a) + "," +
                         role_name(b) + ")");
  }
  throw IllegalPattern("diphone needs 1 or 2 phonemes");
}

std::vector<Diphone> generate_inventory(const AlphabetConfig& alphabet) {
  std::vector<Diphone> out;
  for (const auto& v : alphabet.vowels())
    out.push_back({DiphoneType::V, {{v, Role::Vowel}}});
  for (const auto& c : alphabet.initials())
    for (const auto& v : alphabet.vowels())
      out.push_back({DiphoneType::C1V, {{c, Role::Initial}, {v, Role::Vowel}}});
  for (const auto& v : alphabet.vowels())
    for (const auto& c : alphabet.finals())
      out.push_back({DiphoneType::VC2, {{v, Role::Vowel}, {c, Role::Final}}});
  for (const auto& c2 : alphabet.finals())
    for (const auto& c1 : alphabet.initials())
      out.push_back({DiphoneType::C2C1, {{c2, Role::Final}, {c1, Role::Initial}}});
  return out;
}

InventoryCounts inventory_counts(const AlphabetConfig& alphabet) {
  InventoryCounts c;
  c.v = alphabet.vowels().size();
  c.c1v = alphabet.initials().size() * alphabet.vowels().size();
  c.vc2 = alphabet.vowels().size() * alphabet.finals().size();
  c.c2c1 = alphabet.finals().size() * alphabet.initials().size();
  return c;
}

int vowel_group_of(const Diphone& d, const AlphabetConfig& alphabet) {
  if (d.type == DiphoneType::C2C1) return alphabet.cc_group_id();
  for (const auto& p : d.phonemes)
    if (p.role == Role::Vowel) return alphabet.group_of_vowel(p.symbol);
  throw IllegalPattern("diphone " + d.label() + " has no vowel");
}

}  // namespace latmorph
