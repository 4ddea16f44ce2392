#include "gausslink/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace gausslink {

namespace {

// Scans sequences in order and maps each arrow id to 1,2,3,... by first
// appearance.  This is the renaming that makes keys canonical.
std::vector<int> first_appearance_ids(const std::vector<std::vector<endpoint>>& seqs,
                                      int arrow_count) {
  std::vector<int> renum(static_cast<size_t>(arrow_count), 0);
  int next = 1;
  for (const auto& seq : seqs)
    for (const auto& ep : seq)
      if (renum[static_cast<size_t>(ep.arrow)] == 0) renum[static_cast<size_t>(ep.arrow)] = next++;
  return renum;
}

void validate_endpoints(const std::vector<std::vector<endpoint>>& seqs, int arrow_count) {
  std::vector<int> tails(static_cast<size_t>(arrow_count), 0);
  std::vector<int> heads(static_cast<size_t>(arrow_count), 0);
  for (const auto& seq : seqs) {
    for (const auto& ep : seq) {
      if (ep.arrow < 0 || ep.arrow >= arrow_count)
        throw error(errc::dangling_arrow,
                    "arrow id " + std::to_string(ep.arrow) + " out of range");
      (ep.r == role::tail ? tails : heads)[static_cast<size_t>(ep.arrow)]++;
    }
  }
  for (int a = 0; a < arrow_count; ++a) {
    int t = tails[static_cast<size_t>(a)], h = heads[static_cast<size_t>(a)];
    if (t == 2 || h == 2)
      throw error(errc::role_error, "arrow " + std::to_string(a) + " has duplicated role");
    if (t != 1 || h != 1)
      throw error(errc::dangling_arrow,
                  "arrow " + std::to_string(a) + " must occur exactly once as tail and once as head");
  }
}

void locate(const std::vector<std::vector<endpoint>>& seqs, int arrow_count,
            std::vector<slot>& tails, std::vector<slot>& heads) {
  tails.assign(static_cast<size_t>(arrow_count), slot{});
  heads.assign(static_cast<size_t>(arrow_count), slot{});
  for (int c = 0; c < static_cast<int>(seqs.size()); ++c) {
    const auto& seq = seqs[static_cast<size_t>(c)];
    for (int p = 0; p < static_cast<int>(seq.size()); ++p) {
      const endpoint& ep = seq[static_cast<size_t>(p)];
      (ep.r == role::tail ? tails : heads)[static_cast<size_t>(ep.arrow)] = slot{c, p};
    }
  }
}

}  // namespace

void check_permutation(const std::vector<int>& perm, int n) {
  if (static_cast<int>(perm.size()) != n)
    throw error(errc::bad_permutation, "permutation has wrong size");
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[static_cast<size_t>(v)])
      throw error(errc::bad_permutation, "not a permutation of 0..n-1");
    seen[static_cast<size_t>(v)] = 1;
  }
}

gauss_diagram gauss_diagram::from_sequences(std::vector<std::vector<endpoint>> seqs,
                                            std::vector<int> signs) {
  if (seqs.empty()) throw error(errc::bad_input, "diagram needs at least one component");
  for (int s : signs)
    if (s != 1 && s != -1) throw error(errc::sign_mismatch, "arrow sign must be +1 or -1");
  validate_endpoints(seqs, static_cast<int>(signs.size()));
  gauss_diagram g;
  g.seqs_ = std::move(seqs);
  g.signs_ = std::move(signs);
  locate(g.seqs_, g.arrow_count(), g.tails_, g.heads_);
  return g;
}

std::string gauss_diagram::canonical_key() const {
  std::vector<int> renum = first_appearance_ids(seqs_, arrow_count());
  std::string out = "gd";
  for (const auto& seq : seqs_) {
    out += '[';
    bool first = true;
    for (const auto& ep : seq) {
      if (!first) out += ' ';
      first = false;
      out += (ep.r == role::tail) ? 't' : 'h';
      out += std::to_string(renum[static_cast<size_t>(ep.arrow)]);
      out += (signs_[static_cast<size_t>(ep.arrow)] > 0) ? '+' : '-';
    }
    out += ']';
  }
  return out;
}

gauss_diagram gauss_diagram::permute_components(const std::vector<int>& perm) const {
  check_permutation(perm, components());
  std::vector<std::vector<endpoint>> seqs(seqs_.size());
  for (int c = 0; c < components(); ++c)
    seqs[static_cast<size_t>(perm[static_cast<size_t>(c)])] = seqs_[static_cast<size_t>(c)];
  return from_sequences(std::move(seqs), signs_);
}

gauss_diagram gauss_diagram::rebase(int comp, int offset) const {
  if (comp < 0 || comp >= components())
    throw error(errc::component_range, "component index out of range");
  const auto& seq = seqs_[static_cast<size_t>(comp)];
  int n = static_cast<int>(seq.size());
  if (offset < 0 || offset > std::max(n, 1))
    throw error(errc::offset_range, "base offset out of range");
  std::vector<std::vector<endpoint>> seqs = seqs_;
  if (n > 0) {
    std::vector<endpoint>& s = seqs[static_cast<size_t>(comp)];
    std::rotate(s.begin(), s.begin() + (offset % std::max(n, 1)), s.end());
  }
  return from_sequences(std::move(seqs), signs_);
}

gauss_diagram gauss_diagram::restrict_to(const std::vector<int>& comps) const {
  std::vector<char> seen(static_cast<size_t>(components()), 0);
  for (int c : comps) {
    if (c < 0 || c >= components())
      throw error(errc::component_range, "component index out of range");
    if (seen[static_cast<size_t>(c)])
      throw error(errc::duplicate_index, "component listed twice");
    seen[static_cast<size_t>(c)] = 1;
  }
  // an arrow survives iff both endpoints lie on kept components
  std::vector<char> keep_comp(static_cast<size_t>(components()), 0);
  for (int c : comps) keep_comp[static_cast<size_t>(c)] = 1;
  std::vector<int> new_arrow(static_cast<size_t>(arrow_count()), -1);
  int next = 0;
  std::vector<int> signs;
  for (int c : comps)
    for (const auto& ep : seqs_[static_cast<size_t>(c)]) {
      int a = ep.arrow;
      slot t = tails_[static_cast<size_t>(a)], h = heads_[static_cast<size_t>(a)];
      if (!keep_comp[static_cast<size_t>(t.comp)] || !keep_comp[static_cast<size_t>(h.comp)])
        continue;
      if (new_arrow[static_cast<size_t>(a)] < 0) {
        new_arrow[static_cast<size_t>(a)] = next++;
        signs.push_back(signs_[static_cast<size_t>(a)]);
      }
    }
  std::vector<std::vector<endpoint>> seqs;
  seqs.reserve(comps.size());
  for (int c : comps) {
    std::vector<endpoint> seq;
    for (const auto& ep : seqs_[static_cast<size_t>(c)])
      if (new_arrow[static_cast<size_t>(ep.arrow)] >= 0)
        seq.push_back(endpoint{new_arrow[static_cast<size_t>(ep.arrow)], ep.r});
    seqs.push_back(std::move(seq));
  }
  if (seqs.empty()) seqs.emplace_back();
  return from_sequences(std::move(seqs), std::move(signs));
}

gauss_diagram gauss_diagram::negate_signs() const {
  std::vector<int> signs = signs_;
  for (int& s : signs) s = -s;
  return from_sequences(seqs_, std::move(signs));
}

arrow_pattern arrow_pattern::from_sequences(bool loop, std::vector<std::vector<endpoint>> seqs) {
  if (seqs.empty()) throw error(errc::bad_string, "pattern needs at least one string");
  if (loop && seqs.size() != 1)
    throw error(errc::bad_string, "loop carrier has exactly one circle");
  int arrows = 0;
  for (const auto& seq : seqs) arrows += static_cast<int>(seq.size());
  if (arrows % 2 != 0) throw error(errc::dangling_arrow, "odd number of endpoints");
  arrows /= 2;
  validate_endpoints(seqs, arrows);
  arrow_pattern p;
  p.loop_ = loop;
  p.seqs_ = std::move(seqs);
  locate(p.seqs_, arrows, p.tails_, p.heads_);
  return p;
}

std::string arrow_pattern::canonical_key() const {
  std::vector<int> renum = first_appearance_ids(seqs_, arrow_count());
  std::string out = loop_ ? "loop" : ("str" + std::to_string(strings()));
  for (const auto& seq : seqs_) {
    out += ';';
    bool first = true;
    for (const auto& ep : seq) {
      if (!first) out += ' ';
      first = false;
      out += (ep.r == role::tail) ? 't' : 'h';
      out += std::to_string(renum[static_cast<size_t>(ep.arrow)]);
    }
  }
  return out;
}

arrow_pattern arrow_pattern::permute_strings(const std::vector<int>& perm) const {
  check_permutation(perm, strings());
  if (loop_) return *this;  // only the identity exists
  std::vector<std::vector<endpoint>> seqs(seqs_.size());
  for (int s = 0; s < strings(); ++s)
    seqs[static_cast<size_t>(perm[static_cast<size_t>(s)])] = seqs_[static_cast<size_t>(s)];
  return from_sequences(false, std::move(seqs));
}

arrow_pattern pattern_from_key(const std::string& key) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    size_t sep = key.find(';', start);
    parts.push_back(key.substr(start, sep == std::string::npos ? sep : sep - start));
    if (sep == std::string::npos) break;
    start = sep + 1;
  }
  if (parts.empty()) throw error(errc::syntax_error, "empty pattern key");
  bool loop;
  int strings;
  if (parts[0] == "loop") {
    loop = true;
    strings = 1;
  } else if (parts[0].rfind("str", 0) == 0) {
    loop = false;
    const std::string& num = parts[0];
    int v = 0;
    auto [ptr, ec] = std::from_chars(num.data() + 3, num.data() + num.size(), v);
    if (ec != std::errc() || ptr != num.data() + num.size() || v < 1)
      throw error(errc::syntax_error, "bad carrier marker: " + parts[0]);
    strings = v;
  } else {
    throw error(errc::syntax_error, "bad carrier marker: " + parts[0]);
  }
  if (static_cast<int>(parts.size()) - 1 != strings)
    throw error(errc::syntax_error, "carrier marker disagrees with string count");

  std::vector<std::vector<endpoint>> seqs;
  std::vector<int> renum;  // external id -> internal id, first appearance order
  auto intern = [&renum](int ext) {
    for (int i = 0; i < static_cast<int>(renum.size()); ++i)
      if (renum[static_cast<size_t>(i)] == ext) return i;
    renum.push_back(ext);
    return static_cast<int>(renum.size()) - 1;
  };
  for (int s = 1; s <= strings; ++s) {
    std::vector<endpoint> seq;
    std::istringstream in(parts[static_cast<size_t>(s)]);
    std::string tok;
    while (in >> tok) {
      if (tok.size() < 2 || (tok[0] != 't' && tok[0] != 'h'))
        throw error(errc::syntax_error, "bad endpoint token: " + tok);
      int v = 0;
      auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw error(errc::syntax_error, "bad endpoint token: " + tok);
      seq.push_back(endpoint{intern(v), tok[0] == 't' ? role::tail : role::head});
    }
    seqs.push_back(std::move(seq));
  }
  return arrow_pattern::from_sequences(loop, std::move(seqs));
}

void arrow_polynomial::add(const arrow_pattern& p, long long c) {
  if (c == 0) return;
  std::string key = p.canonical_key();
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const auto& t, const std::string& k) { return t.first < k; });
  if (it != terms_.end() && it->first == key) {
    it->second.coeff += c;
    if (it->second.coeff == 0) terms_.erase(it);
  } else {
    terms_.insert(it, {std::move(key), term{p, c}});
  }
}

const arrow_polynomial::term* arrow_polynomial::find(const std::string& key) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const auto& t, const std::string& k) { return t.first < k; });
  if (it != terms_.end() && it->first == key) return &it->second;
  return nullptr;
}

std::string arrow_polynomial::dump() const {
  std::string out;
  for (const auto& [key, t] : terms_) {
    out += std::to_string(t.coeff);
    out += ' ';
    out += key;
    out += '\n';
  }
  return out;
}

arrow_polynomial arrow_polynomial::parse(const std::string& text) {
  arrow_polynomial poly;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t b = line.find_last_not_of(" \t\r");
    line = line.substr(a, b - a + 1);
    if (line[0] == '#') continue;
    size_t sp = line.find(' ');
    if (sp == std::string::npos)
      throw error(errc::syntax_error, "polynomial line needs '<coeff> <key>': " + line);
    long long c = 0;
    auto [ptr, ec] = std::from_chars(line.data(), line.data() + sp, c);
    if (ec != std::errc() || ptr != line.data() + sp)
      throw error(errc::syntax_error, "bad coefficient in: " + line);
    poly.add(pattern_from_key(line.substr(sp + 1)), c);
  }
  return poly;
}

}  // namespace gausslink
