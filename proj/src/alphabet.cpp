#include "lieb/alphabet.hpp"

#include <algorithm>

namespace lieb {

Alphabet::Alphabet(std::vector<Entry> ascending) : entries_(std::move(ascending)) {
  if (entries_.empty()) throw domain_error("alphabet must be nonempty");
  for (std::uint32_t i = 0; i < entries_.size(); ++i) {
    const Entry& e = entries_[i];
    if (e.id.empty()) throw domain_error("letter id must be nonempty");
    for (char c : e.id)
      if (c == '\'' || c == '.' || c == ' ' || c == '\t' || !std::isprint(static_cast<unsigned char>(c)))
        throw domain_error("letter id contains a reserved character: " + e.id);
    if (!index_.emplace(std::make_pair(e.id, e.dotted), Letter{i}).second)
      throw domain_error("duplicate letter in alphabet: " + e.id + (e.dotted ? "'" : ""));
    if (e.id.size() > 1) single_char_ = false;
  }
}

AlphabetPtr Alphabet::make(std::vector<Entry> ascending) {
  return AlphabetPtr(new Alphabet(std::move(ascending)));
}

Alphabet::Entry parse_letter_name(const std::string& name) {
  std::string id = name;
  bool dotted = false;
  if (!id.empty() && id.back() == '\'') {
    dotted = true;
    id.pop_back();
  }
  if (id.empty() || id.find('\'') != std::string::npos)
    throw domain_error("bad letter name: " + name);
  return {id, dotted};
}

AlphabetPtr Alphabet::from_names_desc(const std::vector<std::string>& names_desc) {
  std::vector<Entry> asc;
  asc.reserve(names_desc.size());
  for (auto it = names_desc.rbegin(); it != names_desc.rend(); ++it)
    asc.push_back(parse_letter_name(*it));
  return make(std::move(asc));
}

std::optional<Letter> Alphabet::find(const std::string& id, bool dotted) const {
  auto it = index_.find({id, dotted});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Letter Alphabet::letter(const std::string& id, bool dotted) const {
  auto l = find(id, dotted);
  if (!l) throw domain_error("letter not in alphabet: " + id + (dotted ? "'" : ""));
  return *l;
}

std::optional<Letter> Alphabet::dotted_partner(Letter l) const {
  const Entry& e = entry(l);
  if (e.dotted) return l;
  return find(e.id, true);
}

std::optional<Letter> Alphabet::undotted_partner(Letter l) const {
  const Entry& e = entry(l);
  if (!e.dotted) return l;
  return find(e.id, false);
}

std::string Alphabet::name(Letter l) const {
  const Entry& e = entry(l);
  return e.dotted ? e.id + "'" : e.id;
}

std::string Alphabet::order_string() const {
  std::string out;
  for (std::size_t i = entries_.size(); i-- > 0;) {
    out += name(Letter{static_cast<std::uint32_t>(i)});
    if (i != 0) out += " > ";
  }
  return out;
}

}  // namespace lieb
