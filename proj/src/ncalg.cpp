#include "qosc/ncalg.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace qosc {

// ---------------------------------------------------------------- NCPoly

NCPoly NCPoly::word(Word w, const FieldElem& c) {
  NCPoly p;
  p.add_term(w, c);
  return p;
}

void NCPoly::add_term(const Word& w, const FieldElem& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FieldElem NCPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? FieldElem() : it->second;
}

int NCPoly::max_degree() const {
  int d = -1;
  for (const auto& [w, c] : terms_) d = std::max(d, static_cast<int>(w.size()));
  return d;
}

NCPoly NCPoly::operator-() const {
  NCPoly out = *this;
  for (auto& [w, c] : out.terms_) c = -c;
  return out;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const FieldElem& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly out;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.add_term(w, ca * cb);
    }
  }
  return out;
}

NCPoly NCPoly::map_coefficients(const std::function<FieldElem(const FieldElem&)>& f) const {
  NCPoly out;
  for (const auto& [w, c] : terms_) out.add_term(w, f(c));
  return out;
}

// --------------------------------------------------------- RewriteSystem

RewriteSystem::RewriteSystem(std::vector<Generator> gens) : gens_(std::move(gens)) {
  if (gens_.size() > 250) throw Error("too many generators");
  std::set<std::string> names;
  std::set<int> ranks;
  for (const auto& g : gens_) {
    if (!names.insert(g.name).second) throw Error("duplicate generator name " + g.name);
    if (!ranks.insert(g.rank).second) throw Error("duplicate generator rank for " + g.name);
  }
  rules_.resize(gens_.size() * gens_.size());
}

std::optional<GenId> RewriteSystem::find(std::string_view name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return static_cast<GenId>(i);
  return std::nullopt;
}

GenId RewriteSystem::id(std::string_view name) const {
  if (auto g = find(name)) return *g;
  throw Error("unknown generator '" + std::string(name) + "'");
}

void RewriteSystem::set_rule(GenId g, GenId h, NCPoly rhs) {
  rules_.at(g * gens_.size() + h) = std::move(rhs);
}

const NCPoly* RewriteSystem::rule(GenId g, GenId h) const {
  const auto& r = rules_[g * gens_.size() + h];
  return r ? &*r : nullptr;
}

std::size_t RewriteSystem::rule_count() const {
  return std::count_if(rules_.begin(), rules_.end(), [](const auto& r) { return r.has_value(); });
}

std::vector<std::pair<GenId, GenId>> RewriteSystem::rule_keys() const {
  std::vector<std::pair<GenId, GenId>> keys;
  const std::size_t n = gens_.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rules_[i * n + j]) keys.emplace_back(static_cast<GenId>(i), static_cast<GenId>(j));
  return keys;
}

bool RewriteSystem::word_less(const Word& a, const Word& b) const {
  int wa = 0;
  int wb = 0;
  for (GenId g : a) wa += gens_[g].weight;
  for (GenId g : b) wb += gens_[g].weight;
  if (wa != wb) return wa < wb;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int ra = gens_[a[i]].rank;
    const int rb = gens_[b[i]].rank;
    if (ra != rb) return ra < rb;
  }
  return a.size() < b.size();
}

bool RewriteSystem::is_normal(const Word& w) const {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (rule(w[i], w[i + 1])) return false;
  return true;
}

NCPoly RewriteSystem::normal_form(const NCPoly& p, Strategy s, std::size_t budget) const {
  auto cmp = [this](const Word& a, const Word& b) { return word_less(a, b); };
  std::map<Word, FieldElem, decltype(cmp)> work(cmp);
  auto push = [&work](const Word& w, const FieldElem& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = work.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) work.erase(it);
    }
  };
  for (const auto& [w, c] : p.terms()) push(w, c);

  NCPoly out;
  std::size_t steps = 0;
  while (!work.empty()) {
    auto it = std::prev(work.end());
    Word w = it->first;
    FieldElem c = std::move(it->second);
    work.erase(it);

    std::optional<std::size_t> pos;
    if (w.size() >= 2) {
      if (s == Strategy::Leftmost) {
        for (std::size_t i = 0; i + 1 < w.size() && !pos; ++i)
          if (rule(w[i], w[i + 1])) pos = i;
      } else {
        for (std::size_t i = w.size() - 1; i-- > 0 && !pos;)
          if (rule(w[i], w[i + 1])) pos = i;
      }
    }
    if (!pos) {
      out.add_term(w, c);
      continue;
    }
    if (++steps > budget) {
      throw Divergence("normal form exceeded " + std::to_string(budget) + " reductions at word " +
                       word_str(w));
    }
    const NCPoly& rhs = *rule(w[*pos], w[*pos + 1]);
    for (const auto& [rw, rc] : rhs.terms()) {
      Word nw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(*pos));
      nw.insert(nw.end(), rw.begin(), rw.end());
      nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(*pos + 2), w.end());
      push(nw, c * rc);
    }
  }
  return out;
}

NCPoly RewriteSystem::word(std::initializer_list<std::string_view> names, const FieldElem& c) const {
  Word w;
  for (auto n : names) w.push_back(id(n));
  return NCPoly::word(w, c);
}

RewriteSystem RewriteSystem::renamed(const std::string& suffix) const {
  RewriteSystem out = *this;
  for (auto& g : out.gens_) g.name += suffix;
  return out;
}

std::string RewriteSystem::word_str(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += gens_.at(w[i]).name;
  }
  return s;
}

std::string RewriteSystem::str(const NCPoly& p) const {
  if (p.is_zero()) return "0";
  std::vector<const std::pair<const Word, FieldElem>*> terms;
  for (const auto& t : p.terms()) terms.push_back(&t);
  std::sort(terms.begin(), terms.end(),
            [this](auto* a, auto* b) { return word_less(b->first, a->first); });
  std::string out;
  bool first = true;
  for (const auto* t : terms) {
    const FieldElem& c = t->second;
    const bool unit_word = t->first.empty();
    std::string term;
    if (c == FieldElem(-1)) {
      term = first ? "-" : " - ";
      term += unit_word ? "1" : word_str(t->first);
    } else {
      term = first ? "" : " + ";
      if (c.is_one()) {
        term += word_str(t->first);
      } else {
        term += "(" + c.str() + ")";
        if (!unit_word) term += " " + word_str(t->first);
      }
    }
    out += term;
    first = false;
  }
  return out;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

}  // namespace

NCPoly RewriteSystem::parse(std::string_view text) const {
  // Split into signed top-level terms.
  std::vector<std::pair<int, std::string>> terms;
  int depth = 0;
  int sign = 1;
  std::string cur;
  auto flush = [&]() {
    std::string t = trim(cur);
    if (!t.empty()) terms.emplace_back(sign, t);
    cur.clear();
  };
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth < 0) throw ParseError("unbalanced ')' in '" + std::string(text) + "'");
    if (depth == 0 && (ch == '+' || ch == '-')) {
      if (!trim(cur).empty()) {
        flush();
        sign = ch == '-' ? -1 : 1;
      } else {
        sign *= ch == '-' ? -1 : 1;
      }
      continue;
    }
    cur += ch;
  }
  if (depth != 0) throw ParseError("unbalanced '(' in '" + std::string(text) + "'");
  flush();

  NCPoly out;
  for (const auto& [sg, t] : terms) {
    FieldElem coef(sg);
    std::string rest = t;
    if (!rest.empty() && rest.front() == '(') {
      int d = 0;
      std::size_t close = 0;
      for (std::size_t i = 0; i < rest.size(); ++i) {
        if (rest[i] == '(') ++d;
        if (rest[i] == ')' && --d == 0) {
          close = i;
          break;
        }
      }
      coef *= FieldElem::parse(std::string_view(rest).substr(1, close - 1));
      rest = rest.substr(close + 1);
    }
    Word w;
    auto toks = split_ws(rest);
    for (std::size_t i = 0; i < toks.size(); ++i) {
      const auto& tok = toks[i];
      if (auto g = find(tok)) {
        w.push_back(*g);
      } else if (i == 0 && std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        coef *= FieldElem::parse(tok);
      } else {
        throw ParseError("unknown generator '" + tok + "'");
      }
    }
    out.add_term(w, coef);
  }
  return out;
}

// ------------------------------------------------------------ operations

ConfluenceReport check_confluence(const RewriteSystem& rs) {
  ConfluenceReport report;
  const auto keys = rs.rule_keys();
  for (auto [g, h] : keys) {
    const Word lhs{g, h};
    for (const auto& [w, c] : rs.rule(g, h)->terms())
      if (!rs.word_less(w, lhs)) report.misoriented.push_back(lhs);
  }
  if (!report.misoriented.empty()) return report;  // normal forms may not terminate
  for (auto [g, h] : keys) {
    for (std::size_t k = 0; k < rs.size(); ++k) {
      const NCPoly* right_rule = rs.rule(h, static_cast<GenId>(k));
      if (!right_rule) continue;
      ++report.overlaps_checked;
      NCPoly left_first = rs.normal_form(*rs.rule(g, h) * NCPoly::gen(static_cast<GenId>(k)));
      NCPoly right_first = rs.normal_form(NCPoly::gen(g) * *right_rule);
      NCPoly diff = left_first - right_first;
      if (!diff.is_zero()) report.unresolved.push_back({Word{g, h, static_cast<GenId>(k)}, diff});
    }
  }
  return report;
}

RewriteSystem map_rule_coefficients(const RewriteSystem& rs, const std::function<FieldElem(const FieldElem&)>& f) {
  RewriteSystem out(rs.generators());
  for (auto [g, h] : rs.rule_keys()) out.set_rule(g, h, rs.rule(g, h)->map_coefficients(f));
  return out;
}

NCPoly star(const NCPoly& p, const RewriteSystem& rs) {
  NCPoly out;
  for (const auto& [w, c] : p.terms()) {
    Word r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      const auto& partner = rs.generator(*it).star;
      if (!partner) throw StarUndefined("generator " + rs.generator(*it).name + " has no *-partner");
      r.push_back(*partner);
    }
    out.add_term(r, c);
  }
  return out;
}

namespace {

NCPoly apply_word_map(const NCPoly& p, const std::vector<NCPoly>& images, const RewriteSystem& target,
                      bool reverse) {
  NCPoly out;
  for (const auto& [w, c] : p.terms()) {
    NCPoly acc = NCPoly::scalar(c);
    if (reverse) {
      for (auto it = w.rbegin(); it != w.rend(); ++it) acc = target.normal_form(acc * images.at(*it));
    } else {
      for (GenId g : w) acc = target.normal_form(acc * images.at(g));
    }
    out += acc;
  }
  return out;
}

}  // namespace

NCPoly apply_hom(const NCPoly& p, const std::vector<NCPoly>& images, const RewriteSystem& target) {
  return apply_word_map(p, images, target, false);
}

NCPoly apply_antihom(const NCPoly& p, const std::vector<NCPoly>& images, const RewriteSystem& target) {
  return apply_word_map(p, images, target, true);
}

NCPoly TensorAlgebra::left(const NCPoly& p) const { return p; }

NCPoly TensorAlgebra::right(const NCPoly& p) const {
  NCPoly out;
  for (const auto& [w, c] : p.terms()) {
    Word r = w;
    for (auto& g : r) g = static_cast<GenId>(g + right_offset);
    out.add_term(r, c);
  }
  return out;
}

TensorAlgebra tensor_algebra(const RewriteSystem& left, const RewriteSystem& right, const CrossRule& cross) {
  int rank_shift = 0;
  for (const auto& g : left.generators()) rank_shift = std::max(rank_shift, g.rank + 1);
  int min_right = 0;
  for (const auto& g : right.generators()) min_right = std::min(min_right, g.rank);
  rank_shift -= min_right;

  const auto offset = static_cast<GenId>(left.size());
  std::vector<Generator> gens = left.generators();
  for (const auto& g : right.generators()) {
    Generator r = g;
    r.rank += rank_shift;
    if (r.star) r.star = static_cast<GenId>(*r.star + offset);
    gens.push_back(r);
  }
  TensorAlgebra t;
  t.right_offset = offset;
  t.system = RewriteSystem(std::move(gens));
  for (auto [g, h] : left.rule_keys()) t.system.set_rule(g, h, *left.rule(g, h));
  for (auto [g, h] : right.rule_keys()) t.system.set_rule(t.right(g), t.right(h), t.right(*right.rule(g, h)));
  for (std::size_t r = 0; r < right.size(); ++r)
    for (std::size_t l = 0; l < left.size(); ++l)
      t.system.set_rule(t.right(static_cast<GenId>(r)), static_cast<GenId>(l),
                        cross(static_cast<GenId>(r), static_cast<GenId>(l), t));
  t.report = check_confluence(t.system);
  return t;
}

NCPoly commuting_cross(GenId right_gen, GenId left_gen, const TensorAlgebra& t) {
  return NCPoly::word({left_gen, t.right(right_gen)});
}

NCPoly Restriction::map(const NCPoly& p) const {
  NCPoly out;
  for (const auto& [w, c] : p.terms()) {
    Word r;
    bool keep = true;
    for (GenId g : w) {
      if (!image[g]) {
        keep = false;
        break;
      }
      r.push_back(*image[g]);
    }
    if (keep) out.add_term(r, c);
  }
  return out;
}

Restriction restrict_generators(const RewriteSystem& rs, const std::vector<std::string>& removed) {
  Restriction res;
  res.image.resize(rs.size());
  std::vector<Generator> gens;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const auto& g = rs.generator(static_cast<GenId>(i));
    if (std::find(removed.begin(), removed.end(), g.name) != removed.end()) continue;
    res.image[i] = static_cast<GenId>(gens.size());
    gens.push_back(g);
  }
  for (auto& g : gens) {
    if (g.star) g.star = res.image[*g.star];
  }
  res.system = RewriteSystem(std::move(gens));
  for (auto [g, h] : rs.rule_keys()) {
    NCPoly rhs = res.map(*rs.rule(g, h));
    if (res.image[g] && res.image[h]) {
      res.system.set_rule(*res.image[g], *res.image[h], rhs);
    } else if (!rhs.is_zero()) {
      res.obstructions.push_back(rhs);
    }
  }
  return res;
}

RewriteSystem parse_presentation(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<Generator> gens;
  std::vector<int> weights;
  std::vector<std::pair<std::string, std::string>> stars;
  std::vector<std::string> rule_lines;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("line " + std::to_string(lineno) + ": expected 'key: value'");
    std::string key = trim(line.substr(0, colon));
    std::string value = trim(line.substr(colon + 1));
    if (key == "generators") {
      int rank = 0;
      for (auto& name : split_ws(value)) gens.push_back({name, std::nullopt, rank++, 1});
    } else if (key == "weights") {
      for (auto& w : split_ws(value)) weights.push_back(std::stoi(w));
    } else if (key == "star") {
      std::string item;
      std::istringstream items(value);
      while (std::getline(items, item, ',')) {
        auto pair = split_ws(item);
        if (pair.size() != 2) throw ParseError("line " + std::to_string(lineno) + ": star pairs are 'x y'");
        stars.emplace_back(pair[0], pair[1]);
      }
    } else if (key == "rule") {
      rule_lines.push_back(value);
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (!weights.empty()) {
    if (weights.size() != gens.size()) throw ParseError("weights must match generators");
    for (std::size_t i = 0; i < gens.size(); ++i) gens[i].weight = weights[i];
  }
  RewriteSystem probe(gens);
  for (const auto& [x, y] : stars) {
    GenId gx = probe.id(x);
    GenId gy = probe.id(y);
    gens[gx].star = gy;
    gens[gy].star = gx;
  }
  RewriteSystem rs(std::move(gens));
  for (const auto& r : rule_lines) {
    auto eq = r.find('=');
    if (eq == std::string::npos) throw ParseError("rule without '=': " + r);
    auto lhs = split_ws(r.substr(0, eq));
    if (lhs.size() != 2) throw ParseError("rule left side must be two generators: " + r);
    rs.set_rule(lhs[0], lhs[1], rs.parse(r.substr(eq + 1)));
  }
  return rs;
}

std::string to_presentation(const RewriteSystem& rs) {
  std::vector<GenId> order(rs.size());
  for (std::size_t i = 0; i < rs.size(); ++i) order[i] = static_cast<GenId>(i);
  std::sort(order.begin(), order.end(),
            [&](GenId a, GenId b) { return rs.generator(a).rank < rs.generator(b).rank; });
  std::ostringstream os;
  os << "generators:";
  for (GenId g : order) os << ' ' << rs.generator(g).name;
  os << '\n';
  bool weighted = std::any_of(order.begin(), order.end(), [&](GenId g) { return rs.generator(g).weight != 1; });
  if (weighted) {
    os << "weights:";
    for (GenId g : order) os << ' ' << rs.generator(g).weight;
    os << '\n';
  }
  std::vector<std::string> pairs;
  for (GenId g : order) {
    const auto& s = rs.generator(g).star;
    if (s && *s >= g) pairs.push_back(rs.generator(g).name + " " + rs.generator(*s).name);
  }
  if (!pairs.empty()) {
    os << "star: ";
    for (std::size_t i = 0; i < pairs.size(); ++i) os << (i ? ", " : "") << pairs[i];
    os << '\n';
  }
  for (auto [g, h] : rs.rule_keys())
    os << "rule: " << rs.generator(g).name << ' ' << rs.generator(h).name << " = " << rs.str(*rs.rule(g, h)) << '\n';
  return os.str();
}

}  // namespace qosc
