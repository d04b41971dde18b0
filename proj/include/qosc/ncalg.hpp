#pragma once

// Free associative algebras over Q(q, Q1) and quadratic rewrite systems.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qosc/field.hpp"

namespace qosc {

using GenId = std::uint8_t;
using Word = std::vector<GenId>;

struct Generator {
  std::string name;
  std::optional<GenId> star;  // *-partner, may be the generator itself
  int rank = 0;               // total order on generators; larger rank = larger letter
  int weight = 1;             // degree weight used by the word order
};

/// Finite linear combination of words. Zero coefficients are never stored.
class NCPoly {
 public:
  using Terms = std::map<Word, FieldElem>;

  NCPoly() = default;
  static NCPoly unit() { return word({}); }
  static NCPoly scalar(const FieldElem& c) { return word({}, c); }
  static NCPoly word(Word w, const FieldElem& c = FieldElem(1));
  static NCPoly gen(GenId g, const FieldElem& c = FieldElem(1)) { return word({g}, c); }

  void add_term(const Word& w, const FieldElem& c);
  FieldElem coefficient(const Word& w) const;

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  int max_degree() const;

  NCPoly operator-() const;
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const FieldElem& c);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator*(NCPoly a, const FieldElem& c) { return a *= c; }
  friend NCPoly operator*(const FieldElem& c, NCPoly a) { return a *= c; }
  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.terms_ == b.terms_; }

  /// Apply f to every coefficient (e.g. Q1 -> q^2).
  NCPoly map_coefficients(const std::function<FieldElem(const FieldElem&)>& f) const;

 private:
  Terms terms_;
};

/// Overlap g·h·k whose two reductions disagree.
struct UnresolvedOverlap {
  Word overlap;
  NCPoly difference;
};

struct ConfluenceReport {
  std::vector<UnresolvedOverlap> unresolved;
  std::vector<Word> misoriented;  // rules whose right-hand side is not smaller
  std::size_t overlaps_checked = 0;
  bool ok() const { return unresolved.empty() && misoriented.empty(); }
};

enum class Strategy { Leftmost, Rightmost };

/// Ordered generator set plus rules g·h -> rhs. Words are compared by total
/// weight, then lexicographically by rank; every rule must decrease a word.
class RewriteSystem {
 public:
  static constexpr std::size_t kDefaultBudget = 1'000'000;

  RewriteSystem() = default;
  explicit RewriteSystem(std::vector<Generator> gens);

  std::size_t size() const { return gens_.size(); }
  const std::vector<Generator>& generators() const { return gens_; }
  const Generator& generator(GenId g) const { return gens_.at(g); }
  GenId id(std::string_view name) const;
  std::optional<GenId> find(std::string_view name) const;

  void set_rule(GenId g, GenId h, NCPoly rhs);
  void set_rule(std::string_view g, std::string_view h, NCPoly rhs) { set_rule(id(g), id(h), std::move(rhs)); }
  const NCPoly* rule(GenId g, GenId h) const;
  std::size_t rule_count() const;
  /// Left-hand sides in a fixed order.
  std::vector<std::pair<GenId, GenId>> rule_keys() const;

  bool word_less(const Word& a, const Word& b) const;
  bool is_normal(const Word& w) const;

  NCPoly normal_form(const NCPoly& p, Strategy s = Strategy::Leftmost,
                     std::size_t budget = kDefaultBudget) const;
  /// Normal form of the product a·b.
  NCPoly mul(const NCPoly& a, const NCPoly& b) const { return normal_form(a * b); }

  NCPoly gen(std::string_view name, const FieldElem& c = FieldElem(1)) const {
    return NCPoly::gen(id(name), c);
  }
  NCPoly word(std::initializer_list<std::string_view> names, const FieldElem& c = FieldElem(1)) const;

  /// Same algebra with every generator renamed name -> name + suffix.
  RewriteSystem renamed(const std::string& suffix) const;

  std::string word_str(const Word& w) const;
  std::string str(const NCPoly& p) const;
  /// Parses "(coef) g1 g2 + g3 - (coef)" against this generator set.
  NCPoly parse(std::string_view text) const;

 private:
  std::vector<Generator> gens_;
  std::vector<std::optional<NCPoly>> rules_;  // size()*size(), row-major (g, h)
};

/// Same generators, f applied to every rule coefficient.
RewriteSystem map_rule_coefficients(const RewriteSystem& rs, const std::function<FieldElem(const FieldElem&)>& f);

/// Diamond-lemma check over all length-3 overlaps plus rule orientation.
ConfluenceReport check_confluence(const RewriteSystem& rs);

/// Anti-involution: reverses words and maps generators to their *-partners.
/// The deformation parameters are real, so coefficients are unchanged.
NCPoly star(const NCPoly& p, const RewriteSystem& rs);

/// Algebra map determined by generator images (which must live in the target).
NCPoly apply_hom(const NCPoly& p, const std::vector<NCPoly>& images, const RewriteSystem& target);

/// Anti-homomorphism S(xy) = S(y)S(x) determined by generator images.
NCPoly apply_antihom(const NCPoly& p, const std::vector<NCPoly>& images, const RewriteSystem& target);

/// left ⊗ right, with right-copy generators ranked above the left copy and
/// cross rules r·l -> (words in the combined algebra).
struct TensorAlgebra {
  RewriteSystem system;
  GenId right_offset = 0;
  ConfluenceReport report;

  NCPoly left(const NCPoly& p) const;
  NCPoly right(const NCPoly& p) const;
  GenId left(GenId g) const { return g; }
  GenId right(GenId g) const { return static_cast<GenId>(g + right_offset); }
};

using CrossRule = std::function<NCPoly(GenId right_gen, GenId left_gen, const TensorAlgebra& t)>;

TensorAlgebra tensor_algebra(const RewriteSystem& left, const RewriteSystem& right, const CrossRule& cross);

/// Cross rule making the two factors commute.
NCPoly commuting_cross(GenId right_gen, GenId left_gen, const TensorAlgebra& t);

/// The subalgebra obtained by setting some generators to zero. Rules whose
/// left side involves a removed generator are dropped; what remains of their
/// right side is an obstruction that must vanish for the quotient to be
/// consistent.
struct Restriction {
  RewriteSystem system;
  std::vector<std::optional<GenId>> image;  // old id -> new id, nullopt if removed
  std::vector<NCPoly> obstructions;         // in the new generator ids
  NCPoly map(const NCPoly& p) const;        // drop terms with removed generators
};

Restriction restrict_generators(const RewriteSystem& rs, const std::vector<std::string>& removed);

/// Text presentation:
///   generators: a* qN a        (increasing rank)
///   weights: 1 1 1             (optional)
///   star: a a*, qN qN
///   rule: a a* = (Q1) a* a + qN qN
RewriteSystem parse_presentation(std::string_view text);
std::string to_presentation(const RewriteSystem& rs);

}  // namespace qosc
