#include "scpn/grassmann.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "scpn/error.hpp"

namespace scpn {

std::string_view to_string(Parity p) {
  switch (p) {
    case Parity::kEven: return "even";
    case Parity::kOdd: return "odd";
    case Parity::kMixed: return "mixed";
  }
  return "?";
}

std::shared_ptr<const GeneratorTable> GeneratorTable::create(
    std::vector<Pair> pairs) {
  if (pairs.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "generator table needs at least the theta pair");
  }
  if (2 * pairs.size() > static_cast<std::size_t>(kMaxGenerators)) {
    throw Error(ErrorCode::kInvalidArgument, "too many generators");
  }
  std::shared_ptr<GeneratorTable> t(new GeneratorTable());
  std::set<std::string> seen;
  for (const auto& p : pairs) {
    for (const auto* n : {&p.plus, &p.minus}) {
      if (n->empty() || !seen.insert(*n).second) {
        throw Error(ErrorCode::kInvalidArgument,
                    "generator names must be distinct and non-empty: '" + *n + "'");
      }
    }
    int base = static_cast<int>(t->names_.size());
    t->names_.push_back(p.plus);
    t->names_.push_back(p.minus);
    t->partner_.push_back(base + 1);
    t->partner_.push_back(base);
  }
  t->pairs_ = std::move(pairs);
  return t;
}

std::shared_ptr<const GeneratorTable> GeneratorTable::standard(int eta_pairs) {
  std::vector<Pair> pairs{{"theta+", "theta-"}};
  for (int k = 0; k < eta_pairs; ++k) {
    std::string stem = k == 0 ? "eta" : "eta" + std::to_string(k + 1);
    pairs.push_back({stem + "+", stem + "-"});
  }
  return create(std::move(pairs));
}

int GeneratorTable::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) {
    throw Error(ErrorCode::kUnknownGenerator, "unknown generator '" + name + "'");
  }
  return static_cast<int>(it - names_.begin());
}

TablePtr unify_tables(const TablePtr& a, const TablePtr& b) {
  if (!a) return b;
  if (!b || a == b) return a;
  if (!(*a == *b)) {
    throw Error(ErrorCode::kTableMismatch, "operands use different generator tables");
  }
  return a;
}

namespace mask {

int product_sign(Mask a, Mask b) {
  int swaps = 0;
  while (b) {
    int j = __builtin_ctzll(b);
    b &= b - 1;
    Mask above = j == 63 ? Mask{0} : (a >> (j + 1));
    swaps += degree(above);
  }
  return (swaps & 1) ? -1 : 1;
}

std::pair<int, Mask> dagger(Mask m, const GeneratorTable& table) {
  // Reversed factor order, each factor replaced by its partner.
  std::vector<int> seq;
  for (Mask r = m; r; r &= r - 1) seq.push_back(__builtin_ctzll(r));
  std::reverse(seq.begin(), seq.end());
  Mask out = 0;
  for (int& g : seq) {
    g = table.partner(g);
    out |= Mask{1} << g;
  }
  int inversions = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] > seq[j]) ++inversions;
    }
  }
  return {(inversions & 1) ? -1 : 1, out};
}

std::pair<int, Mask> berezin(Mask m, int g) {
  Mask bit = Mask{1} << g;
  if (!(m & bit)) return {0, 0};
  int before = degree(m & (bit - 1));
  return {(before & 1) ? -1 : 1, m ^ bit};
}

}  // namespace mask

GrassmannElement::GrassmannElement(GaussianRational scalar, TablePtr table)
    : table_(std::move(table)) {
  if (!scalar.is_zero()) terms_.emplace_back(0, std::move(scalar));
}

GrassmannElement GrassmannElement::monomial(TablePtr table, Mask m,
                                            GaussianRational coeff) {
  GrassmannElement e;
  e.table_ = std::move(table);
  if (e.table_ && e.table_->size() < 64 && (m >> e.table_->size()) != 0) {
    throw Error(ErrorCode::kUnknownGenerator, "monomial uses undeclared generator");
  }
  if (!coeff.is_zero()) e.terms_.emplace_back(m, std::move(coeff));
  return e;
}

GrassmannElement GrassmannElement::generator(const TablePtr& table,
                                             const std::string& name) {
  return monomial(table, Mask{1} << table->index_of(name));
}

GrassmannElement GrassmannElement::from_terms(TablePtr table,
                                              std::vector<Term> terms) {
  GrassmannElement e;
  e.table_ = std::move(table);
  e.terms_ = std::move(terms);
  e.normalize();
  return e;
}

void GrassmannElement::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const Term& t) { return t.second.is_zero(); });
  terms_ = std::move(out);
}

GaussianRational GrassmannElement::coefficient(Mask m) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const Term& t, Mask key) { return t.first < key; });
  if (it != terms_.end() && it->first == m) return it->second;
  return {};
}

Parity GrassmannElement::parity() const {
  bool even = false;
  bool odd = false;
  for (const auto& [m, c] : terms_) {
    (mask::degree(m) & 1 ? odd : even) = true;
  }
  if (even && odd) return Parity::kMixed;
  return odd ? Parity::kOdd : Parity::kEven;
}

GrassmannElement GrassmannElement::dagger() const {
  GrassmannElement out;
  out.table_ = table_;
  for (const auto& [m, c] : terms_) {
    if (m == 0) {
      out.terms_.emplace_back(0, c.conj());
      continue;
    }
    auto [sign, dm] = mask::dagger(m, *table_);
    GaussianRational v = c.conj();
    if (sign < 0) v = -v;
    out.terms_.emplace_back(dm, std::move(v));
  }
  out.normalize();
  return out;
}

GrassmannElement GrassmannElement::berezin(int generator) const {
  if (!table_ || generator < 0 || generator >= table_->size()) {
    throw Error(ErrorCode::kUnknownGenerator, "berezin: generator not in table");
  }
  GrassmannElement out;
  out.table_ = table_;
  for (const auto& [m, c] : terms_) {
    auto [sign, dm] = mask::berezin(m, generator);
    if (sign == 0) continue;
    out.terms_.emplace_back(dm, sign > 0 ? c : -c);
  }
  out.normalize();
  return out;
}

GrassmannElement GrassmannElement::twist() const {
  GrassmannElement out = *this;
  for (auto& [m, c] : out.terms_) {
    if (mask::degree(m) & 1) c = -c;
  }
  return out;
}

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& o) {
  table_ = unify_tables(table_, o.table_);
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  normalize();
  return *this;
}

GrassmannElement& GrassmannElement::operator-=(const GrassmannElement& o) {
  return *this += -o;
}

GrassmannElement& GrassmannElement::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

GrassmannElement GrassmannElement::operator-() const {
  GrassmannElement out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

GrassmannElement operator*(const GrassmannElement& a, const GrassmannElement& b) {
  GrassmannElement out;
  out.table_ = unify_tables(a.table_, b.table_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      if (ma & mb) continue;
      GaussianRational v = ca * cb;
      if (mask::product_sign(ma, mb) < 0) v = -v;
      out.terms_.emplace_back(ma | mb, std::move(v));
    }
  }
  out.normalize();
  return out;
}

std::string GrassmannElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string coeff = c.to_string();
    if (!c.is_real() && sgn(c.re()) != 0) coeff = "(" + coeff + ")";
    if (!first) s += " + ";
    first = false;
    if (m == 0) {
      s += coeff;
      continue;
    }
    if (!(c == GaussianRational(1))) s += coeff + "*";
    for (Mask r = m; r; r &= r - 1) {
      int g = __builtin_ctzll(r);
      s += table_ ? table_->name(g) : "g" + std::to_string(g);
    }
  }
  return s;
}

}  // namespace scpn
