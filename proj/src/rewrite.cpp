#include "qdc/rewrite.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qdc/errors.hpp"

namespace qdc {

namespace {

std::uint32_t pair_key(GenId a, GenId b) {
  return (static_cast<std::uint32_t>(a) << 16) | static_cast<std::uint32_t>(b);
}

}  // namespace

void RuleSet::add(Rule r) {
  if (r.lhs.empty()) throw OrientError("rule with empty lhs");
  for (const auto& [w, c] : r.rhs.terms())
    if (!word_less(w, r.lhs))
      throw OrientError("rule is not order-decreasing (source " + r.source + ")");
  std::size_t idx = rules_.size();
  bool fresh = false;
  if (r.lhs.size() == 1)
    fresh = single_.emplace(r.lhs[0], idx).second;
  else if (r.lhs.size() == 2)
    fresh = pairs_.emplace(pair_key(r.lhs[0], r.lhs[1]), idx).second;
  else
    fresh = longer_.emplace(r.lhs, idx).second;
  if (!fresh) throw OrientError("duplicate rule lhs (source " + r.source + ")");
  max_lhs_len_ = std::max(max_lhs_len_, r.lhs.size());
  rules_.push_back(std::move(r));
}

const Rule* RuleSet::match(const Word& w, std::size_t pos, std::size_t len) const {
  if (pos + len > w.size()) return nullptr;
  if (len == 1) {
    auto it = single_.find(w[pos]);
    return it == single_.end() ? nullptr : &rules_[it->second];
  }
  if (len == 2) {
    auto it = pairs_.find(pair_key(w[pos], w[pos + 1]));
    return it == pairs_.end() ? nullptr : &rules_[it->second];
  }
  if (longer_.empty()) return nullptr;
  Word key(w.begin() + static_cast<std::ptrdiff_t>(pos),
           w.begin() + static_cast<std::ptrdiff_t>(pos + len));
  auto it = longer_.find(key);
  return it == longer_.end() ? nullptr : &rules_[it->second];
}

namespace {

struct Redex {
  std::size_t pos;
  const Rule* rule;
};

// Redex according to the strategy; nullopt for a normal word.
std::optional<Redex> find_redex(const Word& w, const RuleSet& rules, const ReduceOptions& opt) {
  std::size_t maxlen = std::max<std::size_t>(rules.max_lhs_len(), 1);
  auto scan_at = [&](std::size_t pos) -> const Rule* {
    for (std::size_t len = 1; len <= maxlen && pos + len <= w.size(); ++len)
      if (const Rule* r = rules.match(w, pos, len)) return r;
    return nullptr;
  };
  switch (opt.strategy) {
    case Strategy::leftmost:
      for (std::size_t pos = 0; pos < w.size(); ++pos)
        if (const Rule* r = scan_at(pos)) return Redex{pos, r};
      return std::nullopt;
    case Strategy::rightmost:
      for (std::size_t pos = w.size(); pos-- > 0;)
        if (const Rule* r = scan_at(pos)) return Redex{pos, r};
      return std::nullopt;
    case Strategy::seeded: {
      std::vector<Redex> all;
      for (std::size_t pos = 0; pos < w.size(); ++pos)
        if (const Rule* r = scan_at(pos)) all.push_back(Redex{pos, r});
      if (all.empty()) return std::nullopt;
      std::size_t h = WordHash{}(w) ^ static_cast<std::size_t>(opt.seed * 0x9e3779b97f4a7c15ull);
      return all[h % all.size()];
    }
  }
  return std::nullopt;
}

}  // namespace

Polynomial reduce(const Polynomial& p, const RuleSet& rules, const ReduceOptions& opt) {
  if (p.n() != rules.n()) throw MixedContextError("reduce across different N");
  // Work terms processed in descending word order: every rewrite inserts
  // strictly smaller words, so each distinct word is expanded at most once.
  std::map<Word, Scalar, WordGreater> work(p.terms().begin(), p.terms().end());
  Polynomial out(p.n());
  std::uint64_t steps = 0;
  while (!work.empty()) {
    auto it = work.begin();
    Word w = it->first;
    Scalar c = std::move(it->second);
    work.erase(it);
    auto redex = find_redex(w, rules, opt);
    if (!redex) {
      out.add_term(w, c);
      continue;
    }
    if (++steps > opt.step_cap)
      throw ReduceLimitError("reduce: step cap of " + std::to_string(opt.step_cap) +
                             " rule applications exceeded");
    if (opt.deadline && (steps & 0xFFu) == 0 &&
        std::chrono::steady_clock::now() > *opt.deadline)
      throw BudgetExceeded("reduce: time budget exhausted");
    const Rule& rule = *redex->rule;
    std::size_t pos = redex->pos, len = rule.lhs.size();
    for (const auto& [rw, rc] : rule.rhs.terms()) {
      Word nw;
      nw.reserve(w.size() - len + rw.size());
      nw.insert(nw.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
      nw.insert(nw.end(), rw.begin(), rw.end());
      nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + len), w.end());
      Scalar nc = c * rc;
      auto [jt, inserted] = work.emplace(std::move(nw), nc);
      if (!inserted) {
        jt->second = jt->second + nc;
        if (jt->second.is_zero()) work.erase(jt);
      }
    }
  }
  return out;
}

OrientResult orient_relations(const std::vector<Polynomial>& relations, int n,
                              const std::string& source) {
  // Column order: words descending, so column 0 is the largest word.
  std::map<Word, int, WordGreater> col_of;
  for (const auto& rel : relations)
    for (const auto& [w, c] : rel.terms()) col_of.emplace(w, 0);
  std::vector<Word> word_of;
  word_of.reserve(col_of.size());
  {
    int c = 0;
    for (auto& [w, idx] : col_of) {
      idx = c++;
      word_of.push_back(w);
    }
  }

  using Row = std::vector<std::pair<int, Scalar>>;  // sorted by column
  auto sub_scaled = [n](const Row& a, const Row& b, const Scalar& f) {
    // a - f*b
    Row r;
    r.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
      if (ia->first == ib->first) {
        Scalar v = ia->second - f * ib->second;
        if (!v.is_zero()) r.push_back({ia->first, std::move(v)});
        ++ia;
        ++ib;
      } else if (ia->first < ib->first) {
        r.push_back(*ia++);
      } else {
        r.push_back({ib->first, -(f * ib->second)});
        ++ib;
      }
    }
    for (; ia != a.end(); ++ia) r.push_back(*ia);
    for (; ib != b.end(); ++ib) r.push_back({ib->first, -(f * ib->second)});
    return r;
  };

  std::map<int, Row> pivot_rows;  // pivot column -> normalized row
  for (const auto& rel : relations) {
    if (rel.is_zero()) continue;
    Row row;
    for (const auto& [w, c] : rel.terms()) row.push_back({col_of[w], c});
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // Eliminate against established pivots, smallest column (largest word) first.
    while (!row.empty()) {
      int lead = row.front().first;
      auto it = pivot_rows.find(lead);
      if (it == pivot_rows.end()) break;
      row = sub_scaled(row, it->second, row.front().second);
    }
    if (row.empty()) continue;  // dependent relation
    // Normalize so the pivot coefficient is 1.
    Scalar inv = row.front().second.inverse();
    for (auto& [c, v] : row) v = v * inv;
    pivot_rows.emplace(row.front().first, std::move(row));
  }

  // Back-substitution: process pivots from smallest word (largest column) up,
  // so every tail entry referring to another pivot sees a clean row.
  for (auto it = pivot_rows.rbegin(); it != pivot_rows.rend(); ++it) {
    Row& row = it->second;
    for (std::size_t k = 1; k < row.size();) {
      auto jt = pivot_rows.find(row[k].first);
      if (jt == pivot_rows.end()) {
        ++k;
        continue;
      }
      row = sub_scaled(row, jt->second, row[k].second);
      // Restart past the pivot column; earlier entries are untouched.
    }
  }

  OrientResult out;
  std::vector<int> pivot_cols;
  for (auto& [col, row] : pivot_rows) {
    const Word& lhs = word_of[static_cast<std::size_t>(col)];
    if (lhs.empty())
      throw OrientError("unorientable relation family " + source +
                        ": a relation reduces to a nonzero constant");
    Polynomial rhs(n);
    for (std::size_t k = 1; k < row.size(); ++k)
      rhs.add_term(word_of[static_cast<std::size_t>(row[k].first)], -row[k].second);
    out.rules.push_back(Rule{lhs, std::move(rhs), source});
    pivot_cols.push_back(col);
  }
  // Irreducible degree-2 words over every generator the relations mention.
  std::set<GenId> gens;
  for (const auto& rel : relations)
    for (const auto& [w, c] : rel.terms())
      for (GenId g : w) gens.insert(g);
  std::set<Word, WordGreater> lhs_set;
  for (const auto& r : out.rules) lhs_set.insert(r.lhs);
  for (GenId a : gens)
    for (GenId b : gens) {
      Word w{a, b};
      if (!lhs_set.count(w)) out.good_words.push_back(w);
    }
  std::sort(out.good_words.begin(), out.good_words.end(),
            [](const Word& a, const Word& b) { return word_less(a, b); });
  return out;
}

std::vector<CriticalPair> overlap_check(const RuleSet& rules, int max_degree,
                                        const ReduceOptions& opt) {
  std::vector<CriticalPair> unresolved;
  const auto& rs = rules.rules();
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const Word& u = rs[i].lhs;
    for (std::size_t j = 0; j < rs.size(); ++j) {
      const Word& v = rs[j].lhs;
      // Superpose v at offset s inside/over u. s = 0 with |v| < |u| is an
      // inclusion ambiguity; s >= 1 with v overhanging u is a proper overlap.
      for (std::size_t s = (i == j ? 1 : 0); s < u.size(); ++s) {
        if (s == 0 && v.size() >= u.size()) continue;
        std::size_t k = std::min(u.size() - s, v.size());
        if (!std::equal(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k),
                        u.begin() + static_cast<std::ptrdiff_t>(s)))
          continue;
        Word w = u;
        for (std::size_t t = u.size() - s; t < v.size(); ++t) w.push_back(v[t]);
        if (static_cast<int>(w.size()) > max_degree) continue;
        // Reduce via rule i at position 0 and via rule j at position s.
        Word tail_u(w.begin() + static_cast<std::ptrdiff_t>(u.size()), w.end());
        Polynomial via_u =
            rs[i].rhs * Polynomial::from_word(tail_u, Scalar::one(rules.n()));
        Word head_v(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(s));
        Word tail_v(w.begin() + static_cast<std::ptrdiff_t>(s + v.size()), w.end());
        Polynomial via_v = Polynomial::from_word(head_v, Scalar::one(rules.n())) * rs[j].rhs *
                           Polynomial::from_word(tail_v, Scalar::one(rules.n()));
        Polynomial diff = reduce(via_u - via_v, rules, opt);
        if (!diff.is_zero())
          unresolved.push_back(CriticalPair{std::move(w), i, j, std::move(diff)});
        if (opt.deadline && std::chrono::steady_clock::now() > *opt.deadline)
          throw BudgetExceeded("overlap_check: time budget exhausted");
      }
    }
  }
  return unresolved;
}

CompletionResult complete_bounded(const RuleSet& rules, int max_degree, int max_rules,
                                  const ReduceOptions& opt) {
  CompletionResult res{rules, false, 0};
  for (;;) {
    auto pairs = overlap_check(res.rules, max_degree, opt);
    if (pairs.empty()) return res;
    bool grew = false;
    for (auto& pr : pairs) {
      Polynomial nf = reduce(pr.difference, res.rules, opt);
      if (nf.is_zero()) continue;
      if (res.added >= max_rules) {
        res.truncated = true;
        return res;
      }
      auto lead = nf.terms().begin();
      Polynomial tail(nf.n());
      Scalar inv = lead->second.inverse();
      for (auto it = std::next(lead); it != nf.terms().end(); ++it)
        tail.add_term(it->first, -(inv * it->second));
      res.rules.add(Rule{lead->first, std::move(tail), "completion"});
      ++res.added;
      grew = true;
    }
    if (!grew) return res;
  }
}

}  // namespace qdc
