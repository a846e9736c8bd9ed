#include "hodef/bezem.hpp"

#include <algorithm>
#include <deque>

namespace hodef {

bool GroundModel::truth(const Expr& atom) const {
  if (atom.kind() == ExprKind::Eq) return atom.args()[0] == atom.args()[1];
  return true_atoms.count(atom) != 0;
}

bool GroundModel::in_scope(const Expr& atom) const {
  if (atom.kind() == ExprKind::Eq) return true;
  return std::binary_search(scope.begin(), scope.end(), atom);
}

std::vector<Expr> GroundModel::true_in_scope() const {
  std::vector<Expr> out;
  for (const Expr& a : scope)
    if (true_atoms.count(a)) out.push_back(a);
  return out;
}

GroundModel lfp_ground(const std::vector<GroundClause>& clauses,
                       const ActiveUniverse& u, const Caps&) {
  GroundModel m;
  m.depth = u.depth();
  m.scope = u.atoms();

  std::map<Expr, std::vector<std::size_t>> watchers;
  std::vector<std::size_t> remaining(clauses.size(), 0);
  std::deque<Expr> queue;
  auto derive = [&](const Expr& atom) {
    if (m.true_atoms.insert(atom).second) queue.push_back(atom);
  };
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    std::set<Expr> body(clauses[i].body.begin(), clauses[i].body.end());
    remaining[i] = body.size();
    if (body.empty()) {
      derive(clauses[i].head);
      continue;
    }
    for (const Expr& b : body) watchers[b].push_back(i);
  }
  while (!queue.empty()) {
    Expr atom = std::move(queue.front());
    queue.pop_front();
    auto it = watchers.find(atom);
    if (it == watchers.end()) continue;
    for (std::size_t ci : it->second)
      if (--remaining[ci] == 0) derive(clauses[ci].head);
  }
  return m;
}

GroundModel lfp_ground_naive(const std::vector<GroundClause>& clauses,
                             const ActiveUniverse& u, const Caps& caps) {
  GroundModel m;
  m.depth = u.depth();
  m.scope = u.atoms();
  int rounds = 0;
  bool changed = true;
  while (changed) {
    if (++rounds > caps.lfp_iterations)
      throw IterationCapError("ground fixed point exceeded " +
                              std::to_string(caps.lfp_iterations) + " rounds");
    changed = false;
    for (const GroundClause& c : clauses) {
      if (m.true_atoms.count(c.head)) continue;
      bool all = true;
      for (const Expr& b : c.body)
        if (!m.true_atoms.count(b)) {
          all = false;
          break;
        }
      if (all) {
        m.true_atoms.insert(c.head);
        changed = true;
      }
    }
  }
  return m;
}

DeepenResult lfp_deepening(const Program& p, const Expr& atom, int k0,
                           int kmax, const Caps& caps) {
  DeepenResult res;
  std::vector<Expr> window;  // the k0 atom window, fixed across rungs
  std::vector<Expr> prev;    // its true part at the previous rung
  for (int k = k0; k <= kmax; ++k) {
    ActiveUniverse u(p, k, caps);
    std::vector<GroundClause> gcs = ground_instantiation(p, u, caps);
    GroundModel m = lfp_ground(gcs, u, caps);
    res.depth_reached = k;
    res.ground_clauses = static_cast<std::int64_t>(gcs.size());
    if (k == k0) {
      window = m.scope;
      if (!m.in_scope(atom))
        throw TypeMismatchError("atom " + atom.str() +
                                " outside the depth-" + std::to_string(k0) +
                                " window");
    }
    if (m.truth(atom)) {
      res.value = true;
      res.settled = true;
      return res;
    }
    std::vector<Expr> cur;
    for (const Expr& a : window)
      if (m.true_atoms.count(a)) cur.push_back(a);
    if (k > k0 && cur == prev) {
      res.settled = true;  // the window saturated without deriving the atom
      return res;
    }
    prev = std::move(cur);
  }
  return res;
}

GroundModelCheck is_ground_model(const GroundModel& m,
                                 const std::vector<GroundClause>& clauses) {
  GroundModelCheck rep;
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    const GroundClause& c = clauses[i];
    bool scoped = m.in_scope(c.head);
    for (const Expr& b : c.body) scoped = scoped && m.in_scope(b);
    if (!scoped) {
      ++rep.skipped;
      continue;
    }
    ++rep.checked;
    bool all = true;
    for (const Expr& b : c.body)
      if (!m.truth(b)) {
        all = false;
        break;
      }
    if (all && !m.truth(c.head)) rep.violations.push_back(i);
  }
  return rep;
}

bool PrecRelation::prec(std::size_t i, std::size_t j) const {
  return table[i * terms.size() + j] != 0;
}

bool PrecRelation::prec_terms(const Expr& a, const Expr& b) const {
  auto ia = std::lower_bound(terms.begin(), terms.end(), a);
  auto ib = std::lower_bound(terms.begin(), terms.end(), b);
  if (ia == terms.end() || *ia != a || ib == terms.end() || *ib != b)
    throw TypeMismatchError("term outside the bounded universe");
  return prec(static_cast<std::size_t>(ia - terms.begin()),
              static_cast<std::size_t>(ib - terms.begin()));
}

PrecTable::PrecTable(const GroundModel& m, const ActiveUniverse& u)
    : m_(&m), u_(&u) {}

const PrecRelation& PrecTable::at(const ArgType& t) {
  auto it = rels_.find(t);
  if (it != rels_.end()) return it->second;

  PrecRelation rel;
  rel.type = t;
  rel.terms = u_->terms(t);
  std::size_t n = rel.terms.size();
  rel.table.assign(n * n, 0);
  if (t.is_iota()) {
    for (std::size_t i = 0; i < n; ++i) rel.table[i * n + i] = 1;
  } else if (t.is_o()) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        rel.table[i * n + j] = !m_->truth(rel.terms[i]) || m_->truth(rel.terms[j]);
  } else {
    const std::vector<Expr>& args = u_->terms(t.arg());
    const ArgType result = t.result();
    const PrecRelation* sub = result.is_o() ? nullptr : &at(result);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        bool holds = true;
        for (const Expr& d : args) {
          Expr x = Expr::app(rel.terms[i], d);
          Expr y = Expr::app(rel.terms[j], d);
          if (result.is_o()) {
            if (m_->truth(x) && !m_->truth(y)) {
              holds = false;
              break;
            }
          } else if (x.depth() > u_->depth() || y.depth() > u_->depth()) {
            ++rel.skipped;  // unjudgeable at this bound, treated as holding
          } else if (!sub->prec_terms(x, y)) {
            holds = false;
            break;
          }
        }
        rel.table[i * n + j] = holds;
      }
  }
  return rels_.emplace(t, std::move(rel)).first->second;
}

PrecMonotonicityReport check_prec_monotonicity(const GroundModel& m,
                                               const ActiveUniverse& u) {
  PrecMonotonicityReport rep;
  PrecTable tables(m, u);
  for (const ArgType& t : u.types()) {
    if (!t.is_arrow()) continue;
    const ArgType result = t.result();
    const PrecRelation& rt = tables.at(t);
    const PrecRelation& ra = tables.at(t.arg());
    const PrecRelation* sub = result.is_o() ? nullptr : &tables.at(result);
    for (std::size_t i = 0; i < rt.terms.size(); ++i)
      for (std::size_t j = 0; j < rt.terms.size(); ++j) {
        if (!rt.prec(i, j)) continue;
        for (std::size_t di = 0; di < ra.terms.size(); ++di)
          for (std::size_t dj = 0; dj < ra.terms.size(); ++dj) {
            if (!ra.prec(di, dj)) continue;
            Expr x = Expr::app(rt.terms[i], ra.terms[di]);
            Expr y = Expr::app(rt.terms[j], ra.terms[dj]);
            if (result.is_o()) {
              ++rep.checked;
              if (m.truth(x) && !m.truth(y))
                rep.violations.push_back(x.str() + " true but " + y.str() +
                                         " false");
            } else if (x.depth() > u.depth() || y.depth() > u.depth()) {
              ++rep.skipped;
            } else {
              ++rep.checked;
              if (!sub->prec_terms(x, y))
                rep.violations.push_back(x.str() + " not below " + y.str());
            }
          }
      }
  }
  return rep;
}

ExtensionalityReport check_extensionality(const GroundModel& m,
                                          const ActiveUniverse& u) {
  ExtensionalityReport rep;
  PrecTable tables(m, u);
  for (const Expr& atom : m.true_in_scope()) {
    for (const auto& [path, sub] : argument_subterms(atom)) {
      const PrecRelation& rel = tables.at(sub.type());
      for (const Expr& other : rel.terms) {
        if (other == sub) continue;
        if (!rel.prec_terms(sub, other) || !rel.prec_terms(other, sub))
          continue;
        Expr replaced = replace_at(atom, path, other);
        if (replaced.depth() > u.depth() + 1) {
          ++rep.skipped;
          continue;
        }
        ++rep.checked;
        if (!m.truth(replaced))
          rep.violations.push_back(atom.str() + " true but " +
                                   replaced.str() + " false after " +
                                   sub.str() + " ~ " + other.str());
      }
    }
  }
  return rep;
}

}  // namespace hodef
