#include "hodef/domains.hpp"

#include <algorithm>

namespace hodef {

SemValue SemValue::individual(Expr term) {
  if (!term.type().is_iota() || !term.is_ground())
    throw TypeMismatchError("individual value needs a ground first-order term");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Individual;
  impl->ind = std::move(term);
  return SemValue(std::move(impl));
}

SemValue SemValue::truth(bool value) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Truth;
  impl->truth = value;
  return SemValue(std::move(impl));
}

SemValue SemValue::rel(std::vector<ArgType> arg_types,
                       std::vector<Tuple> minimal_true) {
  if (arg_types.empty())
    throw TypeMismatchError("relation value needs at least one argument");
  std::sort(minimal_true.begin(), minimal_true.end(),
            [](const Tuple& a, const Tuple& b) {
              for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
                if (int c = a[i].compare(b[i])) return c < 0;
              return a.size() < b.size();
            });
  std::vector<Tuple> minimal;
  for (std::size_t i = 0; i < minimal_true.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < minimal_true.size() && !dominated; ++j)
      if (j != i && tuple_leq(minimal_true[j], minimal_true[i]))
        dominated = j < i || !tuple_leq(minimal_true[i], minimal_true[j]);
    if (!dominated) minimal.push_back(minimal_true[i]);
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Rel;
  impl->arg_types = std::move(arg_types);
  impl->minimal = std::move(minimal);
  return SemValue(std::move(impl));
}

int SemValue::compare(const SemValue& other) const {
  if (kind() != other.kind())
    return static_cast<int>(kind()) < static_cast<int>(other.kind()) ? -1 : 1;
  switch (kind()) {
    case Kind::Individual:
      return ind().compare(other.ind());
    case Kind::Truth:
      if (truth_value() == other.truth_value()) return 0;
      return truth_value() ? 1 : -1;
    case Kind::Rel: {
      const auto& ta = rel_args();
      const auto& tb = other.rel_args();
      if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
      for (std::size_t i = 0; i < ta.size(); ++i)
        if (int c = ta[i].compare(tb[i])) return c;
      const auto& ma = minimal_true();
      const auto& mb = other.minimal_true();
      for (std::size_t i = 0; i < ma.size() && i < mb.size(); ++i) {
        const Tuple& x = ma[i];
        const Tuple& y = mb[i];
        for (std::size_t j = 0; j < x.size(); ++j)
          if (int c = x[j].compare(y[j])) return c;
      }
      if (ma.size() != mb.size()) return ma.size() < mb.size() ? -1 : 1;
      return 0;
    }
  }
  return 0;
}

std::string SemValue::str() const {
  switch (kind()) {
    case Kind::Individual:
      return ind().str();
    case Kind::Truth:
      return truth_value() ? "true" : "false";
    case Kind::Rel: {
      std::string s = "{";
      const auto& ts = minimal_true();
      for (std::size_t i = 0; i < ts.size(); ++i) {
        if (i) s += ", ";
        s += "(";
        for (std::size_t j = 0; j < ts[i].size(); ++j) {
          if (j) s += ", ";
          s += ts[i][j].str();
        }
        s += ")";
      }
      return s + "}";
    }
  }
  return "?";
}

bool leq(const SemValue& a, const SemValue& b) {
  switch (a.kind()) {
    case SemValue::Kind::Individual:
      return a.ind() == b.ind();
    case SemValue::Kind::Truth:
      return !a.truth_value() || b.truth_value();
    case SemValue::Kind::Rel:
      for (const Tuple& ma : a.minimal_true()) {
        bool covered = false;
        for (const Tuple& mb : b.minimal_true())
          if (tuple_leq(mb, ma)) {
            covered = true;
            break;
          }
        if (!covered) return false;
      }
      return true;
  }
  return false;
}

bool tuple_leq(const Tuple& a, const Tuple& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!leq(a[i], b[i])) return false;
  return true;
}

bool rel_true(const SemValue& rel, const Tuple& args) {
  for (const Tuple& m : rel.minimal_true())
    if (tuple_leq(m, args)) return true;
  return false;
}

SemValue apply(const SemValue& rel, const SemValue& arg) {
  const auto& types = rel.rel_args();
  if (types.size() == 1) {
    bool value = false;
    for (const Tuple& m : rel.minimal_true())
      if (leq(m[0], arg)) {
        value = true;
        break;
      }
    return SemValue::truth(value);
  }
  std::vector<ArgType> rest(types.begin() + 1, types.end());
  std::vector<Tuple> projected;
  for (const Tuple& m : rel.minimal_true())
    if (leq(m[0], arg)) projected.emplace_back(m.begin() + 1, m.end());
  return SemValue::rel(std::move(rest), std::move(projected));
}

SemValue bottom_value(const ArgType& predicate_type) {
  if (predicate_type.is_o()) return SemValue::truth(false);
  return SemValue::rel(predicate_type.flat_args(), {});
}

SemValue top_value(const ArgType& predicate_type, const ActiveUniverse& u) {
  if (predicate_type.is_o()) return SemValue::truth(true);
  std::vector<ArgType> args = predicate_type.flat_args();
  std::vector<std::vector<SemValue>> coord_minima;
  for (const ArgType& a : args) {
    std::vector<SemValue> mins;
    if (a.is_iota()) {
      for (const Expr& t : u.terms(a)) mins.push_back(SemValue::individual(t));
    } else {
      mins.push_back(bottom_value(a));
    }
    if (mins.empty()) return SemValue::rel(std::move(args), {});
    coord_minima.push_back(std::move(mins));
  }
  std::vector<Tuple> tuples;
  std::vector<std::size_t> idx(args.size(), 0);
  while (true) {
    Tuple t;
    for (std::size_t i = 0; i < idx.size(); ++i)
      t.push_back(coord_minima[i][idx[i]]);
    tuples.push_back(std::move(t));
    std::size_t j = 0;
    for (; j < idx.size(); ++j) {
      if (++idx[j] < coord_minima[j].size()) break;
      idx[j] = 0;
    }
    if (j == idx.size()) break;
  }
  return SemValue::rel(std::move(args), std::move(tuples));
}

DomainCache::DomainCache(const ActiveUniverse& u, const Caps& caps)
    : u_(&u), caps_(caps) {}

const std::vector<SemValue>& DomainCache::domain(const ArgType& t) {
  auto it = cache_.find(t);
  if (it != cache_.end()) return it->second;

  std::vector<SemValue> out;
  if (t.is_iota()) {
    for (const Expr& term : u_->terms(t)) out.push_back(SemValue::individual(term));
  } else if (t.is_o()) {
    out.push_back(SemValue::truth(false));
    out.push_back(SemValue::truth(true));
  } else {
    std::vector<ArgType> args = t.flat_args();
    std::vector<Tuple> tuples = tuple_space(t);
    std::int64_t n = static_cast<std::int64_t>(tuples.size());
    if (n + 1 > caps_.domain_values) throw DomainOverflowError(t.str(), n + 1);

    // Antichains of the tuple poset, enumerated as increasing index chains of
    // pairwise incomparable tuples. With tuples sorted, the visit order is
    // already the canonical value order.
    std::vector<char> comparable;
    bool use_matrix = n <= 4096;
    if (use_matrix) {
      comparable.assign(static_cast<std::size_t>(n) * n, 0);
      for (std::int64_t i = 0; i < n; ++i)
        for (std::int64_t j = 0; j < n; ++j)
          comparable[i * n + j] =
              tuple_leq(tuples[i], tuples[j]) || tuple_leq(tuples[j], tuples[i]);
    }
    auto incomp = [&](std::size_t i, std::size_t j) {
      if (use_matrix) return comparable[i * n + j] == 0;
      return !tuple_leq(tuples[i], tuples[j]) && !tuple_leq(tuples[j], tuples[i]);
    };

    std::int64_t count = 0;
    std::vector<std::size_t> chosen;
    std::vector<Tuple> current;
    auto emit = [&]() {
      if (++count > caps_.domain_values)
        throw DomainOverflowError(t.str(), count);
      out.push_back(SemValue::rel(args, current));
    };
    auto rec = [&](auto&& self, std::size_t start) -> void {
      emit();
      for (std::size_t i = start; i < tuples.size(); ++i) {
        bool ok = true;
        for (std::size_t c : chosen)
          if (!incomp(c, i)) {
            ok = false;
            break;
          }
        if (!ok) continue;
        chosen.push_back(i);
        current.push_back(tuples[i]);
        self(self, i + 1);
        chosen.pop_back();
        current.pop_back();
      }
    };
    rec(rec, 0);
  }
  return cache_.emplace(t, std::move(out)).first->second;
}

std::vector<Tuple> DomainCache::tuple_space(const ArgType& predicate_type) {
  std::vector<ArgType> args = predicate_type.flat_args();
  std::vector<const std::vector<SemValue>*> doms;
  std::int64_t n = 1;
  for (const ArgType& a : args) {
    doms.push_back(&domain(a));
    n *= static_cast<std::int64_t>(doms.back()->size());
    if (doms.back()->empty()) return {};
    if (n > caps_.domain_values)
      throw DomainOverflowError(predicate_type.str(), n);
  }
  std::vector<Tuple> out;
  out.reserve(static_cast<std::size_t>(n));
  if (args.empty()) {
    out.push_back(Tuple{});  // empty product: exactly the empty tuple
    return out;
  }
  std::vector<std::size_t> idx(args.size(), 0);
  while (true) {
    Tuple t;
    t.reserve(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) t.push_back((*doms[i])[idx[i]]);
    out.push_back(std::move(t));
    std::size_t j = idx.size();
    while (j > 0) {
      --j;
      if (++idx[j] < doms[j]->size()) break;
      idx[j] = 0;
      if (j == 0) return out;
    }
  }
}

}  // namespace hodef
