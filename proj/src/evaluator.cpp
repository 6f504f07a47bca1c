#include "specmeter/evaluator.hpp"

#include <unordered_map>

namespace specmeter {

namespace {

// Keyed on node identity so diamonds from expand_derived are labeled once.
using label_cache = std::unordered_map<const formula*, label_seq>;

const label_seq& label(const formula& f, const trace& t, label_cache& cache) {
  auto hit = cache.find(&f);
  if (hit != cache.end()) return hit->second;

  const std::size_t n = t.size();
  label_seq bits(n, false);
  switch (f.kind) {
    case op::const_true:
      bits.assign(n, true);
      break;
    case op::const_false:
      break;
    case op::atom:
      for (std::size_t i = 0; i < n; ++i) bits[i] = t.events[i].activity == f.symbol;
      break;
    case op::trace_start:
      bits[0] = true;
      break;
    case op::trace_end:
      bits[n - 1] = true;
      break;
    case op::lnot: {
      const auto& sub = label(*f.lhs, t, cache);
      for (std::size_t i = 0; i < n; ++i) bits[i] = !sub[i];
      break;
    }
    case op::land: {
      const auto& l = label(*f.lhs, t, cache);
      const auto& r = label(*f.rhs, t, cache);
      for (std::size_t i = 0; i < n; ++i) bits[i] = l[i] && r[i];
      break;
    }
    case op::lor: {
      const auto& l = label(*f.lhs, t, cache);
      const auto& r = label(*f.rhs, t, cache);
      for (std::size_t i = 0; i < n; ++i) bits[i] = l[i] || r[i];
      break;
    }
    case op::implies: {
      const auto& l = label(*f.lhs, t, cache);
      const auto& r = label(*f.rhs, t, cache);
      for (std::size_t i = 0; i < n; ++i) bits[i] = !l[i] || r[i];
      break;
    }
    case op::next: {  // false at the last instant
      const auto& sub = label(*f.lhs, t, cache);
      for (std::size_t i = 0; i + 1 < n; ++i) bits[i] = sub[i + 1];
      break;
    }
    case op::yesterday: {  // false at the first instant
      const auto& sub = label(*f.lhs, t, cache);
      for (std::size_t i = 1; i < n; ++i) bits[i] = sub[i - 1];
      break;
    }
    case op::until: {  // non-strict: u[i] = r[i] or (l[i] and u[i+1])
      const auto& l = label(*f.lhs, t, cache);
      const auto& r = label(*f.rhs, t, cache);
      bool acc = false;
      for (std::size_t i = n; i-- > 0;) {
        acc = r[i] || (l[i] && acc);
        bits[i] = acc;
      }
      break;
    }
    case op::since: {  // forward twin of until
      const auto& l = label(*f.lhs, t, cache);
      const auto& r = label(*f.rhs, t, cache);
      bool acc = false;
      for (std::size_t i = 0; i < n; ++i) {
        acc = r[i] || (l[i] && acc);
        bits[i] = acc;
      }
      break;
    }
    case op::eventually: {
      const auto& sub = label(*f.lhs, t, cache);
      bool acc = false;
      for (std::size_t i = n; i-- > 0;) {
        acc = acc || sub[i];
        bits[i] = acc;
      }
      break;
    }
    case op::once: {
      const auto& sub = label(*f.lhs, t, cache);
      bool acc = false;
      for (std::size_t i = 0; i < n; ++i) {
        acc = acc || sub[i];
        bits[i] = acc;
      }
      break;
    }
    case op::always: {
      const auto& sub = label(*f.lhs, t, cache);
      bool acc = true;
      for (std::size_t i = n; i-- > 0;) {
        acc = acc && sub[i];
        bits[i] = acc;
      }
      break;
    }
    case op::historically: {
      const auto& sub = label(*f.lhs, t, cache);
      bool acc = true;
      for (std::size_t i = 0; i < n; ++i) {
        acc = acc && sub[i];
        bits[i] = acc;
      }
      break;
    }
  }
  return cache.emplace(&f, std::move(bits)).first->second;
}

}  // namespace

label_seq label_formula(const formula& f, const trace& t) {
  if (t.size() == 0) return {};
  label_cache cache;
  return label(f, t, cache);
}

label_seq label_formula(const formula_ptr& f, const trace& t) {
  return label_formula(*f, t);
}

// Literal transcription of the per-instant semantics; quadratic on purpose so
// it shares no machinery with the sweeps above.
bool eval_at(const formula& f, const trace& t, std::size_t instant) {
  const std::size_t n = t.size();
  if (instant < 1 || instant > n) throw std::out_of_range("instant out of range");
  switch (f.kind) {
    case op::const_true:
      return true;
    case op::const_false:
      return false;
    case op::atom:
      return t.events[instant - 1].activity == f.symbol;
    case op::trace_start:
      return instant == 1;
    case op::trace_end:
      return instant == n;
    case op::lnot:
      return !eval_at(*f.lhs, t, instant);
    case op::land:
      return eval_at(*f.lhs, t, instant) && eval_at(*f.rhs, t, instant);
    case op::lor:
      return eval_at(*f.lhs, t, instant) || eval_at(*f.rhs, t, instant);
    case op::implies:
      return !eval_at(*f.lhs, t, instant) || eval_at(*f.rhs, t, instant);
    case op::next:
      return instant < n && eval_at(*f.lhs, t, instant + 1);
    case op::yesterday:
      return instant > 1 && eval_at(*f.lhs, t, instant - 1);
    case op::until:  // exists k >= i: rhs at k, lhs on [i, k)
      for (std::size_t k = instant; k <= n; ++k) {
        if (!eval_at(*f.rhs, t, k)) continue;
        bool all = true;
        for (std::size_t j = instant; j < k; ++j)
          if (!eval_at(*f.lhs, t, j)) { all = false; break; }
        if (all) return true;
      }
      return false;
    case op::since:  // exists k <= i: rhs at k, lhs on (k, i]
      for (std::size_t k = instant; k >= 1; --k) {
        if (!eval_at(*f.rhs, t, k)) continue;
        bool all = true;
        for (std::size_t j = k + 1; j <= instant; ++j)
          if (!eval_at(*f.lhs, t, j)) { all = false; break; }
        if (all) return true;
      }
      return false;
    case op::eventually:
      for (std::size_t k = instant; k <= n; ++k)
        if (eval_at(*f.lhs, t, k)) return true;
      return false;
    case op::once:
      for (std::size_t k = instant; k >= 1; --k)
        if (eval_at(*f.lhs, t, k)) return true;
      return false;
    case op::always:
      for (std::size_t k = instant; k <= n; ++k)
        if (!eval_at(*f.lhs, t, k)) return false;
      return true;
    case op::historically:
      for (std::size_t k = instant; k >= 1; --k)
        if (!eval_at(*f.lhs, t, k)) return false;
      return true;
  }
  return false;
}

}  // namespace specmeter
