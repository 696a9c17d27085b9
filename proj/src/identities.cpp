#include "dotdepth/identities.hpp"

#include <map>
#include <set>
#include <sstream>

namespace dotdepth {

std::string equation_name(Equation eq) {
  switch (eq) {
    case Equation::BHalf: return "B_HALF";
    case Equation::Knast: return "KNAST";
    case Equation::LR: return "LR";
  }
  return "?";
}

namespace {

struct Sides {
  Element lhs, rhs;
};

Sides b_half_sides(const FiniteSemigroup& S, Element x, Element y) {
  Element o = omega_power(S, x);
  return {S.mul(S.mul(o, y), o), o};
}

Sides knast_sides(const FiniteSemigroup& S, Element e, Element f, Element x, Element y, Element s, Element t) {
  Element exf = S.mul(S.mul(e, x), f);
  Element esf = S.mul(S.mul(e, s), f);
  Element A = omega_power(S, S.mul(exf, y));
  Element B = omega_power(S, S.mul(t, esf));
  return {S.mul(S.mul(A, exf), B), S.mul(S.mul(A, esf), B)};
}

Sides lr_sides(const FiniteSemigroup& S, Element e, Element x, Element y) {
  Element exe = S.mul(S.mul(e, x), e);
  Element z = omega_power(S, S.mul(exe, S.mul(y, e)));
  return {S.mul(z, exe), z};
}

}  // namespace

EquationResult check_b_half(const FiniteSemigroup& S) {
  if (!S.has_order())
    throw PreconditionError("x^w y x^w <= x^w needs an ordered semigroup; attach an order (equality is not assumed)");
  for (Element x = 0; x < S.size(); ++x)
    for (Element y = 0; y < S.size(); ++y) {
      auto [lhs, rhs] = b_half_sides(S, x, y);
      if (!S.leq(lhs, rhs)) return {false, EquationWitness{Equation::BHalf, {{"x", x}, {"y", y}}, lhs, rhs, false}};
    }
  return {};
}

EquationResult check_knast(const FiniteSemigroup& S, std::size_t cap) {
  const auto n = S.size();
  if (n > cap)
    throw ResourceError("Knast check limited to semigroups with at most " + std::to_string(cap) + " elements (got " +
                        std::to_string(n) + ")");
  const auto idem = idempotents(S);
  std::vector<Element> omega(n);
  for (Element x = 0; x < n; ++x) omega[x] = omega_power(S, x);

  for (auto e : idem)
    for (auto f : idem) {
      // Distinct (A, exf) and (esf, B) pairs; the identity only depends on those.
      std::set<std::pair<Element, Element>> left, right;
      for (Element x = 0; x < n; ++x) {
        Element exf = S.mul(S.mul(e, x), f);
        for (Element y = 0; y < n; ++y) left.emplace(omega[S.mul(exf, y)], exf);
      }
      for (Element s = 0; s < n; ++s) {
        Element esf = S.mul(S.mul(e, s), f);
        for (Element t = 0; t < n; ++t) right.emplace(esf, omega[S.mul(t, esf)]);
      }
      bool ok = true;
      for (auto [A, exf] : left) {
        for (auto [esf, B] : right)
          if (S.mul(S.mul(A, exf), B) != S.mul(S.mul(A, esf), B)) {
            ok = false;
            break;
          }
        if (!ok) break;
      }
      if (ok) continue;
      // Smallest failing (x, y, s, t) for this (e, f).
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
          for (Element s = 0; s < n; ++s)
            for (Element t = 0; t < n; ++t) {
              auto [lhs, rhs] = knast_sides(S, e, f, x, y, s, t);
              if (lhs != rhs)
                return {false, EquationWitness{Equation::Knast,
                                               {{"e", e}, {"f", f}, {"x", x}, {"y", y}, {"s", s}, {"t", t}},
                                               lhs,
                                               rhs,
                                               false}};
            }
      throw InternalError("Knast pair check failed but no witness was found");
    }
  return {};
}

EquationResult check_lr(const FiniteSemigroup& S) {
  for (auto e : idempotents(S))
    for (Element x = 0; x < S.size(); ++x)
      for (Element y = 0; y < S.size(); ++y) {
        auto [lhs, rhs] = lr_sides(S, e, x, y);
        if (lhs != rhs) return {false, EquationWitness{Equation::LR, {{"e", e}, {"x", x}, {"y", y}}, lhs, rhs, false}};
      }
  return {};
}

bool revalidate(const FiniteSemigroup& S, const EquationWitness& w) {
  std::map<std::string, Element> v(w.assignment.begin(), w.assignment.end());
  auto get = [&](const char* name) { return v.at(name); };
  Sides sides{};
  bool holds = false;
  try {
    switch (w.equation) {
      case Equation::BHalf:
        sides = b_half_sides(S, get("x"), get("y"));
        holds = S.leq(sides.lhs, sides.rhs);
        break;
      case Equation::Knast:
        if (!is_idempotent(S, get("e")) || !is_idempotent(S, get("f"))) return false;
        sides = knast_sides(S, get("e"), get("f"), get("x"), get("y"), get("s"), get("t"));
        holds = sides.lhs == sides.rhs;
        break;
      case Equation::LR:
        if (!is_idempotent(S, get("e"))) return false;
        sides = lr_sides(S, get("e"), get("x"), get("y"));
        holds = sides.lhs == sides.rhs;
        break;
    }
  } catch (const std::out_of_range&) {
    return false;
  }
  return sides.lhs == w.lhs && sides.rhs == w.rhs && holds == w.holds;
}

// ------------------------------------------------------------------ suites

SuiteReport suite_class_inclusions(const FiniteSemigroup& S, InclusionVerdicts* verdicts) {
  SuiteReport r{"class-inclusions", true, 1, {}};
  InclusionVerdicts v{check_b_half(S).holds, check_knast(S).holds, check_lr(S).holds};
  if (verdicts) *verdicts = v;
  std::ostringstream os;
  os << std::boolalpha << "(b_half, knast, lr) = (" << v.bHalf << ", " << v.knast << ", " << v.lr << ")";
  r.detail = os.str();
  if ((v.bHalf && !v.knast) || (v.knast && !v.lr)) {
    r.passed = false;
    r.detail += ": inclusion violated";
  }
  return r;
}

SuiteReport suite_r_absorption(const FiniteSemigroup& S) {
  if (!check_lr(S).holds) throw PreconditionError("R-absorption suite requires a semigroup in LR");
  SuiteReport r{"r-absorption", true, 0, {}};
  const auto g = green(S);
  for (Element u = 0; u < S.size(); ++u)
    for (Element x = 0; x < S.size(); ++x)
      for (auto e : idempotents(S)) {
        if (S.mul(u, e) != u || S.mul(x, e) != x) continue;
        Element ux = S.mul(u, x);
        if (!g.R(ux, u)) continue;
        ++r.cases;
        if (ux != u) {
          r.passed = false;
          r.detail = "u=" + S.name(u) + " x=" + S.name(x) + " e=" + S.name(e) + ": ux R u but ux != u";
          return r;
        }
      }
  return r;
}

SuiteReport suite_factor_change(const FiniteSemigroup& S, std::size_t cap) {
  if (S.size() > cap)
    throw ResourceError("factor-change suite limited to semigroups with at most " + std::to_string(cap) + " elements");
  if (!check_lr(S).holds) throw PreconditionError("factor-change suite requires a semigroup in LR");
  SuiteReport r{"factor-change", true, 0, {}};
  const auto n = S.size();
  const auto k = n + 1;
  const auto g = green(S);

  auto factors = [&](const ElementWord& w) {
    std::set<ElementWord> out;
    for (std::size_t i = 0; i + k <= w.size(); ++i) out.emplace(w.begin() + i, w.begin() + i + k);
    return out;
  };

  for (std::size_t len = k; len <= k + 1; ++len) {
    ElementWord x(len, 0);
    for (;;) {
      Element xv = S.eval(x);
      ElementWord xa = x;
      xa.push_back(0);
      for (Element a = 0; a < n; ++a) {
        xa.back() = a;
        for (Element u = 0; u < n; ++u) {
          Element ux = S.mul(u, xv);
          Element uxa = S.mul(ux, a);
          if (!g.R(u, ux) || !g.strictlyBelowR(uxa, ux)) continue;
          ++r.cases;
          if (factors(x) == factors(xa)) {
            r.passed = false;
            std::ostringstream os;
            os << "u=" << S.name(u) << " a=" << S.name(a) << " x=";
            for (auto c : x) os << '[' << S.name(c) << ']';
            os << ": length-" << k << " factors unchanged";
            r.detail = os.str();
            return r;
          }
        }
      }
      std::size_t i = len;
      while (i > 0 && x[i - 1] == n - 1) x[--i] = 0;
      if (i == 0) break;
      ++x[i - 1];
    }
  }
  return r;
}

SuiteReport suite_knast_substitution(const FiniteSemigroup& S, std::size_t cap) {
  if (S.size() > cap)
    throw ResourceError("Knast substitution suite limited to semigroups with at most " + std::to_string(cap) +
                        " elements");
  if (!check_knast(S).holds) throw PreconditionError("Knast substitution suite requires a semigroup in B1");
  SuiteReport r{"knast-substitution", true, 0, {}};
  const auto g = green(S);
  const auto idem = idempotents(S);
  const auto n = S.size();
  for (Element u = 0; u < n; ++u)
    for (auto e : idem)
      for (Element x = 0; x < n; ++x)
        for (auto f : idem) {
          Element uexf = S.mul(S.mul(S.mul(u, e), x), f);
          if (!g.R(u, uexf)) continue;
          for (Element s = 0; s < n; ++s) {
            Element esf = S.mul(S.mul(e, s), f);
            for (Element v = 0; v < n; ++v) {
              if (!g.L(S.mul(esf, v), v)) continue;
              ++r.cases;
              Element lhs = S.mul(uexf, v);
              Element rhs = S.mul(S.mul(u, esf), v);
              if (lhs != rhs) {
                r.passed = false;
                r.detail = "u=" + S.name(u) + " e=" + S.name(e) + " x=" + S.name(x) + " f=" + S.name(f) +
                           " s=" + S.name(s) + " v=" + S.name(v) + ": uexfv != uesfv";
                return r;
              }
            }
          }
        }
  return r;
}

}  // namespace dotdepth
