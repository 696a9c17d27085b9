#include "dotdepth/logic.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace dotdepth {

Matrix Matrix::atom(Kind k, std::string x, std::string y) {
  Matrix m;
  m.kind = k;
  m.x = std::move(x);
  m.y = std::move(y);
  return m;
}

Matrix Matrix::label(std::string x, char a) {
  Matrix m = atom(Kind::Label, std::move(x));
  m.letter = a;
  return m;
}

Matrix Matrix::all(std::vector<Matrix> cs) {
  if (cs.size() == 1) return std::move(cs.front());
  Matrix m;
  m.kind = cs.empty() ? Kind::True : Kind::And;
  m.children = std::move(cs);
  return m;
}

Matrix Matrix::any(std::vector<Matrix> cs) {
  if (cs.size() == 1) return std::move(cs.front());
  if (cs.empty()) return negate(top());
  Matrix m;
  m.kind = Kind::Or;
  m.children = std::move(cs);
  return m;
}

Matrix Matrix::negate(Matrix c) {
  Matrix m;
  m.kind = Kind::Not;
  m.children.push_back(std::move(c));
  return m;
}

Formula Formula::leaf(Sentence s) {
  Formula f;
  f.sentence = std::move(s);
  return f;
}

std::string LogicSignature::to_string() const {
  std::string s = "[<,+1";
  if (min) s += ",min";
  if (max) s += ",max";
  return s + "]";
}

namespace {

void collect(const Matrix& m, LogicSignature& sig) {
  if (m.kind == Matrix::Kind::Min) sig.min = true;
  if (m.kind == Matrix::Kind::Max) sig.max = true;
  for (const auto& c : m.children) collect(c, sig);
}

void collect(const Formula& f, LogicSignature& sig) {
  if (f.is_sentence()) collect(f.sentence.matrix, sig);
  for (const auto& c : f.children) collect(c, sig);
}

// ----------------------------------------------------------------- parsing

struct Sexp {
  bool isAtom = true;
  std::string atom;
  std::vector<Sexp> list;
  std::size_t offset = 0;
};

class SexpReader {
 public:
  explicit SexpReader(std::string_view text) : text_(text) {}

  Sexp read_all() {
    Sexp s = read();
    skip_space();
    if (pos_ != text_.size()) throw SyntaxError("trailing input after formula", pos_);
    return s;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Sexp read() {
    skip_space();
    if (pos_ >= text_.size()) throw SyntaxError("unexpected end of formula", pos_);
    Sexp s;
    s.offset = pos_;
    if (text_[pos_] == '(') {
      s.isAtom = false;
      ++pos_;
      for (;;) {
        skip_space();
        if (pos_ >= text_.size()) throw SyntaxError("missing ')'", pos_);
        if (text_[pos_] == ')') {
          ++pos_;
          return s;
        }
        s.list.push_back(read());
      }
    }
    if (text_[pos_] == ')') throw SyntaxError("unexpected ')'", pos_);
    while (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')' &&
           !std::isspace(static_cast<unsigned char>(text_[pos_])))
      s.atom += text_[pos_++];
    return s;
  }
};

class FormulaParser {
 public:
  explicit FormulaParser(const Alphabet& alphabet) : alphabet_(alphabet) {}

  Formula formula(const Sexp& s) {
    const auto& head = head_of(s);
    if (head == "exists") return Formula::leaf(sentence(s));
    Formula f;
    if (head == "and" || head == "or") {
      f.kind = head == "and" ? Formula::Kind::And : Formula::Kind::Or;
      if (s.list.size() < 2) throw SyntaxError("'" + head + "' needs at least one operand", s.offset);
    } else if (head == "not") {
      f.kind = Formula::Kind::Not;
      if (s.list.size() != 2) throw SyntaxError("'not' takes one operand", s.offset);
    } else {
      throw SyntaxError("expected exists/and/or/not, got '" + head + "'", s.list.front().offset);
    }
    for (std::size_t i = 1; i < s.list.size(); ++i) f.children.push_back(formula(s.list[i]));
    return f;
  }

 private:
  const Alphabet& alphabet_;
  std::set<std::string> scope_;

  static const std::string& head_of(const Sexp& s) {
    if (s.isAtom || s.list.empty() || !s.list.front().isAtom) throw SyntaxError("expected (keyword ...)", s.offset);
    return s.list.front().atom;
  }

  Sentence sentence(const Sexp& s) {
    if (s.list.size() != 3 || s.list[1].isAtom) throw SyntaxError("expected (exists (vars...) matrix)", s.offset);
    Sentence out;
    scope_.clear();
    for (const auto& v : s.list[1].list) {
      if (!v.isAtom) throw SyntaxError("variable names must be symbols", v.offset);
      if (!scope_.insert(v.atom).second) throw SyntaxError("variable '" + v.atom + "' declared twice", v.offset);
      out.vars.push_back(v.atom);
    }
    out.matrix = matrix(s.list[2]);
    return out;
  }

  std::string var(const Sexp& s) {
    if (!s.isAtom) throw SyntaxError("expected a variable", s.offset);
    if (!scope_.count(s.atom)) throw SyntaxError("undeclared variable '" + s.atom + "'", s.offset);
    return s.atom;
  }

  Matrix matrix(const Sexp& s) {
    const auto& head = head_of(s);
    auto arity = [&](std::size_t n) {
      if (s.list.size() != n + 1)
        throw SyntaxError("'" + head + "' takes " + std::to_string(n) + " operand(s)", s.offset);
    };
    using K = Matrix::Kind;
    if (head == "less" || head == "succ" || head == "eq") {
      arity(2);
      K k = head == "less" ? K::Less : head == "succ" ? K::Succ : K::Eq;
      return Matrix::atom(k, var(s.list[1]), var(s.list[2]));
    }
    if (head == "min" || head == "max") {
      arity(1);
      return Matrix::atom(head == "min" ? K::Min : K::Max, var(s.list[1]));
    }
    if (head == "label") {
      arity(2);
      const auto& a = s.list[2];
      if (!a.isAtom || a.atom.size() != 1) throw SyntaxError("label needs a single letter", a.offset);
      if (!alphabet_.contains(a.atom[0]))
        throw SyntaxError("letter '" + a.atom + "' is not in the alphabet", a.offset);
      return Matrix::label(var(s.list[1]), a.atom[0]);
    }
    if (head == "true") {
      arity(0);
      return Matrix::top();
    }
    if (head == "and" || head == "or") {
      std::vector<Matrix> cs;
      for (std::size_t i = 1; i < s.list.size(); ++i) cs.push_back(matrix(s.list[i]));
      Matrix m;
      m.kind = head == "and" ? K::And : K::Or;
      m.children = std::move(cs);
      return m;
    }
    if (head == "not") {
      arity(1);
      return Matrix::negate(matrix(s.list[1]));
    }
    throw SyntaxError("unknown matrix form '" + head + "'", s.list.front().offset);
  }
};

// -------------------------------------------------------------- evaluation

using Assignment = std::vector<std::size_t>;

/// Matrix with variables replaced by their index in the quantifier block.
struct Compiled {
  Matrix::Kind kind;
  std::size_t a = 0, b = 0;
  char letter = 0;
  int maxVar = -1;
  std::vector<Compiled> children;
};

Compiled compile_matrix(const Matrix& m, const std::vector<std::string>& vars) {
  auto index = [&](const std::string& v) {
    auto it = std::find(vars.begin(), vars.end(), v);
    if (it == vars.end()) throw InputError("variable '" + v + "' is not quantified");
    return static_cast<std::size_t>(it - vars.begin());
  };
  Compiled c;
  c.kind = m.kind;
  c.letter = m.letter;
  if (!m.x.empty()) {
    c.a = index(m.x);
    c.maxVar = static_cast<int>(c.a);
  }
  if (!m.y.empty()) {
    c.b = index(m.y);
    c.maxVar = std::max(c.maxVar, static_cast<int>(c.b));
  }
  for (const auto& child : m.children) {
    c.children.push_back(compile_matrix(child, vars));
    c.maxVar = std::max(c.maxVar, c.children.back().maxVar);
  }
  return c;
}

bool holds(const Compiled& m, std::string_view w, const Assignment& at) {
  using K = Matrix::Kind;
  switch (m.kind) {
    case K::Less: return at[m.a] < at[m.b];
    case K::Succ: return at[m.a] == at[m.b] + 1;
    case K::Eq: return at[m.a] == at[m.b];
    case K::Min: return at[m.a] == 0;
    case K::Max: return at[m.a] + 1 == w.size();
    case K::Label: return w[at[m.a]] == m.letter;
    case K::True: return true;
    case K::And:
      return std::all_of(m.children.begin(), m.children.end(), [&](const Compiled& c) { return holds(c, w, at); });
    case K::Or:
      return std::any_of(m.children.begin(), m.children.end(), [&](const Compiled& c) { return holds(c, w, at); });
    case K::Not: return !holds(m.children.front(), w, at);
  }
  return false;
}

/// Top-level conjuncts grouped by the last variable they mention, so a branch
/// is cut as soon as one of its conjuncts is decided false.
struct Evaluator {
  std::size_t vars;
  std::vector<std::vector<Compiled>> byLevel;  // level i+1: max variable i; level 0: closed

  explicit Evaluator(const Sentence& s) : vars(s.vars.size()), byLevel(s.vars.size() + 1) {
    auto c = compile_matrix(s.matrix, s.vars);
    if (c.kind == Matrix::Kind::And) {
      for (auto& child : c.children) byLevel[static_cast<std::size_t>(child.maxVar + 1)].push_back(std::move(child));
    } else {
      byLevel[static_cast<std::size_t>(c.maxVar + 1)].push_back(std::move(c));
    }
  }

  bool level_ok(std::size_t level, std::string_view w, const Assignment& at) const {
    for (const auto& c : byLevel[level])
      if (!holds(c, w, at)) return false;
    return true;
  }

  bool all(std::string_view w, const Assignment& at) const {
    for (std::size_t l = 0; l <= vars; ++l)
      if (!level_ok(l, w, at)) return false;
    return true;
  }

  bool search(std::string_view w, Assignment& at, std::size_t i) const {
    if (i == 0 && !level_ok(0, w, at)) return false;
    if (i == vars) return true;
    for (std::size_t p = 0; p < w.size(); ++p) {
      at[i] = p;
      if (level_ok(i + 1, w, at) && search(w, at, i + 1)) return true;
    }
    return false;
  }
};

void print(const Matrix& m, std::string& out) {
  using K = Matrix::Kind;
  switch (m.kind) {
    case K::Less: out += "(less " + m.x + " " + m.y + ")"; return;
    case K::Succ: out += "(succ " + m.x + " " + m.y + ")"; return;
    case K::Eq: out += "(eq " + m.x + " " + m.y + ")"; return;
    case K::Min: out += "(min " + m.x + ")"; return;
    case K::Max: out += "(max " + m.x + ")"; return;
    case K::Label: out += "(label " + m.x + " " + std::string(1, m.letter) + ")"; return;
    case K::True: out += "(true)"; return;
    case K::And:
    case K::Or:
    case K::Not:
      out += m.kind == K::And ? "(and" : m.kind == K::Or ? "(or" : "(not";
      for (const auto& c : m.children) {
        out += ' ';
        print(c, out);
      }
      out += ')';
      return;
  }
}

void print(const Formula& f, std::string& out) {
  if (f.is_sentence()) {
    out += "(exists (";
    for (std::size_t i = 0; i < f.sentence.vars.size(); ++i) {
      if (i) out += ' ';
      out += f.sentence.vars[i];
    }
    out += ") ";
    print(f.sentence.matrix, out);
    out += ')';
    return;
  }
  out += f.kind == Formula::Kind::And ? "(and" : f.kind == Formula::Kind::Or ? "(or" : "(not";
  for (const auto& c : f.children) {
    out += ' ';
    print(c, out);
  }
  out += ')';
}

void mentioned(const Matrix& m, std::set<std::string>& out) {
  if (!m.x.empty()) out.insert(m.x);
  if (!m.y.empty()) out.insert(m.y);
  for (const auto& c : m.children) mentioned(c, out);
}

Matrix renamed(const Matrix& m, const std::map<std::string, std::string>& to) {
  Matrix r = m;
  if (!r.x.empty()) r.x = to.at(r.x);
  if (!r.y.empty()) r.y = to.at(r.y);
  r.children.clear();
  for (const auto& c : m.children) r.children.push_back(renamed(c, to));
  return r;
}

}  // namespace

LogicSignature signature_of(const Formula& f) {
  LogicSignature sig;
  collect(f, sig);
  return sig;
}

Formula parse_formula(std::string_view text, const Alphabet& alphabet) {
  return FormulaParser(alphabet).formula(SexpReader(text).read_all());
}

std::string to_string(const Formula& f) {
  std::string out;
  print(f, out);
  return out;
}

std::string to_string(const Matrix& m) {
  std::string out;
  print(m, out);
  return out;
}

bool eval(const Sentence& s, std::string_view w) {
  if (w.empty()) throw InputError("formulas are evaluated on non-empty words");
  // ∃ distributes over `or`, and on a non-empty word a variable the matrix
  // does not mention can be dropped.
  if (s.matrix.kind == Matrix::Kind::Or)
    return std::any_of(s.matrix.children.begin(), s.matrix.children.end(),
                       [&](const Matrix& c) { return eval(Sentence{s.vars, c}, w); });
  std::set<std::string> used;
  mentioned(s.matrix, used);
  Sentence t{{}, s.matrix};
  for (const auto& v : s.vars)
    if (used.count(v)) t.vars.push_back(v);
  Evaluator ev(t);
  Assignment at(t.vars.size(), 0);
  return ev.search(w, at, 0);
}

bool eval(const Formula& f, std::string_view w) {
  switch (f.kind) {
    case Formula::Kind::Sentence: return eval(f.sentence, w);
    case Formula::Kind::And:
      return std::all_of(f.children.begin(), f.children.end(), [&](const Formula& c) { return eval(c, w); });
    case Formula::Kind::Or:
      return std::any_of(f.children.begin(), f.children.end(), [&](const Formula& c) { return eval(c, w); });
    case Formula::Kind::Not: return !eval(f.children.front(), w);
  }
  return false;
}

Sentence from_monomial(const Monomial& m) {
  for (auto g : m.gaps())
    if (g == Gap::Plus) throw PreconditionError("from_monomial expects STAR gaps; expand " + m.to_string() + " first");
  using K = Matrix::Kind;
  Sentence s;
  std::vector<Matrix> parts;
  std::string prevLast;
  for (const auto& block : m.blocks()) {
    if (block.empty()) {
      // Only the exact empty word survives canonicalization: no non-empty model.
      return Sentence{{}, Matrix::negate(Matrix::top())};
    }
    for (std::size_t i = 0; i < block.size(); ++i) {
      std::string v = "x" + std::to_string(s.vars.size() + 1);
      s.vars.push_back(v);
      parts.push_back(Matrix::label(v, block[i]));
      if (i == 0) {
        if (!prevLast.empty()) parts.push_back(Matrix::atom(K::Less, prevLast, v));
      } else {
        parts.push_back(Matrix::atom(K::Succ, v, prevLast));
      }
      prevLast = v;
    }
  }
  if (!s.vars.empty()) {
    if (m.left() == Gap::None) parts.push_back(Matrix::atom(K::Min, s.vars.front()));
    if (m.right() == Gap::None) parts.push_back(Matrix::atom(K::Max, s.vars.back()));
  } else if (m.left() == Gap::None) {
    return Sentence{{}, Matrix::negate(Matrix::top())};
  }
  s.matrix = Matrix::all(std::move(parts));
  return s;
}

Sentence union_formula(const std::vector<Sentence>& fs, const Alphabet& alphabet) {
  if (fs.size() == 1) return fs.front();
  if (fs.empty()) {
    if (alphabet.size() >= 2)
      return Sentence{{"x1"}, Matrix::all({Matrix::label("x1", alphabet.at(0)), Matrix::label("x1", alphabet.at(1))})};
    return Sentence{{}, Matrix::negate(Matrix::top())};
  }
  Sentence out;
  std::vector<Matrix> disjuncts;
  for (const auto& f : fs) {
    std::map<std::string, std::string> to;
    for (const auto& v : f.vars) {
      to[v] = "x" + std::to_string(out.vars.size() + 1);
      out.vars.push_back(to[v]);
    }
    disjuncts.push_back(renamed(f.matrix, to));
  }
  out.matrix = Matrix::any(std::move(disjuncts));
  return out;
}

std::vector<Monomial> sigma1_to_monomials(const Sentence& s, const Alphabet& alphabet, std::size_t variableCap) {
  const auto m = s.vars.size();
  if (m > variableCap)
    throw ResourceError("sentence has " + std::to_string(m) + " variables; template enumeration is capped at " +
                        std::to_string(variableCap));
  const Evaluator ev(s);
  std::set<Monomial> out;
  if (m == 0) {
    // Any non-empty word: evaluate on a one-letter model, the matrix has no variables.
    if (ev.all(std::string_view(&alphabet.letters()[0], 1), {}))
      out.insert(Monomial({}, {Gap::Plus}));
    return {out.begin(), out.end()};
  }

  // slot[i]: index of the marked position carrying variable i; the used
  // indices must be exactly 0..k-1.
  std::vector<std::size_t> slot(m, 0);
  for (;;) {
    const std::size_t k = *std::max_element(slot.begin(), slot.end()) + 1;
    std::vector<char> used(k, 0);
    for (auto p : slot) used[p] = 1;
    if (std::all_of(used.begin(), used.end(), [](char c) { return c; })) {
      // joined[i]: marked positions i and i+1 are adjacent in the word.
      for (std::size_t joins = 0; joins < (std::size_t{1} << (k - 1)); ++joins) {
        // A concrete model: positions laid out with one filler letter in each
        // Γ⁺ gap. Flags decide whether a filler precedes/follows the ends.
        for (int flags = 0; flags < 4; ++flags) {
          const bool atMin = flags & 1, atMax = flags & 2;
          std::vector<std::size_t> where(k);
          std::size_t pos = atMin ? 0 : 1;
          for (std::size_t i = 0; i < k; ++i) {
            if (i > 0) pos += (joins >> (i - 1) & 1) ? 1 : 2;
            where[i] = pos;
          }
          const std::size_t len = where.back() + (atMax ? 1 : 2);
          Assignment at(m);
          for (std::size_t i = 0; i < m; ++i) at[i] = where[slot[i]];

          std::vector<std::size_t> letter(k, 0);
          for (;;) {
            std::string w(len, alphabet.at(0));
            for (std::size_t i = 0; i < k; ++i) w[where[i]] = alphabet.at(letter[i]);
            if (ev.all(w, at)) {
              std::vector<Word> blocks{std::string(1, w[where[0]])};
              for (std::size_t i = 1; i < k; ++i) {
                if (!(joins >> (i - 1) & 1)) blocks.emplace_back();
                blocks.back() += w[where[i]];
              }
              std::vector<Gap> gaps(blocks.size() + 1, Gap::Plus);
              if (atMin) gaps.front() = Gap::None;
              if (atMax) gaps.back() = Gap::None;
              out.insert(Monomial(std::move(blocks), std::move(gaps)));
            }
            std::size_t i = k;
            while (i > 0 && letter[i - 1] + 1 == alphabet.size()) letter[--i] = 0;
            if (i == 0) break;
            ++letter[i - 1];
          }
        }
      }
    }
    std::size_t i = m;
    while (i > 0 && slot[i - 1] + 1 == m) slot[--i] = 0;
    if (i == 0) break;
    ++slot[i - 1];
  }
  return {out.begin(), out.end()};
}

}  // namespace dotdepth
