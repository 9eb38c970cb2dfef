#include "b3q/braidword.hpp"

#include <cctype>
#include <limits>

namespace b3q {

namespace {

constexpr std::size_t kMaxExpandedFactors = 1'000'000;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  BraidWord parse() {
    skip_ws();
    if (pos_ == text_.size()) return {};
    BraidWord w = word();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::SyntaxError, msg + " at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_atom_start() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char ch = text_[pos_];
    return ch == 's' || ch == 'a' || ch == 'b' || ch == 'c' || ch == '(';
  }

  BraidWord word() {
    if (!at_atom_start()) fail("expected s1, s2, a, b, c or '('");
    BraidWord w;
    while (at_atom_start()) {
      BraidWord t = term();
      w.factors.insert(w.factors.end(), t.factors.begin(), t.factors.end());
      if (w.factors.size() > kMaxExpandedFactors) fail("word expands beyond " + std::to_string(kMaxExpandedFactors) + " factors");
    }
    return w;
  }

  BraidWord term() {
    skip_ws();
    BraidWord base;
    bool group = false;
    char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      base = word();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      group = true;
    } else if (ch == 's') {
      ++pos_;
      if (pos_ >= text_.size() || (text_[pos_] != '1' && text_[pos_] != '2')) fail("expected s1 or s2");
      base.factors.push_back({text_[pos_] == '1' ? Generator::g1 : Generator::g2, 1});
      ++pos_;
    } else {
      base.factors.push_back({ch == 'a' ? Generator::a : ch == 'b' ? Generator::b : Generator::c, 1});
      ++pos_;
    }
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      std::int64_t k = integer();
      if (!group) {
        base.factors.front().exponent = k;
        return base;
      }
      BraidWord unit = k > 0 ? base : base.inverse();
      std::uint64_t reps = k > 0 ? static_cast<std::uint64_t>(k) : static_cast<std::uint64_t>(-(k + 1)) + 1;
      if (!unit.factors.empty() && reps > kMaxExpandedFactors / unit.factors.size())
        fail("group power expands beyond " + std::to_string(kMaxExpandedFactors) + " factors");
      BraidWord out;
      for (std::uint64_t r = 0; r < reps; ++r) out.factors.insert(out.factors.end(), unit.factors.begin(), unit.factors.end());
      return out;
    }
    return base;
  }

  std::int64_t integer() {
    skip_ws();
    bool neg = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > static_cast<std::uint64_t>(std::numeric_limits<std::int32_t>::max())) fail("exponent too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer exponent");
    if (value == 0) fail("exponent must be nonzero");
    auto v = static_cast<std::int64_t>(value);
    return neg ? -v : v;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string_view spelling(Generator g) {
  switch (g) {
    case Generator::g1: return "s1";
    case Generator::g2: return "s2";
    case Generator::a: return "a";
    case Generator::b: return "b";
    case Generator::c: return "c";
  }
  return "?";
}

}  // namespace

BraidWord BraidWord::inverse() const {
  BraidWord w;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) w.factors.push_back({it->gen, -it->exponent});
  return w;
}

BraidWord operator*(const BraidWord& x, const BraidWord& y) {
  BraidWord w = x;
  w.factors.insert(w.factors.end(), y.factors.begin(), y.factors.end());
  return w;
}

BraidWord parse_word(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const BraidWord& w) {
  std::string s;
  for (const auto& f : w.factors) {
    if (!s.empty()) s += ' ';
    s += spelling(f.gen);
    if (f.exponent != 1) s += "^" + std::to_string(f.exponent);
  }
  return s;
}

BraidWord free_reduce(const BraidWord& w) {
  BraidWord out;
  for (const auto& f : w.factors) {
    if (f.exponent == 0) continue;
    if (!out.factors.empty() && out.factors.back().gen == f.gen) {
      out.factors.back().exponent += f.exponent;
      if (out.factors.back().exponent == 0) out.factors.pop_back();
    } else {
      out.factors.push_back(f);
    }
  }
  return out;
}

WordEvaluator::WordEvaluator(const Representation& rep) {
  Matrix a = rep.g1 * rep.g2;
  Matrix b = a * rep.g1;
  gens_ = {rep.g1, rep.g2, a, b, a.pow(3)};
  Matrix g1i = inverse(rep.g1), g2i = inverse(rep.g2);
  Matrix ai = g2i * g1i;
  invs_ = {g1i, g2i, ai, g1i * ai, ai.pow(3)};
}

const Matrix& WordEvaluator::base(Generator g) const { return gens_[static_cast<std::size_t>(g)]; }
const Matrix& WordEvaluator::base_inverse(Generator g) const { return invs_[static_cast<std::size_t>(g)]; }

Matrix WordEvaluator::operator()(const BraidWord& w) const {
  const Matrix& g1 = gens_.front();
  Matrix acc = Matrix::identity(g1.context(), g1.rows());
  for (const auto& f : w.factors) {
    if (f.exponent == 0) continue;
    const Matrix& m = f.exponent > 0 ? base(f.gen) : base_inverse(f.gen);
    auto n = static_cast<unsigned>(f.exponent > 0 ? f.exponent : -f.exponent);
    acc = acc * (n == 1 ? m : m.pow(n));
  }
  return acc;
}

Matrix evaluate(const BraidWord& w, const Representation& rep) { return WordEvaluator(rep)(w); }

}  // namespace b3q
