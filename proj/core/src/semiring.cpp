#include "wamex/semiring.hpp"

#include <utility>

#include "text_util.hpp"
#include "wamex/errors.hpp"

namespace wamex {

namespace {

using detail::split_top_level;
using detail::strip_outer_parens;
using detail::trim;

const ExtRat& as_rat(const Value& v) { return std::get<ExtRat>(v.rep); }
bool as_bool(const Value& v) { return std::get<bool>(v.rep); }
const LangPtr& as_lang(const Value& v) { return std::get<LangPtr>(v.rep); }
const PairPtr& as_pair(const Value& v) { return std::get<PairPtr>(v.rep); }

Value rat_value(ExtRat r) { return Value(std::move(r)); }

BigInt parse_big_nat(std::string_view s) {
  if (s.empty()) throw ParseError("empty number literal");
  BigInt n = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw ParseError("expected a decimal digit", i);
    n = n * 10 + (s[i] - '0');
  }
  return n;
}

// [-]p or [-]p/q, exact
BigRat parse_rational(std::string_view s) {
  s = trim(s);
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  BigRat q;
  if (slash == std::string_view::npos) {
    q = BigRat(parse_big_nat(s));
  } else {
    BigInt num = parse_big_nat(s.substr(0, slash));
    BigInt den = parse_big_nat(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator");
    q = BigRat(num, den);
  }
  return neg ? -q : q;
}

std::string render_rational(const BigRat& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) s += "/" + denominator(q).str();
  return s;
}

class BooleanSemiring final : public Semiring {
 public:
  std::string name() const override { return "boolean"; }
  Value zero() const override { return Value(false); }
  Value one() const override { return Value(true); }
  Value add(const Value& a, const Value& b) const override {
    return Value(as_bool(a) || as_bool(b));
  }
  Value mul(const Value& a, const Value& b) const override {
    return Value(as_bool(a) && as_bool(b));
  }
  Value star(const Value&) const override { return Value(true); }
  bool eq(const Value& a, const Value& b) const override { return as_bool(a) == as_bool(b); }
  Value parse(std::string_view text) const override {
    text = trim(text);
    if (text == "true") return Value(true);
    if (text == "false") return Value(false);
    throw ParseError("expected 'true' or 'false', got '" + std::string(text) + "'");
  }
  std::string render(const Value& v) const override { return as_bool(v) ? "true" : "false"; }
};

// N u {inf} with + and x; all countable sums exist, an infinite support
// sums to inf.
class CountingSemiring final : public Semiring {
 public:
  std::string name() const override { return "counting"; }
  Value zero() const override { return rat_value(ExtRat::finite(0)); }
  Value one() const override { return rat_value(ExtRat::finite(1)); }
  Value add(const Value& a, const Value& b) const override {
    const ExtRat &x = as_rat(a), &y = as_rat(b);
    if (!x.is_finite() || !y.is_finite()) return rat_value(ExtRat::pos_inf());
    return rat_value(ExtRat::finite(x.q + y.q));
  }
  Value mul(const Value& a, const Value& b) const override {
    const ExtRat &x = as_rat(a), &y = as_rat(b);
    // 0 absorbs, also against inf
    if ((x.is_finite() && x.q == 0) || (y.is_finite() && y.q == 0)) {
      return rat_value(ExtRat::finite(0));
    }
    if (!x.is_finite() || !y.is_finite()) return rat_value(ExtRat::pos_inf());
    return rat_value(ExtRat::finite(x.q * y.q));
  }
  Value star(const Value& a) const override {
    const ExtRat& x = as_rat(a);
    if (x.is_finite() && x.q == 0) return one();
    return rat_value(ExtRat::pos_inf());
  }
  bool eq(const Value& a, const Value& b) const override { return as_rat(a) == as_rat(b); }
  Value parse(std::string_view text) const override {
    text = trim(text);
    if (text == "inf") return rat_value(ExtRat::pos_inf());
    return rat_value(ExtRat::finite(BigRat(parse_big_nat(text))));
  }
  std::string render(const Value& v) const override {
    const ExtRat& x = as_rat(v);
    return x.is_finite() ? numerator(x.q).str() : "inf";
  }
};

// (Q u {-inf, +inf}, sup, +): zero is -inf and absorbs the product, one
// is 0. star(x) = sup_n n*x.
class TropicalSemiring final : public Semiring {
 public:
  std::string name() const override { return "tropical"; }
  Value zero() const override { return rat_value(ExtRat::neg_inf()); }
  Value one() const override { return rat_value(ExtRat::finite(0)); }
  Value add(const Value& a, const Value& b) const override {
    return less(as_rat(a), as_rat(b)) ? b : a;
  }
  Value mul(const Value& a, const Value& b) const override {
    const ExtRat &x = as_rat(a), &y = as_rat(b);
    if (x.kind == ExtRat::Kind::NegInf || y.kind == ExtRat::Kind::NegInf) {
      return rat_value(ExtRat::neg_inf());
    }
    if (x.kind == ExtRat::Kind::PosInf || y.kind == ExtRat::Kind::PosInf) {
      return rat_value(ExtRat::pos_inf());
    }
    return rat_value(ExtRat::finite(x.q + y.q));
  }
  Value star(const Value& a) const override {
    const ExtRat& x = as_rat(a);
    if (x.kind == ExtRat::Kind::PosInf || (x.is_finite() && x.q > 0)) {
      return rat_value(ExtRat::pos_inf());
    }
    return one();
  }
  bool eq(const Value& a, const Value& b) const override { return as_rat(a) == as_rat(b); }
  Value parse(std::string_view text) const override {
    text = trim(text);
    if (text == "-inf") return rat_value(ExtRat::neg_inf());
    if (text == "+inf" || text == "inf") return rat_value(ExtRat::pos_inf());
    return rat_value(ExtRat::finite(parse_rational(text)));
  }
  std::string render(const Value& v) const override {
    const ExtRat& x = as_rat(v);
    if (x.kind == ExtRat::Kind::NegInf) return "-inf";
    if (x.kind == ExtRat::Kind::PosInf) return "+inf";
    return render_rational(x.q);
  }

 private:
  static bool less(const ExtRat& x, const ExtRat& y) {
    if (x.kind == y.kind) return x.is_finite() && x.q < y.q;
    if (x.kind == ExtRat::Kind::NegInf) return true;
    if (y.kind == ExtRat::Kind::PosInf) return true;
    return false;
  }
};

// (Q+ u {inf}, +, x); geometric sums converge below 1 and diverge to inf
// from 1 on.
class QPlusSemiring final : public Semiring {
 public:
  std::string name() const override { return "qplus"; }
  Value zero() const override { return rat_value(ExtRat::finite(0)); }
  Value one() const override { return rat_value(ExtRat::finite(1)); }
  Value add(const Value& a, const Value& b) const override {
    const ExtRat &x = as_rat(a), &y = as_rat(b);
    if (!x.is_finite() || !y.is_finite()) return rat_value(ExtRat::pos_inf());
    return rat_value(ExtRat::finite(x.q + y.q));
  }
  Value mul(const Value& a, const Value& b) const override {
    const ExtRat &x = as_rat(a), &y = as_rat(b);
    if ((x.is_finite() && x.q == 0) || (y.is_finite() && y.q == 0)) {
      return rat_value(ExtRat::finite(0));
    }
    if (!x.is_finite() || !y.is_finite()) return rat_value(ExtRat::pos_inf());
    return rat_value(ExtRat::finite(x.q * y.q));
  }
  Value star(const Value& a) const override {
    const ExtRat& x = as_rat(a);
    if (x.is_finite() && x.q < 1) return rat_value(ExtRat::finite(1 / (1 - x.q)));
    return rat_value(ExtRat::pos_inf());
  }
  bool eq(const Value& a, const Value& b) const override { return as_rat(a) == as_rat(b); }
  Value parse(std::string_view text) const override {
    text = trim(text);
    if (text == "inf") return rat_value(ExtRat::pos_inf());
    if (!text.empty() && text.front() == '-') throw ParseError("negative value in qplus");
    return rat_value(ExtRat::finite(parse_rational(text)));
  }
  std::string render(const Value& v) const override {
    const ExtRat& x = as_rat(v);
    return x.is_finite() ? render_rational(x.q) : "inf";
  }
};

class LanguageSemiring final : public Semiring {
 public:
  explicit LanguageSemiring(std::string alphabet) : alphabet_(std::move(alphabet)) {
    for (char c : alphabet_) {
      if (!detail::is_word_char(c)) {
        throw ParseError("language alphabet letters must be word characters");
      }
    }
  }
  std::string name() const override { return "lang:" + alphabet_; }
  Value zero() const override { return Value(lang_empty()); }
  Value one() const override { return Value(lang_eps()); }
  Value add(const Value& a, const Value& b) const override {
    return Value(lang_union(as_lang(a), as_lang(b)));
  }
  Value mul(const Value& a, const Value& b) const override {
    return Value(lang_concat(as_lang(a), as_lang(b)));
  }
  Value star(const Value& a) const override { return Value(lang_star(as_lang(a))); }
  bool eq(const Value& a, const Value& b) const override {
    return language_eq(as_lang(a), as_lang(b), alphabet_);
  }
  Value parse(std::string_view text) const override {
    text = trim(text);
    if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
      throw ParseError("language literal must be braced, e.g. {(a+b)*}");
    }
    return Value(lang_parse(text.substr(1, text.size() - 2), alphabet_));
  }
  std::string render(const Value& v) const override { return "{" + lang_render(as_lang(v)) + "}"; }

 private:
  std::string alphabet_;
};

class ProductSemiring final : public Semiring {
 public:
  ProductSemiring(SemiringPtr first, SemiringPtr second)
      : first_(std::move(first)), second_(std::move(second)) {}

  std::string name() const override {
    return "prod:(" + first_->name() + "),(" + second_->name() + ")";
  }
  Value zero() const override { return pair(first_->zero(), second_->zero()); }
  Value one() const override { return pair(first_->one(), second_->one()); }
  Value add(const Value& a, const Value& b) const override {
    const auto &x = *as_pair(a), &y = *as_pair(b);
    return pair(first_->add(x.first, y.first), second_->add(x.second, y.second));
  }
  Value mul(const Value& a, const Value& b) const override {
    const auto &x = *as_pair(a), &y = *as_pair(b);
    return pair(first_->mul(x.first, y.first), second_->mul(x.second, y.second));
  }
  Value star(const Value& a) const override {
    const auto& x = *as_pair(a);
    return pair(first_->star(x.first), second_->star(x.second));
  }
  bool eq(const Value& a, const Value& b) const override {
    const auto &x = *as_pair(a), &y = *as_pair(b);
    return first_->eq(x.first, y.first) && second_->eq(x.second, y.second);
  }
  Value parse(std::string_view text) const override {
    text = trim(text);
    if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
      throw ParseError("product literal must be parenthesised, e.g. (1,2)");
    }
    auto parts = split_top_level(text.substr(1, text.size() - 2), ',');
    if (parts.size() != 2) throw ParseError("product literal needs exactly two components");
    return pair(first_->parse(parts[0]), second_->parse(parts[1]));
  }
  std::string render(const Value& v) const override {
    const auto& x = *as_pair(v);
    return "(" + first_->render(x.first) + "," + second_->render(x.second) + ")";
  }

 private:
  static Value pair(Value a, Value b) {
    return Value(std::make_shared<const std::pair<Value, Value>>(std::move(a), std::move(b)));
  }

  SemiringPtr first_, second_;
};

}  // namespace

SemiringPtr make_boolean_semiring() { return std::make_shared<BooleanSemiring>(); }
SemiringPtr make_counting_semiring() { return std::make_shared<CountingSemiring>(); }
SemiringPtr make_tropical_semiring() { return std::make_shared<TropicalSemiring>(); }
SemiringPtr make_qplus_semiring() { return std::make_shared<QPlusSemiring>(); }
SemiringPtr make_language_semiring(std::string alphabet) {
  return std::make_shared<LanguageSemiring>(std::move(alphabet));
}
SemiringPtr make_product_semiring(SemiringPtr first, SemiringPtr second) {
  return std::make_shared<ProductSemiring>(std::move(first), std::move(second));
}

SemiringPtr make_semiring(std::string_view spec) {
  spec = trim(spec);
  if (spec == "boolean") return make_boolean_semiring();
  if (spec == "counting") return make_counting_semiring();
  if (spec == "tropical") return make_tropical_semiring();
  if (spec == "qplus") return make_qplus_semiring();
  if (spec.starts_with("lang:")) return make_language_semiring(std::string(trim(spec.substr(5))));
  if (spec.starts_with("prod:")) {
    auto parts = split_top_level(spec.substr(5), ',');
    if (parts.size() != 2) {
      throw ParseError("prod:<s1>,<s2> needs exactly two components (parenthesise nested ones)");
    }
    return make_product_semiring(make_semiring(strip_outer_parens(parts[0])),
                                 make_semiring(strip_outer_parens(parts[1])));
  }
  throw ParseError("unknown semiring '" + std::string(spec) + "'");
}

}  // namespace wamex
