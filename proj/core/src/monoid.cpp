#include "wamex/monoid.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "text_util.hpp"
#include "wamex/errors.hpp"
#include "wamex/munn.hpp"
#include "wamex/prefix_dfa.hpp"

namespace wamex {

namespace {

using detail::split_top_level;
using detail::trim;

const FreeWord& as_word(const Elem& e) { return std::get<FreeWord>(e.rep); }
const NatElem& as_nat(const Elem& e) { return std::get<NatElem>(e.rep); }
const MunnPtr& as_munn(const Elem& e) { return std::get<MunnPtr>(e.rep); }

class FreeMonoid final : public Monoid {
 public:
  explicit FreeMonoid(std::vector<std::string> generators) : gens_(std::move(generators)) {
    if (gens_.empty()) throw ParseError("free monoid needs at least one generator");
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (!index_.emplace(gens_[i], static_cast<int>(i)).second) {
        throw ParseError("duplicate generator '" + gens_[i] + "'");
      }
    }
  }

  std::string name() const override {
    std::string out = "free:";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (i) out += ',';
      out += gens_[i];
    }
    return out;
  }

  Elem identity() const override { return Elem(FreeWord{}); }

  Elem product(const Elem& a, const Elem& b) const override {
    FreeWord w = as_word(a);
    const FreeWord& v = as_word(b);
    w.insert(w.end(), v.begin(), v.end());
    return Elem(std::move(w));
  }

  bool eq(const Elem& a, const Elem& b) const override { return as_word(a) == as_word(b); }

  bool is_prefix(const Elem& p, const Elem& m) const override {
    const FreeWord &u = as_word(p), &v = as_word(m);
    return u.size() <= v.size() && std::equal(u.begin(), u.end(), v.begin());
  }

  std::vector<Elem> prefixes(const Elem& m) const override {
    const FreeWord& w = as_word(m);
    std::vector<Elem> out;
    out.reserve(w.size() + 1);
    for (std::size_t i = 0; i <= w.size(); ++i) {
      out.push_back(Elem(FreeWord(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i))));
    }
    return out;
  }

  std::vector<Elem> completions(const Elem& p, const Elem& m) const override {
    if (!is_prefix(p, m)) return {};
    const FreeWord &u = as_word(p), &v = as_word(m);
    return {Elem(FreeWord(v.begin() + static_cast<std::ptrdiff_t>(u.size()), v.end()))};
  }

  Elem parse(std::string_view text) const override {
    FreeWord w;
    for (const std::string& token : detail::split_gen_tokens(text)) {
      if (token == "eps") continue;
      auto it = index_.find(token);
      if (it == index_.end()) throw ParseError("unknown generator '" + token + "'");
      w.push_back(it->second);
    }
    return Elem(std::move(w));
  }

  std::string render(const Elem& e) const override {
    const FreeWord& w = as_word(e);
    if (w.empty()) return "eps";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) out += ' ';
      out += gens_[w[i]];
    }
    return out;
  }

 private:
  std::vector<std::string> gens_;
  std::map<std::string, int, std::less<>> index_;
};

// (N u {inf}, +, 0). The infinite element keeps the monoid pre-rational
// but has infinitely many prefixes, so enumerations targeting it fail
// with NonTerminating instead of looping.
class NatMonoid final : public Monoid {
 public:
  std::string name() const override { return "nat"; }

  Elem identity() const override { return Elem(NatElem{}); }

  Elem product(const Elem& a, const Elem& b) const override {
    const NatElem &x = as_nat(a), &y = as_nat(b);
    if (x.inf || y.inf) return Elem(NatElem{true, 0});
    return Elem(NatElem{false, x.n + y.n});
  }

  bool eq(const Elem& a, const Elem& b) const override { return as_nat(a) == as_nat(b); }

  bool is_prefix(const Elem& p, const Elem& m) const override {
    const NatElem &x = as_nat(p), &y = as_nat(m);
    if (y.inf) return true;  // n + inf == inf, and inf + 0 == inf
    return !x.inf && x.n <= y.n;
  }

  std::vector<Elem> prefixes(const Elem& m) const override {
    const NatElem& x = as_nat(m);
    if (x.inf) throw NonTerminating("every natural is a prefix of inf");
    if (x.n > kDefaultStateBudget) {
      throw NonTerminating("prefix enumeration over budget", kDefaultStateBudget);
    }
    std::vector<Elem> out;
    for (BigInt i = 0; i <= x.n; ++i) out.push_back(Elem(NatElem{false, i}));
    return out;
  }

  std::vector<Elem> completions(const Elem& p, const Elem& m) const override {
    const NatElem &x = as_nat(p), &y = as_nat(m);
    if (y.inf) {
      if (x.inf) throw NonTerminating("every element completes inf past inf");
      return {Elem(NatElem{true, 0})};
    }
    if (x.inf || x.n > y.n) return {};
    return {Elem(NatElem{false, y.n - x.n})};
  }

  Elem parse(std::string_view text) const override {
    NatElem total{};
    for (const std::string& token : detail::split_gen_tokens(text)) {
      if (token == "eps") continue;
      if (token == "inf") {
        total.inf = true;
        continue;
      }
      BigInt n = 0;
      for (std::size_t i = 0; i < token.size(); ++i) {
        if (token[i] < '0' || token[i] > '9') {
          throw ParseError("expected a natural number, got '" + token + "'");
        }
        n = n * 10 + (token[i] - '0');
      }
      total.n += n;
    }
    if (total.inf) total.n = 0;
    return Elem(std::move(total));
  }

  std::string render(const Elem& e) const override {
    const NatElem& x = as_nat(e);
    return x.inf ? "inf" : x.n.str();
  }
};

class FreeInverseMonoid final : public Monoid {
 public:
  explicit FreeInverseMonoid(std::vector<std::string> generators) {
    if (generators.empty()) throw ParseError("free inverse monoid needs at least one generator");
    auto alphabet = std::make_shared<MunnAlphabet>();
    alphabet->names = std::move(generators);
    for (std::size_t i = 0; i < alphabet->names.size(); ++i) {
      for (std::size_t j = i + 1; j < alphabet->names.size(); ++j) {
        if (alphabet->names[i] == alphabet->names[j]) {
          throw ParseError("duplicate generator '" + alphabet->names[i] + "'");
        }
      }
    }
    alphabet_ = std::move(alphabet);
  }

  std::string name() const override {
    std::string out = "fim:";
    for (std::size_t i = 0; i < alphabet_->names.size(); ++i) {
      if (i) out += ',';
      out += alphabet_->names[i];
    }
    return out;
  }

  Elem identity() const override { return Elem(munn_identity(alphabet_)); }
  Elem product(const Elem& a, const Elem& b) const override {
    return Elem(munn_product(as_munn(a), as_munn(b)));
  }
  bool eq(const Elem& a, const Elem& b) const override { return munn_eq(as_munn(a), as_munn(b)); }
  bool is_prefix(const Elem& p, const Elem& m) const override {
    return munn_is_prefix(as_munn(p), as_munn(m));
  }
  std::vector<Elem> prefixes(const Elem& m) const override {
    std::vector<Elem> out;
    for (auto& p : munn_prefixes(as_munn(m))) out.push_back(Elem(std::move(p)));
    return out;
  }
  std::vector<Elem> completions(const Elem& p, const Elem& m) const override {
    std::vector<Elem> out;
    for (auto& s : munn_completions(as_munn(p), as_munn(m))) out.push_back(Elem(std::move(s)));
    return out;
  }
  Elem parse(std::string_view text) const override { return Elem(munn_parse(alphabet_, text)); }
  std::string render(const Elem& e) const override { return munn_render(as_munn(e)); }

  const MunnAlphabetPtr& alphabet() const { return alphabet_; }

 private:
  MunnAlphabetPtr alphabet_;
};

std::vector<std::string> parse_generator_list(std::string_view spec) {
  std::vector<std::string> gens;
  for (const std::string& part : split_top_level(spec, ',')) {
    std::string g(trim(part));
    if (g.empty()) throw ParseError("empty generator name");
    gens.push_back(std::move(g));
  }
  return gens;
}

}  // namespace

MonoidPtr make_free_monoid(std::vector<std::string> generators) {
  return std::make_shared<FreeMonoid>(std::move(generators));
}

MonoidPtr make_nat_monoid() { return std::make_shared<NatMonoid>(); }

MonoidPtr make_free_inverse_monoid(std::vector<std::string> generators) {
  return std::make_shared<FreeInverseMonoid>(std::move(generators));
}

MonoidPtr make_monoid(std::string_view spec) {
  spec = trim(spec);
  if (spec == "nat") return make_nat_monoid();
  if (spec.starts_with("free:")) return make_free_monoid(parse_generator_list(spec.substr(5)));
  if (spec.starts_with("fim:")) {
    return make_free_inverse_monoid(parse_generator_list(spec.substr(4)));
  }
  throw ParseError("unknown monoid '" + std::string(spec) + "'");
}

}  // namespace wamex
