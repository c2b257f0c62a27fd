#include "atap/freegroup_fox.hpp"

#include <cstdlib>

namespace atap {

// ---------------------------------------------------------------------------
// Word
// ---------------------------------------------------------------------------

Word Word::gen(Gen g, long e) {
  Word w;
  if (e != 0) w.syls_.push_back({g, e});
  return w;
}

Word Word::from_syllables(const std::vector<Syllable>& syls) {
  Word w;
  for (const Syllable& s : syls) w.push(s.g, s.e);
  return w;
}

void Word::push(Gen g, long e) {
  if (e == 0) return;
  if (!syls_.empty() && syls_.back().g == g) {
    syls_.back().e += e;
    if (syls_.back().e == 0) syls_.pop_back();
    return;
  }
  syls_.push_back({g, e});
}

long Word::length() const {
  long n = 0;
  for (const Syllable& s : syls_) n += std::labs(s.e);
  return n;
}

long Word::exponent_sum() const {
  long n = 0;
  for (const Syllable& s : syls_) n += s.e;
  return n;
}

Word Word::inverse() const {
  Word w;
  for (auto it = syls_.rbegin(); it != syls_.rend(); ++it) w.syls_.push_back({it->g, -it->e});
  return w;
}

Word Word::pow(long p) const {
  if (p == 0) return Word();
  const Word base = p > 0 ? *this : inverse();
  Word acc;
  for (long i = 0; i < std::labs(p); ++i) acc = acc * base;
  return acc;
}

Word operator*(const Word& u, const Word& v) {
  Word w = u;
  for (const Syllable& s : v.syls_) w.push(s.g, s.e);
  return w;
}

std::string Word::str() const {
  if (syls_.empty()) return "1";
  std::string out;
  for (const Syllable& s : syls_) {
    if (!out.empty()) out += ' ';
    out += (s.g == Gen::a) ? 'a' : 'b';
    if (s.e != 1) out += "^" + std::to_string(s.e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// GroupRingElt
// ---------------------------------------------------------------------------

GroupRingElt GroupRingElt::from_word(const Word& w, long long coeff) {
  GroupRingElt e;
  e.add_term(w, coeff);
  return e;
}

void GroupRingElt::add_term(const Word& w, long long c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElt& GroupRingElt::operator+=(const GroupRingElt& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

GroupRingElt& GroupRingElt::operator-=(const GroupRingElt& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

GroupRingElt operator+(GroupRingElt a, const GroupRingElt& b) { return a += b; }
GroupRingElt operator-(GroupRingElt a, const GroupRingElt& b) { return a -= b; }

GroupRingElt operator*(const GroupRingElt& a, const GroupRingElt& b) {
  GroupRingElt r;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) r += GroupRingElt::from_word(wa * wb, ca * cb);
  return r;
}

GroupRingElt operator*(long long c, const GroupRingElt& a) {
  GroupRingElt r;
  for (const auto& [w, cw] : a.terms()) r += GroupRingElt::from_word(w, c * cw);
  return r;
}

std::string GroupRingElt::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += c >= 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    const long long mag = c < 0 ? -c : c;
    if (mag != 1) out += std::to_string(mag) + "*";
    out += "(" + w.str() + ")";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Knot words and Fox calculus
// ---------------------------------------------------------------------------

Word build_w(int m) {
  if (m == 0) throw InvalidParam("build_w: m = 0");
  const Word ba = Word::gen(Gen::b) * Word::gen(Gen::a, -1);
  const Word Ba = Word::gen(Gen::b, -1) * Word::gen(Gen::a);
  return ba.pow(m) * Ba.pow(m);
}

Word build_relator(const KnotParams& params) {
  validate_params(params);
  const Word w = build_w(params.m);
  return w.pow(params.n) * Word::gen(Gen::a) * w.pow(-params.n) * Word::gen(Gen::b, -1);
}

GroupRingElt fox_derivative(const Word& u, Gen g) {
  GroupRingElt result;
  Word prefix;
  for (const Syllable& s : u.syllables()) {
    if (s.g == g) {
      // d(g^e)/dg = delta_{e-1}(g), valid for either sign of e.
      GroupRingElt d = delta_p(Word::gen(g), s.e - 1);
      result += GroupRingElt::from_word(prefix) * d;
    }
    prefix = prefix * Word::gen(s.g, s.e);
  }
  return result;
}

GroupRingElt delta_p(const Word& u, long p) {
  GroupRingElt r;
  if (p >= 0) {
    for (long i = 0; i <= p; ++i) r += GroupRingElt::from_word(u.pow(i));
  } else {
    for (long i = p + 1; i <= -1; ++i) r -= GroupRingElt::from_word(u.pow(i));
  }
  return r;
}

GroupRingElt relator_derivative_closed(const KnotParams& params) {
  validate_params(params);
  const int m = params.m;
  const int n = params.n;
  const Word w = build_w(m);
  const Word a = Word::gen(Gen::a);
  const Word b = Word::gen(Gen::b);
  const GroupRingElt one = GroupRingElt::one();

  const GroupRingElt one_minus_a = one - GroupRingElt::from_word(a);
  const GroupRingElt d_n = delta_p(w.inverse(), n - 1);
  const GroupRingElt ab_m = GroupRingElt::from_word((a.inverse() * b).pow(m));
  const GroupRingElt binv_minus_1 = GroupRingElt::from_word(b.inverse()) - one;
  const GroupRingElt d_m = delta_p(a * b.inverse(), m - 1);

  const GroupRingElt inner = one + one_minus_a * d_n * ab_m * binv_minus_1 * d_m;
  return GroupRingElt::from_word(w.pow(n)) * inner;
}

}  // namespace atap
