#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "atap/errors.hpp"

namespace atap {

// The pair (m, n) selecting K = J(2m, 2n); both must be nonzero.
struct KnotParams {
  int m = 1;
  int n = 1;
};

inline void validate_params(const KnotParams& p) {
  if (p.m == 0 || p.n == 0)
    throw InvalidParam("KnotParams: m and n must both be nonzero");
}

enum class Gen : std::uint8_t { a = 0, b = 1 };

// One maximal run g^e of a reduced word; e is never 0.
struct Syllable {
  Gen g;
  long e;
  auto operator<=>(const Syllable&) const = default;
};

// Freely reduced word on {a, b}.
class Word {
public:
  Word() = default;
  static Word identity() { return Word(); }
  static Word gen(Gen g, long e = 1);
  static Word from_syllables(const std::vector<Syllable>& syls);

  bool is_identity() const { return syls_.empty(); }
  const std::vector<Syllable>& syllables() const { return syls_; }
  long length() const;  // number of letters
  long exponent_sum() const;

  Word inverse() const;
  Word pow(long p) const;

  std::string str() const;  // e.g. "b a^-1 b^-1 a"

  auto operator<=>(const Word&) const = default;

private:
  void push(Gen g, long e);
  friend Word operator*(const Word& u, const Word& v);
  std::vector<Syllable> syls_;
};

Word operator*(const Word& u, const Word& v);

// Integer-coefficient formal sum of words (Z[F_2]); no zero coefficients kept.
class GroupRingElt {
public:
  GroupRingElt() = default;
  static GroupRingElt zero() { return GroupRingElt(); }
  static GroupRingElt one() { return from_word(Word::identity()); }
  static GroupRingElt from_word(const Word& w, long long coeff = 1);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Word, long long>& terms() const { return terms_; }

  GroupRingElt& operator+=(const GroupRingElt& o);
  GroupRingElt& operator-=(const GroupRingElt& o);

  bool operator==(const GroupRingElt&) const = default;

  std::string str() const;

private:
  void add_term(const Word& w, long long c);
  std::map<Word, long long> terms_;
};

GroupRingElt operator+(GroupRingElt a, const GroupRingElt& b);
GroupRingElt operator-(GroupRingElt a, const GroupRingElt& b);
GroupRingElt operator*(const GroupRingElt& a, const GroupRingElt& b);
GroupRingElt operator*(long long c, const GroupRingElt& a);

// w = (b a^-1)^m (b^-1 a)^m; m != 0.
Word build_w(int m);

// r = w^n a w^-n b^-1, the relator of <a, b | w^n a = b w^n>.
Word build_relator(const KnotParams& params);

// Fox free derivative d/dg with the left product rule
// d(uv)/dg = du/dg + u dv/dg.
GroupRingElt fox_derivative(const Word& u, Gen g);

// delta_p(u) = 1 + u + ... + u^p for p >= 0; 0 for p = -1; the unique
// extension -(u^-1 + ... + u^(p+1)) satisfying (1-u) delta_p(u) = 1 - u^(p+1)
// for p <= -2.
GroupRingElt delta_p(const Word& u, long p);

// The closed form w^n [1 + (1-a) delta_{n-1}(w^-1) (a^-1 b)^m (b^-1 - 1)
// delta_{m-1}(a b^-1)] expanded in the group ring; equals
// fox_derivative(build_relator(params), a) exactly.
GroupRingElt relator_derivative_closed(const KnotParams& params);

}  // namespace atap
