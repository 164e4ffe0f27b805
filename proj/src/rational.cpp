#include "refl/rational.hpp"

namespace refl {

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
  if (s.empty()) throw DataError("empty rational literal");
  std::string str(s);
  mpq_class v;
  if (v.set_str(str, 10) != 0) throw DataError("bad rational literal: " + str);
  if (sgn(v.get_den()) == 0) throw DataError("zero denominator: " + str);
  v.canonicalize();
  return Rational(std::move(v));
}

Rational Rational::operator/(const Rational& o) const {
  if (o.is_zero()) throw DivisionByZero("rational division by zero");
  return Rational(v_ / o.v_);
}

bool Rational::is_small_integer() const {
  return v_.get_den() == 1 && v_.get_num().fits_slong_p();
}

long Rational::as_long() const {
  if (!is_small_integer()) throw UsageError("rational does not fit in long: " + str());
  return v_.get_num().get_si();
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::size_t Rational::hash() const {
  // residues mod two large primes; cheap and stable
  unsigned long hn = mpz_fdiv_ui(v_.get_num().get_mpz_t(), 0x1fffffffffffffffUL);
  unsigned long hd = mpz_fdiv_ui(v_.get_den().get_mpz_t(), 0x1fffffffffffffffUL);
  if (sgn(v_) < 0) hn = ~hn;
  return hash_combine(hn, hd);
}

}  // namespace refl
