#include "ditopo/rat.hpp"

#include <cctype>

#include "ditopo/errors.hpp"

namespace ditopo {

Rat::Rat(long n, long d) {
  if (d == 0) throw DomainError("zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  v_ /= o.v_;
  return *this;
}

static bool valid_integer(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Rat Rat::parse(const std::string& s) {
  auto slash = s.find('/');
  std::string n = s.substr(0, slash);
  std::string d = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_integer(n) || !valid_integer(d) || d[0] == '-' || d[0] == '+')
    throw ParseError("malformed rational '" + s + "'");
  if (n[0] == '+') n = n.substr(1);
  mpz_class zn(n, 10), zd(d, 10);
  if (zd == 0) throw ParseError("zero denominator in '" + s + "'");
  mpq_class q(zn, zd);
  q.canonicalize();
  return Rat(q);
}

std::string Rat::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::size_t Rat::hash() const {
  std::size_t h = mpz_get_ui(v_.get_num_mpz_t());
  h = h * 1000003u ^ mpz_get_ui(v_.get_den_mpz_t());
  return h * 31u + static_cast<std::size_t>(sgn(v_) + 1);
}

}  // namespace ditopo
