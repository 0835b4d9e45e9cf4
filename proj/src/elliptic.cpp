#include <quadtor/elliptic.hpp>

#include <sstream>

namespace quadtor {

CurveK quadratic_twist(const CurveK& E, const QuadElem& d) {
  if (is_zero(d)) throw ZeroTwist();
  Rat q(1, 4);
  QuadElem A = E.b2 * QuadElem(q);
  QuadElem B = E.b4 * QuadElem(Rat(1, 2));
  QuadElem C = E.b6 * QuadElem(q);
  QuadElem z(Rat(0));
  return make_curve(z, d * A, z, d * d * B, d * d * d * C);
}

bool two_torsion_trivial(const CurveK& E, const FieldDesc& K) {
  std::vector<QuadElem> c{E.b6, E.b4 + E.b4, E.b2, QuadElem(Rat(4))};
  return roots_in_K(PolyK(std::move(c)), K).empty();
}

CurveK parse_curve(const std::string& text, const FieldDesc& K) {
  size_t lo = text.find('[');
  size_t hi = text.rfind(']');
  if (lo == std::string::npos || hi == std::string::npos || hi <= lo)
    throw ZeroInput("curve syntax is [a1,a2,a3,a4,a6] or [a4,a6]");
  std::string body = text.substr(lo + 1, hi - lo - 1);
  std::vector<QuadElem> entries;
  std::string cur;
  for (char ch : body) {
    if (ch == ',') {
      entries.push_back(parse_elem(cur, K));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  entries.push_back(parse_elem(cur, K));
  QuadElem z(Rat(0));
  if (entries.size() == 2) return make_curve(z, z, z, entries[0], entries[1]);
  if (entries.size() == 5)
    return make_curve(entries[0], entries[1], entries[2], entries[3], entries[4]);
  throw ZeroInput("curve syntax is [a1,a2,a3,a4,a6] or [a4,a6]");
}

std::string to_string(const CurveK& E) {
  std::ostringstream os;
  os << '[' << to_string(E.a1) << ',' << to_string(E.a2) << ',' << to_string(E.a3) << ','
     << to_string(E.a4) << ',' << to_string(E.a6) << ']';
  return os.str();
}

}  // namespace quadtor
