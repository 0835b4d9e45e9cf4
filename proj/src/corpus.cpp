#include <quadtor/corpus.hpp>

#include <sstream>

namespace quadtor {

namespace {

// y^2 + (1-c) xy - b y = x^3 - b x^2 with b = t^3 - t^2, c = t^2 - t puts
// (0, 0) at exact order 7 whenever the model is nonsingular
CurveK seven_torsion_curve(const Rat& t, const FieldDesc& K) {
  Rat b = t * t * t - t * t;
  Rat c = t * t - t;
  return make_curve(coerce(QuadElem(Rat(1) - c), K), coerce(QuadElem(-b), K),
                    coerce(QuadElem(-b), K), coerce(QuadElem(Rat(0)), K),
                    coerce(QuadElem(Rat(0)), K));
}

}  // namespace

std::vector<CorpusEntry> growth_corpus() {
  std::vector<CorpusEntry> out;

  FieldDesc K2 = FieldDesc::imaginary(2);
  out.push_back({"ninetor/" + K2.name(), K2,
                 parse_curve("[-950/27*w-619/27,16720/243*w-210862/243,"
                             "16720/243*w-210862/243,0,0]",
                             K2)});
  FieldDesc K11 = FieldDesc::imaginary(11);
  out.push_back({"ninetor/" + K11.name(), K11,
                 parse_curve("[-2072/27*w-4265/27,-949568/243*w+377548/243,"
                             "-949568/243*w+377548/243,0,0]",
                             K11)});

  const Rat tvals[] = {Rat(2), Rat(3), Rat(-1), Rat(1, 2)};
  for (int d : kClassNumberOneD) {
    FieldDesc K = FieldDesc::imaginary(d);
    for (const Rat& t : tvals) {
      CurveK E;
      try {
        E = seven_torsion_curve(t, K);
      } catch (const ZeroInput&) {
        continue;  // singular parameter, excluded from the family
      }
      out.push_back({"seventor(" + t.get_str() + ")/" + K.name(), K, E});
    }
  }

  for (int d : kClassNumberOneD) {
    FieldDesc K = FieldDesc::imaginary(d);
    Rng rng(1000 + static_cast<uint64_t>(d));
    int kept = 0;
    while (kept < 20) {
      QuadElem a4 = coerce(QuadElem(Rat(rng.range(-10, 10))), K);
      QuadElem a6 = coerce(QuadElem(Rat(rng.range(-10, 10))), K);
      CurveK E;
      try {
        E = make_curve_short(a4, a6);
      } catch (const ZeroInput&) {
        continue;
      }
      if (!two_torsion_trivial(E, K)) continue;
      std::ostringstream label;
      label << "random(" << kept << ")/" << K.name();
      out.push_back({label.str(), K, E});
      ++kept;
    }
  }
  return out;
}

}  // namespace quadtor
