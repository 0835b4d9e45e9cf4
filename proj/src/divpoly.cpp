#include <quadtor/divpoly.hpp>

namespace quadtor {

template struct DivisionChain<QuadElem>;
template struct DivisionChain<FFElem>;
template DivisionChain<QuadElem> division_chain(const Curve<QuadElem>&, unsigned);
template DivisionChain<FFElem> division_chain(const Curve<FFElem>&, unsigned);
template Poly<QuadElem> division_polynomial(const Curve<QuadElem>&, unsigned);
template Poly<FFElem> division_polynomial(const Curve<FFElem>&, unsigned);
template Poly<QuadElem> primitive_division_poly(const Curve<QuadElem>&, unsigned);
template Poly<FFElem> primitive_division_poly(const Curve<FFElem>&, unsigned);
template std::pair<Poly<QuadElem>, Poly<QuadElem>> mult_x_fraction(const Curve<QuadElem>&,
                                                                   unsigned);
template std::pair<Poly<FFElem>, Poly<FFElem>> mult_x_fraction(const Curve<FFElem>&, unsigned);

}  // namespace quadtor
