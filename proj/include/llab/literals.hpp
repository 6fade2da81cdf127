#pragma once

#include <string>

#include "llab/spaces.hpp"
#include "llab/symbols.hpp"
#include "llab/weights.hpp"

namespace llab {

// Plain-text literal grammar (also documented in the README):
//
//   complex:  1.5imag parts with an i suffix: 1+2i, -0.5i, i
//   real:     plain decimal, or a multiple of pi: pi, -pi, 0.5pi
//   symbol:   trigpoly: c_{-n} .. c_n      (whitespace-separated complex)
//             hat(peak,width)              hat(1,pi) is the standard fixture
//             step(a,b,h)                  h * indicator of [a,b)
//             const(c)
//             exp(n) | exp(n,c)            c e^{in theta}
//   weight:   none | const(c) | power(g) | halfpower(g) | pow(<weight>,e)
//   space:    l2 | lp(p) | lorentz(p,q) | orlicz-power(p)
//             | orlicz-piecewise(a,b) | orlicz-logpow(p,c)
//             optionally composed with a weight:  lp(3)*power(0.2)
//
// Parse errors throw std::invalid_argument with the offending text.

cplx parse_complex(const std::string& text);
double parse_real(const std::string& text);  // accepts pi multiples

Symbol parse_symbol(const std::string& text);
Weight parse_weight(const std::string& text);
SpaceSpec parse_space(const std::string& text);

}  // namespace llab
