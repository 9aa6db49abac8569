#include "qma/parser.hpp"

namespace qma {

template Polynomial<double> parse_polynomial<double>(const std::string&, int);
template Polynomial<Rational> parse_polynomial<Rational>(const std::string&, int);

}  // namespace qma
