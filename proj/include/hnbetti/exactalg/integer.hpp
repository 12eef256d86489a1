#ifndef HNBETTI_EXACTALG_INTEGER_HPP
#define HNBETTI_EXACTALG_INTEGER_HPP

#include <gmpxx.h>

#include <string>

namespace hnbetti::exactalg {

// Arbitrary-precision coefficient ring.
using Integer = mpz_class;

inline std::string to_decimal(const Integer& x) { return x.get_str(10); }

// Throws InvalidArgument on anything that is not an optionally signed run of
// decimal digits.
Integer parse_decimal(const std::string& text);

}  // namespace hnbetti::exactalg

#endif  // HNBETTI_EXACTALG_INTEGER_HPP
