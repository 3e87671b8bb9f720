#include <doctest.h>

#include <limits>
#include <stdexcept>

#include "cosmopoly/polynomial.hpp"

using namespace cosmopoly;

TEST_CASE("construction trims trailing zeros") {
  CHECK(IntPolynomial{1, 3, 0, 0}.degree() == 1);
  CHECK(IntPolynomial{}.is_zero());
  CHECK(IntPolynomial{0, 0}.degree() == -1);
  CHECK(IntPolynomial::monomial(5, 3).coeffs() == std::vector<std::int64_t>{0, 0, 0, 5});
}

TEST_CASE("arithmetic") {
  const IntPolynomial a{1, 3};
  CHECK(a.pow(3) == IntPolynomial{1, 9, 27, 27});
  CHECK(a.pow(3) - IntPolynomial{0, 2}.pow(3) == IntPolynomial{1, 9, 27, 19});
  CHECK(a + IntPolynomial{0, -3} == IntPolynomial{1});
  CHECK((a - a).is_zero());
  CHECK(a.pow(0) == IntPolynomial{1});
  CHECK(a.pow(4) == IntPolynomial{1, 12, 54, 108, 81});
  CHECK(a.pow(4).evaluate(1) == 256);
}

TEST_CASE("predicates") {
  CHECK(IntPolynomial{1, 2, 1}.is_palindromic());
  CHECK_FALSE(IntPolynomial{1, 3}.is_palindromic());
  CHECK(IntPolynomial{1, 7, 15, 9}.dominated_by(IntPolynomial{1, 9, 27, 19}));
  CHECK_FALSE(IntPolynomial{1, 9, 27, 19}.dominated_by(IntPolynomial{1, 7, 15, 9}));
  CHECK(IntPolynomial{1, 1}.dominated_by(IntPolynomial{1, 1, 1}));
  CHECK_FALSE(IntPolynomial{1, 0, 1}.dominated_by(IntPolynomial{1, 1}));
  CHECK(IntPolynomial{1, 0, 2}.all_nonnegative());
  CHECK_FALSE(IntPolynomial{1, -1}.all_nonnegative());
}

TEST_CASE("rendering") {
  CHECK(IntPolynomial{1, 3}.to_string() == "1 + 3z");
  CHECK(IntPolynomial{1, 1}.to_string() == "1 + z");
  CHECK(IntPolynomial{1, 9, 27, 19}.to_string() == "1 + 9z + 27z^2 + 19z^3");
  CHECK(IntPolynomial{0, -1, 0, 2}.to_string() == "-z + 2z^3");
  CHECK(IntPolynomial{1, 0, -1}.to_string() == "1 - z^2");
  CHECK(IntPolynomial{}.to_string() == "0");
}

TEST_CASE("overflow is reported") {
  const auto big = IntPolynomial::constant(std::numeric_limits<std::int64_t>::max());
  CHECK_THROWS_AS(big + IntPolynomial{1}, std::overflow_error);
  CHECK_THROWS_AS(big * IntPolynomial{2}, std::overflow_error);
  CHECK_THROWS_AS((IntPolynomial{1, 3}.pow(-1)), std::invalid_argument);
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(11, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(60, 30) == 118264581564861424LL);
}
