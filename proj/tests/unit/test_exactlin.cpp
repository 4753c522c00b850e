#include <doctest.h>

#include <random>

#include "hopf/errors.hpp"
#include "hopf/linalg.hpp"

using namespace hopf;

namespace {

Matrix dense(std::vector<std::vector<long>> rows)
{
	std::vector<std::vector<Scalar>> r;
	for (auto& row : rows) {
		r.emplace_back();
		for (long x : row)
			r.back().push_back(Scalar(x));
	}
	return Matrix::from_dense(r);
}

bool in_kernel(const Matrix& m, const std::vector<Scalar>& v)
{
	for (const auto& y : m.apply(v))
		if (!y.is_zero())
			return false;
	return true;
}

} // namespace

TEST_CASE("scalar canonical form and parsing")
{
	CHECK(Scalar(2, 4).str() == "1/2");
	CHECK(Scalar(3, -6).str() == "-1/2");
	CHECK(Scalar(-4, 2).str() == "-2");
	CHECK(Scalar::parse("-6/8") == Scalar(-3, 4));
	CHECK(Scalar::parse("+7") == Scalar(7));
	CHECK(Scalar::parse("0/5").is_zero());
	CHECK_THROWS_AS(Scalar::parse("1/0"), InputError);
	CHECK_THROWS_AS(Scalar::parse("1/-2"), InputError);
	CHECK_THROWS_AS(Scalar::parse("x"), InputError);
	CHECK_THROWS_AS(Scalar::parse(""), InputError);
	CHECK_THROWS_AS(Scalar(1) / Scalar(0), InputError);
	CHECK(Scalar::parse("123456789012345678901234567890").str() == "123456789012345678901234567890");
}

TEST_CASE("scalar addition matches cross multiplication")
{
	std::mt19937 rng(7);
	std::uniform_int_distribution<long> num(-1000, 1000), den(1, 1000);
	for (int t = 0; t < 500; ++t) {
		long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
		Scalar s = Scalar(a, b) + Scalar(c, d);
		// Oracle: (ad + cb) / bd, compared by cross multiplication.
		mpz_class lhs = mpz_class(s.numerator()) * (mpz_class(b) * d);
		mpz_class rhs = (mpz_class(a) * d + mpz_class(c) * b) * mpz_class(s.denominator());
		CHECK(lhs == rhs);
		CHECK(mpz_class(s.denominator()) > 0);
		mpz_class g;
		mpz_class n(s.numerator());
		mpz_class dd(s.denominator());
		mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), dd.get_mpz_t());
		CHECK((n == 0 ? dd == 1 : g == 1));
	}
}

TEST_CASE("kernel and rank on small matrices")
{
	auto k0 = kernel_basis(dense({{0}}));
	REQUIRE(k0.size() == 1);
	CHECK(k0[0] == std::vector<Scalar>{1});

	CHECK(kernel_basis(Matrix::identity(3)).empty());

	auto k1 = kernel_basis(dense({{1, 1}, {2, 2}}));
	REQUIRE(k1.size() == 1);
	// Row reduction by hand: x + y = 0, so the kernel is spanned by (1, -1).
	CHECK(k1[0][0] == -k1[0][1]);
	CHECK(!k1[0][0].is_zero());

	CHECK(rank(Matrix(2, 3)) == 0);
	CHECK(rank(Matrix::identity(4)) == 4);
	CHECK(rank(dense({{1, 2}, {2, 4}, {3, 6}})) == 1);
}

TEST_CASE("rank-nullity and kernel vectors on random matrices")
{
	std::mt19937 rng(11);
	std::uniform_int_distribution<int> small(-3, 3), dim(1, 7);
	for (int t = 0; t < 200; ++t) {
		size_t r = dim(rng), c = dim(rng);
		Matrix m(r, c);
		for (size_t i = 0; i < r; ++i)
			for (size_t j = 0; j < c; ++j)
				if (rng() % 3 == 0)
					m.set(i, j, Scalar(small(rng), 1 + static_cast<long>(rng() % 4)));
		auto ker = kernel_basis(m);
		CHECK(rank(m) + ker.size() == c);
		CHECK(rank(m) == rank(m.transpose()));
		for (const auto& v : ker)
			CHECK(in_kernel(m, v));
		Matrix kmat(c, ker.size());
		for (size_t j = 0; j < ker.size(); ++j)
			for (size_t i = 0; i < c; ++i)
				kmat.set(i, j, ker[j][i]);
		CHECK(rank(kmat) == ker.size());
	}
}

TEST_CASE("solve and inverse")
{
	Matrix m = dense({{2, 1}, {1, 3}});
	auto x = solve(m, {Scalar(3), Scalar(5)});
	REQUIRE(x);
	CHECK(m.apply(*x) == std::vector<Scalar>{3, 5});
	CHECK_FALSE(solve(dense({{1, 1}, {1, 1}}), {Scalar(1), Scalar(2)}));

	auto inv = inverse(m);
	REQUIRE(inv);
	CHECK(*inv * m == Matrix::identity(2));
	CHECK_FALSE(inverse(dense({{1, 2}, {2, 4}})));
	CHECK_THROWS_AS(inverse(Matrix(2, 3)), InputError);
}

TEST_CASE("span builder prefix ranks and reduction")
{
	SpanBuilder sb;
	CHECK(sb.insert({{0, Scalar(1)}, {1, Scalar(1)}}));
	CHECK(sb.insert({{1, Scalar(2)}}));
	CHECK_FALSE(sb.insert({{0, Scalar(3)}, {1, Scalar(5)}}));
	CHECK(sb.rank() == 2);
	CHECK(sb.contains({{0, Scalar(1)}}));
	CHECK_FALSE(sb.contains({{2, Scalar(1)}}));
}
