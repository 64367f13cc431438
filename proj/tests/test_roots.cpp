/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The tbar Authors
 */

#include "support.hpp"

#include "tbar/roots.hpp"

using namespace tbar;
using namespace tbar::test;

namespace {

Interval iv(const char *lo, const char *hi)
{
	return {dy(lo), dy(hi)};
}

// s_2: square root of z with s_2(x) = x + 1/2 on [0, 1/2].
const Element &s2()
{
	static const Element e = nth_root(Element::z(), 2, 1);
	return e;
}

// s_3: cube root of s_2, s_3^6 = z.
const Element &s3()
{
	static const Element e = nth_root(s2(), 3, 2);
	return e;
}

} // namespace

TEST_CASE("root_germ examples")
{
	RootGerm g = root_germ(Element::z(), 2);
	CHECK(g.partition == std::vector<Dyadic>{Dyadic(0), dy("1/2"), Dyadic(1)});
	CHECK(g.pieces[0] == PLMap::linear(iv("0", "1/2"), iv("1/2", "1")));
	CHECK(g.pieces[1] == PLMap::linear(iv("1/2", "1"), iv("1", "3/2")));

	RootGerm h = root_germ(s2(), 3);
	CHECK(h.partition == std::vector<Dyadic>{Dyadic(0), dy("1/8"), dy("1/4"), dy("1/2")});
	CHECK(h.pieces[0] == PLMap::linear(iv("0", "1/8"), iv("1/8", "1/4")));
	CHECK(h.pieces[1] == PLMap::linear(iv("1/8", "1/4"), iv("1/4", "1/2")));
	CHECK(h.pieces[2] == PLMap::linear(iv("1/4", "1/2"), iv("1/2", "5/8")));
	CHECK(h.pieces[2].eval(dy("3/8")) == dy("9/16"));

	CHECK_THROWS_AS(root_germ(Element(), 2), InvariantError);
	CHECK_THROWS_AS(root_germ(invert(Element::z()), 2), InvariantError);
	CHECK_THROWS_AS(root_germ(Element::z(), 1), UsageError);
	CHECK_THROWS_AS(root_germ(Element::z(), {Dyadic(0), dy("3/4"), dy("1/2"), Dyadic(1)}), UsageError);
	CHECK_THROWS_AS(root_germ(Element::z(), {Dyadic(0), dy("1/2"), dy("3/4")}), UsageError);
}

TEST_CASE("eval_root examples")
{
	RootGerm g = root_germ(Element::z(), 2);
	CHECK(eval_root(Element::z(), g, dy("5/4")) == dy("7/4"));
	CHECK(eval_root(Element::z(), g, Dyadic(0)) == dy("1/2"));
	CHECK(eval_root(Element::z(), g, dy("-7/4")) == dy("-5/4"));
}

TEST_CASE("nth_root examples")
{
	CHECK(nth_root(Element::z(), 2, 1) == Element::translation(dy("1/2")));
	CHECK(s3()(Dyadic(0)) == dy("1/8"));
	CHECK(power(s3(), 3) == s2());
	CHECK(power(s3(), 6) == Element::z());
	CHECK_THROWS_AS(nth_root(a_elem(), 2, 1), InvariantError);
	CHECK_THROWS_AS(nth_root(Element::z(), 2, 0), UsageError);
	// a^4 = z
	Element r = nth_root(a_elem(), 2, 4);
	CHECK(power(r, 2) == a_elem());
	CHECK(power(r, 8) == Element::z());
}

TEST_CASE("roots with a prescribed value at 0")
{
	Element f = nth_root_with_value(Element::z(), 2, 1, dy("3/4"));
	CHECK(f(Dyadic(0)) == dy("3/4"));
	CHECK(power(f, 2) == Element::z());
	CHECK(nth_root_with_value(Element::z(), 2, 1, dy("1/2")) == nth_root(Element::z(), 2, 1));
	CHECK_THROWS_AS(nth_root_with_value(Element::z(), 2, 1, dy("3/2")), UsageError);
	CHECK_THROWS_AS(nth_root_with_value(Element::z(), 2, 1, Dyadic(0)), UsageError);

	for (int n = 2; n <= 6; ++n)
		for (const char *v : {"1/64", "1/2", "3/4", "63/64"}) {
			CAPTURE(n);
			CAPTURE(v);
			auto p = prescribed_partition(Dyadic(1), n, dy(v));
			REQUIRE(p.size() == static_cast<std::size_t>(n + 1));
			REQUIRE(p[1] == dy(v));
			for (std::size_t i = 1; i < p.size(); ++i)
				REQUIRE(p[i - 1] < p[i]);
			Element e = nth_root_with_value(Element::z(), n, 1, dy(v));
			REQUIRE(e(Dyadic(0)) == dy(v));
			REQUIRE(power(e, n) == Element::z());
		}
}

TEST_CASE("seeds give distinct roots")
{
	for (auto [g, m] : {std::pair{&s2(), 2}, std::pair{&s3(), 6}}) {
		std::vector<Element> seen;
		for (std::uint64_t s = 0; s < 4; ++s) {
			Element f = nth_root(*g, 3, m, ChoiceSeed{s});
			REQUIRE(power(f, 3) == *g);
			for (const Element &e : seen)
				REQUIRE_FALSE(e == f);
			seen.push_back(f);
			// same seed, same root
			REQUIRE(nth_root(*g, 3, m, ChoiceSeed{s}) == f);
		}
	}
}

TEST_CASE("germ consistency")
{
	for (int n = 2; n <= 5; ++n)
		for (std::uint64_t s = 0; s < 3; ++s) {
			CAPTURE(n);
			CAPTURE(s);
			RootGerm g = root_germ(s2(), n, ChoiceSeed{s});
			REQUIRE(g.pieces.size() == static_cast<std::size_t>(n));
			for (int i = 0; i < n; ++i) {
				const PLMap &piece = g.pieces[static_cast<std::size_t>(i)];
				REQUIRE(piece.domain().lo() == g.partition[static_cast<std::size_t>(i)]);
				if (i + 1 < n)
					REQUIRE(piece.range().lo() == g.partition[static_cast<std::size_t>(i + 1)]);
				check_invariants(piece);
			}
			// f_n o ... o f_1 = g on [0, p_1]
			PLMap chain = g.pieces[0];
			for (int i = 1; i < n; ++i)
				chain = compose(g.pieces[static_cast<std::size_t>(i)], chain);
			REQUIRE(chain == s2().restrict(chain.domain()));
		}
}

TEST_CASE("eval_root agrees with the materialized root")
{
	Rng rng(5);
	struct Case {
		const Element *g;
		int n;
		std::int64_t m;
	};
	Element z = Element::z();
	Element b = b_elem();
	for (Case c : {Case{&z, 2, 1}, Case{&z, 5, 1}, Case{&s2(), 3, 2}, Case{&s3(), 4, 6}, Case{&b, 2, 3}})
		for (std::uint64_t s = 0; s < 3; ++s) {
			RootGerm germ = root_germ(*c.g, c.n, ChoiceSeed{s});
			Element f = materialize_root(*c.g, germ);
			check_invariants(f);
			REQUIRE(f == nth_root(*c.g, c.n, c.m, ChoiceSeed{s}));
			REQUIRE(power(f, c.n) == *c.g);
			REQUIRE(compose(f, z) == compose(z, f));
			for (int i = 0; i < 200; ++i) {
				Dyadic x = mul_pow2(Dyadic(static_cast<std::int64_t>(rng() % 4097) - 2048), -10);
				REQUIRE(eval_root(*c.g, germ, x) == f(x));
			}
		}
}

TEST_CASE("negative displacement")
{
	Element zi = invert(Element::z());
	Element f = nth_root(zi, 2, -1);
	CHECK(power(f, 2) == zi);
	CHECK(f == invert(nth_root(Element::z(), 2, 1)));
	Element g = nth_root(invert(s2()), 3, -2);
	CHECK(power(g, 3) == invert(s2()));
}

TEST_CASE("order_over_z")
{
	CHECK(order_over_z(Element::z()) == 1);
	CHECK(order_over_z(b_elem()) == 3);
	CHECK(order_over_z(a_elem()) == 4);
	CHECK(order_over_z(s2()) == 2);
	CHECK(order_over_z(s3()) == 6);
	CHECK(order_over_z(invert(Element::z())) == -1);
	CHECK(order_over_z(invert(b_elem())) == -3);
	CHECK_FALSE(order_over_z(Element()));
	CHECK_FALSE(order_over_z(s3(), 5));
}
