/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The tbar Authors
 */

// Shared helpers for the unit tests: literal tables, random generators and
// an invariant checker that re-validates a map from scratch.

#pragma once

#include "tbar/element.hpp"
#include "tbar/error.hpp"

#include <doctest.h>

#include <random>
#include <string>
#include <vector>

namespace tbar::test {

inline Dyadic q(std::int64_t num, std::int64_t exp = 0)
{
	return Dyadic::normalize(num, exp);
}

inline Dyadic dy(const char *text)
{
	return Dyadic::parse(text);
}

inline PLMap table(std::initializer_list<std::pair<const char *, const char *>> pts)
{
	std::vector<Breakpoint> v;
	for (auto [x, y] : pts)
		v.push_back({dy(x), dy(y)});
	return PLMap::from_breakpoints(std::move(v));
}

/// a on [0, 1]: x/2 + 1/2, x + 1/8, 4x - 5/2.
inline PLMap a_table()
{
	return table({{"0", "1/2"}, {"3/4", "7/8"}, {"7/8", "1"}, {"1", "3/2"}});
}

/// b on [0, 1]: x/2 + 1/2, x + 1/4, 2x - 1/2.
inline PLMap b_table()
{
	return table({{"0", "1/2"}, {"1/2", "3/4"}, {"3/4", "1"}, {"1", "3/2"}});
}

inline Element a_elem()
{
	return Element::from_fundamental(a_table());
}

inline Element b_elem()
{
	return Element::from_fundamental(b_table());
}

/// Rebuilds the map from its breakpoint list through the validating
/// constructor; a canonical, valid map must come back unchanged.
inline void check_invariants(const PLMap &f)
{
	auto pts = f.breakpoints();
	PLMap again = PLMap::from_breakpoints({pts.begin(), pts.end()});
	CHECK(again == f);
	CHECK(f.segment_count() + 1 == pts.size());
}

inline void check_invariants(const Element &e)
{
	check_invariants(e.fundamental());
	CHECK(e.fundamental().domain() == Interval(Dyadic(0), Dyadic(1)));
	auto pts = e.fundamental().breakpoints();
	CHECK(pts.back().y == pts.front().y + Dyadic(1));
}

using Rng = std::mt19937_64;

/// m / 2^e with |m| < 2^bits and e in [0, max_exp].
inline Dyadic random_dyadic(Rng &rng, int bits = 20, int max_exp = 12)
{
	std::uniform_int_distribution<std::int64_t> num(-(std::int64_t{1} << bits), std::int64_t{1} << bits);
	std::uniform_int_distribution<int> exp(0, max_exp);
	return Dyadic::normalize(num(rng), exp(rng));
}

/// Random product of at most max_len generators a, b and their inverses.
inline Element random_element(Rng &rng, int max_len = 12)
{
	static const Element gens[4] = {a_elem(), b_elem(), invert(a_elem()), invert(b_elem())};
	std::uniform_int_distribution<int> len(0, max_len), pick(0, 3);
	Element e;
	for (int i = len(rng); i > 0; --i)
		e = compose(e, gens[pick(rng)]);
	return e;
}

/// Random Thompson-like map on [0, L] built segment by segment.
inline PLMap random_plmap(Rng &rng, const Dyadic &x0 = Dyadic(0), const Dyadic &y0 = Dyadic(0))
{
	std::uniform_int_distribution<int> segs(1, 6), width(0, 4), slope(-2, 2);
	PLMap::Builder b;
	Dyadic x = x0, y = y0;
	b.start({x, y});
	for (int i = segs(rng); i > 0; --i) {
		int w = width(rng), k = slope(rng);
		x += mul_pow2(Dyadic(1), -w);
		y += mul_pow2(Dyadic(1), k - w);
		b.line_to({x, y}, k);
	}
	return std::move(b).finish();
}

} // namespace tbar::test
