/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The tbar Authors
 */

#include "tbar/element.hpp"

#include "tbar/error.hpp"

namespace tbar {

namespace {

const Interval &unit_interval()
{
	static const Interval unit(Dyadic(0), Dyadic(1));
	return unit;
}

} // namespace

Element::Element() : f_(PLMap::identity(unit_interval())) {}

Element Element::from_fundamental(PLMap fundamental)
{
	if (fundamental.domain() != unit_interval())
		throw InvariantError("fundamental domain must be [0, 1]");
	auto pts = fundamental.breakpoints();
	if (pts.back().y != pts.front().y + Dyadic(1))
		throw InvariantError("not periodic: f(1) = " + pts.back().y.to_string() + " but f(0) + 1 = " +
		                     (pts.front().y + Dyadic(1)).to_string());
	return Element(std::move(fundamental), Trusted{});
}

Element Element::translation(const Dyadic &shift)
{
	return Element(PLMap::linear(unit_interval(), Interval(shift, shift + Dyadic(1))), Trusted{});
}

Dyadic Element::eval(const Dyadic &x) const
{
	Dyadic k = x.floor();
	return f_.eval(x - k) + k;
}

Dyadic Element::eval_inverse(const Dyadic &y) const
{
	Dyadic k = (y - f_.breakpoints().front().y).floor();
	return f_.eval_inverse(y - k) + k;
}

PLMap Element::restrict(const Interval &window) const
{
	return periodic_window(f_, window);
}

PLMap periodic_window(const PLMap &period, const Interval &window)
{
	auto pts = period.breakpoints();
	auto ks = period.slope_exponents();
	const Dyadic &x0 = pts.front().x;

	Dyadic k = (window.lo() - x0).floor();
	std::size_t s = period.segment_of(window.lo() - k);

	auto value = [&](std::size_t seg, const Dyadic &x) {
		return pts[seg].y + k + mul_pow2(x - (pts[seg].x + k), ks[seg]);
	};

	PLMap::Builder b;
	b.start({window.lo(), value(s, window.lo())});
	for (;;) {
		Dyadic nx = pts[s + 1].x + k;
		if (nx >= window.hi()) {
			b.line_to({window.hi(), value(s, window.hi())}, ks[s]);
			break;
		}
		b.line_to({std::move(nx), pts[s + 1].y + k}, ks[s]);
		if (++s == ks.size()) {
			s = 0;
			k += Dyadic(1);
		}
	}
	return std::move(b).finish();
}

Element compose(const Element &f, const Element &g)
{
	const PLMap &inner = g.f_;
	PLMap outer = periodic_window(f.f_, inner.range());
	return Element(compose(outer, inner), Element::Trusted{});
}

Element invert(const Element &f)
{
	return Element(periodic_window(invert(f.f_), unit_interval()), Element::Trusted{});
}

Element power(const Element &e, std::int64_t k)
{
	Element base = k < 0 ? invert(e) : e;
	std::uint64_t n = k < 0 ? -static_cast<std::uint64_t>(k) : static_cast<std::uint64_t>(k);
	Element acc;
	bool started = false;
	while (n) {
		if (n & 1) {
			acc = started ? compose(acc, base) : base;
			started = true;
		}
		n >>= 1;
		if (n)
			base = compose(base, base);
	}
	return acc;
}

bool is_identity(const Element &e)
{
	return e == Element();
}

std::optional<std::int64_t> is_power_of_z(const Element &e)
{
	const PLMap &f = e.fundamental();
	if (!f.is_linear() || f.slope_exponents().front() != 0)
		return std::nullopt;
	const Dyadic &shift = f.breakpoints().front().y;
	if (!shift.is_integer() || !shift.is_small())
		return std::nullopt;
	return shift.to_int64();
}

FixedPointFree fixed_point_free(const Element &e)
{
	int sign = 0;
	for (const Breakpoint &p : e.fundamental().breakpoints()) {
		int s = (p.y <=> p.x) < 0 ? -1 : (p.y == p.x ? 0 : 1);
		if (s == 0 || (sign != 0 && s != sign))
			return {};
		sign = s;
	}
	return {true, sign};
}

std::ostream &operator<<(std::ostream &os, const Element &e)
{
	return os << e.fundamental();
}

} // namespace tbar
