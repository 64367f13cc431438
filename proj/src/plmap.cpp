/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The tbar Authors
 */

#include "tbar/plmap.hpp"

#include "tbar/error.hpp"

#include <algorithm>
#include <utility>

namespace tbar {

Interval::Interval(Dyadic lo, Dyadic hi) : lo_(std::move(lo)), hi_(std::move(hi))
{
	if (!(lo_ < hi_))
		throw UsageError("empty interval [" + lo_.to_string() + ", " + hi_.to_string() + "]");
}

std::ostream &operator<<(std::ostream &os, const Interval &i)
{
	return os << '[' << i.lo() << ", " << i.hi() << ']';
}

void PLMap::Builder::start(Breakpoint p)
{
	map_.pts_.clear();
	map_.slopes_.clear();
	map_.pts_.push_back(std::move(p));
}

void PLMap::Builder::line_to(Breakpoint p, std::int64_t slope_exponent)
{
	if (!map_.slopes_.empty() && map_.slopes_.back() == slope_exponent)
		map_.pts_.back() = std::move(p);
	else {
		map_.pts_.push_back(std::move(p));
		map_.slopes_.push_back(slope_exponent);
	}
}

PLMap PLMap::Builder::finish() &&
{
	if (map_.pts_.size() < 2)
		throw InvariantError("PL map needs at least two breakpoints");
	return std::move(map_);
}

PLMap PLMap::from_breakpoints(std::vector<Breakpoint> points)
{
	if (points.size() < 2)
		throw InvariantError("PL map needs at least two breakpoints");
	Builder b(points.size());
	b.start(points.front());
	for (std::size_t i = 1; i < points.size(); ++i) {
		const Breakpoint &p = points[i - 1], &q = points[i];
		if (!(p.x < q.x) || !(p.y < q.y))
			throw InvariantError("breakpoints must be strictly increasing in both coordinates (at x = " +
			                     q.x.to_string() + ")");
		auto k = pow2_ratio(q.y - p.y, q.x - p.x);
		if (!k)
			throw InvariantError("slope on [" + p.x.to_string() + ", " + q.x.to_string() +
			                     "] is not a power of two");
		b.line_to(q, *k);
	}
	return std::move(b).finish();
}

PLMap PLMap::identity(const Interval &domain)
{
	Builder b(2);
	b.start({domain.lo(), domain.lo()});
	b.line_to({domain.hi(), domain.hi()}, 0);
	return std::move(b).finish();
}

PLMap PLMap::linear(const Interval &src, const Interval &dst)
{
	auto k = pow2_ratio(dst.length(), src.length());
	if (!k)
		throw InvariantError("length ratio of " + dst.length().to_string() + " to " +
		                     src.length().to_string() + " is not a power of two");
	Builder b(2);
	b.start({src.lo(), dst.lo()});
	b.line_to({src.hi(), dst.hi()}, *k);
	return std::move(b).finish();
}

std::size_t PLMap::segment_of(const Dyadic &x) const
{
	if (x < pts_.front().x || x > pts_.back().x)
		throw UsageError(x.to_string() + " is outside the domain [" + pts_.front().x.to_string() + ", " +
		                 pts_.back().x.to_string() + "]");
	auto it = std::upper_bound(pts_.begin(), pts_.end(), x,
	                           [](const Dyadic &v, const Breakpoint &p) { return v < p.x; });
	auto idx = static_cast<std::size_t>(it - pts_.begin());
	return std::min(idx, slopes_.size()) - 1;
}

std::size_t PLMap::segment_of_image(const Dyadic &y) const
{
	if (y < pts_.front().y || y > pts_.back().y)
		throw UsageError(y.to_string() + " is outside the range [" + pts_.front().y.to_string() + ", " +
		                 pts_.back().y.to_string() + "]");
	auto it = std::upper_bound(pts_.begin(), pts_.end(), y,
	                           [](const Dyadic &v, const Breakpoint &p) { return v < p.y; });
	auto idx = static_cast<std::size_t>(it - pts_.begin());
	return std::min(idx, slopes_.size()) - 1;
}

Dyadic PLMap::eval_on(std::size_t seg, const Dyadic &x) const
{
	const Breakpoint &p = pts_[seg];
	return p.y + mul_pow2(x - p.x, slopes_[seg]);
}

Dyadic PLMap::eval(const Dyadic &x) const
{
	return eval_on(segment_of(x), x);
}

Dyadic PLMap::eval_inverse(const Dyadic &y) const
{
	std::size_t seg = segment_of_image(y);
	const Breakpoint &p = pts_[seg];
	return p.x + mul_pow2(y - p.y, -slopes_[seg]);
}

PLMap PLMap::restrict(const Interval &sub) const
{
	std::size_t first = segment_of(sub.lo());
	std::size_t last = segment_of(sub.hi());
	if (last > first && pts_[last].x == sub.hi())
		--last;
	Builder b(last - first + 2);
	b.start({sub.lo(), eval_on(first, sub.lo())});
	for (std::size_t s = first; s < last; ++s)
		b.line_to(pts_[s + 1], slopes_[s]);
	b.line_to({sub.hi(), eval_on(last, sub.hi())}, slopes_[last]);
	return std::move(b).finish();
}

PLMap compose(const PLMap &f, const PLMap &g)
{
	auto fp = f.breakpoints(), gp = g.breakpoints();
	auto fk = f.slope_exponents(), gk = g.slope_exponents();
	if (gp.front().y != fp.front().x || gp.back().y != fp.back().x)
		throw UsageError("compose: range of inner map does not match domain of outer map");

	PLMap::Builder b(fp.size() + gp.size());
	b.start({gp.front().x, fp.front().y});
	std::size_t i = 0, j = 0;
	while (i < gk.size()) {
		const Dyadic &next_g = gp[i + 1].y;
		const Dyadic &next_f = fp[j + 1].x;
		std::int64_t k = gk[i] + fk[j];
		auto c = next_g <=> next_f;
		if (c < 0) {
			b.line_to({gp[i + 1].x, fp[j].y + mul_pow2(next_g - fp[j].x, fk[j])}, k);
			++i;
		} else if (c > 0) {
			b.line_to({gp[i].x + mul_pow2(next_f - gp[i].y, -gk[i]), fp[j + 1].y}, k);
			++j;
		} else {
			b.line_to({gp[i + 1].x, fp[j + 1].y}, k);
			++i;
			++j;
		}
	}
	return std::move(b).finish();
}

PLMap invert(const PLMap &f)
{
	auto pts = f.breakpoints();
	auto ks = f.slope_exponents();
	PLMap::Builder b(pts.size());
	b.start({pts[0].y, pts[0].x});
	for (std::size_t s = 0; s < ks.size(); ++s)
		b.line_to({pts[s + 1].y, pts[s + 1].x}, -ks[s]);
	return std::move(b).finish();
}

namespace {

// Exponents of the binary expansion of a positive dyadic, largest first.
std::vector<std::int64_t> binary_pieces(const Dyadic &length)
{
	mpz_class m = length.numerator();
	std::vector<std::int64_t> out;
	auto bits = static_cast<std::int64_t>(mpz_sizeinbase(m.get_mpz_t(), 2));
	for (std::int64_t bit = bits - 1; bit >= 0; --bit)
		if (mpz_tstbit(m.get_mpz_t(), static_cast<mp_bitcnt_t>(bit)))
			out.push_back(bit - length.exponent());
	return out;
}

void halve_largest(std::vector<std::int64_t> &pieces)
{
	auto it = std::max_element(pieces.begin(), pieces.end());
	std::int64_t e = *it - 1;
	*it = e;
	pieces.insert(it, e);
}

} // namespace

PLMap canonical_map(const Interval &src, const Interval &dst, ChoiceSeed seed)
{
	std::vector<std::int64_t> a = binary_pieces(src.length());
	std::vector<std::int64_t> b = binary_pieces(dst.length());
	while (a.size() < b.size())
		halve_largest(a);
	while (b.size() < a.size())
		halve_largest(b);

	if (seed.value > 0) {
		for (std::uint64_t s = 0; s <= seed.value; ++s) {
			std::int64_t e = a.front() - 1;
			a.front() = e;
			a.insert(a.begin(), e);
			e = b.back() - 1;
			b.back() = e;
			b.push_back(e);
		}
	}

	PLMap::Builder out(a.size() + 1);
	Dyadic x = src.lo(), y = dst.lo();
	out.start({x, y});
	for (std::size_t i = 0; i < a.size(); ++i) {
		x += mul_pow2(Dyadic(1), a[i]);
		y += mul_pow2(Dyadic(1), b[i]);
		out.line_to({x, y}, b[i] - a[i]);
	}
	return std::move(out).finish();
}

PLMap concat(std::span<const PLMap> pieces)
{
	if (pieces.empty())
		throw UsageError("concat: no pieces");
	std::size_t total = 0;
	for (const PLMap &p : pieces)
		total += p.breakpoints().size();
	PLMap::Builder b(total);
	b.start(pieces.front().breakpoints().front());
	for (std::size_t i = 0; i < pieces.size(); ++i) {
		auto pts = pieces[i].breakpoints();
		auto ks = pieces[i].slope_exponents();
		if (pts.front() != b.last())
			throw UsageError("concat: piece " + std::to_string(i) + " does not start at (" +
			                 b.last().x.to_string() + ", " + b.last().y.to_string() + ")");
		for (std::size_t s = 0; s < ks.size(); ++s)
			b.line_to(pts[s + 1], ks[s]);
	}
	return std::move(b).finish();
}

std::ostream &operator<<(std::ostream &os, const PLMap &f)
{
	os << '{';
	bool first = true;
	for (const Breakpoint &p : f.breakpoints()) {
		os << (first ? "" : ", ") << '(' << p.x << ", " << p.y << ')';
		first = false;
	}
	return os << '}';
}

} // namespace tbar
