/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The tbar Authors
 */

#pragma once

#include "tbar/dyadic.hpp"

#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

namespace tbar {

struct Breakpoint {
	Dyadic x;
	Dyadic y;

	friend bool operator==(const Breakpoint &, const Breakpoint &) = default;
};

/// Closed interval [lo, hi] with lo < hi.
class Interval {
public:
	Interval(Dyadic lo, Dyadic hi);

	const Dyadic &lo() const noexcept { return lo_; }
	const Dyadic &hi() const noexcept { return hi_; }
	Dyadic length() const { return hi_ - lo_; }
	bool contains(const Dyadic &x) const { return lo_ <= x && x <= hi_; }

	friend bool operator==(const Interval &, const Interval &) = default;

private:
	Dyadic lo_;
	Dyadic hi_;
};

std::ostream &operator<<(std::ostream &os, const Interval &i);

/// Selects one member of the countable family of Thompson-like maps that
/// canonical_map() can produce between two intervals. Zero is the default.
struct ChoiceSeed {
	std::uint64_t value = 0;

	friend bool operator==(const ChoiceSeed &, const ChoiceSeed &) = default;
};

/*
 * Orientation-preserving piecewise-linear homeomorphism between two closed
 * dyadic intervals whose slopes are all powers of two ("Thompson-like").
 *
 * Stored as its breakpoint list together with the base-2 logarithm of each
 * segment's slope. The list is canonical: both endpoints are always present
 * and no interior breakpoint is collinear with its neighbours, so map
 * equality is list equality.
 */
class PLMap {
public:
	class Builder;

	/// Validates (strictly increasing, power-of-two slopes, at least two
	/// points) and canonicalizes. Throws InvariantError.
	static PLMap from_breakpoints(std::vector<Breakpoint> points);

	static PLMap identity(const Interval &domain);

	/// The affine map src -> dst; InvariantError unless the length ratio
	/// is a power of two.
	static PLMap linear(const Interval &src, const Interval &dst);

	Interval domain() const { return {pts_.front().x, pts_.back().x}; }
	Interval range() const { return {pts_.front().y, pts_.back().y}; }

	std::span<const Breakpoint> breakpoints() const noexcept { return pts_; }
	/// log2 of the slope of each segment; one entry per segment.
	std::span<const std::int64_t> slope_exponents() const noexcept { return slopes_; }
	std::size_t segment_count() const noexcept { return slopes_.size(); }

	/// Index of the segment containing x (x must lie in the domain; the
	/// right endpoint belongs to the last segment).
	std::size_t segment_of(const Dyadic &x) const;
	/// Same, searching by image value.
	std::size_t segment_of_image(const Dyadic &y) const;

	/// f(x); UsageError outside the domain.
	Dyadic eval(const Dyadic &x) const;
	/// f^{-1}(y); UsageError outside the range.
	Dyadic eval_inverse(const Dyadic &y) const;

	/// Restriction to a subinterval of the domain.
	PLMap restrict(const Interval &sub) const;

	bool is_linear() const noexcept { return slopes_.size() == 1; }

	friend bool operator==(const PLMap &f, const PLMap &g) { return f.pts_ == g.pts_; }

private:
	PLMap() = default;

	Dyadic eval_on(std::size_t seg, const Dyadic &x) const;

	std::vector<Breakpoint> pts_;
	std::vector<std::int64_t> slopes_;
};

/// Streaming canonical construction from trusted segments. Each segment's
/// slope exponent is supplied by the caller; consecutive segments with
/// equal slope are merged.
class PLMap::Builder {
public:
	Builder() = default;
	explicit Builder(std::size_t reserve)
	{
		map_.pts_.reserve(reserve);
		map_.slopes_.reserve(reserve);
	}

	void start(Breakpoint p);
	void line_to(Breakpoint p, std::int64_t slope_exponent);
	bool empty() const noexcept { return map_.pts_.empty(); }
	const Breakpoint &last() const { return map_.pts_.back(); }

	/// InvariantError if fewer than two points were given.
	PLMap finish() &&;

private:
	PLMap map_;
};

/// f after g (x -> f(g(x))); UsageError unless range(g) == domain(f).
PLMap compose(const PLMap &f, const PLMap &g);

PLMap invert(const PLMap &f);

/*
 * A Thompson-like homeomorphism src -> dst.
 *
 * Both lengths are expanded in binary and each interval is cut into
 * consecutive power-of-two pieces, largest first. The leftmost largest
 * piece of the shorter list is halved until the counts match, and the i-th
 * source piece is mapped linearly onto the i-th destination piece.
 *
 * A nonzero seed s then halves the leftmost source piece s+1 times
 * (cascading to the left) and the rightmost destination piece s+1 times
 * (cascading to the right), giving a different map for every seed.
 */
PLMap canonical_map(const Interval &src, const Interval &dst, ChoiceSeed seed = {});

/// Glues maps whose domains abut left to right and whose images agree at
/// each junction. UsageError on a gap or jump.
PLMap concat(std::span<const PLMap> pieces);

std::ostream &operator<<(std::ostream &os, const PLMap &f);

} // namespace tbar
