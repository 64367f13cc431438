/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The tbar Authors
 */

#pragma once

#include "tbar/plmap.hpp"

#include <cstdint>
#include <optional>
#include <ostream>

namespace tbar {

/*
 * An element of T-bar: a PL homeomorphism of the real line with dyadic
 * breakpoints and power-of-two slopes that commutes with z(x) = x + 1.
 *
 * The element is stored by its restriction to [0, 1] (the "fundamental"),
 * which always carries anchor breakpoints at 0 and 1 and satisfies
 * f(1) = f(0) + 1. Everything else follows from f(x + k) = f(x) + k.
 */
class Element {
public:
	/// Identity.
	Element();

	/// Validates domain [0, 1] and f(1) = f(0) + 1. Throws InvariantError.
	static Element from_fundamental(PLMap fundamental);

	static Element translation(const Dyadic &shift);
	/// z(x) = x + 1, the generator of the centre.
	static Element z() { return translation(Dyadic(1)); }

	const PLMap &fundamental() const noexcept { return f_; }
	std::size_t breakpoint_count() const noexcept { return f_.breakpoints().size(); }

	Dyadic operator()(const Dyadic &x) const { return eval(x); }
	Dyadic eval(const Dyadic &x) const;
	Dyadic eval_inverse(const Dyadic &y) const;

	/// The element restricted to an arbitrary interval, as a PL map.
	PLMap restrict(const Interval &window) const;

	friend bool operator==(const Element &a, const Element &b) { return a.f_ == b.f_; }

private:
	struct Trusted {};
	Element(PLMap f, Trusted) : f_(std::move(f)) {}

	friend Element compose(const Element &, const Element &);
	friend Element invert(const Element &);

	PLMap f_;
};

/// f after g.
Element compose(const Element &f, const Element &g);
Element invert(const Element &f);
/// Binary exponentiation; power(e, 0) is the identity, negative k inverts.
Element power(const Element &e, std::int64_t k);

bool is_identity(const Element &e);

/// n if e == z^n (n = 0 for the identity), otherwise nothing.
std::optional<std::int64_t> is_power_of_z(const Element &e);

/// Sign of the displacement x -> f(x) - x when it never vanishes.
struct FixedPointFree {
	bool free = false;
	/// +1 or -1 when free, 0 otherwise.
	int sign = 0;

	explicit operator bool() const noexcept { return free; }
};

/// The displacement is piecewise linear and periodic, so it is enough to
/// look at the breakpoints of the fundamental. A zero anywhere counts as a
/// fixed point.
FixedPointFree fixed_point_free(const Element &e);

/// Restriction to `window` of the periodic extension of `period`, a PL map
/// whose domain and range both have length one.
PLMap periodic_window(const PLMap &period, const Interval &window);

std::ostream &operator<<(std::ostream &os, const Element &e);

} // namespace tbar
