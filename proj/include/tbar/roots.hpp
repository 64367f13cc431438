/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The tbar Authors
 */

#pragma once

#include "tbar/element.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace tbar {

/*
 * Local data determining an n-th root f of a fixed-point-free g with
 * g(0) > 0.
 *
 * The partition 0 = p_0 < p_1 < ... < p_n = g(0) cuts [0, g(0)] into n
 * pieces. For i < n, pieces[i-1] is a Thompson-like map
 * [p_{i-1}, p_i] -> [p_i, p_{i+1}]; the last piece closes the cycle:
 *
 *     f_n = g f_1^{-1} f_2^{-1} ... f_{n-1}^{-1} : [p_{n-1}, p_n] -> [p_n, g(p_1)]
 *
 * so that f^n agrees with g on [0, g(0)]. Outside that interval f is
 * defined by f = g^k f g^{-k} on [g^k(0), g^{k+1}(0)].
 */
struct RootGerm {
	int n = 0;
	std::vector<Dyadic> partition;
	std::vector<PLMap> pieces;

	/// The germ as a single map [0, g(0)] -> [p_1, g(p_1)].
	PLMap glued() const { return concat(pieces); }
};

/// Default germ: p_i = g(0) 2^{i-n}, pieces from canonical_map(choice).
/// UsageError if n < 2; InvariantError unless g is fixed-point free with
/// positive displacement.
RootGerm root_germ(const Element &g, int n, ChoiceSeed choice = {});

/// Germ over a caller-chosen partition p_0 .. p_n.
RootGerm root_germ(const Element &g, std::vector<Dyadic> partition, ChoiceSeed choice = {});

/// Partition with p_1 = v and the interior points spread geometrically over
/// [v, c]: p_i = v + (c - v)(2^{i-1} - 1)/(2^{n-1} - 1), rounded down to
/// exponent max(exp v, exp c) + n. UsageError unless 0 < v < c.
std::vector<Dyadic> prescribed_partition(const Dyadic &c, int n, const Dyadic &v);

/// The root determined by `germ` evaluated at any real x, by conjugating
/// back into [0, g(0)].
Dyadic eval_root(const Element &g, const RootGerm &germ, const Dyadic &x);

/// The root as an element of T-bar. Only meaningful when g has a power
/// equal to z; InvariantError if the result is not periodic.
Element materialize_root(const Element &g, const RootGerm &germ);

struct RootOptions {
	/// Recompute g^m and compare with z before building.
	bool check_order = true;
};

/*
 * An f with f^n = g, for g satisfying g^m = z (m != 0).
 *
 * For m < 0 the displacement of g is negative and the root is taken as
 * invert(nth_root(invert(g), n, -m)).
 */
Element nth_root(const Element &g, int n, std::int64_t m, ChoiceSeed choice = {},
                 RootOptions options = {});

/// Same, with f(0) = v prescribed (0 < v < g(0), m >= 1).
Element nth_root_with_value(const Element &g, int n, std::int64_t m, const Dyadic &v,
                            RootOptions options = {});

/// Smallest |m| <= bound with g^m = z, signed by the displacement.
std::optional<std::int64_t> order_over_z(const Element &g, std::int64_t bound = 64);

} // namespace tbar
