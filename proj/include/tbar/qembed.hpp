/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The tbar Authors
 */

#pragma once

#include "tbar/element.hpp"
#include "tbar/report.hpp"

#include <cstdint>
#include <set>
#include <string_view>
#include <vector>

namespace tbar {

/*
 * Chains s_1 = z, s_2, s_3, ... with s_n^n = s_{n-1}. Such a chain
 * realizes the presentation <s_1, s_2, ... | s_n^n = s_{n-1}> of the
 * additive rationals inside T-bar (s_n corresponds to 1/n!).
 */

enum class ChainKind { standard, exotic, custom };

std::string_view to_string(ChainKind kind);
/// UsageError on an unknown name.
ChainKind parse_chain_kind(std::string_view name);

struct Chain {
	ChainKind kind = ChainKind::custom;
	/// elements[0] is s_1.
	std::vector<Element> elements;

	int length() const noexcept { return static_cast<int>(elements.size()); }
	/// 1-based access.
	const Element &s(int n) const { return elements.at(static_cast<std::size_t>(n - 1)); }
};

/// n! for 0 <= n <= 20.
std::int64_t factorial(int n);

/// d_1 = 1, d_n = d_{n-1} / 2^{n-1}; that is 2^{-n(n-1)/2}.
Dyadic d(int n);

/// s_n = seed-0 n-th root of s_{n-1}. The order s_{n-1}^{(n-1)!} = z is
/// re-checked for n <= 6 only; beyond that it follows from the chain.
Chain standard_chain(int length);

/// s_n(0) = 1/2 + 2^{-n}; the orbit of 0 then stays out of (0, 1/2] mod 1.
Chain exotic_chain(int length);

/// Like the standard chain but every piece uses `choice`.
Chain seeded_chain(int length, ChoiceSeed choice);

/// True iff s_n(x) = x + d_n on [0, d_n] and s_n(x) = 2x on
/// [d_n, d_{n-1}/2], checked as exact restrictions.
bool standard_clauses_hold(const Element &s_n, int n);

/// s_1 = z, s_1 of infinite order, s_n^n = s_{n-1}, fixed-point freeness,
/// per-kind value checks and the centre check s_N^{N!} = z (derived from
/// the verified steps).
Report verify_chain(const Chain &chain);

/// All w(0) for words w of length <= depth in s_1^{+-1} .. s_L^{+-1},
/// L = min(levels, chain length).
std::set<Dyadic> orbit_sample(const Chain &chain, int depth, int levels = 4);

/// Points of `sample` whose fractional part lies in (0, 1/2].
std::vector<Dyadic> orbit_violations(const std::set<Dyadic> &sample);

} // namespace tbar
