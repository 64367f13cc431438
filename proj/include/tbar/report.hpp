/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The tbar Authors
 */

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace tbar {

struct Check {
	std::string name;
	bool pass = false;
	std::string detail;
};

/// Ordered list of named checks; passes iff every check passes.
class Report {
public:
	void add(std::string name, bool pass, std::string detail = {})
	{
		checks_.push_back({std::move(name), pass, std::move(detail)});
	}

	void append(const Report &other)
	{
		checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
	}

	bool pass() const
	{
		return std::all_of(checks_.begin(), checks_.end(), [](const Check &c) { return c.pass; });
	}

	std::optional<std::size_t> first_failure() const
	{
		auto it = std::find_if(checks_.begin(), checks_.end(), [](const Check &c) { return !c.pass; });
		if (it == checks_.end())
			return std::nullopt;
		return static_cast<std::size_t>(it - checks_.begin());
	}

	const std::vector<Check> &checks() const noexcept { return checks_; }

private:
	std::vector<Check> checks_;
};

} // namespace tbar
