/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The tbar Authors
 */

#include "tbar/cli.hpp"
#include "tbar/json.hpp"

#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

using namespace tbar;

namespace {

struct Result {
	int code;
	std::string out;
	std::string err;
};

Result run(std::vector<std::string> args)
{
	std::ostringstream out, err;
	int code = cli::run(args, out, err);
	return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("exit codes")
{
	struct Case {
		std::vector<std::string> args;
		int code;
	};
	const Case cases[] = {
	    {{"relators"}, 0},
	    {{"relators", "--convention", "flipped"}, 0},
	    {{"chain", "--kind", "standard", "--n", "5", "--verify"}, 0},
	    {{"chain", "--kind", "exotic", "--n", "5", "--verify"}, 0},
	    {{"words", "--n", "4", "--compare-geometric", "--both-forms"}, 0},
	    {{"tn", "--n", "5"}, 0},
	    {{"tn", "--n", "3", "--convention", "flipped"}, 1},
	    {{"root", "--n", "3"}, 0},
	    {{"root", "--n", "2", "--value", "3/4"}, 0},
	    {{"root", "--n", "2", "--of-chain", "3"}, 0},
	    {{"orbit", "--kind", "exotic", "--depth", "3"}, 0},
	    {{"orbit", "--kind", "standard", "--depth", "2"}, 0},
	    {{"eval", "--word", "b a a B", "--at", "0"}, 0},
	    {{}, 2},
	    {{"bogus"}, 2},
	    {{"chain", "--n", "x"}, 2},
	    {{"chain", "--kind", "nope", "--n", "3"}, 2},
	    {{"root", "--n", "3", "--value", "1/3"}, 2},
	    {{"root", "--n", "1"}, 2},
	    {{"eval", "--word", "c", "--at", "0"}, 2},
	    {{"eval", "--word", "a", "--at", "0.5"}, 2},
	    {{"tn", "--n", "2"}, 2},
	    {{"relators", "--format", "xml"}, 2},
	};
	for (const Case &c : cases) {
		std::string joined;
		for (const auto &a : c.args)
			joined += a + " ";
		CAPTURE(joined);
		Result r = run(c.args);
		CHECK(r.code == c.code);
		if (c.code == 2)
			CHECK_FALSE(r.err.empty());
	}
}

TEST_CASE("eval prints the value")
{
	CHECK(run({"eval", "--word", "b b b", "--at", "0"}).out == "1\n");
	CHECK(run({"eval", "--word", "A", "--at", "1/2"}).out == "0\n");
	Result j = run({"eval", "--word", "b", "--at", "5/8", "--format", "json"});
	CHECK(json::parse(j.out)["value"] == "7/8");
}

TEST_CASE("json output is deterministic")
{
	for (std::vector<std::string> args : {
	         std::vector<std::string>{"relators"},
	         {"chain", "--kind", "standard", "--n", "4", "--verify", "--emit"},
	         {"root", "--n", "3", "--seed", "2"},
	         {"orbit", "--kind", "exotic", "--depth", "3"},
	         {"words", "--n", "4", "--compare-geometric"},
	         {"tn", "--n", "4"},
	     }) {
		args.push_back("--format");
		args.push_back("json");
		Result a = run(args), b = run(args);
		CHECK(a.code == 0);
		CHECK(a.out == b.out);
		json j = json::parse(a.out);
		CHECK(j["command"] == args[0]);
		CHECK(j["report"]["pass"] == true);
	}
}

TEST_CASE("emitted chain reloads")
{
	Result r = run({"chain", "--kind", "exotic", "--n", "3", "--emit", "--format", "json"});
	REQUIRE(r.code == 0);
	json j = json::parse(r.out);
	Chain c = chain_from_json(j["chain"]);
	CHECK(c.kind == ChainKind::exotic);
	CHECK(c.length() == 3);
}

TEST_CASE("injected faults are reported")
{
	for (std::vector<std::string> args : {
	         std::vector<std::string>{"relators"},
	         {"chain", "--kind", "standard", "--n", "4", "--verify"},
	         {"words", "--n", "4", "--compare-geometric"},
	         {"tn", "--n", "4"},
	         {"root", "--n", "3"},
	         {"orbit", "--kind", "exotic", "--depth", "2"},
	     }) {
		CAPTURE(args[0]);
		args.push_back("--inject-fault");
		Result text = run(args);
		CHECK(text.code == 1);
		CHECK(text.out.find("FAIL") != std::string::npos);

		args.push_back("--format");
		args.push_back("json");
		Result r = run(args);
		CHECK(r.code == 1);
		json j = json::parse(r.out);
		CHECK(j["report"]["pass"] == false);
		bool named = false;
		for (const json &c : j["report"]["checks"])
			named |= c["pass"] == false && !c["name"].get<std::string>().empty();
		CHECK(named);
	}
}
