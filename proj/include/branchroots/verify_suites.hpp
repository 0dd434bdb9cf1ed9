#pragma once

#include <iosfwd>
#include <string>

#include "branchroots/corpus.hpp"

namespace branchroots {

// Batch verification over a seeded corpus. Writes one line per instance,
// ordered by instance index, and returns true iff every instance holds.
// Suites: thm11, thm14, prop32, lemma51, noether, nested, am.
bool run_suite(const std::string& name, const CorpusSpec& spec, std::ostream& out);

}  // namespace branchroots
