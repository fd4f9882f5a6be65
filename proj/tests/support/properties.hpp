#pragma once

#include <string>
#include <vector>

#include "random.hpp"

namespace mop::testing {

// One randomized case per call. Returns an empty string on success, otherwise
// a description of the first failed assertion.
using PropertyCase = std::string (*)(Rng& rng);

struct PropertySuite {
  const char* name;
  PropertyCase run;
};

std::string nonempty_case(Rng& rng);
std::string strict_generic_point_case(Rng& rng);
std::string minkowski_containment_case(Rng& rng);
std::string product_case(Rng& rng);
std::string recession_cone_case(Rng& rng);
std::string pull_back_injective_case(Rng& rng);

const std::vector<PropertySuite>& property_suites();

// Runs `cases` cases; returns the first failure, tagged with its case number.
std::string run_suite(const PropertySuite& suite, Rng& rng, int cases);

// Same marked poset with every element name prefixed.
MarkedPoset with_prefix(const MarkedPoset& M, const std::string& prefix);

}  // namespace mop::testing
