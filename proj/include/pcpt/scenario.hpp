#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "pcpt/mc.hpp"

namespace pcpt {

/// Line-oriented scenario files.
///
///   # comment
///   defaults s=1000 b=500 alpha=0.05
///   scenario label=size/rho=0.3 test=JRS rho=0.3 beta=0 n=50 t=50 law=normal
///
/// `defaults` lines set values for every later `scenario` line; keys given on
/// a scenario line win. Keys:
///
///   label      free text without spaces (required)
///   test       HCB | HSB | JCS | JRS  (shorthand for statistic/scheme/block)
///   statistic  H | J
///   scheme     nbb | cbb | sb
///   block      adaptive | reference | <int>
///   lrv        auto | <int>       Bartlett bandwidth inside H
///   n, t       panel dimensions (required)
///   rho, beta  AR coefficient and factor loading
///   law        normal | t5
///   break      none | cancel | noncancel
///   t0         break location as a fraction of T
///   s, b       outer replications and bootstrap replicates
///   alpha      test level
///
/// `block=reference` resolves to FixedBlock{reference_fixed_block_length(t)}.
std::vector<Scenario> parse_scenarios(std::istream& in);

/// `source` is a file path or the name of a bundled file ("paper_tables").
std::vector<Scenario> load_scenarios(const std::string& source);

/// Text of the bundled scenario file encoding both tables of size and power
/// results, one scenario per table cell.
std::string_view bundled_paper_tables();

}  // namespace pcpt
