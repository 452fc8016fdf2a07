#ifndef MONOCI_SERIALIZE_HPP
#define MONOCI_SERIALIZE_HPP

#include <string>
#include <vector>

#include "monoci/decomposition.hpp"
#include "monoci/invariants.hpp"
#include "monoci/verify.hpp"

namespace monoci {

/// The report as JSON, keys in schema order (docs/report.schema.json).
/// indent < 0 gives a single line.
std::string report_to_json(const InvariantReport& r, int indent = 2);
std::string report_to_text(const InvariantReport& r);

/// {"results": [...], "summary": {...}}; values keep checker order.
std::string checks_to_json(const std::vector<CheckResult>& results, int indent = 2);
/// One line per result, then a summary line.
std::string checks_to_text(const std::vector<CheckResult>& results);

std::string decomposition_to_json(const MonomialIdeal& a, const std::vector<IrreducibleComponent>& components,
                                  const std::vector<MonomialIdeal>& primes, int indent = 2);

/// {"ring": ..., "ideal": {"generators": [...]}}
std::string ideal_to_json(const MonomialIdeal& a, int indent = 2);

}  // namespace monoci

#endif
