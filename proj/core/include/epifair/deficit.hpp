#pragma once

#include <span>
#include <string>
#include <vector>

#include "epifair/errors.hpp"
#include "epifair/indices.hpp"

namespace epifair {

enum class InjusticeKind {
  contributory,
  formative,
  hermeneutical,
  prediscursive,
  testimonial,
  testimonial_quieting,
  testimonial_smothering,
  willful_hermeneutical_ignorance,
  epistemic_exploitation,
  epistemic_appropriation,
  epistemic_objectification,
  hermeneutical_marginalization,
};

/// Direction of the gap between the actual and the ideal condition.
enum class GapDirection {
  shortfall,  // actual falls below the ideal
  excess,     // actual exceeds the ideal (e.g. overburdened epistemic labour)
};

/// Catalog entry: symbolic ideal/actual conditions and a one-line mechanism
/// description for one injustice type.
struct InjusticeInfo {
  InjusticeKind kind;
  std::string key;
  std::string ideal_symbol;
  std::string actual_symbol;
  GapDirection direction;
  std::string mechanism_doc;
};

/// All 12 injustice types in stable order.
std::span<const InjusticeInfo> catalog();

const InjusticeInfo& lookup(InjusticeKind kind);

/// |ideal - actual|. Symmetric; zero iff the two conditions coincide.
double deficit(double ideal, double actual);

/// Elementwise deficits for a population, returned as a Distribution ready
/// for any index. `kind` is carried as the group-free tag for reporting.
Distribution deficit_profile(InjusticeKind kind,
                             std::span<const double> ideals,
                             std::span<const double> actuals);

/// One plain-text record per catalog entry, for documentation tooling.
std::string format_catalog();

}  // namespace epifair
