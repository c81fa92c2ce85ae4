#include "epifair/deficit.hpp"

#include <array>
#include <cmath>
#include <sstream>

namespace epifair {
namespace {

const std::array<InjusticeInfo, 12> kCatalog = {{
    {InjusticeKind::contributory, "contributory", "i_c", "i_{m->c}",
     GapDirection::shortfall,
     "Interpretative contributions of marginalized knowers are dismissed or "
     "forced through dominant frameworks, so their situated knowledge fails "
     "to enter the collective resource."},
    {InjusticeKind::formative, "formative", "e_c", "e_{a<-c}",
     GapDirection::shortfall,
     "Institutions limit an agent's access to collective educational "
     "resources, wronging their development as a knower."},
    {InjusticeKind::hermeneutical, "hermeneutical", "i_c", "i_{a<-c}",
     GapDirection::shortfall,
     "Identity-based prejudice undermines a person's sense-making capacity "
     "by denying access to collective interpretative resources."},
    {InjusticeKind::prediscursive, "prediscursive", "a_c", "a_{a<-c}",
     GapDirection::shortfall,
     "Structural conditions undermine epistemic agency (e.g. self-trust) "
     "before any explicit testimonial exchange takes place."},
    {InjusticeKind::testimonial, "testimonial", "r_s", "c_{h<-s}",
     GapDirection::shortfall,
     "A hearer's identity-based prejudice downgrades a speaker's credibility "
     "below their reliability."},
    {InjusticeKind::testimonial_quieting, "testimonial_quieting", "u_s",
     "u_{h<-s}", GapDirection::shortfall,
     "The audience withholds uptake by failing to recognize the speaker as a "
     "knower, collapsing uptake of their contribution."},
    {InjusticeKind::testimonial_smothering, "testimonial_smothering", "e_s",
     "e_{s->h}", GapDirection::shortfall,
     "The speaker truncates or withholds testimony in anticipation of "
     "hostile uptake, sharing less than they safely could."},
    {InjusticeKind::willful_hermeneutical_ignorance,
     "willful_hermeneutical_ignorance", "i_c", "i_{h<-c}",
     GapDirection::shortfall,
     "Powerful hearers intentionally restrict their interpretative uptake of "
     "marginalized perspectives despite available tools and evidence."},
    {InjusticeKind::epistemic_exploitation, "epistemic_exploitation", "l_c",
     "l_{a<-c}", GapDirection::excess,
     "Marginalized knowers are overburdened with uncompensated epistemic "
     "labour, contributing more than a fair share."},
    {InjusticeKind::epistemic_appropriation, "epistemic_appropriation",
     "k_{a->c}", "k_{a->d}", GapDirection::shortfall,
     "Dominant agents appropriate epistemic resources while credit and "
     "benefits bypass the original knowers."},
    {InjusticeKind::epistemic_objectification, "epistemic_objectification",
     "a_s", "a_{h<-s}", GapDirection::shortfall,
     "A knower is treated as a mere source of information rather than an "
     "epistemic subject, so less agency is recognized than they possess."},
    {InjusticeKind::hermeneutical_marginalization,
     "hermeneutical_marginalization", "p_c", "p_{a<-c}",
     GapDirection::shortfall,
     "Members of a group are structurally excluded from the collective "
     "hermeneutical practices that shape shared interpretative resources."},
}};

void check_nonneg_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw Error(errc::non_finite, what);
  if (v < 0.0) throw Error(errc::negative_input, what);
}

}  // namespace

std::span<const InjusticeInfo> catalog() { return kCatalog; }

const InjusticeInfo& lookup(InjusticeKind kind) {
  return kCatalog[static_cast<std::size_t>(kind)];
}

double deficit(double ideal, double actual) {
  check_nonneg_finite(ideal, "ideal condition");
  check_nonneg_finite(actual, "actual condition");
  return std::abs(ideal - actual);
}

Distribution deficit_profile(InjusticeKind kind,
                             std::span<const double> ideals,
                             std::span<const double> actuals) {
  if (ideals.size() != actuals.size())
    throw Error(errc::length_mismatch, "ideal/actual lengths differ");
  if (ideals.empty())
    throw Error(errc::invalid_value, "empty deficit profile");
  Distribution d;
  d.tag = lookup(kind).key;
  d.values.reserve(ideals.size());
  for (std::size_t i = 0; i < ideals.size(); ++i)
    d.values.push_back(deficit(ideals[i], actuals[i]));
  return d;
}

std::string format_catalog() {
  std::ostringstream out;
  for (const auto& info : kCatalog) {
    out << info.key << "\n"
        << "  ideal:     " << info.ideal_symbol << "\n"
        << "  actual:    " << info.actual_symbol << "\n"
        << "  direction: "
        << (info.direction == GapDirection::excess ? "excess" : "shortfall")
        << "\n"
        << "  mechanism: " << info.mechanism_doc << "\n\n";
  }
  return out.str();
}

}  // namespace epifair
