#include "paracr/paracontact/classify.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "paracr/errors.hpp"
#include "paracr/examples/examples.hpp"

namespace paracr {

namespace {

struct Equivalence {
  std::string what;
  std::vector<std::vector<std::string>> forms;  // each form is a conjunction
};

const std::vector<Equivalence>& equivalences() {
  static const std::vector<Equivalence> eq = {
      {"para-CR",
       {{"s0", "s1"}, {"involutivity+", "involutivity-"}, {"news00", "s1"}, {"news01", "s1"}, {"thm1"}}},
      {"(s0)", {{"s0"}, {"news00"}, {"news01"}}},
      {"normality", {{"normal"}, {"normal-nabla"}}},
      {"para-Sasakian", {{"normal", "pcm"}, {"sas", "pcm"}}},
  };
  return eq;
}

constexpr std::array<const char*, 2> kBase{"axioms", "compat"};

bool has_all(const std::map<std::string, CheckResult>& r, const std::vector<std::string>& ids) {
  return std::all_of(ids.begin(), ids.end(), [&r](const std::string& id) { return r.count(id) > 0; });
}

}  // namespace

const char* to_string(Membership m) {
  switch (m) {
    case Membership::Member:
      return "member";
    case Membership::NonMember:
      return "not a member";
    case Membership::Indeterminate:
      return "indeterminate";
  }
  return "?";
}

const std::vector<ClassDefinition>& class_definitions() {
  static const std::vector<ClassDefinition> defs = {
      {cls::kAlmostParacontactMetric, {"axioms", "compat"}},
      {cls::kParacontactMetric, {"pcm"}},
      {cls::kNormal, {"normal"}},
      {cls::kParaSasakian, {"normal", "pcm"}},
      {cls::kAlmostParaCosymplectic, {"apcos"}},
      {cls::kParaCR, {"s0", "s1"}},
      {cls::kParaKaehlerLeaves, {"apcos", "wzor2"}},
  };
  return defs;
}

std::vector<std::string> classification_ids() {
  std::vector<std::string> ids;
  auto add = [&ids](const std::string& id) {
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
  };
  for (const auto& d : class_definitions())
    for (const auto& c : d.criteria) add(c);
  for (const auto& e : equivalences())
    for (const auto& f : e.forms)
      for (const auto& c : f) add(c);
  return ids;
}

Classification classify(const std::map<std::string, CheckResult>& results, double tolerance, double separation) {
  // The equivalences are theorems about almost paracontact metric
  // structures; off that class they need not hold.
  const bool base = std::all_of(kBase.begin(), kBase.end(), [&](const char* id) {
    const auto it = results.find(id);
    return it != results.end() && it->second.max_scaled <= tolerance;
  });
  for (const auto& e : equivalences()) {
    if (!base) break;
    std::vector<const std::vector<std::string>*> present;
    for (const auto& f : e.forms)
      if (has_all(results, f)) present.push_back(&f);
    if (present.size() < 2) continue;
    auto holds = [&](const std::vector<std::string>& f) {
      return std::all_of(f.begin(), f.end(), [&](const std::string& id) { return results.at(id).max_scaled <= tolerance; });
    };
    const bool first = holds(*present.front());
    for (const auto* f : present) {
      if (holds(*f) != first) {
        std::ostringstream os;
        os << "equivalent " << e.what << " criteria disagree at tolerance " << tolerance << ":";
        for (const auto* g : present) {
          os << " [";
          for (std::size_t i = 0; i < g->size(); ++i) {
            const auto& id = (*g)[i];
            os << (i ? " & " : "") << id << "=" << results.at(id).max_scaled;
          }
          os << "]";
        }
        throw InconsistentVerdict(os.str());
      }
    }
  }

  Classification out;
  for (const auto& d : class_definitions()) {
    if (!has_all(results, d.criteria)) continue;
    bool all_pass = true, some_separated = false;
    for (const auto& id : d.criteria) {
      const double r = results.at(id).max_scaled;
      all_pass = all_pass && r <= tolerance;
      some_separated = some_separated || r >= separation;
    }
    ClassVerdict v{d.name, Membership::Indeterminate, d.criteria};
    if (all_pass) v.status = Membership::Member;
    else if (some_separated) v.status = Membership::NonMember;
    if (v.status == Membership::Member && d.name != cls::kAlmostParacontactMetric) out.fingerprint.push_back(d.name);
    out.classes.push_back(std::move(v));
  }
  return out;
}

}  // namespace paracr
