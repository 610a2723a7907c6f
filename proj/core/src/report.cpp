#include "trisect/report.hpp"

#include <sstream>

#include <json.hpp>

#include "trisect/finite_group.hpp"
#include "trisect/tietze.hpp"

namespace trisect {

namespace {

using Json = nlohmann::ordered_json;

Json trisection_header(const GroupTrisection& t) {
  Json j;
  if (t.name()) j["name"] = *t.name();
  j["genus"] = t.genus();
  j["k"] = t.rank();
  return j;
}

Json json_of(const PushoutResult& p) {
  Json j;
  j["presentation"] = serialize_presentation(p.presentation);
  j["discarded_empty_relators"] = p.discarded_empty_relators;
  return j;
}

Json json_of(const Certificate& c) {
  Json j;
  j["claim"] = c.claim;
  j["verdict"] = to_string(c.verdict);
  if (c.obstruction) j["obstruction"] = *c.obstruction;
  if (c.coset_index) j["coset_index"] = *c.coset_index;
  if (c.tietze) {
    Json tz;
    std::vector<std::string> moves;
    for (const TietzeMove& m : c.tietze->moves) moves.push_back(to_string(m));
    tz["moves"] = moves;
    tz["final"] = serialize_presentation(c.tietze->simplified);
    std::vector<std::string> images;
    for (const Word& w : c.tietze->generator_images) images.push_back(to_string(w));
    tz["generator_images"] = images;
    if (c.tietze->budget_exhausted) tz["budget_exhausted"] = true;
    j["tietze"] = tz;
  }
  if (c.budget_note) j["budget_note"] = *c.budget_note;
  return j;
}

Json json_of(const MapValidationReport& m, int sector) {
  Json j;
  j["sector"] = sector;
  j["verdict"] = to_string(m.verdict());
  j["relator_killed"] = m.relator_killed;
  j["surjective"] = m.surjective;
  j["abelianized_surjective"] = m.abelianized_surjective;
  j["cuts_killed"] = m.cut_killed;
  if (m.kernel_certificate) j["kernel_certificate"] = json_of(*m.kernel_certificate);
  return j;
}

Json json_of(const FaceCheck& f) {
  Json j;
  j["face"] = Json::array({f.i, f.j});
  j["verdict"] = to_string(f.verdict);
  if (f.inconsistent) j["inconsistent"] = true;
  j["pushout_forward"] = json_of(f.forward);
  j["certificate_forward"] = json_of(f.cert_forward);
  j["pushout_backward"] = json_of(f.backward);
  j["certificate_backward"] = json_of(f.cert_backward);
  return j;
}

Json hom_counts_json(const std::vector<std::optional<std::uint64_t>>& counts) {
  Json j;
  const auto& groups = builtin_finite_groups();
  for (std::size_t i = 0; i < counts.size() && i < groups.size(); ++i) {
    if (counts[i])
      j[groups[i].name] = *counts[i];
    else
      j[groups[i].name] = "unknown";
  }
  return j;
}

Json json_of(const TargetCheck& c) {
  Json j;
  j["verdict"] = to_string(c.verdict);
  j["has_target"] = c.has_target;
  j["triple_pushout"] = json_of(c.triple);
  if (c.triviality) j["triviality_certificate"] = json_of(*c.triviality);
  if (c.triple_ab) j["triple_abelianization"] = c.triple_ab->to_string();
  if (c.target_ab) j["target_abelianization"] = c.target_ab->to_string();
  if (!c.triple_homs.empty()) j["triple_hom_counts"] = hom_counts_json(c.triple_homs);
  if (!c.target_homs.empty()) j["target_hom_counts"] = hom_counts_json(c.target_homs);
  if (c.tietze_match) j["tietze_match"] = *c.tietze_match;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Json json_of(const RedundancyCheck& c) {
  Json j;
  j["verdict"] = to_string(c.verdict);
  j["symmetric_pushout"] = json_of(c.symmetric);
  j["triple_abelianization"] = c.triple_ab.to_string();
  j["symmetric_abelianization"] = c.symmetric_ab.to_string();
  j["abelianizations_equal"] = c.abelianizations_equal;
  if (c.symmetric_triviality) j["symmetric_triviality_certificate"] = json_of(*c.symmetric_triviality);
  j["certificates_conflict"] = c.certificates_conflict;
  return j;
}

// Indented key/value rendering of the same tree.
void render_human_value(const Json& j, std::ostringstream& os, int indent);

std::string indent_str(int n) { return std::string(2 * static_cast<std::size_t>(n), ' '); }

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void render_human_value(const Json& j, std::ostringstream& os, int indent) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (is_scalar(it.value())) {
        os << indent_str(indent) << it.key() << ": " << scalar_text(it.value()) << "\n";
      } else if (it.value().empty()) {
        os << indent_str(indent) << it.key() << ": " << (it.value().is_array() ? "[]" : "{}") << "\n";
      } else {
        os << indent_str(indent) << it.key() << ":\n";
        render_human_value(it.value(), os, indent + 1);
      }
    }
  } else if (j.is_array()) {
    for (const Json& item : j) {
      if (is_scalar(item)) {
        os << indent_str(indent) << "- " << scalar_text(item) << "\n";
      } else {
        os << indent_str(indent) << "-\n";
        render_human_value(item, os, indent + 1);
      }
    }
  } else {
    os << indent_str(indent) << scalar_text(j) << "\n";
  }
}

std::string render(const Json& j, ReportFormat format) {
  if (format == ReportFormat::Machine) return j.dump(2) + "\n";
  std::ostringstream os;
  render_human_value(j, os, 0);
  return os.str();
}

}  // namespace

std::string render_verification_report(const GroupTrisection& t, const VerificationReport& r,
                                       ReportFormat format) {
  Json j;
  j["format"] = "trisect.report.v1";
  j["command"] = "verify";
  j["trisection"] = trisection_header(t);
  j["overall"] = to_string(r.overall);
  Json maps = Json::array();
  for (std::size_t i = 0; i < r.maps.size(); ++i) maps.push_back(json_of(r.maps[i], static_cast<int>(i) + 1));
  j["c1_maps"] = maps;
  Json faces = Json::array();
  for (const FaceCheck& f : r.faces) faces.push_back(json_of(f));
  j["c2_faces"] = faces;
  j["c3_target"] = json_of(r.target);
  j["c4_redundancy"] = json_of(r.redundancy);
  return render(j, format);
}

std::string render_fingerprint_report(const GroupTrisection& t, const Fingerprint& fp,
                                      ReportFormat format) {
  Json j;
  j["format"] = "trisect.report.v1";
  j["command"] = "fingerprint";
  j["trisection"] = trisection_header(t);
  Json f;
  f["genus"] = fp.genus;
  f["k"] = fp.rank;
  f["euler_characteristic"] = fp.euler;
  f["triple_abelianization"] = fp.triple_abelianization.to_string();
  f["hom_counts"] = hom_counts_json(fp.hom_counts);
  Json sectors = Json::array();
  for (const auto& factors : fp.sector_invariant_factors) {
    Json fs = Json::array();
    for (const BigInt& d : factors) fs.push_back(d.str());
    sectors.push_back(fs);
  }
  f["sector_invariant_factors"] = sectors;
  j["fingerprint"] = f;
  return render(j, format);
}

std::string render_kernel_search_report(const GroupTrisection& t, int max_length,
                                        const std::vector<Word>& words, ReportFormat format) {
  if (format == ReportFormat::Human) {
    std::ostringstream os;
    for (const Word& w : words) os << to_string(w) << "\n";
    return os.str();
  }
  Json j;
  j["format"] = "trisect.report.v1";
  j["command"] = "kernel-search";
  j["trisection"] = trisection_header(t);
  j["max_length"] = max_length;
  std::vector<std::string> ws;
  for (const Word& w : words) ws.push_back(to_string(w));
  j["common_kernel_words"] = ws;
  return render(j, format);
}

std::string render_pushout_report(const GroupTrisection& t, int i, int j_sector,
                                  const PushoutResult& p, ReportFormat format) {
  if (format == ReportFormat::Human) {
    std::ostringstream os;
    os << serialize_presentation(p.presentation) << "\n";
    if (p.discarded_empty_relators > 0)
      os << "# discarded empty relators: " << p.discarded_empty_relators << "\n";
    return os.str();
  }
  Json j;
  j["format"] = "trisect.report.v1";
  j["command"] = "pushout";
  j["trisection"] = trisection_header(t);
  j["face"] = Json::array({i, j_sector});
  j["pushout"] = json_of(p);
  return render(j, format);
}

std::string render_euler_report(const GroupTrisection& t, ReportFormat format) {
  if (format == ReportFormat::Human) return std::to_string(euler_characteristic(t)) + "\n";
  Json j;
  j["format"] = "trisect.report.v1";
  j["command"] = "euler";
  j["trisection"] = trisection_header(t);
  j["euler_characteristic"] = euler_characteristic(t);
  return render(j, format);
}

}  // namespace trisect
