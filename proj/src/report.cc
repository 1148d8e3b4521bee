#include "fusionloc/report.h"

#include <sstream>

#include "fusionloc/errors.h"
#include "json.hpp"

namespace fusionloc {

using Json = nlohmann::ordered_json;

const char* StatusName(Status s) {
  switch (s) {
    case Status::kPass:
      return "PASS";
    case Status::kFail:
      return "FAIL";
    case Status::kSkipped:
      return "SKIPPED";
  }
  return "?";
}

Status ParseStatus(const std::string& s) {
  if (s == "PASS") return Status::kPass;
  if (s == "FAIL") return Status::kFail;
  if (s == "SKIPPED") return Status::kSkipped;
  throw InputError("unknown status '" + s + "'");
}

ReportNode& ReportNode::Add(ReportNode child) {
  children.push_back(std::move(child));
  return children.back();
}

ReportNode& ReportNode::Check(const std::string& n, bool ok,
                              std::optional<std::string> w) {
  ReportNode c;
  c.name = n;
  c.status = ok ? Status::kPass : Status::kFail;
  c.witness = std::move(w);
  return Add(std::move(c));
}

ReportNode& ReportNode::Skip(const std::string& n, std::string reason) {
  ReportNode c;
  c.name = n;
  c.status = Status::kSkipped;
  c.witness = std::move(reason);
  return Add(std::move(c));
}

void ReportNode::Finish() {
  if (children.empty()) return;
  bool any_fail = false, all_skipped = true;
  for (ReportNode& c : children) {
    c.Finish();
    any_fail |= c.status == Status::kFail;
    all_skipped &= c.status == Status::kSkipped;
  }
  status = any_fail ? Status::kFail
                    : (all_skipped ? Status::kSkipped : Status::kPass);
}

std::string ReportNode::FirstFailure() const {
  if (status != Status::kFail) return "";
  for (const ReportNode& c : children) {
    std::string f = c.FirstFailure();
    if (!f.empty()) return name + "/" + f;
  }
  return name + (witness ? ": " + *witness : "");
}

namespace {

Json Encode(const ReportNode& r) {
  Json j;
  j["name"] = r.name;
  j["status"] = StatusName(r.status);
  if (r.witness) j["witness"] = *r.witness;
  j["millis"] = r.millis;
  if (!r.children.empty()) {
    j["children"] = Json::array();
    for (const ReportNode& c : r.children) j["children"].push_back(Encode(c));
  }
  return j;
}

ReportNode Decode(const Json& j) {
  if (!j.is_object() || !j.contains("name") || !j.contains("status")) {
    throw InputError("report node needs name and status");
  }
  ReportNode r;
  r.name = j.at("name").get<std::string>();
  r.status = ParseStatus(j.at("status").get<std::string>());
  if (j.contains("witness")) r.witness = j.at("witness").get<std::string>();
  if (j.contains("millis")) r.millis = j.at("millis").get<double>();
  if (j.contains("children")) {
    for (const Json& c : j.at("children")) r.children.push_back(Decode(c));
  }
  return r;
}

void Text(const ReportNode& r, int depth, std::ostringstream& out) {
  out << std::string(2 * depth, ' ') << "[" << StatusName(r.status) << "] "
      << r.name;
  if (r.witness) out << ": " << *r.witness;
  if (r.millis >= 1) out << " (" << static_cast<long>(r.millis) << " ms)";
  out << "\n";
  for (const ReportNode& c : r.children) Text(c, depth + 1, out);
}

}  // namespace

std::string ToJson(const ReportNode& r, int indent) {
  return Encode(r).dump(indent);
}

ReportNode FromJson(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw InputError(std::string("report json: ") + e.what());
  }
  try {
    return Decode(j);
  } catch (const Json::exception& e) {
    throw InputError(std::string("report json: ") + e.what());
  }
}

std::string ToText(const ReportNode& r) {
  std::ostringstream out;
  Text(r, 0, out);
  return out.str();
}

bool operator==(const ReportNode& a, const ReportNode& b) {
  return a.name == b.name && a.status == b.status && a.witness == b.witness &&
         a.millis == b.millis && a.children == b.children;
}

}  // namespace fusionloc
