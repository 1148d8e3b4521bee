#ifndef FUSIONLOC_REPORT_H_
#define FUSIONLOC_REPORT_H_

#include <optional>
#include <string>
#include <vector>

namespace fusionloc {

enum class Status { kPass, kFail, kSkipped };

const char* StatusName(Status s);
// Throws InputError on anything but PASS, FAIL or SKIPPED.
Status ParseStatus(const std::string& s);

// A node in a verification tree. Leaves carry their own status; inner
// nodes derive theirs from the children through Finish().
struct ReportNode {
  std::string name;
  Status status = Status::kPass;
  std::optional<std::string> witness;
  std::vector<ReportNode> children;
  double millis = 0;

  ReportNode& Add(ReportNode child);
  // Leaf with PASS/FAIL from `ok`; the witness is kept either way.
  ReportNode& Check(const std::string& name, bool ok,
                    std::optional<std::string> witness = std::nullopt);
  ReportNode& Skip(const std::string& name, std::string reason);

  // Recomputes inner statuses bottom-up: FAIL if any child fails, SKIPPED
  // if every child is skipped, PASS otherwise. Leaves are left alone.
  void Finish();
  bool ok() const { return status != Status::kFail; }
  // First failing leaf as "a/b/c: witness", or empty.
  std::string FirstFailure() const;
};

std::string ToJson(const ReportNode& r, int indent = 2);
// Throws InputError on malformed JSON or missing fields.
ReportNode FromJson(const std::string& text);
// Indented text view, one line per node.
std::string ToText(const ReportNode& r);

bool operator==(const ReportNode& a, const ReportNode& b);

}  // namespace fusionloc

#endif  // FUSIONLOC_REPORT_H_
