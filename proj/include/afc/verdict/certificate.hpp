#pragma once
#include "afc/liecore/structure.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace afc::verdict {

using exactlin::Mat;
using exactlin::Vec;

// One replayable check. kind names the criterion; dims and witness carry
// everything replay_step needs to recompute ok from scratch. Field order is
// fixed so serialization is deterministic.
struct CertStep {
  std::string kind;  // scope | levi-reduction | radical | reductivity |
                     // normalizer-dimension | fixed-point | conclusion
  bool ok = false;
  std::vector<std::pair<std::string, long>> dims;
  std::vector<std::pair<std::string, std::vector<Mat>>> witness;
  std::string note;

  long dim(const std::string& name) const;
  const std::vector<Mat>* find(const std::string& name) const;
  bool operator==(const CertStep& o) const = default;
};

struct Certificate {
  std::vector<CertStep> steps;
  bool operator==(const Certificate& o) const = default;
};

// Recompute the named check from the stored witness data and compare with
// the recorded outcome. True iff the recomputation reproduces `ok` (and the
// stored spans/dimensions are consistent).
bool replay_step(const CertStep& step);
bool replay(const Certificate& cert);

nlohmann::ordered_json step_to_json(const CertStep& step);
nlohmann::ordered_json to_json(const Certificate& cert);
CertStep step_from_json(const nlohmann::ordered_json& j);
Certificate from_json(const nlohmann::ordered_json& j);

}  // namespace afc::verdict
