#pragma once

#include "agora/debate.hpp"
#include "agora/ensemble.hpp"
#include "agora/estimate.hpp"
#include "agora/stochastic.hpp"

#include <json.hpp>

#include <string>

namespace agora {

// Stable key order in emitted documents; structured output must be
// byte-identical across runs for identical inputs.
using ojson = nlohmann::ordered_json;

// All readers are strict: format_version must equal 1, unknown fields are
// rejected, and exact-arithmetic fields (weights, eps, tau) must be decimal
// strings or integers, never floating-point literals. Diagnostics carry the
// field path ("scenarios[2].weight").

transcript parse_transcript(const ojson& doc, const std::string& path_hint);
transcript read_transcript(const std::string& path);
ojson transcript_to_json(const transcript& tr);

// Hand transcripts referenced by transcript_path are loaded relative to the
// ensemble file's directory. Attached transcripts are not written back.
ensemble parse_ensemble(const ojson& doc, const std::string& path_hint,
                        const std::string& base_dir);
ensemble read_ensemble(const std::string& path);
ojson ensemble_to_json(const ensemble& e);

snapshot_sequence parse_timeline(const ojson& doc, const std::string& path_hint);
snapshot_sequence read_timeline(const std::string& path);
// Optional per-step headline labels ride along for plotting; readers accept
// and ignore them, so the document stays valid estimator input.
ojson timeline_to_json(const literal& claim, std::span<const int> values,
                       std::span<const std::string> headlines = {});

ojson to_json(const rational& r);          // {numerator, denominator, decimal}
ojson to_json(const argument& a);
ojson to_json(const label_report& r);
ojson to_json(const support_report& r);
ojson to_json(const distinctness_verdict& v);
ojson to_json(const distinctness_audit& a);
ojson to_json(const dominance_row& row);
ojson to_json(const bound_report& r);
ojson to_json(const prop2_report& r);
ojson to_json(const axiom_violation& v);
ojson to_json(const axiom_report& r);

ojson load_json_file(const std::string& path); // parse errors name the file

} // namespace agora
