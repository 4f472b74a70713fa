#pragma once

#include "gpa/hopf.hpp"
#include "gpa/path_algebra.hpp"
#include "gpa/report.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace gpa {

/// Flags shared by the batch commands. `oracle` turns on the independent
/// brute-force cross-checks; `max_oracle_dim` bounds the dimension those
/// are willing to run at; `seed` is recorded in every report and feeds any
/// sampling the command performs.
struct CliOptions {
    bool oracle = false;
    uint64_t seed = 0;
    size_t max_oracle_dim = 64;
};

enum class InputKind { quiver, gmring, hopf };

/// Input kind from a file name's extension (.quiver, .gmring, .hopf).
std::optional<InputKind> input_kind_from_label(std::string_view label);

/// Strong/weak/unilateral partitions, regular pairs and cycle facts of a
/// quiver file, with partition-consistency cross-checks. Parse errors
/// carry 1-based line numbers (std::invalid_argument).
Report cmd_connectivity(const std::string& label, std::string_view file_text,
                        const CliOptions& opt = {});

/// Closed-form radical of the algebra described by a quiver, block-system
/// or Hopf-instance file, with an optional independent oracle comparison.
/// A failed comparison is a failing check (exit 1); an input outside a
/// formula's hypotheses is refused with an explanation (exit 2).
Report cmd_radical(const std::string& label, std::string_view file_text, InputKind input,
                   RadicalKind kind, const CliOptions& opt = {},
                   const HopfFileLoader& loader = {});

/// Ingest a network edge list (lines `src dst [label]`; `#` comments):
/// build the quiver with one arrow per line, then run the connectivity
/// analysis, the eleven-condition equivalence report, and a radical
/// summary. Malformed lines become warnings and the run continues.
Report cmd_net_ingest(const std::string& label, std::string_view file_text,
                      const CliOptions& opt = {});

/// Run every applicable invariant suite over all .quiver/.gmring/.hopf
/// files in a directory (processed in parallel, assembled in name order).
/// Any failing check makes the report exit nonzero; an empty directory is
/// a vacuous pass with a warning.
Report cmd_verify_suite(const std::string& corpus_dir, const CliOptions& opt = {});

}  // namespace gpa
