#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qpd/inversion.hpp"
#include "qpd/report.hpp"

namespace qpd {

struct SuiteOptions {
    std::optional<AlphaVector> alpha; // overrides the built-in alpha samples
    std::string fixture_path;         // extra zero-residual witness lines
    std::uint64_t seed = 0xC0FFEE;
    int samples = 100; // randomized-check sample count where applicable
};

const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

/// Run one named suite (or "all"); throws std::invalid_argument on an
/// unknown name and propagates parse errors from a broken fixture file.
CheckList run_suite(const std::string& name, const SuiteOptions& opts);

/// Evaluate a fixture file: every non-empty, non-comment line must normalize
/// to zero; failures carry the canonical residual.
CheckList run_fixture(const std::string& path);

} // namespace qpd
