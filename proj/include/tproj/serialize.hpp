// JSON and CSV encodings for the file-facing types. CSV numbers use the
// shortest decimal representation that round-trips to the same double, so
// identical runs produce byte-identical files and reloads are lossless.
#pragma once

#include <string>

#include <json.hpp>

#include "tproj/certify.hpp"
#include "tproj/convex_set.hpp"
#include "tproj/iteration.hpp"
#include "tproj/vector.hpp"

namespace tproj {

std::string format_double(double v);  // shortest round-trip decimal

nlohmann::json vector_to_json(const Vector& v);
Vector vector_from_json(const nlohmann::json& j);

nlohmann::json set_to_json(const ConvexSet& s);
ConvexSet set_from_json(const nlohmann::json& j);

// {check, passed, n_samples, worst_margin, witness_x, witness_y, seed}
nlohmann::json report_to_json(const CertReport& r);

// Header: n,x_0..x_{d-1},residual,step,dist_oracle
std::string trace_to_csv(const IterationTrace& trace);

// {outcome, iterations, config_echo, seed}
nlohmann::json trace_sidecar(const IterationTrace& trace, const nlohmann::json& config_echo,
                             std::uint64_t seed);

nlohmann::json trace_to_json(const IterationTrace& trace);

}  // namespace tproj
