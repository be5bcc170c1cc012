#include "tproj/serialize.hpp"

#include <charconv>
#include <stdexcept>
#include <system_error>

namespace tproj {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    if (res.ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, res.ptr);
}

nlohmann::json vector_to_json(const Vector& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (int i = 0; i < v.dim(); ++i) arr.push_back(v[i]);
    return arr;
}

Vector vector_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) {
        throw std::invalid_argument("vector_from_json: expected non-empty array");
    }
    std::vector<double> c;
    c.reserve(j.size());
    for (const auto& e : j) c.push_back(e.get<double>());
    return Vector(std::move(c));
}

nlohmann::json set_to_json(const ConvexSet& s) {
    nlohmann::json j;
    std::visit(
        [&j](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, WholeSpace>) {
                j["type"] = "whole";
                j["dim"] = v.dim;
            } else if constexpr (std::is_same_v<T, Box>) {
                j["type"] = "box";
                j["lower"] = vector_to_json(v.lower);
                j["upper"] = vector_to_json(v.upper);
            } else if constexpr (std::is_same_v<T, Ball>) {
                j["type"] = "ball";
                j["center"] = vector_to_json(v.center);
                j["radius"] = v.radius;
            } else if constexpr (std::is_same_v<T, HalfSpace>) {
                j["type"] = "halfspace";
                j["normal"] = vector_to_json(v.normal);
                j["offset"] = v.offset;
            } else if constexpr (std::is_same_v<T, Hyperplane>) {
                j["type"] = "hyperplane";
                j["normal"] = vector_to_json(v.normal);
                j["offset"] = v.offset;
            } else {
                j["type"] = "affine";
                j["basepoint"] = vector_to_json(v.basepoint);
                nlohmann::json dirs = nlohmann::json::array();
                for (const Vector& d : v.directions) dirs.push_back(vector_to_json(d));
                j["directions"] = dirs;
            }
        },
        s);
    return j;
}

ConvexSet set_from_json(const nlohmann::json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "whole") return WholeSpace(j.at("dim").get<int>());
    if (type == "box") {
        return Box(vector_from_json(j.at("lower")), vector_from_json(j.at("upper")));
    }
    if (type == "ball") {
        return Ball(vector_from_json(j.at("center")), j.at("radius").get<double>());
    }
    if (type == "halfspace") {
        return HalfSpace(vector_from_json(j.at("normal")), j.at("offset").get<double>());
    }
    if (type == "hyperplane") {
        return Hyperplane(vector_from_json(j.at("normal")), j.at("offset").get<double>());
    }
    if (type == "affine") {
        std::vector<Vector> dirs;
        for (const auto& d : j.at("directions")) dirs.push_back(vector_from_json(d));
        return AffineSubspace(vector_from_json(j.at("basepoint")), std::move(dirs));
    }
    throw std::invalid_argument("set_from_json: unknown type '" + type + "'");
}

nlohmann::json report_to_json(const CertReport& r) {
    nlohmann::json j;
    j["check"] = r.check;
    j["passed"] = r.passed;
    j["n_samples"] = r.n_samples;
    j["worst_margin"] = r.worst_margin;
    j["witness_x"] = r.witness_x.dim() ? vector_to_json(r.witness_x) : nlohmann::json::array();
    j["witness_y"] = r.witness_y.dim() ? vector_to_json(r.witness_y) : nlohmann::json::array();
    j["seed"] = r.seed;
    return j;
}

std::string trace_to_csv(const IterationTrace& trace) {
    if (trace.records.empty()) throw std::invalid_argument("trace_to_csv: empty trace");
    const int d = trace.records.front().x.dim();
    std::string out = "n";
    for (int i = 0; i < d; ++i) out += ",x_" + std::to_string(i);
    out += ",residual,step,dist_oracle\n";
    for (const TraceRecord& rec : trace.records) {
        out += std::to_string(rec.n);
        for (int i = 0; i < d; ++i) out += "," + format_double(rec.x[i]);
        out += "," + format_double(rec.residual);
        out += "," + format_double(rec.step);
        out += ",";
        if (rec.dist_oracle) out += format_double(*rec.dist_oracle);
        out += "\n";
    }
    return out;
}

nlohmann::json trace_sidecar(const IterationTrace& trace, const nlohmann::json& config_echo,
                             std::uint64_t seed) {
    nlohmann::json j;
    j["outcome"] = outcome_name(trace.outcome);
    j["iterations"] = trace.iterations();
    j["config_echo"] = config_echo;
    j["seed"] = seed;
    return j;
}

nlohmann::json trace_to_json(const IterationTrace& trace) {
    nlohmann::json j;
    j["outcome"] = outcome_name(trace.outcome);
    j["iterations"] = trace.iterations();
    nlohmann::json recs = nlohmann::json::array();
    for (const TraceRecord& rec : trace.records) {
        nlohmann::json r;
        r["n"] = rec.n;
        r["x"] = vector_to_json(rec.x);
        r["residual"] = rec.residual;
        r["step"] = rec.step;
        if (rec.dist_oracle) r["dist_oracle"] = *rec.dist_oracle;
        recs.push_back(r);
    }
    j["records"] = recs;
    return j;
}

}  // namespace tproj
