#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qframe/frame.hpp"
#include "qframe/qvector.hpp"

namespace qframe {

/// Frame file schema:
///   {"dim": n, "vectors": [[[w,x,y,z], ... n entries], ... m vectors]}
/// Signal file schema:
///   {"dim": n, "entries": [[w,x,y,z], ...]}
/// Quaternions are always flat [w, x, y, z] arrays.

Frame load_frame(const std::string& path);
QVector load_signal(const std::string& path);

void save_frame(const std::string& path, std::size_t dim,
                const std::vector<QVector>& vectors);
void save_signal(const std::string& path, const QVector& signal);

nlohmann::json quaternion_to_json(const Quaternion& q);
Quaternion quaternion_from_json(const nlohmann::json& j);

nlohmann::json qvector_to_json(const QVector& v);
nlohmann::json coefficients_to_json(const CoefficientVector& c);

nlohmann::json frame_to_json(std::size_t dim, const std::vector<QVector>& vectors);
Frame frame_from_json(const nlohmann::json& j);
QVector signal_from_json(const nlohmann::json& j);

} // namespace qframe
