#include "signpos/sign_track.hpp"

#include <algorithm>
#include <map>

namespace signpos {

std::string to_string(Method m) {
  switch (m) {
    case Method::AFull: return "A-full";
    case Method::AShort: return "A-short";
    case Method::B: return "B";
  }
  return "?";
}

std::string to_string(SignStatus s) {
  switch (s) {
    case SignStatus::Ok: return "Ok";
    case SignStatus::TriangulationFailed: return "TriangulationFailed";
    case SignStatus::Skipped: return "Skipped";
  }
  return "?";
}

SignTrack filter_edge_observations(const SignTrack& track, double margin, int image_w, int image_h) {
  if (margin < 0.0) throw Error("filter_edge_observations: margin must be >= 0");
  SignTrack out;
  out.track_id = track.track_id;
  out.class_id = track.class_id;
  for (const auto& o : track.observations) {
    const bool at_edge = o.x < margin || o.y < margin ||
                         o.x + o.w > image_w - margin || o.y + o.h > image_h - margin;
    if (!at_edge) out.observations.push_back(o);
  }
  if (out.observations.empty())
    throw EmptyTrack("track " + std::to_string(track.track_id) + ": all observations at image edge");
  return out;
}

std::vector<SignTrack> group_into_tracks(std::vector<SignObservation> detections) {
  std::map<int, SignTrack> by_id;
  for (auto& d : detections) {
    SignTrack& t = by_id[d.track_id];
    if (t.observations.empty()) {
      t.track_id = d.track_id;
      t.class_id = d.class_id;
    } else if (t.class_id != d.class_id) {
      throw ParseError("track " + std::to_string(d.track_id) + " mixes class ids " +
                       std::to_string(t.class_id) + " and " + std::to_string(d.class_id));
    }
    t.observations.push_back(d);
  }
  std::vector<SignTrack> out;
  out.reserve(by_id.size());
  for (auto& [id, t] : by_id) {
    std::sort(t.observations.begin(), t.observations.end(),
              [](const SignObservation& a, const SignObservation& b) { return a.frame_id < b.frame_id; });
    for (size_t i = 0; i + 1 < t.observations.size(); ++i) {
      if (t.observations[i].frame_id == t.observations[i + 1].frame_id)
        throw ParseError("track " + std::to_string(id) + " has duplicate detections in frame " +
                         std::to_string(t.observations[i].frame_id));
    }
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace signpos
