#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "markar/engine.hpp"
#include "markar/input_event.hpp"
#include "markar/tracker_sim.hpp"

namespace markar {

// Replay log: one comma-separated line per frame,
//   frame,t_ms,visible,angle_deg,quantized_deg,quadrant,m0..m15,
//   tx,ty,tz,rx,ry,rz,scale,view,messages
// scalars at 17 significant digits. `messages` is the frame's UI output
// joined by ';' (CANCEL or INFO=<text>) and is the last field, so info text
// may contain commas.
std::string frame_log_header();
std::string format_frame_log_line(std::size_t frame_index, const FrameOutput& frame,
                                  ViewMode view);

// Feeds every event with timestamp <= a sample's timestamp into the session
// before stepping that sample, and writes one log line per sample. Events
// after the last sample are never applied. Engine errors propagate.
void run_replay(Session& session, const std::vector<PoseSample>& poses,
                const std::vector<InputEvent>& events, std::ostream& log);

}  // namespace markar
