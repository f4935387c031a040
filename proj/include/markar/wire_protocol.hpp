#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "markar/engine.hpp"
#include "markar/input_event.hpp"
#include "markar/model.hpp"
#include "markar/picking.hpp"

namespace markar::wire {

// Text protocol spoken over the viewer WebSocket. Every message is one line;
// a text frame may carry several lines separated by '\n'.
//
// viewer -> server: an event-trace line without timestamp
//   (`TOUCH_MOVE 412 305`, `COMMAND RESET`, ...).
//
// server -> viewer:
//   MODEL <part count>
//   CAMERA <viewport w> <viewport h> <fov_y deg>
//   PART <name> <triangle count>           name may contain spaces; the
//   TRI <x0 y0 z0 x1 y1 z1 x2 y2 z2>       count is the last token
//   END_MODEL
//   FRAME <ts> <visible 0|1> <quadrant> <16 model-matrix scalars> <scale>
//   OFFSET <dx> <dy> <dz> <name>           current highlight offset of a part
//   MSG CANCEL
//   MSG INFO <text>

std::vector<std::string> model_preamble(std::span<const Part> parts, const PickCamera& camera);
std::string frame_message(const FrameOutput& frame);
std::string ui_message(const UiMessage& msg);
std::string offset_message(const Part& part);

// Parses a viewer line into an event (timestamp left at 0).
EventParseResult parse_client_line(std::string_view line);

}  // namespace markar::wire
