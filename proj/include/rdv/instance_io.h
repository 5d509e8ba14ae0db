#ifndef RDV_INSTANCE_IO_H_
#define RDV_INSTANCE_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "rdv/graph.h"

namespace rdv {

// Instance document:
//
//   {"nodes": [0, 1, 2],
//    "edges": [{"u": 0, "v": 1, "wA": 3, "wB": 5}, ...],
//    "sA": 0, "sB": 2}
//
// Edge order in the document is the canonical edge order.

// Throws ParseError for malformed documents and for structurally invalid
// instances (disconnected graph, bad weights, unknown ids, ...).
Instance read_instance(std::string_view text);
Instance load_instance(const std::filesystem::path& path);

std::string write_instance(const Instance& instance);

}  // namespace rdv

#endif  // RDV_INSTANCE_IO_H_
