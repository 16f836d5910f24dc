#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "crnet/channel.hpp"
#include "crnet/time.hpp"

namespace crnet {

/// Contents of a graph file: window plus channels with their unclamped
/// intervals, so bound classification stays possible after a round trip.
struct GraphFile {
    ObservationWindow window;
    std::vector<Channel> channels;
};

void write_graph_file(std::ostream& out, const GraphFile& file);
void write_graph_file(const std::filesystem::path& path, const GraphFile& file);

/// Throws ParseError with position info on malformed JSON or schema violations.
GraphFile read_graph_file(std::istream& in);
GraphFile read_graph_file(const std::filesystem::path& path);

}  // namespace crnet
