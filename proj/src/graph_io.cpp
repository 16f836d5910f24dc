#include "crnet/graph_io.hpp"

#include <fstream>
#include <ostream>

#include <json.hpp>

#include "crnet/errors.hpp"

namespace crnet {

namespace {

nlohmann::json channel_to_json(const Channel& c) {
    return nlohmann::json{{"id", c.id},
                          {"opened", c.opened.seconds},
                          {"closed", c.closed.seconds},
                          {"participants", c.participants}};
}

Channel channel_from_json(const nlohmann::json& j) {
    Channel c;
    c.id = j.at("id").get<std::string>();
    c.opened = TimeInstant{j.at("opened").get<std::int64_t>()};
    c.closed = TimeInstant{j.at("closed").get<std::int64_t>()};
    c.participants = j.at("participants").get<std::vector<std::string>>();
    return c;
}

}  // namespace

void write_graph_file(std::ostream& out, const GraphFile& file) {
    nlohmann::json j;
    j["window"] = {{"start", file.window.start.seconds}, {"end", file.window.end.seconds}};
    auto channels = nlohmann::json::array();
    for (const auto& c : file.channels) {
        channels.push_back(channel_to_json(c));
    }
    j["channels"] = std::move(channels);
    out << j.dump(2) << '\n';
}

void write_graph_file(const std::filesystem::path& path, const GraphFile& file) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot open '" + path.string() + "' for writing");
    }
    write_graph_file(out, file);
}

GraphFile read_graph_file(std::istream& in) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("graph JSON: ") + e.what());
    }
    GraphFile file;
    try {
        const auto& window = j.at("window");
        file.window.start = TimeInstant{window.at("start").get<std::int64_t>()};
        file.window.end = TimeInstant{window.at("end").get<std::int64_t>()};
        for (const auto& c : j.at("channels")) {
            file.channels.push_back(channel_from_json(c));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("graph JSON schema: ") + e.what());
    }
    return file;
}

GraphFile read_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open '" + path.string() + "'");
    }
    return read_graph_file(in);
}

}  // namespace crnet
