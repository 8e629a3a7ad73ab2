#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "braidix/diagram.hpp"
#include "json.hpp"

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

inline std::string corpus_path(const std::string& name) {
    return std::string(BRAIDIX_CORPUS_DIR) + "/" + name + ".pd";
}

inline braidix::Diagram load_corpus(const std::string& name) {
    return braidix::Diagram::parse(read_text_file(corpus_path(name)));
}

inline const nlohmann::json& expectations() {
    static const nlohmann::json data =
        nlohmann::json::parse(read_text_file(BRAIDIX_EXPECTATIONS));
    return data;
}

inline std::vector<std::string> corpus_names() {
    std::vector<std::string> names;
    for (const auto& [name, entry] : expectations().items()) {
        (void)entry;
        names.push_back(name);
    }
    return names;
}
