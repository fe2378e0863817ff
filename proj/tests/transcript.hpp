#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ordwb/cli.hpp"

// Golden CLI transcripts: "$ <args>" then the expected stdout, closed by "? <exit code>".
// A leading ORDWB_BUDGET=<v> word sets the environment budget for that command.
namespace transcript {

struct Case {
    std::string command;
    std::string expected;
    int code = 0;
};

inline std::vector<std::string> split_words(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false, any = false;
    for (char ch : s) {
        if (ch == '"') {
            quoted = !quoted;
            any = true;
        } else if (!quoted && (ch == ' ' || ch == '\t')) {
            if (any)
                out.push_back(cur);
            cur.clear();
            any = false;
        } else {
            cur += ch;
            any = true;
        }
    }
    if (any)
        out.push_back(cur);
    return out;
}

inline std::vector<Case> load(const std::string& path) {
    std::ifstream in(path);
    std::vector<Case> cases;
    std::string line;
    Case* cur = nullptr;
    while (std::getline(in, line)) {
        if (line.rfind("$ ", 0) == 0) {
            cases.push_back({line.substr(2), "", 0});
            cur = &cases.back();
        } else if (cur && line.rfind("? ", 0) == 0) {
            cur->code = std::stoi(line.substr(2));
            cur = nullptr;
        } else if (cur) {
            cur->expected += line + "\n";
        }
    }
    return cases;
}

struct Outcome {
    std::string out;
    int code;
};

inline Outcome run(const std::string& command) {
    auto words = split_words(command);
    std::optional<std::string> env;
    if (!words.empty() && words[0].rfind("ORDWB_BUDGET=", 0) == 0) {
        env = words[0].substr(13);
        words.erase(words.begin());
    }
    std::vector<const char*> argv;
    for (auto& w : words)
        argv.push_back(w.c_str());
    std::ostringstream out, err;
    int code = ordwb::run_cli(static_cast<int>(argv.size()), argv.data(), out, err, env);
    return {out.str(), code};
}

}  // namespace transcript
