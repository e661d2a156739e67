#pragma once

#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace proplab::testing
{
    struct CliRun
    {
        int code;
        std::string out;
        std::string err;
    };

    inline CliRun run_cli(const std::vector<std::string>& args)
    {
        std::ostringstream out;
        std::ostringstream err;
        const int code = proplab::cli::run(args, out, err);
        return {code, out.str(), err.str()};
    }

    inline std::string golden_path(const std::string& name)
    {
        return std::string(PROPLAB_GOLDEN_DIR) + "/" + name;
    }

    /// Compares `actual` with the stored golden file. With PROPLAB_UPDATE_GOLDEN=1
    /// the file is rewritten instead and the comparison passes.
    inline bool matches_golden(const std::string& name, const std::string& actual)
    {
        const auto path = golden_path(name);
        if (const char* update = std::getenv("PROPLAB_UPDATE_GOLDEN"); update != nullptr && std::string(update) == "1")
        {
            std::ofstream(path, std::ios::binary) << actual;
            return true;
        }
        std::ifstream in(path, std::ios::binary);
        if (!in)
        {
            return false;
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str() == actual;
    }
}
