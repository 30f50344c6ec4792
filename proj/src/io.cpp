#include "corank/error.hpp"

#include <fstream>
#include <sstream>

namespace corank {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError(path, "cannot open file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw IoError(path, "read failed");
    }
    return buf.str();
}

} // namespace corank
