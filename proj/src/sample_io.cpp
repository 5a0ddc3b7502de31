// Copyright 2025-2026 The qwork developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qwork/sample_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qwork::sample_io {

namespace {

[[noreturn]] void fail(const std::string &path, std::size_t line, const std::string &what) {
    std::ostringstream msg;
    msg << path << ":" << line << ": " << what;
    throw std::runtime_error(msg.str());
}

} // namespace

void dump_samples(const std::string &path, std::span<const sim::TPMSample> samples) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("dump_samples: cannot write " + path);
    }
    out << "x_bits,y_bits\n";
    for (const auto &s : samples) {
        out << s.x.str() << "," << s.y.str() << "\n";
    }
    if (!out) {
        throw std::runtime_error("dump_samples: write failed for " + path);
    }
}

std::vector<sim::TPMSample> load_samples(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("load_samples: cannot open " + path);
    }
    std::vector<sim::TPMSample> samples;
    std::string line;
    std::size_t line_no = 0;
    int expected_length = -1;
    while (std::getline(in, line)) {
        line_no++;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (line_no == 1 && line == "x_bits,y_bits") {
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos) {
            fail(path, line_no, "expected two comma-separated bitstrings");
        }
        Bitstring x, y;
        try {
            x = Bitstring::from_string(std::string_view(line).substr(0, comma));
            y = Bitstring::from_string(std::string_view(line).substr(comma + 1));
        } catch (const std::exception &e) {
            fail(path, line_no, e.what());
        }
        if (x.size() != y.size()) {
            fail(path, line_no, "x and y lengths differ");
        }
        if (expected_length < 0) {
            expected_length = x.size();
        } else if (x.size() != expected_length) {
            fail(path, line_no, "bitstring length differs from earlier rows");
        }
        samples.push_back({std::move(x), std::move(y)});
    }
    if (samples.empty()) {
        throw std::runtime_error("load_samples: " + path + " holds no samples");
    }
    return samples;
}

} // namespace qwork::sample_io
