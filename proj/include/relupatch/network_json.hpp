#pragma once

#include <string>

#include "relupatch/network.hpp"

namespace relupatch {

// Network file format (JSON, UTF-8):
//   {"name": str, "labels": [str]?, "layers": [
//      {"type":"affine","weights":[[num|str]],"bias":[num|str]}
//      | {"type":"relu"} | {"type":"hardtanh"}]}
// String literals are "p/q" or decimal strings (read exactly); bare JSON
// numbers are binary doubles, cast losslessly. Rendering always emits
// "p/q" strings in lowest terms, so parse(render(net)) == net field-exact.

Network parse_network(const std::string& text);
std::string render_network(const Network& net);

Network load_network_file(const std::string& path);
void save_network_file(const Network& net, const std::string& path);

} // namespace relupatch
