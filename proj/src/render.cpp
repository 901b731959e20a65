// Copyright 2026 The strand authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "strand/render.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace strand::render {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

/** Left-to-right layers: inputs first, outputs last, everything else by
 * wire distance from the inputs (or from an arbitrary anchor for closed
 * components). */
std::vector<int> layer_nodes(const Diagram& d, int& max_layer) {
  std::vector<std::vector<std::uint32_t>> adj(d.nodes().size());
  for (const Edge& e : d.edges()) {
    adj[e.a.node].push_back(e.b.node);
    adj[e.b.node].push_back(e.a.node);
  }
  std::vector<int> layer(d.nodes().size(), -1);
  std::deque<std::uint32_t> queue;
  for (std::uint32_t in : d.input_nodes()) {
    layer[in] = 0;
    queue.push_back(in);
  }
  auto bfs = [&] {
    while (!queue.empty()) {
      std::uint32_t u = queue.front();
      queue.pop_front();
      for (std::uint32_t v : adj[u]) {
        if (layer[v] >= 0) continue;
        layer[v] = layer[u] + 1;
        queue.push_back(v);
      }
    }
  };
  bfs();
  for (std::uint32_t n = 0; n < d.nodes().size(); ++n) {
    if (layer[n] < 0) {
      layer[n] = d.input_nodes().empty() ? 0 : 1;
      queue.push_back(n);
      bfs();
    }
  }
  max_layer = 0;
  for (int l : layer) max_layer = std::max(max_layer, l);
  // outputs pinned to the far right
  max_layer += 1;
  for (std::uint32_t out : d.output_nodes()) layer[out] = max_layer;
  return layer;
}

}  // namespace

std::string to_dot(const Diagram& d) {
  const Signature& sig = *d.signature();
  std::ostringstream os;
  os << "graph diagram {\n";
  os << "  rankdir=LR;\n";
  os << "  node [fontsize=11];\n";
  for (std::uint32_t i = 0; i < d.nodes().size(); ++i) {
    const Node& n = d.nodes()[i];
    os << "  n" << i << ' ';
    switch (n.kind) {
      case NodeKind::Generator:
        os << "[shape=box, label=\"" << escape(sig.generator(n.gen).name)
           << "\"]";
        break;
      case NodeKind::Spider:
        os << "[shape=circle, style=filled, label=\"\", width=0.18, fillcolor="
           << (n.color == SpiderColor::Light ? "\"#e8e8e8\"" : "\"#505050\"")
           << "]";
        break;
      case NodeKind::Input:
        os << "[shape=plaintext, label=\"in" << n.position << ':'
           << escape(sig.type(n.type).name) << "\"]";
        break;
      case NodeKind::Output:
        os << "[shape=plaintext, label=\"out" << n.position << ':'
           << escape(sig.type(n.type).name) << "\"]";
        break;
    }
    os << ";\n";
  }
  if (!d.input_nodes().empty()) {
    os << "  { rank=source;";
    for (std::uint32_t in : d.input_nodes()) os << " n" << in << ';';
    os << " }\n";
  }
  if (!d.output_nodes().empty()) {
    os << "  { rank=sink;";
    for (std::uint32_t out : d.output_nodes()) os << " n" << out << ';';
    os << " }\n";
  }
  for (const Edge& e : d.edges()) {
    os << "  n" << e.a.node << " -- n" << e.b.node << " [label=\""
       << escape(sig.type(d.port_type(e.a)).name) << "\"];\n";
  }
  int circle = 0;
  for (const auto& [t, count] : d.loops()) {
    for (std::uint32_t c = 0; c < count; ++c) {
      os << "  loop" << circle << " [shape=circle, label=\"O:"
         << escape(sig.type(t).name) << "\", style=dashed];\n";
      ++circle;
    }
  }
  os << "}\n";
  return os.str();
}

std::string to_svg(const Diagram& d) {
  const Signature& sig = *d.signature();
  int max_layer = 0;
  std::vector<int> layer =
      d.nodes().empty() ? std::vector<int>() : layer_nodes(d, max_layer);
  std::vector<int> slot(d.nodes().size(), 0);
  std::vector<int> filled(max_layer + 2, 0);
  int max_slot = 0;
  for (std::uint32_t n = 0; n < d.nodes().size(); ++n) {
    slot[n] = filled[layer[n]]++;
    max_slot = std::max(max_slot, slot[n]);
  }
  const int dx = 130, dy = 70, x0 = 70, y0 = 50;
  int width = x0 * 2 + dx * std::max(max_layer, 1);
  int height = y0 * 2 + dy * std::max(max_slot, 1) + 40;

  auto cx = [&](std::uint32_t n) { return x0 + layer[n] * dx; };
  auto cy = [&](std::uint32_t n) { return y0 + slot[n] * dy; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
     << height << "\">\n";
  os << "  <style>text{font:11px sans-serif}</style>\n";
  for (const Edge& e : d.edges()) {
    int x1 = cx(e.a.node), y1 = cy(e.a.node);
    int x2 = cx(e.b.node), y2 = cy(e.b.node);
    if (e.a.node == e.b.node) {
      os << "  <path d=\"M" << x1 << ' ' << y1 << " c 25 -35, 45 0, 0 20\" "
            "fill=\"none\" stroke=\"#666\"/>\n";
      continue;
    }
    os << "  <path d=\"M" << x1 << ' ' << y1 << " C " << (x1 + x2) / 2 << ' '
       << y1 << ", " << (x1 + x2) / 2 << ' ' << y2 << ", " << x2 << ' ' << y2
       << "\" fill=\"none\" stroke=\"#666\"/>\n";
    os << "  <text x=\"" << (x1 + x2) / 2 << "\" y=\""
       << (y1 + y2) / 2 - 4 << "\" fill=\"#999\">"
       << xml_escape(sig.type(d.port_type(e.a)).name) << "</text>\n";
  }
  for (std::uint32_t n = 0; n < d.nodes().size(); ++n) {
    const Node& node = d.nodes()[n];
    int x = cx(n), y = cy(n);
    switch (node.kind) {
      case NodeKind::Generator: {
        const std::string& name = sig.generator(node.gen).name;
        int w = std::max<int>(34, 10 + 7 * static_cast<int>(name.size()));
        os << "  <rect x=\"" << x - w / 2 << "\" y=\"" << y - 14
           << "\" width=\"" << w
           << "\" height=\"28\" fill=\"#fff\" stroke=\"#333\"/>\n";
        os << "  <text x=\"" << x << "\" y=\"" << y + 4
           << "\" text-anchor=\"middle\">" << xml_escape(name) << "</text>\n";
        break;
      }
      case NodeKind::Spider:
        os << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"7\" fill=\""
           << (node.color == SpiderColor::Light ? "#e8e8e8" : "#505050")
           << "\" stroke=\"#333\"/>\n";
        break;
      case NodeKind::Input:
      case NodeKind::Output: {
        bool in = node.kind == NodeKind::Input;
        os << "  <circle cx=\"" << x << "\" cy=\"" << y
           << "\" r=\"3\" fill=\"#333\"/>\n";
        os << "  <text x=\"" << x + (in ? -6 : 6) << "\" y=\"" << y - 8
           << "\" text-anchor=\"" << (in ? "end" : "start") << "\">"
           << (in ? "in" : "out") << node.position << ':'
           << xml_escape(sig.type(node.type).name) << "</text>\n";
        break;
      }
    }
  }
  int circle = 0;
  for (const auto& [t, count] : d.loops()) {
    for (std::uint32_t c = 0; c < count; ++c) {
      int x = x0 + 30 * circle;
      os << "  <circle cx=\"" << x << "\" cy=\"" << height - 25
         << "\" r=\"9\" fill=\"none\" stroke=\"#666\"/>\n";
      os << "  <text x=\"" << x << "\" y=\"" << height - 8
         << "\" text-anchor=\"middle\">" << xml_escape(sig.type(t).name)
         << "</text>\n";
      ++circle;
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace strand::render
