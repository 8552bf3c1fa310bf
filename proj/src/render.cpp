#include "topo/render.hpp"

#include <cstddef>
#include <sstream>
#include <vector>

#include "topo/errors.hpp"

namespace topo {

namespace {

// Tree node: regions (r1, r2) flank the edge to the parent, r3 is the new
// region entered at this vertex.  The root holds the input superbase values.
struct Node {
  Int r1, r2, r3;
  std::size_t parent;  // index; root points to itself
  int edge_dir;        // progression toward this node: +1 away, -1 toward parent, 0 flat
};

struct Tree {
  std::vector<Node> nodes;
  std::vector<std::vector<std::size_t>> children;
};

int direction(const Int& near_end, const Int& far_end) {
  if (far_end > near_end) return +1;
  if (far_end < near_end) return -1;
  return 0;
}

Tree build_tree(const BinaryQuadraticForm& f, int depth, int max_depth) {
  if (depth < 1) throw InvalidParameter("render depth must be at least 1");
  if (depth > max_depth) throw DepthExceeded(max_depth);

  VertexTriple t = VertexTriple::of(f);
  Tree tree;
  tree.nodes.push_back({t.qa, t.qb, t.qc, 0, 0});
  tree.children.emplace_back();

  std::vector<std::size_t> frontier{0};
  for (int layer = 0; layer < depth; ++layer) {
    std::vector<std::size_t> next_frontier;
    for (std::size_t idx : frontier) {
      Node node = tree.nodes[idx];
      // across the edge flanked by (x, y), the region opposite z is 2(x+y)-z
      std::vector<std::array<Int, 3>> across;
      if (idx == 0) {
        across = {{node.r1, node.r2, node.r3},
                  {node.r1, node.r3, node.r2},
                  {node.r2, node.r3, node.r1}};
      } else {
        // do not cross back over the parent edge (flanked by r1, r2)
        across = {{node.r1, node.r3, node.r2}, {node.r2, node.r3, node.r1}};
      }
      for (const auto& [x, y, z] : across) {
        Int far = neighbor_value(x, y, z);
        std::size_t child = tree.nodes.size();
        tree.nodes.push_back({x, y, far, idx, direction(z, far)});
        tree.children.emplace_back();
        tree.children[idx].push_back(child);
        next_frontier.push_back(child);
      }
    }
    frontier = std::move(next_frontier);
  }
  return tree;
}

std::string node_label(const Node& n) {
  std::ostringstream os;
  os << n.r1 << " | " << n.r2 << " | " << n.r3;
  return os.str();
}

}  // namespace

std::string render_topograph_dot(const BinaryQuadraticForm& f, int depth, int max_depth) {
  Tree tree = build_tree(f, depth, max_depth);
  std::ostringstream os;
  os << "digraph topograph {\n";
  os << "  // regions of " << to_string(f) << "; edge labels are the flanking region values\n";
  os << "  node [shape=box];\n";
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    os << "  v" << i << " [label=\"" << node_label(tree.nodes[i]) << "\"];\n";
  }
  for (std::size_t i = 1; i < tree.nodes.size(); ++i) {
    const Node& n = tree.nodes[i];
    std::ostringstream label;
    label << n.r1 << "|" << n.r2;
    if (n.edge_dir > 0) {
      os << "  v" << n.parent << " -> v" << i << " [label=\"" << label.str() << "\"];\n";
    } else if (n.edge_dir < 0) {
      os << "  v" << i << " -> v" << n.parent << " [label=\"" << label.str() << "\"];\n";
    } else {
      os << "  v" << n.parent << " -> v" << i << " [label=\"" << label.str()
         << "\", dir=none];\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string render_topograph_ascii(const BinaryQuadraticForm& f, int depth, int max_depth) {
  Tree tree = build_tree(f, depth, max_depth);
  std::ostringstream os;
  os << "topograph of " << to_string(f) << "\n";

  // depth-first walk; '>' points along the arithmetic progression's increase
  struct Frame {
    std::size_t idx;
    std::string prefix;
    bool last;
  };
  os << "(" << node_label(tree.nodes[0]) << ")\n";
  std::vector<Frame> stack;
  const auto& root_children = tree.children[0];
  for (std::size_t i = root_children.size(); i-- > 0;) {
    stack.push_back({root_children[i], "", i + 1 == root_children.size()});
  }
  while (!stack.empty()) {
    Frame fr = stack.back();
    stack.pop_back();
    const Node& n = tree.nodes[fr.idx];
    const char* arrow = n.edge_dir > 0 ? "->" : (n.edge_dir < 0 ? "<-" : "==");
    os << fr.prefix << (fr.last ? "`-" : "|-") << "[" << n.r1 << "," << n.r2 << "]" << arrow
       << " (" << node_label(n) << ")\n";
    std::string child_prefix = fr.prefix + (fr.last ? "   " : "|  ");
    const auto& kids = tree.children[fr.idx];
    for (std::size_t i = kids.size(); i-- > 0;) {
      stack.push_back({kids[i], child_prefix, i + 1 == kids.size()});
    }
  }
  return os.str();
}

}  // namespace topo
