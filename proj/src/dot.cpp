#include "skewcat/dot.hpp"

#include <sstream>

namespace skewcat {

namespace {

void emit_header(std::ostringstream& out, const std::string& name) {
  out << "digraph " << name << " {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=circle];\n";
}

void emit_hasse(std::ostringstream& out, const Poset& p) {
  for (const auto& [lo, hi] : hasse_edges(p)) out << "  n" << lo << " -> n" << hi << ";\n";
}

}  // namespace

std::string dot_of_poset(const Poset& p) {
  std::ostringstream out;
  emit_header(out, "poset");
  for (int x = 0; x < p.points(); ++x) out << "  n" << x << " [label=\"" << x << "\"];\n";
  emit_hasse(out, p);
  out << "}\n";
  return out.str();
}

std::string dot_of_bundle(const Bundle& b) {
  std::ostringstream out;
  emit_header(out, "bundle");
  for (int x = 0; x < b.base.points(); ++x)
    out << "  n" << x << " [label=\"" << x << " | " << b.stalks[static_cast<std::size_t>(x)]
        << "\"];\n";
  emit_hasse(out, b.base);
  out << "}\n";
  return out.str();
}

std::string dot_of_natural_order(const SkewLattice& s) {
  const int n = s.size();
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (Elt x = 0; x < n; ++x)
    for (Elt y = 0; y < n; ++y)
      leq[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) + static_cast<std::size_t>(y)] =
          s.leq(x, y) ? 1 : 0;
  Poset order(n, std::move(leq));
  std::ostringstream out;
  emit_header(out, "natural_order");
  for (Elt x = 0; x < n; ++x) {
    out << "  n" << x << " [label=\"" << x << "\"";
    if (x == s.zero()) out << ", shape=doublecircle";
    out << "];\n";
  }
  emit_hasse(out, order);
  out << "}\n";
  return out.str();
}

}  // namespace skewcat
