#pragma once

// DOT emission: Hasse diagram of a subring space under inclusion, and the
// spectrum/stalk diagram of a patch algebra.

#include <sstream>
#include <string>

#include "patchalgebra.hpp"
#include "topo.hpp"

namespace patchalg {

inline std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

/// Hasse diagram of the inclusion order: an edge per covering pair, drawn
/// bottom-up.
inline std::string dot_subring_lattice(const SubringSpace& X, const std::string& title) {
    std::ostringstream os;
    os << "digraph subrings {\n";
    os << "  rankdir=BT;\n";
    os << "  label=\"" << dot_escape(title) << "\";\n";
    for (std::size_t i = 0; i < X.size(); ++i) {
        os << "  n" << i << " [label=\"" << dot_escape(X.member(i).describe()) << "\\n|"
           << X.member(i).size() << "|\", shape=box];\n";
    }
    for (std::size_t i = 0; i < X.size(); ++i)
        for (std::size_t j = 0; j < X.size(); ++j) {
            if (i == j || !X.member(i).subset_of(X.member(j))) continue;
            bool covering = true;
            for (std::size_t k = 0; k < X.size() && covering; ++k) {
                if (k == i || k == j) continue;
                if (X.member(i).subset_of(X.member(k)) && X.member(k).subset_of(X.member(j)))
                    covering = false;
            }
            if (covering) os << "  n" << i << " -> n" << j << ";\n";
        }
    os << "}\n";
    return os.str();
}

/// Pierce spectrum of a patch algebra: one node per spectrum point, one per
/// distinct stalk, edges from points to their stalks.
inline std::string dot_pierce(const PatchAlgebra& A, const std::string& title) {
    std::ostringstream os;
    os << "digraph pierce {\n";
    os << "  rankdir=LR;\n";
    os << "  label=\"" << dot_escape(title) << "\";\n";
    SubringSpace stalk_space = all_stalks(A.presheaf());
    for (std::size_t i = 0; i < stalk_space.size(); ++i)
        os << "  s" << i << " [label=\"" << dot_escape(stalk_space.member(i).describe())
           << "\", shape=box];\n";
    for (int a = 0; a < A.atoms(); ++a) {
        os << "  m" << a << " [label=\"point " << a << "\", shape=circle];\n";
        int idx = stalk_space.index_of(A.atom_section(a));
        if (idx >= 0) os << "  m" << a << " -> s" << idx << ";\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace patchalg
