#pragma once

#include <string>
#include <vector>

#include "spinorb/clifford.hpp"
#include "spinorb/diagram.hpp"

namespace spinorb {

struct RepresentativeCheck {
    std::string name;
    std::string element;  // product of the factor parts
    bool centralizes = false;
    bool in_spin = false;  // x x^* = 1 in every factor
};

struct PathCheck {
    std::string name;
    bool centralizes = false;  // commutes with X identically in (c, s)
    std::string at_pi;
    std::string at_two_pi;
};

struct ComponentReport {
    SignedDiagram diagram;
    GroupTag table = GroupTag::Trivial;
    GroupTag computed = GroupTag::Trivial;
    std::size_t order_s = 0;   // group generated by the representatives and N
    std::size_t order_n = 0;   // subgroup reached by the centralizer paths
    std::vector<RepresentativeCheck> representatives;
    std::vector<PathCheck> paths;
    std::vector<std::string> relations;
    bool agrees() const { return table == computed; }
};

// Builds centralizing elements from the block structure, quotients by the path
// endpoints and compares the result with the tabulated component group.
// Throws RepresentativeFailsToCentralize when a candidate fails to commute with e.
ComponentReport verify_component_reps(const SignedDiagram& d);

}  // namespace spinorb
