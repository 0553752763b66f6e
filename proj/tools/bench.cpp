#include <chrono>
#include <iostream>
#include <string>

#include "orb/classical_ring.hpp"
#include "orb/deformed_ring.hpp"
#include "orb/group.hpp"
#include "orb/inertia.hpp"
#include "orb/presets.hpp"

namespace {

double seconds(std::chrono::steady_clock::duration d) {
    return std::chrono::duration<double>(d).count();
}

template <typename F>
double timed(F&& f) {
    auto start = std::chrono::steady_clock::now();
    f();
    return seconds(std::chrono::steady_clock::now() - start);
}

}  // namespace

// Times the table kernels once with the serial reference path and once
// with the threaded path, and reports both; the test suite separately
// asserts the two paths agree entrywise.
int main(int argc, char** argv) {
    std::string name = argc > 1 ? argv[1] : "q8-c2";
    auto preset = orb::find_preset(name);
    if (!preset) {
        std::cerr << "unknown preset " << name << "\n";
        return 2;
    }
    orb::Group g = orb::Group::generate(preset->generators);
    auto sectors = orb::all_sectors(g);
    std::cout << "group " << name << " (order " << g.size() << ")\n";

    orb::ClassicalRing ring(g, sectors);
    double serial = timed([&] { ring.structure_constants(false); });
    double parallel = timed([&] { ring.structure_constants(true); });
    std::cout << "invariant ring table  serial " << serial << "s  threaded "
              << parallel << "s\n";

    orb::DeformedRing dr(g, sectors);
    double dserial = timed([&] { dr.hh_table(false); });
    double dparallel = timed([&] { dr.hh_table(true); });
    std::cout << "convolution table     serial " << dserial << "s  threaded "
              << dparallel << "s\n";
    return 0;
}
