#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "moebius/bpoly.hpp"
#include "moebius/lattice.hpp"

namespace mg {

// closed-form kernels of the lattice point recursion, exact and homogeneous
// of degree zero
struct Kernels {
    static Rat ramp(long x) { return Rat(x > 0 ? x : 0); }
    static Rat R(long L1, long Lm, long p) {
        return (ramp(L1 + Lm - p) - ramp(-L1 + Lm - p) + ramp(L1 - Lm - p)) / Rat(2 * L1);
    }
    static Rat E(long L1, long p) { return ramp(L1 - p) / Rat(2 * L1); }
    static Rat D(long L1, long p, long q) { return ramp(L1 - p - q) / Rat(L1); }
};

// Persistent memo from (2g, n, sorted L) to the refined count. The disk file
// holds one version-stamped, checksummed JSON record per line; damaged lines
// are skipped and reported, never repaired silently.
class CountTable {
  public:
    CountTable() = default;
    explicit CountTable(std::string disk_path);

    std::optional<BPoly> lookup(int two_g, int n, const LVec& sorted_l) const;
    void store(int two_g, int n, const LVec& sorted_l, const BPoly& value);

    size_t size() const;
    std::vector<std::string> list() const;  // human-readable keys
    void purge();                           // drop memory and the disk file

    struct VerifyReport {
        size_t checked = 0, total = 0;
        std::vector<std::string> mismatches;
        std::vector<std::string> corrupt_lines;  // from load time
    };
    // recompute a deterministic 5% sample and compare exactly
    VerifyReport verify(uint64_t seed) const;

    const std::vector<std::string>& load_corruption() const { return corrupt_; }

  private:
    using Key = std::tuple<int, int, LVec>;
    void load();
    mutable std::mutex mu_;
    std::map<Key, BPoly> mem_;
    std::string path_;
    std::vector<std::string> corrupt_;
};

// the three initial conditions, with the parity prefactor
BPoly base_case(int two_g, int n, const LVec& L);

// asymmetric recursion (distinguished first boundary)
BPoly count_recursive(int two_g, int n, const LVec& L, CountTable* table = nullptr);
// symmetric recursion (all boundaries on the same footing, divided by 2 sum L)
BPoly count_recursive_symmetric(int two_g, int n, const LVec& L, CountTable* table = nullptr);

}  // namespace mg
